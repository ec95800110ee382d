import io
import json
import os
import subprocess
import sys

import pytest

from lattice_designs import families as fam
from lattice_designs.cli import build_batch, main
from lattice_designs.graph import parse_edge_list, write_edge_list, write_graph6


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv, header", [
    (("gen", "complete", "4"), "4 6"),
    (("gen", "paley", "13"), "13 39"),
    (("gen", "hamming", "3", "2", "--order", "2"), "8 12"),
    (("gen", "multipartite", "3", "4"), "7 12"),
    (("gen", "circulant", "10", "1", "3"), "10 20"),
    (("gen", "multigon", "5", "3"), "5 15"),
    (("gen", "polytope", "icosahedron"), "12 30"),
    (("gen", "named", "clebsch"), "16 40"),
])
def test_gen(argv, header):
    code, text = run(*argv)
    assert code == 0
    assert text.splitlines()[0] == header
    parse_edge_list(text)


def test_gen_to_file(tmp_path):
    path = tmp_path / "k4.edg"
    assert run("gen", "complete", "4", "-o", str(path))[0] == 0
    assert path.read_text() == write_edge_list(fam.gen_complete(4))


@pytest.mark.parametrize("argv", [
    ("gen", "nonsense", "3"),
    ("gen", "paley", "7"),
    ("gen", "complete", "x"),
    ("gen", "complete"),
    ("gen", "cycle", "5", "--order", "2"),
    ("gen", "polytope"),
    ("frobnicate",),
])
def test_gen_errors_exit_1(argv, capsys):
    assert main(list(argv), out=io.StringIO()) == 1
    assert "error" in capsys.readouterr().err


def _write(tmp_path, name, g, graph6=False):
    p = tmp_path / name
    p.write_text((write_graph6(g) + "\n") if graph6 else write_edge_list(g))
    return str(p)


def test_analyze_k4_text(tmp_path):
    code, text = run("analyze", _write(tmp_path, "k4.edg", fam.gen_complete(4)))
    assert code == 0
    assert "(3, 12, 4, 3)" in text
    assert "A(X) = {-1, -1/2, 0, 1/2}" in text


def test_analyze_unequal(tmp_path):
    path = _write(tmp_path, "tt.edg", fam.gen_polytope("truncated-tetrahedron"))
    code, text = run("analyze", path)
    assert code == 0
    assert "unequal norms: 2 distinct values" in text


def test_analyze_tree_exit_2(tmp_path):
    code, text = run("analyze", _write(tmp_path, "tree.edg", fam.gen_path(5)))
    assert code == 2
    assert "degenerate" in text


def test_analyze_partial_report_on_degenerate(tmp_path):
    g = fam.gen_hamming(3, 2, order=3)
    code, text = run("analyze", _write(tmp_path, "m.edg", g), "--format", "json")
    assert code == 2
    assert len(json.loads(text)["components"]) == 4


def test_analyze_parse_error_exit_1(tmp_path):
    bad = tmp_path / "bad.edg"
    bad.write_text("3 2\n0 1\n")
    assert run("analyze", str(bad))[0] == 1
    assert run("analyze", str(tmp_path / "missing.edg"))[0] == 1


def test_analyze_json_schema_and_roundtrip(tmp_path):
    path = _write(tmp_path, "pet.g6", fam.gen_named("petersen"), graph6=True)
    code, text = run("analyze", path, "--format", "json", "--per-point", "--transitivity")
    assert code == 0
    report = json.loads(text)
    assert json.loads(json.dumps(report, indent=2)) == report
    assert json.dumps(report, indent=2) + "\n" == text
    comp, = report["components"]
    for key in ("d", "n", "s", "t", "distance_set", "norms", "equal_norm", "srg",
                "transitivity", "distributions"):
        assert key in comp
    assert (comp["d"], comp["n"], comp["s"], comp["t"]) == (6, 30, 6, 3)
    assert comp["distance_set"] == ["-1", "-1/2", "-1/4", "0", "1/4", "1/2"]
    assert comp["srg"] == [10, 3, 0, 1]
    assert comp["transitivity"] == {"vertex": True, "edge": True}
    assert comp["equal_norm"] is True and comp["norms"] == {"2/5": 15}


def test_analyze_is_deterministic(tmp_path):
    path = _write(tmp_path, "shr.edg", fam.gen_named("shrikhande"))
    first = run("analyze", path, "--format", "json", "--per-point")[1]
    assert all(run("analyze", path, "--format", "json", "--per-point")[1] == first for _ in range(2))


def test_table_command():
    code, text = run("table", "t1")
    assert code == 0
    lines = text.splitlines()
    assert sum(line.startswith("PASS") for line in lines) == 6
    assert lines[-1] == "t1: PASS=6 FAIL=0 SKIP=0 CAP=0"
    code, text = run("table", "t9", "--cap", "40")
    assert code == 0 and "FAIL=0" in text.splitlines()[-1]
    assert run("table", "t99")[0] == 1


def test_batch(tmp_path):
    d = tmp_path / "coll"
    d.mkdir()
    _write(d, "a_l24.g6", fam.gen_square_lattice(4), graph6=True)
    _write(d, "b_shrikhande.g6", fam.gen_named("shrikhande"), graph6=True)
    (d / "c_broken.edg").write_text("nonsense\n")
    batch = build_batch(d, threads=1)
    assert [f["input"] for f in batch["files"]] == ["a_l24.g6", "b_shrikhande.g6", "c_broken.edg"]
    assert "error" in batch["files"][2]
    assert batch["by_configuration"] == [{"configuration": "(33, 96, 10, 3)",
                                          "files": ["a_l24.g6", "b_shrikhande.g6"]}]
    assert len(batch["by_type_signature"]) == 2
    assert build_batch(d, threads=2) == batch


def test_batch_empty_and_missing(tmp_path):
    code, text = run("batch", str(tmp_path))
    assert code == 0
    assert json.loads(text)["files"] == []
    assert run("batch", str(tmp_path / "nope"))[0] == 1


def test_batch_thread_env_does_not_change_output(tmp_path):
    for k in range(4):
        _write(tmp_path, f"k{k + 4}.edg", fam.gen_complete(k + 4))
    env = dict(os.environ)
    outputs = []
    for threads in ("1", "3"):
        env["LATTICE_DESIGNS_THREADS"] = threads
        proc = subprocess.run([sys.executable, "-m", "lattice_designs", "batch", str(tmp_path)],
                              capture_output=True, text=True, env=env, check=True)
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]
    assert len(json.loads(outputs[0])["by_configuration"]) == 4
