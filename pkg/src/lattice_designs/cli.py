"""Command-line front end: ``lattice-designs gen|analyze|table|batch``.

Exit codes: 0 success (unequal norms included), 1 parse or parameter error,
2 when some component has a degenerate realization (d <= 1), 3 when a
reference table has a FAIL row.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import families
from .design import DEFAULT_T_MAX, configuration
from .errors import Exhausted, InvalidParam, LatticeDesignError, NotSimple, UnknownName
from .exact import format_rational
from .graph import OrientedMultigraph, read_graph, write_edge_list
from .symmetry import transitivity
from .tables import DEFAULT_CAP, run_table

__all__ = ["main", "build_report", "format_report", "build_batch", "FAMILIES"]

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_TABLE_FAIL = 0, 1, 2, 3
DEGENERATE = ("degenerate", "degenerate-1d")


def _ints(args, count=None, name="family"):
    try:
        vals = [int(a) for a in args]
    except ValueError:
        raise InvalidParam(f"{name}: parameters must be integers, got {args}") from None
    if count is not None and len(vals) != count:
        raise InvalidParam(f"{name}: expected {count} integer parameter(s), got {len(vals)}")
    return vals


def _multigon(k, m):
    return families.multiedge_expand(families.gen_cycle(k), m)


# name -> (usage, builder(params, order))
FAMILIES = {
    "complete": ("N", lambda p, o: families.gen_complete(*_ints(p, 1))),
    "cycle": ("N", lambda p, o: families.gen_cycle(*_ints(p, 1))),
    "path": ("N", lambda p, o: families.gen_path(*_ints(p, 1))),
    "bouquet": ("D", lambda p, o: families.gen_bouquet(*_ints(p, 1))),
    "diamond": ("D", lambda p, o: families.gen_diamond(*_ints(p, 1))),
    "multipartite": ("M1 M2 ...", lambda p, o: families.gen_complete_multipartite(_ints(p))),
    "cocktail": ("K", lambda p, o: families.gen_cocktail_party(*_ints(p, 1))),
    "hamming": ("M Q [--order K]", lambda p, o: families.gen_hamming(*_ints(p, 2), order=o)),
    "johnson": ("Q M [--order K]", lambda p, o: families.gen_johnson(*_ints(p, 2), order=o)),
    "triangular": ("M", lambda p, o: families.gen_triangular(*_ints(p, 1))),
    "lattice": ("M", lambda p, o: families.gen_square_lattice(*_ints(p, 1))),
    "paley": ("Q", lambda p, o: families.gen_paley(*_ints(p, 1))),
    "cyclotomic": ("Q M", lambda p, o: families.gen_cyclotomic(*_ints(p, 2))),
    "circulant": ("N S1 [S2 ...]", lambda p, o: families.gen_circulant(_ints(p)[0], _ints(p)[1:])),
    "multigon": ("K M", lambda p, o: _multigon(*_ints(p, 2))),
    "polytope": ("NAME", lambda p, o: families.gen_polytope(*p)),
    "named": ("NAME", lambda p, o: families.gen_named(*p)),
}


def generate(family, params, order=1):
    if family not in FAMILIES:
        raise UnknownName(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    usage, build = FAMILIES[family]
    if family in ("polytope", "named") and len(params) != 1:
        raise InvalidParam(f"{family}: usage {usage}")
    if order != 1 and family not in ("hamming", "johnson"):
        raise InvalidParam("--order applies to hamming and johnson only")
    try:
        return build(list(params), order)
    except (TypeError, IndexError):
        raise InvalidParam(f"{family}: usage {usage}") from None


def _fmt_list(values):
    return [format_rational(v) for v in values]


def _component_report(comp, per_point, want_transitivity, graph):
    res = comp.realization
    out = {
        "status": comp.status,
        "v": len(comp.vertices),
        "e": len(comp.edges),
        "d": None, "n": None, "s": None, "t": None,
        "distance_set": None,
        "norms": None,
        "equal_norm": None,
        "srg": list(comp.srg.as_tuple()) if comp.srg else None,
    }
    if comp.status == "error":
        out["error"] = comp.error
        return out
    out["d"] = res.d
    out["norms"] = {format_rational(k): c for k, c in res.squared_norm_multiset.items()}
    out["equal_norm"] = res.equal_norm is not None
    if comp.configuration is not None:
        cfg = comp.configuration
        out.update(n=cfg.n, s=cfg.s, t=cfg.t, distance_set=_fmt_list(cfg.distance_set))
    elif comp.unequal is not None:
        u = comp.unequal
        out.update(n=u.n, s=u.s, t=u.t)
    if want_transitivity:
        out["transitivity"] = _transitivity(graph, comp)
    if per_point and comp.distribution is not None:
        dist = comp.distribution
        label_of = {}
        for typ in dist.types:
            for k in typ.representatives:
                label_of[k] = typ.label
        out["distributions"] = {
            "values": _fmt_list(dist.values),
            "types": [{"label": t.label, "points": t.points, "counts": list(t.counts)}
                      for t in dist.types],
            "point_types": [label_of[k] for k in range(len(dist.per_point))],
        }
    return out


def _transitivity(graph, comp):
    local = {x: i for i, x in enumerate(comp.vertices)}
    sub = OrientedMultigraph(len(comp.vertices),
                             tuple((local[graph.edges[k][0]], local[graph.edges[k][1]])
                                   for k in comp.edges))
    try:
        tr = transitivity(sub)
    except NotSimple:
        return {"vertex": None, "edge": None, "note": "multigraph"}
    except Exhausted:
        return {"vertex": None, "edge": None, "note": "search budget exhausted"}
    return {"vertex": tr.vertex_transitive, "edge": tr.edge_transitive}


def build_report(graph, input_name, t_max=DEFAULT_T_MAX, per_point=False, want_transitivity=False):
    """JSON-ready report with one entry per connected component."""
    comps = configuration(graph, t_max=t_max, per_point=per_point)
    return {
        "input": input_name,
        "components": [_component_report(c, per_point, want_transitivity, graph) for c in comps],
    }


def report_exit_code(report):
    if any(c["status"] in DEGENERATE for c in report["components"]):
        return EXIT_DEGENERATE
    return EXIT_OK


def _config_str(c):
    t = "-" if c["t"] is None else c["t"]
    return f"({c['d']}, {c['n']}, {c['s']}, {t})"


def format_report(report):
    lines = [f"input: {report['input']}"]
    comps = report["components"]
    lines.append(f"components: {len(comps)}")
    for k, c in enumerate(comps, 1):
        lines.append(f"component {k}: v={c['v']} e={c['e']} status={c['status']}")
        if c["status"] == "error":
            lines.append(f"  error: {c['error']}")
            continue
        lines.append(f"  d = {c['d']}")
        if c["norms"]:
            norms = ", ".join(f"{v} x{n}" for v, n in c["norms"].items())
            lines.append(f"  squared norms: {norms}")
        if c["status"] == "unequal-norms":
            lines.append(f"  unequal norms: {len(c['norms'])} distinct values")
            lines.append(f"  normalized configuration: {_config_str(c)}")
        elif c["n"] is not None:
            lines.append(f"  configuration: {_config_str(c)}")
        if c["distance_set"] is not None:
            lines.append(f"  A(X) = {{{', '.join(c['distance_set'])}}}")
        if c["status"] == "degenerate":
            lines.append("  degenerate: cycle space is trivial")
        if c["srg"]:
            lines.append(f"  srg: ({', '.join(map(str, c['srg']))})")
        if "transitivity" in c:
            tr = c["transitivity"]
            lines.append(f"  vertex-transitive: {tr['vertex']}  edge-transitive: {tr['edge']}")
        if "distributions" in c:
            dist = c["distributions"]
            lines.append(f"  distribution values: {' '.join(dist['values'])}")
            for typ in dist["types"]:
                lines.append(f"    type {typ['label']} ({typ['points']} points): "
                             + " ".join(map(str, typ["counts"])))
    return "\n".join(lines) + "\n"


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _analyze_file(args):
    path, t_max = args
    try:
        g = read_graph(path)
        return build_report(g, Path(path).name, t_max=t_max, per_point=True)
    except (LatticeDesignError, ValueError, IndexError, OSError, UnicodeDecodeError) as exc:
        return {"input": Path(path).name, "error": f"{type(exc).__name__}: {exc}"}


def _threads():
    raw = os.environ.get("LATTICE_DESIGNS_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _type_signature(comp):
    dist = comp.get("distributions")
    if dist is None:
        return comp["status"]
    types = sorted((t["points"], tuple(zip(dist["values"], t["counts"]))) for t in dist["types"])
    return repr(types)


def build_batch(directory, t_max=DEFAULT_T_MAX, threads=None):
    """Analyze every regular file of ``directory`` in sorted name order.

    Files are grouped by their tuple of component configurations and by
    their distribution-type signature.  Output order does not depend on
    scheduling.
    """
    files = sorted(p for p in Path(directory).iterdir() if p.is_file())
    jobs = [(str(p), t_max) for p in files]
    threads = _threads() if threads is None else threads
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            reports = list(pool.map(_analyze_file, jobs))
    else:
        reports = [_analyze_file(j) for j in jobs]
    by_config, by_types = {}, {}
    for rep in reports:
        if "error" in rep:
            continue
        comps = rep["components"]
        key = " + ".join(_config_str(c) for c in comps) or "empty"
        by_config.setdefault(key, []).append(rep["input"])
        sig = key + " | " + " + ".join(_type_signature(c) for c in comps)
        by_types.setdefault(sig, []).append(rep["input"])
    return {
        "directory": str(directory),
        "files": reports,
        "by_configuration": [{"configuration": k, "files": v} for k, v in by_config.items()],
        "by_type_signature": [{"signature": k, "files": v} for k, v in by_types.items()],
    }


def format_batch(batch):
    lines = [f"directory: {batch['directory']}", f"files: {len(batch['files'])}"]
    for rep in batch["files"]:
        if "error" in rep:
            lines.append(f"  {rep['input']}: error {rep['error']}")
        else:
            cfgs = " + ".join(_config_str(c) for c in rep["components"])
            lines.append(f"  {rep['input']}: {cfgs}")
    lines.append("groups by configuration:")
    for grp in batch["by_configuration"]:
        lines.append(f"  {grp['configuration']}: {len(grp['files'])} file(s)")
    lines.append(f"distribution-type classes: {len(batch['by_type_signature'])}")
    for grp in batch["by_type_signature"]:
        lines.append(f"  {len(grp['files'])} file(s): {', '.join(grp['files'])}")
    return "\n".join(lines) + "\n"


def _fmt_value(v):
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_fmt_value(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{_fmt_value(k)}: {_fmt_value(x)}" for k, x in v.items()) + "}"
    try:
        return format_rational(v)
    except TypeError:
        return str(v)


def _table_line(r):
    shown = ("d", "n", "s", "t")
    if r.status == "CAP" or not any(k in r.expected for k in shown):
        shown = tuple(k for k in ("v", "e", "P", "norms") if k in r.expected)
    exp = " ".join(f"{k}={_fmt_value(r.expected[k])}" for k in shown if k in r.expected)
    line = f"{r.status:4s} {r.label}: {exp}"
    if r.mismatches:
        line += " | mismatch " + "; ".join(f"{k}: expected {_fmt_value(w)} got {_fmt_value(g)}"
                                           for k, w, g in r.mismatches)
    for note in r.notes:
        line += f" | {note}"
    return line


def cmd_gen(args, out):
    g = generate(args.family, args.params, args.order)
    text = write_edge_list(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_analyze(args, out):
    g = read_graph(args.file)
    report = build_report(g, args.file, t_max=args.t_max, per_point=args.per_point,
                          want_transitivity=args.transitivity)
    out.write(_dump(report) if args.format == "json" else format_report(report))
    return report_exit_code(report)


def cmd_table(args, out):
    results = run_table(args.id, cap=args.cap, t_max=args.t_max)
    counts = {}
    for r in results:
        out.write(_table_line(r) + "\n")
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = " ".join(f"{k}={counts.get(k, 0)}" for k in ("PASS", "FAIL", "SKIP", "CAP"))
    out.write(f"{args.id}: {summary}\n")
    return EXIT_TABLE_FAIL if counts.get("FAIL") else EXIT_OK


def cmd_batch(args, out):
    if not Path(args.dir).is_dir():
        raise InvalidParam(f"not a directory: {args.dir}")
    batch = build_batch(args.dir, t_max=args.t_max)
    out.write(_dump(batch) if args.format == "json" else format_batch(batch))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with parameter errors; 2 means degenerate
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _parser():
    p = _Parser(prog="lattice-designs",
                                description="Spherical designs from standard realizations of crystal lattices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a graph family as an EDG file")
    g.add_argument("family", help="one of: " + ", ".join(f"{k} {u}" for k, (u, _) in FAMILIES.items()))
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--output")
    g.add_argument("--order", type=int, default=1, help="Hamming/Johnson relation order")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="analyze an EDG or graph6 file")
    a.add_argument("file")
    a.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)
    a.add_argument("--per-point", action="store_true")
    a.add_argument("--transitivity", action="store_true")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("table", help="recompute a reference table")
    t.add_argument("id")
    t.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum cycle-space dimension")
    t.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("batch", help="analyze every file in a directory")
    b.add_argument("dir")
    b.add_argument("--format", choices=("text", "json"), default="json")
    b.add_argument("--t-max", type=int, default=DEFAULT_T_MAX)
    b.set_defaults(func=cmd_batch)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out)
    except (LatticeDesignError, ValueError, IndexError, OSError, UnicodeDecodeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"lattice-designs: error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
