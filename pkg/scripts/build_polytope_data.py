"""Regenerate src/lattice_designs/data/polytopes.json.

Vertex coordinates of the Platonic and Archimedean solids and the regular
4-polytopes are expanded from their usual sign/permutation patterns; edges
are the pairs at minimum distance.  Vertices are sorted by rounded
coordinates so the output is stable.  Run from the repository root:

    python scripts/build_polytope_data.py
"""

import itertools
import json
from pathlib import Path

import numpy as np

PHI = (1 + 5 ** 0.5) / 2
OUT = Path(__file__).resolve().parents[1] / "src" / "lattice_designs" / "data" / "polytopes.json"


def signs(v):
    idx = [i for i, x in enumerate(v) if x != 0]
    for s in itertools.product((1, -1), repeat=len(idx)):
        w = list(v)
        for i, si in zip(idx, s):
            w[i] *= si
        yield tuple(w)


def parity(p):
    p = list(p)
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def perms(v, kind="all"):
    out = []
    for p in itertools.permutations(range(len(v))):
        if kind == "even" and parity(p):
            continue
        if kind == "odd" and not parity(p):
            continue
        if kind == "cyclic" and p not in {(0, 1, 2), (1, 2, 0), (2, 0, 1)}:
            continue
        out.append(tuple(v[i] for i in p))
    return out


def expand(patterns, kind="all"):
    pts = []
    for pat in patterns:
        for q in perms(pat, kind):
            pts.extend(signs(q))
    return pts


def dedup(points):
    seen = {}
    for p in points:
        key = tuple(round(x, 9) + 0.0 for x in p)
        seen[key] = p
    return [np.array(seen[k]) for k in sorted(seen)]


def snub_cube():
    # tribonacci constant
    t = np.roots([1, -1, -1, -1])
    t = float(max(r.real for r in t if abs(r.imag) < 1e-12))
    base = (1.0, 1 / t, t)
    pts = []
    for p in itertools.permutations(range(3)):
        q = tuple(base[i] for i in p)
        for s in itertools.product((1, -1), repeat=3):
            plus = sum(1 for x in s if x > 0)
            w = tuple(a * b for a, b in zip(q, s))
            if parity(p) == 0 and plus % 2 == 0:
                pts.append(w)
            if parity(p) == 1 and plus % 2 == 1:
                pts.append(w)
    return pts


def icosahedral_rotations():
    """The 60 rotation matrices of the icosahedral group, by closure."""
    def rot(axis, ang):
        axis = np.asarray(axis, float)
        axis /= np.linalg.norm(axis)
        x, y, z = axis
        c, s = np.cos(ang), np.sin(ang)
        C = 1 - c
        return np.array([[c + x * x * C, x * y * C - z * s, x * z * C + y * s],
                         [y * x * C + z * s, c + y * y * C, y * z * C - x * s],
                         [z * x * C - y * s, z * y * C + x * s, c + z * z * C]])
    gens = [rot((0, 1, PHI), 2 * np.pi / 5), rot((1, 1, 1), 2 * np.pi / 3)]
    group = [np.eye(3)]
    frontier = [np.eye(3)]
    while frontier:
        new = []
        for g in frontier:
            for h in gens:
                m = h @ g
                if not any(np.allclose(m, x) for x in group):
                    group.append(m)
                    new.append(m)
        frontier = new
    assert len(group) == 60
    return group


def snub_dodecahedron():
    """Orbit of a point under the rotation group, tuned so all edges agree.

    Each vertex of the snub dodecahedron lies on one pentagon (rotation about
    a 5-fold axis) and on four triangles.  The point is found by solving for
    equal lengths of the five edges at one vertex.
    """
    from scipy.optimize import least_squares

    group = icosahedral_rotations()

    def nearest(p):
        pts = np.array([g @ p for g in group])
        dist = np.linalg.norm(pts - p, axis=1)
        order = np.argsort(dist)
        return pts, dist[order[1:6]], dist[order[6]]

    def residual(x):
        p = np.array([x[0], x[1], 1.0])
        _, d5, _ = nearest(p)
        return d5 - d5.mean()

    best = None
    rng = np.random.default_rng(0)
    for _ in range(400):
        x0 = rng.normal(size=2)
        sol = least_squares(residual, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        p = np.array([sol.x[0], sol.x[1], 1.0])
        pts, d5, d6 = nearest(p)
        if np.ptp(d5) < 1e-10 and d6 - d5.max() > 1e-3:
            best = pts
            break
    assert best is not None, "snub dodecahedron point not found"
    return [tuple(x) for x in best]


def regular_4d():
    out = {}
    out["24-cell"] = expand([(1, 1, 0, 0)])
    pts = list(signs((0.5, 0.5, 0.5, 0.5))) + expand([(1, 0, 0, 0)])
    for p in itertools.permutations(range(4)):
        if parity(p):
            continue
        base = (PHI / 2, 0.5, 1 / (2 * PHI), 0.0)
        pts.extend(signs(tuple(base[i] for i in p)))
    out["600-cell"] = pts
    s5 = 5 ** 0.5
    ip = 1 / PHI
    pts = expand([(0, 0, 2, 2), (1, 1, 1, s5), (PHI ** -2, PHI, PHI, PHI), (ip, ip, ip, PHI ** 2)])
    for base in [(0, PHI ** -2, 1, PHI ** 2), (0, ip, PHI, s5), (ip, 1, PHI, 2)]:
        for p in itertools.permutations(range(4)):
            if parity(p):
                continue
            pts.extend(signs(tuple(base[i] for i in p)))
    out["120-cell"] = pts
    return out


def solids():
    s2 = 2 ** 0.5
    ip = 1 / PHI
    out = {
        "tetrahedron": [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)],
        "hexahedron": list(signs((1, 1, 1))),
        "octahedron": expand([(1, 0, 0)]),
        "dodecahedron": list(signs((1, 1, 1))) + expand([(0, ip, PHI)], "cyclic"),
        "icosahedron": expand([(0, 1, PHI)], "cyclic"),
        "truncated-tetrahedron": [p for p in expand([(3, 1, 1)])
                                  if sum(1 for x in p if x < 0) % 2 == 0],
        "cuboctahedron": expand([(1, 1, 0)]),
        "truncated-octahedron": expand([(0, 1, 2)]),
        "truncated-hexahedron": expand([(s2 - 1, 1, 1)]),
        "rhombicuboctahedron": expand([(1, 1, 1 + s2)]),
        "great-rhombicuboctahedron": expand([(1, 1 + s2, 1 + 2 * s2)]),
        "icosidodecahedron": expand([(0, 0, PHI), (0.5, PHI / 2, PHI ** 2 / 2)], "cyclic"),
        "truncated-icosahedron": expand([(0, 1, 3 * PHI), (1, 2 + PHI, 2 * PHI),
                                         (PHI, 2, PHI ** 3)], "cyclic"),
        "truncated-dodecahedron": expand([(0, ip, 2 + PHI), (ip, PHI, 2 * PHI),
                                          (PHI, 2, PHI + 1)], "cyclic"),
        "snub-cube": snub_cube(),
        "rhombicosidodecahedron": expand([(1, 1, PHI ** 3), (PHI ** 2, PHI, 2 * PHI),
                                          (2 + PHI, 0, PHI ** 2)], "cyclic"),
        "great-rhombicosidodecahedron": expand([(ip, ip, 3 + PHI), (2 * ip, PHI, 1 + 2 * PHI),
                                                (ip, PHI ** 2, -1 + 3 * PHI),
                                                (2 * PHI - 1, 2, 2 + PHI), (PHI, 3, 2 * PHI)],
                                               "cyclic"),
        "snub-dodecahedron": snub_dodecahedron(),
    }
    return out


def skeleton(points):
    pts = dedup(points)
    X = np.array(pts)
    D = np.linalg.norm(X[:, None, :] - X[None, :, :], axis=2)
    iu = np.triu_indices(len(X), 1)
    dmin = D[iu].min()
    edges = [(int(i), int(j)) for i, j in zip(*iu) if abs(D[i, j] - dmin) < 1e-7 * max(1, dmin)]
    return len(X), edges


EXPECTED = {
    "tetrahedron": (4, 6), "hexahedron": (8, 12), "octahedron": (6, 12),
    "dodecahedron": (20, 30), "icosahedron": (12, 30),
    "truncated-tetrahedron": (12, 18), "cuboctahedron": (12, 24),
    "truncated-octahedron": (24, 36), "truncated-hexahedron": (24, 36),
    "rhombicuboctahedron": (24, 48), "great-rhombicuboctahedron": (48, 72),
    "icosidodecahedron": (30, 60), "truncated-icosahedron": (60, 90),
    "truncated-dodecahedron": (60, 90), "snub-cube": (24, 60),
    "rhombicosidodecahedron": (60, 120), "great-rhombicosidodecahedron": (120, 180),
    "snub-dodecahedron": (60, 150),
    "24-cell": (24, 96), "600-cell": (120, 720), "120-cell": (600, 1200),
}


def main():
    data = {}
    shapes = solids()
    shapes.update(regular_4d())
    for name, pts in shapes.items():
        v, edges = skeleton(pts)
        assert (v, len(edges)) == EXPECTED[name], (name, v, len(edges))
        data[name] = {"v": v, "edges": edges}
        print(f"{name:30s} v={v:4d} e={len(edges):5d}")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w") as fh:
        json.dump(data, fh, separators=(",", ":"), sort_keys=True)
        fh.write("\n")


if __name__ == "__main__":
    main()
