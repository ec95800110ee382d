"""The hexagonal lattice from two vertices joined by three edges.

The projections of the three edges onto the 2-dimensional cycle space all
have squared norm 2/3.  Normalized and closed under negation they form a
regular hexagon, which is a spherical 5-design on the circle.
"""

from lattice_designs import build_point_set, design_strength, distance_set, parse_edge_list, realize
from lattice_designs.exact import format_rational

g = parse_edge_list("2 3\n0 1\n0 1\n0 1\n")
res = realize(g)
print("cycle space dimension:", res.d)
print("projection Gram matrix:")
for row in res.gram.n_matrix.tolist():
    print("   ", " ".join(f"{format_rational(x):>5}" for x in row))

ps = build_point_set(res)
print("common squared norm:", format_rational(ps.norm))
print("points:", ps.n)
print("inner products:", ", ".join(format_rational(x) for x in distance_set(ps)))
print("design strength:", design_strength(ps))

# the cycle route gives the same matrix from a fundamental cycle basis
assert realize(g, method="cycle").gram.n_matrix == res.gram.n_matrix
