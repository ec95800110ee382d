"""Skeleta of the regular and Archimedean polyhedra.

The regular polyhedra and the edge-transitive Archimedean solids give
equal-norm configurations.  The other Archimedean solids have several
distinct squared norms, so their normalized sets are not 3-designs.
"""

from lattice_designs import configuration, gen_polytope
from lattice_designs.families import POLYTOPE_NAMES

print(f"{'polytope':30s} {'v':>4} {'e':>4}  result")
for name in POLYTOPE_NAMES:
    g = gen_polytope(name)
    if g.e - g.v + 1 > 400:
        print(f"{name:30s} {g.v:4d} {g.e:4d}  (skipped: cycle space too large for a quick demo)")
        continue
    comp, = configuration(g)
    if comp.status == "ok":
        result = str(comp.configuration.as_tuple())
    else:
        u = comp.unequal
        result = f"{u.distinct_norms} distinct norms; normalized (d, n, s, t) = {(u.d, u.n, u.s, u.t)}"
    print(f"{name:30s} {g.v:4d} {g.e:4d}  {result}")
