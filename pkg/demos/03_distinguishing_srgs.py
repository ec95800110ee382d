"""Telling apart strongly regular graphs with equal parameters.

L2(4) and the Shrikhande graph are both (16, 6, 2, 2) strongly regular and
give the same (33, 96, 10, 3) configuration with the same inner products.
The number of points at each inner product from a fixed point separates them,
and on the complements the Shrikhande side splits into two point types.
"""

from lattice_designs import complement, configuration, gen_named, gen_square_lattice
from lattice_designs.exact import format_rational


def show(name, g):
    comp, = configuration(g, per_point=True)
    dist = comp.distribution
    print(f"{name}: {comp.configuration.as_tuple()}, srg {comp.srg.as_tuple()}")
    print("   values:", " ".join(f"{format_rational(v):>6}" for v in dist.values))
    for t in dist.types:
        print(f"   type {t.label} ({t.points:3d} points):", " ".join(f"{c:>6}" for c in t.counts))


show("L2(4)", gen_square_lattice(4))
show("Shrikhande", gen_named("shrikhande"))
show("complement of L2(4)", complement(gen_square_lattice(4)))
show("complement of Shrikhande", complement(gen_named("shrikhande")))
