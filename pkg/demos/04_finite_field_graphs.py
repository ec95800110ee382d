"""Graphs over finite fields and relations of higher order.

Paley and cyclotomic graphs are Cayley graphs on GF(q).  Hamming and Johnson
graphs of higher order can fall apart; each component is realized on its own.
"""

from lattice_designs import (configuration, field, gen_circulant, gen_cyclotomic, gen_hamming,
                             gen_johnson, gen_paley, is_isomorphic)
from lattice_designs.families import cyclotomic_classes

F = field(9)
print(f"GF(9): modulus coefficients {F.modulus}, primitive element code {F.primitive}")

for q in (9, 13, 17, 25):
    comp, = configuration(gen_paley(q))
    print(f"Paley P({q}): {comp.configuration.as_tuple()}  srg {comp.srg.as_tuple()}")

print("C_i for q=13, m=3:", [sorted(c) for c in cyclotomic_classes(13, 3)])
cyc = gen_cyclotomic(13, 3)
print("Cyc(13, 3) isomorphic to Ci_13(1, 5):", is_isomorphic(cyc, gen_circulant(13, [1, 5])))
print("Cyc(13, 3):", configuration(cyc)[0].configuration.as_tuple())

for k in (1, 2, 3):
    comps = configuration(gen_hamming(3, 2, order=k))
    parts = [c.configuration.as_tuple() if c.configuration else c.status for c in comps]
    print(f"H(3, 2) order {k}: {len(comps)} component(s) {parts}")

kneser = configuration(gen_johnson(7, 3, order=3))
print("Kneser J(7, 3) order 3:", [c.configuration.as_tuple() for c in kneser])
