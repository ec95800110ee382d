"""Polygons with every edge repeated m times.

For a k-gon with m-fold edges the configuration is (k(m-1)+1, 2km, 5, 3),
with inner products -1, +-(k-1)/D and +-1/D where D = k(m-1)+1.  The loop
below checks the closed form for a range of k and m, including m = 5.
"""

from fractions import Fraction

from lattice_designs import configuration, gen_cycle, multiedge_expand

for m in (2, 3, 4, 5):
    for k in range(3, 11):
        D = k * (m - 1) + 1
        cfg, = (c.configuration for c in configuration(multiedge_expand(gen_cycle(k), m)))
        want_ds = sorted({Fraction(-1), Fraction(k - 1, D), -Fraction(k - 1, D), Fraction(1, D), -Fraction(1, D)})
        assert cfg.as_tuple() == (D, 2 * k * m, 5, 3) and list(cfg.distance_set) == want_ds
    print(f"m = {m}: closed form holds for 3 <= k <= 10")
