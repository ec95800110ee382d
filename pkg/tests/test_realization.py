import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from lattice_designs import families as fam
from lattice_designs.errors import Disconnected
from lattice_designs.exact import RatMatrix
from lattice_designs.graph import OrientedMultigraph, components, disjoint_union
from lattice_designs.realization import (cycle_basis, equal_norm_check, projection_gram,
                                         projection_gram_cut, realize)

from conftest import multigraphs, random_connected_multigraph


def _incidence(g):
    d = np.zeros((g.v, g.e))
    for k, (o, t) in enumerate(g.edges):
        d[t, k] += 1
        d[o, k] -= 1
    return d


def _float_projection(g):
    """Projection onto ker(boundary) from an SVD null space."""
    d = _incidence(g)
    if g.v == 0 or g.e == 0:
        return np.eye(g.e)
    _, s, vt = np.linalg.svd(d)
    rank = int((s > 1e-9).sum())
    basis = vt[rank:].T
    return basis @ basis.T


def _as_float(m):
    return np.array([[float(x) for x in row] for row in m.tolist()])


def test_hexagonal_norms():
    res = realize(fam.gen_diamond(2))
    assert res.d == 2
    assert res.squared_norm_multiset == {Fraction(2, 3): 3}
    assert res.equal_norm == Fraction(2, 3)
    n = res.gram.n_matrix
    assert n[0, 1] == Fraction(-1, 3)


def test_bouquet_is_identity():
    res = realize(fam.gen_bouquet(4))
    assert res.gram.n_matrix == RatMatrix.identity(4)


def test_tree_is_degenerate():
    res = realize(fam.gen_path(5))
    assert res.d == 0 and res.gram.n_matrix == RatMatrix.zeros(4, 4)
    assert res.squared_norm_multiset == {0: 4}


def test_k4_norms():
    res = realize(fam.gen_complete(4))
    assert res.equal_norm == Fraction(1, 2) and res.d == 3


def test_cycle_basis_columns_are_cycles():
    g = fam.gen_complete(5)
    b = cycle_basis(g)
    d = _incidence(g)
    assert b.d == 6
    for col in b.columns:
        assert not np.any(d @ np.array(col))


def test_cycle_basis_needs_connected():
    with pytest.raises(Disconnected):
        cycle_basis(disjoint_union([fam.gen_cycle(3), fam.gen_cycle(3)]))
    with pytest.raises(ValueError):
        realize(fam.gen_cycle(3), method="other")


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_v=8, max_e=14))
def test_projection_identities(g):
    n = projection_gram_cut(g).n_matrix
    assert n.is_symmetric()
    assert n @ n == n
    assert n.trace() == g.e - g.v + 1
    # rows are cycles: boundary of every row vanishes
    for i in range(g.e):
        bd = [Fraction(0)] * g.v
        for k, (o, t) in enumerate(g.edges):
            bd[t] += n[i, k]
            bd[o] -= n[i, k]
        assert not any(bd)


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_v=8, max_e=14))
def test_cut_and_cycle_routes_agree(g):
    cut = projection_gram_cut(g).n_matrix
    assert projection_gram(cycle_basis(g, root=0)).n_matrix == cut
    assert projection_gram(cycle_basis(g, root=g.v - 1)).n_matrix == cut


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_v=9, max_e=16, connected=False))
def test_cut_route_matches_float_nullspace(g):
    exact = _as_float(projection_gram_cut(g).n_matrix)
    assert np.allclose(exact, _float_projection(g), atol=1e-9)


@settings(max_examples=30, deadline=None)
@given(multigraphs(max_v=8, max_e=14, connected=False))
def test_disconnected_is_block_diagonal(g):
    n = projection_gram_cut(g).n_matrix
    assert projection_gram_cut(g).d == g.betti
    for comp in components(g):
        sub = projection_gram_cut(comp.graph).n_matrix
        for a, i in enumerate(comp.edges):
            for b, j in enumerate(comp.edges):
                assert n[i, j] == sub[a, b]


def test_equal_norm_check_tally():
    res = equal_norm_check(projection_gram_cut(fam.gen_polytope("truncated-tetrahedron")))
    assert res.equal_norm is None
    assert res.squared_norm_multiset == {Fraction(3, 10): 6, Fraction(13, 30): 12}
    assert res.distinct_norms == 2


def test_orientation_reversal_flips_signs():
    g = fam.gen_complete(4)
    flipped = OrientedMultigraph(4, ((g.edges[0][1], g.edges[0][0]),) + g.edges[1:])
    a = projection_gram_cut(g).n_matrix
    b = projection_gram_cut(flipped).n_matrix
    for j in range(g.e):
        assert b[0, j] == (a[0, j] if j == 0 else -a[0, j])


def test_large_random_graph_routes_agree():
    rng = random.Random(7)
    g = random_connected_multigraph(rng, max_v=12, max_e=20)
    assert projection_gram(cycle_basis(g)).n_matrix == projection_gram_cut(g).n_matrix
