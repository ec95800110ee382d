import random

import networkx as nx
import pytest
from hypothesis import given, settings

from lattice_designs import families as fam
from lattice_designs.errors import Exhausted, NotSimple
from lattice_designs.graph import OrientedMultigraph, complement, relabel
from lattice_designs.symmetry import find_isomorphism, is_isomorphic, transitivity

from conftest import simple_graphs


@pytest.mark.parametrize("make, vt, et", [
    (lambda: fam.gen_named("petersen"), True, True),
    (lambda: fam.gen_complete_multipartite([3, 4]), False, True),
    (lambda: fam.gen_path(4), False, False),
    (lambda: fam.gen_circulant(10, [1, 4]), True, True),
    (lambda: fam.gen_circulant(10, [1, 3]), True, True),
    (lambda: complement(fam.gen_named("shrikhande")), True, False),
    (lambda: fam.gen_polytope("cuboctahedron"), True, True),
    (lambda: fam.gen_polytope("truncated-tetrahedron"), True, False),
])
def test_transitivity_cases(make, vt, et):
    tr = transitivity(make())
    assert (tr.vertex_transitive, tr.edge_transitive) == (vt, et)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.v))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=40, deadline=None)
@given(simple_graphs(max_v=8))
def test_transitivity_against_networkx(g):
    h = _nx(g)
    auts = list(nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
    vertex_orbit = {a[0] for a in auts} if g.v else set()
    tr = transitivity(g)
    assert tr.vertex_transitive == (len(vertex_orbit) == g.v)
    if g.e:
        e0 = g.edges[0]
        edge_orbit = {frozenset((a[e0[0]], a[e0[1]])) for a in auts}
        assert tr.edge_transitive == (len(edge_orbit) == g.e)


@settings(max_examples=40, deadline=None)
@given(simple_graphs(max_v=9))
def test_isomorphism_of_relabelled_copy(g):
    perm = list(range(g.v))
    random.Random(g.e).shuffle(perm)
    h = relabel(g, perm)
    iso = find_isomorphism(g, h)
    assert iso is not None
    mapped = {frozenset((iso[a], iso[b])) for a, b in g.edges}
    assert mapped == {frozenset(e) for e in h.edges}


@settings(max_examples=40, deadline=None)
@given(simple_graphs(max_v=7), simple_graphs(max_v=7))
def test_isomorphism_against_networkx(a, b):
    assert is_isomorphic(a, b) == nx.is_isomorphic(_nx(a), _nx(b))


def test_known_isomorphisms():
    assert is_isomorphic(fam.gen_cyclotomic(13, 3), fam.gen_circulant(13, [1, 5]))
    assert is_isomorphic(fam.gen_paley(9), fam.gen_square_lattice(3))
    assert not is_isomorphic(fam.gen_named("shrikhande"), fam.gen_square_lattice(4))
    assert is_isomorphic(complement(fam.gen_triangular(5)), fam.gen_named("petersen"))


def test_multigraph_rejected():
    with pytest.raises(NotSimple):
        transitivity(fam.gen_diamond(2))


def test_search_budget():
    with pytest.raises(Exhausted):
        transitivity(fam.gen_named("petersen"), search_node_cap=1)
