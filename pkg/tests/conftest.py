import random

from hypothesis import strategies as st

from lattice_designs.graph import OrientedMultigraph


def random_connected_multigraph(rng, max_v=12, max_e=20, loops=True):
    """Random connected multigraph: a random spanning tree plus extra edges."""
    v = rng.randint(1, max_v)
    edges = []
    for x in range(1, v):
        y = rng.randrange(x)
        edges.append((x, y) if rng.random() < 0.5 else (y, x))
    extra = rng.randint(0, max(0, max_e - len(edges)))
    for _ in range(extra):
        o, t = rng.randrange(v), rng.randrange(v)
        if o == t and not loops:
            continue
        edges.append((o, t))
    rng.shuffle(edges)
    return OrientedMultigraph(v, tuple(edges))


@st.composite
def multigraphs(draw, max_v=8, max_e=14, connected=True, loops=True):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    if connected:
        return random_connected_multigraph(rng, max_v, max_e, loops)
    v = rng.randint(1, max_v)
    edges = tuple((rng.randrange(v), rng.randrange(v)) for _ in range(rng.randint(0, max_e)))
    if not loops:
        edges = tuple((o, t) for o, t in edges if o != t)
    return OrientedMultigraph(v, edges)


@st.composite
def simple_graphs(draw, max_v=9):
    v = draw(st.integers(1, max_v))
    pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return OrientedMultigraph(v, tuple(p for p, keep in zip(pairs, mask) if keep))


_ACCEPTANCE = []


def record_acceptance(line):
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
