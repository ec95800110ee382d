"""Oriented multigraphs, file formats, and graph combinators.

A graph stores one representative ``(origin, terminus)`` per orientation
pair of edges.  The position of an edge in :attr:`OrientedMultigraph.edges`
is its canonical index; every downstream matrix is indexed by it.
"""

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParam, NotSimple, ParseError

__all__ = [
    "OrientedMultigraph",
    "Component",
    "SrgParams",
    "parse_edge_list",
    "write_edge_list",
    "parse_graph6",
    "write_graph6",
    "read_graph",
    "components",
    "is_connected",
    "is_bipartite",
    "complement",
    "multiedge_expand",
    "disjoint_union",
    "relabel",
    "srg_params",
    "from_adjacency",
]


@dataclass(frozen=True)
class OrientedMultigraph:
    vertex_count: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(o), int(t)) for o, t in self.edges)
        object.__setattr__(self, "edges", edges)
        v = self.vertex_count
        if v < 0:
            raise InvalidParam("vertex count must be non-negative")
        for o, t in edges:
            if not (0 <= o < v and 0 <= t < v):
                raise IndexError(f"edge ({o}, {t}) out of range for {v} vertices")

    @property
    def v(self):
        return self.vertex_count

    @property
    def e(self):
        return len(self.edges)

    @property
    def betti(self):
        """First Betti number ``e - v + c`` (c = number of components)."""
        return self.e - self.v + len(_component_labels(self)[1])

    def is_simple(self):
        seen = set()
        for o, t in self.edges:
            if o == t:
                return False
            key = (min(o, t), max(o, t))
            if key in seen:
                return False
            seen.add(key)
        return True

    def neighbors(self):
        """Adjacency sets, orientation and multiplicity ignored."""
        adj = [set() for _ in range(self.v)]
        for o, t in self.edges:
            adj[o].add(t)
            adj[t].add(o)
        return adj

    def degrees(self):
        deg = [0] * self.v
        for o, t in self.edges:
            deg[o] += 1
            deg[t] += 1
        return deg

    def edge_multiset(self):
        return Counter((min(o, t), max(o, t)) for o, t in self.edges)


@dataclass(frozen=True)
class Component:
    graph: OrientedMultigraph
    vertices: tuple  # local index -> original vertex
    edges: tuple     # local edge index -> original edge index


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def as_tuple(self):
        return (self.v, self.k, self.lam, self.mu)

    def complement(self):
        v, k, lam, mu = self.as_tuple()
        return SrgParams(v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lam)


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_list(text):
    """Parse the EDG format: a ``"v e"`` header then ``e`` lines ``"o t"``.

    Lines starting with ``#`` (and trailing ``#`` comments) are ignored.
    Edges keep file order and file orientation.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", line=1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"expected header 'v e', got {header!r}", line=lineno)
    try:
        v, e = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer header {header!r}", line=lineno) from None
    if v < 0 or e < 0:
        raise ParseError("negative counts in header", line=lineno)
    body = lines[1:]
    if len(body) != e:
        at = body[e][0] if len(body) > e else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"header declares {e} edges, found {len(body)}", line=at)
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'origin terminus', got {line!r}", line=lineno)
        try:
            o, t = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", line=lineno) from None
        if not (0 <= o < v and 0 <= t < v):
            raise IndexError(f"line {lineno}: vertex out of range [0, {v}) in {line!r}")
        edges.append((o, t))
    return OrientedMultigraph(v, tuple(edges))


def write_edge_list(g, comment=None):
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{g.v} {g.e}")
    out.extend(f"{o} {t}" for o, t in g.edges)
    return "\n".join(out) + "\n"


_G6_HEADER = ">>graph6<<"


def _g6_decode_n(data):
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated graph6 size field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(text):
    """Parse one graph6 string into a simple graph.

    Edge order follows the graph6 bit stream: for j = 1..n-1, for i < j,
    giving edge ``(i, j)`` oriented low to high.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    data = s.encode("ascii", errors="replace")
    for c in data:
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 character {chr(c)!r}")
    n, pos = _g6_decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    return OrientedMultigraph(n, tuple(edges))


def write_graph6(g):
    if not g.is_simple():
        raise NotSimple("graph6 encodes simple graphs only")
    n = g.v
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    adj = {(min(o, t), max(o, t)) for o, t in g.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def read_graph(path):
    """Read an EDG or graph6 file, sniffing by extension and then content."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    name = str(path).lower()
    if name.endswith((".g6", ".graph6")):
        return parse_graph6(_first_g6_line(text))
    if name.endswith((".edg", ".txt")):
        return parse_edge_list(text)
    stripped = [l for l in text.splitlines() if l.strip()]
    if len(stripped) == 1 and len(stripped[0].split()) == 1:
        return parse_graph6(stripped[0])
    return parse_edge_list(text)


def _first_g6_line(text):
    for line in text.splitlines():
        if line.strip():
            return line
    raise ParseError("empty graph6 file")


def _component_labels(g):
    label = [-1] * g.v
    adj = g.neighbors()
    roots = []
    for s in range(g.v):
        if label[s] >= 0:
            continue
        c = len(roots)
        roots.append(s)
        label[s] = c
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if label[y] < 0:
                    label[y] = c
                    queue.append(y)
    return label, roots


def is_connected(g):
    return g.v > 0 and len(_component_labels(g)[1]) == 1


def components(g):
    """Split into connected components, orientation ignored.

    Components are ordered by their smallest vertex; vertices and edges keep
    their relative order.  Each :class:`Component` carries the maps back to
    the original indices.
    """
    label, roots = _component_labels(g)
    verts = [[] for _ in roots]
    for x in range(g.v):
        verts[label[x]].append(x)
    edges = [[] for _ in roots]
    for idx, (o, _) in enumerate(g.edges):
        edges[label[o]].append(idx)
    out = []
    for vs, es in zip(verts, edges):
        local = {x: i for i, x in enumerate(vs)}
        sub = OrientedMultigraph(len(vs), tuple((local[g.edges[k][0]], local[g.edges[k][1]]) for k in es))
        out.append(Component(sub, tuple(vs), tuple(es)))
    return out


def is_bipartite(g):
    color = [-1] * g.v
    adj = g.neighbors()
    for s in range(g.v):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def from_adjacency(n, adjacent):
    """Simple graph on ``range(n)`` with edges ``(i, j)``, i < j, in lex order."""
    return OrientedMultigraph(n, tuple((i, j) for i, j in combinations(range(n), 2) if adjacent(i, j)))


def complement(g):
    if not g.is_simple():
        raise NotSimple("complement requires a simple graph")
    adj = g.neighbors()
    return from_adjacency(g.v, lambda i, j: j not in adj[i])


def multiedge_expand(g, m):
    """Replace every edge by ``m`` parallel copies, grouped consecutively."""
    if m < 1:
        raise InvalidParam("multiplicity must be >= 1")
    return OrientedMultigraph(g.v, tuple(edge for edge in g.edges for _ in range(m)))


def disjoint_union(graphs):
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((o + offset, t + offset) for o, t in g.edges)
        offset += g.v
    return OrientedMultigraph(offset, tuple(edges))


def relabel(g, perm):
    """Apply the vertex map ``x -> perm[x]``; edges keep their order."""
    return OrientedMultigraph(g.v, tuple((perm[o], perm[t]) for o, t in g.edges))


def srg_params(g):
    """Strongly regular parameters of a simple graph, or ``None``.

    Complete graphs are reported with ``mu = 0``; the empty graph and graphs
    without edges are not strongly regular.
    """
    if not g.is_simple():
        raise NotSimple("srg_params requires a simple graph")
    n = g.v
    if n == 0 or g.e == 0:
        return None
    adj = g.neighbors()
    k = len(adj[0])
    if any(len(a) != k for a in adj):
        return None
    lam = mu = None
    for x in range(n):
        ax = adj[x]
        for y in range(x + 1, n):
            c = len(ax & adj[y])
            if y in ax:
                if lam is None:
                    lam = c
                elif lam != c:
                    return None
            else:
                if mu is None:
                    mu = c
                elif mu != c:
                    return None
    return SrgParams(n, k, lam if lam is not None else 0, mu if mu is not None else 0)
