"""Simple undirected graphs on vertices 0..n-1, graph6 I/O and BFS quantities.

Adjacency is stored as one Python int per vertex (bit ``v`` of ``rows[u]`` set
iff u ~ v), so neighbourhood intersections are single ``&`` operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "DistanceProfile",
    "IntersectionArray",
    "Profile",
    "parse_graph6",
    "encode_graph6",
    "bfs_layers",
    "distance_profile",
    "basic_profile",
    "is_connected",
    "odd_girth_combinatorial",
    "excess_vector",
    "is_distance_regular_direct",
]


class GraphError(ValueError):
    """Input graph violates an operation's structural precondition."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph with bit-packed adjacency rows."""

    __slots__ = ("n", "rows", "_nbrs")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, r in enumerate(rows):
            if r & ~full:
                raise GraphError(f"row {u} refers to a vertex >= {n}")
            if (r >> u) & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in _bits(r):
                if not (rows[v] >> u) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = tuple(rows)
        self._nbrs = None

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        """Construct without validation; callers guarantee a simple graph."""
        g = cls.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._nbrs = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        n = len(matrix)
        rows = [sum(1 << v for v, x in enumerate(row) if x) for row in matrix]
        return cls(n, rows)

    def neighbors(self, u: int) -> list[int]:
        return self.adjacency_lists()[u]

    def adjacency_lists(self) -> list[list[int]]:
        if self._nbrs is None:
            self._nbrs = [list(_bits(r)) for r in self.rows]
        return self._nbrs

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, r in enumerate(self.rows):
            for v in _bits(r >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency_matrix(self) -> list[list[int]]:
        n = self.n
        return [[(r >> v) & 1 for v in range(n)] for r in self.rows]

    def laplacian_matrix(self) -> list[list[int]]:
        n = self.n
        out = []
        for u, r in enumerate(self.rows):
            row = [-((r >> v) & 1) for v in range(n)]
            row[u] = r.bit_count()
            out.append(row)
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``u`` renamed ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count}, graph6={encode_graph6(self)!r})"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        bits.extend((rj >> i) & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(chr(v + 63))
    return _encode_n(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; a leading ``>>graph6<<`` header is accepted."""
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", base + i)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise Graph6Error("truncated 8-byte length header", base + len(s))
        n, pos = 0, 8
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
    else:
        if len(s) < 4:
            raise Graph6Error("truncated 4-byte length header", base + len(s))
        n, pos = 0, 4
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error(f"long length header used for small order {n}", base + 1)
    if n < 1:
        raise Graph6Error("graph order must be positive", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated bit field: expected {nbytes} data bytes, got {len(body)}",
            base + len(s),
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing data after bit field", base + pos + nbytes)
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", base + pos + nbytes - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# BFS quantities
# ---------------------------------------------------------------------------


def bfs_layers(g: Graph, root: int) -> list[int]:
    """Bitmasks of the BFS distance layers from ``root`` (layer 0 = {root})."""
    rows = g.rows
    seen = 1 << root
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


@dataclass(frozen=True)
class DistanceProfile:
    root: int
    distances: tuple  # int per vertex, None when unreachable

    @property
    def eccentricity(self) -> int:
        return max(d for d in self.distances if d is not None)

    def layer(self, i: int) -> list[int]:
        return [v for v, d in enumerate(self.distances) if d == i]


def distance_profile(g: Graph, root: int) -> DistanceProfile:
    dist = [None] * g.n
    for i, layer in enumerate(bfs_layers(g, root)):
        for v in _bits(layer):
            dist[v] = i
    return DistanceProfile(root, tuple(dist))


def is_connected(g: Graph) -> bool:
    rows = g.rows
    seen = frontier = 1
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


class Profile(NamedTuple):
    connected: bool
    regular: bool
    valency: int | None
    diameter: int | None
    bipartite: bool


def _is_bipartite(g: Graph) -> bool:
    rows = g.rows
    colour = [None] * g.n
    for start in range(g.n):
        if colour[start] is not None:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in _bits(rows[u]):
                if colour[v] is None:
                    colour[v] = colour[u] ^ 1
                    stack.append(v)
                elif colour[v] == colour[u]:
                    return False
    return True


def basic_profile(g: Graph) -> Profile:
    degs = g.degrees()
    regular = all(d == degs[0] for d in degs)
    connected = is_connected(g)
    diameter = None
    if connected:
        diameter = max(len(bfs_layers(g, u)) - 1 for u in range(g.n))
    return Profile(
        connected=connected,
        regular=regular,
        valency=degs[0] if regular else None,
        diameter=diameter,
        bipartite=_is_bipartite(g),
    )


def odd_girth_combinatorial(g: Graph) -> int | float:
    """Length of the shortest odd cycle, ``math.inf`` for bipartite graphs.

    From every root, an edge inside BFS layer t closes an odd walk of length
    2t+1; the minimum over roots is the odd girth.
    """
    rows = g.rows
    best = math.inf
    for r in range(g.n):
        for t, layer in enumerate(bfs_layers(g, r)):
            if 2 * t + 1 >= best:
                break
            if any(rows[x] & layer for x in _bits(layer)):
                best = 2 * t + 1
                break
        if best == 3:
            break
    return best


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph is disconnected")


def excess_vector(g: Graph, dist: int) -> list[int]:
    """Number of vertices at distance ``dist`` from each vertex."""
    _require_connected(g)
    out = []
    for u in range(g.n):
        layers = bfs_layers(g, u)
        out.append(layers[dist].bit_count() if dist < len(layers) else 0)
    return out


@dataclass(frozen=True)
class IntersectionArray:
    """``{b_0, ..., b_{D-1}; c_1, ..., c_D}`` of a distance-regular graph."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c):
            raise ValueError("b and c must have equal length")
        if self.c and self.c[0] != 1:
            raise ValueError("c_1 must be 1")

    @property
    def diameter(self) -> int:
        return len(self.b)

    @property
    def valency(self) -> int:
        return self.b[0] if self.b else 0

    @property
    def a(self) -> tuple[int, ...]:
        """``(a_1, ..., a_D)`` with ``a_i = k - b_i - c_i`` (b_D = 0)."""
        k = self.valency
        bs = self.b[1:] + (0,)
        return tuple(k - bi - ci for bi, ci in zip(bs, self.c))

    def layer_sizes(self) -> list[int]:
        sizes = [1]
        for bi, ci in zip(self.b, self.c):
            sizes.append(sizes[-1] * bi // ci)
        return sizes

    def __str__(self):
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"

    def to_dict(self) -> dict:
        return {"b": list(self.b), "c": list(self.c)}


def is_distance_regular_direct(g: Graph) -> IntersectionArray | None:
    """Intersection array if ``g`` is distance-regular, else None.

    Counts c_i, a_i, b_i for every ordered pair; requires a connected regular
    graph.
    """
    _require_connected(g)
    degs = g.degrees()
    if any(d != degs[0] for d in degs):
        raise GraphError("graph is not regular")
    rows = g.rows
    counts: dict[int, tuple[int, int, int]] = {}
    for u in range(g.n):
        layers = bfs_layers(g, u)
        layers.append(0)
        prev = 0
        for i in range(len(layers) - 1):
            here, nxt = layers[i], layers[i + 1]
            for v in _bits(here):
                r = rows[v]
                key = ((r & prev).bit_count(), (r & here).bit_count(), (r & nxt).bit_count())
                seen = counts.setdefault(i, key)
                if seen != key:
                    return None
            prev = here
        if len(layers) - 2 != max(counts):
            return None
    diameter = max(counts)
    return IntersectionArray(
        b=tuple(counts[i][2] for i in range(diameter)),
        c=tuple(counts[i][0] for i in range(1, diameter + 1)),
    )
