"""Constructors for the generalized odd graph families and common fixtures."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError, is_connected

__all__ = [
    "kneser",
    "odd_graph",
    "folded_cube",
    "cycle",
    "path",
    "complete",
    "complete_bipartite",
    "hypercube",
    "circulant",
    "random_regular",
    "random_relabel",
    "FAMILIES",
]


def kneser(m: int, t: int) -> Graph:
    """Kneser graph K(m, t): t-subsets of range(m), adjacent when disjoint.

    Vertices are numbered in lexicographic order of the subsets.
    """
    if not m > t >= 1:
        raise GraphError(f"kneser needs m > t >= 1, got m={m}, t={t}")
    masks = [sum(1 << i for i in s) for s in combinations(range(m), t)]
    n = len(masks)
    rows = [0] * n
    for u in range(n):
        mu = masks[u]
        for v in range(u + 1, n):
            if not mu & masks[v]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def odd_graph(diameter: int) -> Graph:
    """The Odd graph K(2D+1, D)."""
    return kneser(2 * diameter + 1, diameter)


def folded_cube(m: int) -> Graph:
    """Folded m-cube: (m-1)-bit strings joined at Hamming distance 1 or m-1."""
    if m < 3 or m % 2 == 0:
        raise GraphError(f"folded_cube needs an odd m >= 3, got {m}")
    bits = m - 1
    n = 1 << bits
    full = n - 1
    rows = []
    for u in range(n):
        r = 1 << (u ^ full)
        for i in range(bits):
            r |= 1 << (u ^ (1 << i))
        rows.append(r)
    return Graph(n, rows)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << u) for u in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError(f"complete_bipartite needs a, b >= 1, got {a}, {b}")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, [right] * a + [left] * b)


def hypercube(m: int) -> Graph:
    if m < 1:
        raise GraphError(f"hypercube needs m >= 1, got {m}")
    n = 1 << m
    return Graph(n, [sum(1 << (u ^ (1 << i)) for i in range(m)) for u in range(n)])


def circulant(n: int, connection_set: Iterable[int]) -> Graph:
    """Cayley graph of Z_n: i ~ i ± s (mod n) for s in the connection set."""
    if n < 1:
        raise GraphError(f"circulant needs n >= 1, got {n}")
    steps = set()
    for s in connection_set:
        s %= n
        if s == 0:
            raise GraphError("connection set may not contain 0 mod n")
        steps.add(s)
        steps.add(n - s)
    return Graph.from_edges(n, ((i, (i + s) % n) for i in range(n) for s in steps))


def random_regular(
    n: int, k: int, rng: random.Random | None = None, connected: bool = True, max_tries: int = 10_000
) -> Graph:
    """Uniform-ish random k-regular graph by randomized point pairing.

    Points are paired one at a time among pairs that keep the graph simple;
    a dead end restarts the construction.
    """
    if not 0 <= k < n or (n * k) % 2:
        raise GraphError(f"no {k}-regular graph on {n} vertices")
    if connected and k < 2 and n > k + 1:
        raise GraphError(f"no connected {k}-regular graph on {n} vertices")
    rng = rng or random.Random()
    if k > (n - 1) // 2 and n > 2:
        comp = random_regular(n, n - 1 - k, rng, connected=False, max_tries=max_tries)
        full = (1 << n) - 1
        for _ in range(max_tries):
            g = Graph(n, [full ^ r ^ (1 << u) for u, r in enumerate(comp.rows)])
            if not connected or is_connected(g):
                return g
            comp = random_regular(n, n - 1 - k, rng, connected=False, max_tries=max_tries)
        raise RuntimeError("could not sample a connected regular graph")
    for _ in range(max_tries):
        rows = [0] * n
        points = [v for v in range(n) for _ in range(k)]
        ok = True
        while points:
            for _ in range(100):
                i, j = rng.sample(range(len(points)), 2)
                u, v = points[i], points[j]
                if u != v and not (rows[u] >> v) & 1:
                    break
            else:
                ok = False
                break
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            for idx in sorted((i, j), reverse=True):
                points.pop(idx)
        if not ok:
            continue
        g = Graph(n, rows)
        if not connected or is_connected(g):
            return g
    raise RuntimeError("could not sample a connected regular graph")


def random_relabel(g: Graph, rng: random.Random | None = None) -> Graph:
    rng = rng or random.Random()
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def _circulant_from_args(n, *steps):
    return circulant(n, steps)


# CLI family name -> (constructor, parameter names)
FAMILIES = {
    "kneser": (kneser, ("m", "t")),
    "odd": (odd_graph, ("D",)),
    "folded-cube": (folded_cube, ("m",)),
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "complete": (complete, ("n",)),
    "complete-bipartite": (complete_bipartite, ("a", "b")),
    "hypercube": (hypercube, ("m",)),
    "circulant": (_circulant_from_args, ("n", "s...")),
}
