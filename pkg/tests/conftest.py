import random
from fractions import Fraction

import networkx as nx
import sympy
from hypothesis import strategies as st

from specexcess.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes)}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges))


def odd_girth_oracle(h: nx.Graph) -> float:
    """Shortest odd closed walk, via BFS in the bipartite double cover."""
    cover = nx.Graph(((u, p), (v, 1 - p)) for u, v in h.edges for p in (0, 1))
    best = float("inf")
    for v in h.nodes:
        if (v, 0) in cover:
            try:
                best = min(best, nx.shortest_path_length(cover, (v, 0), (v, 1)))
            except nx.NetworkXNoPath:
                pass
    return best


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, keep in zip(pairs, chosen) if keep))


@st.composite
def connected_graphs(draw, min_n=1, max_n=10):
    g = draw(graphs(min_n, max_n))
    # join components along a path so the result stays random but connected
    h = to_nx(g)
    comps = [min(c) for c in nx.connected_components(h)]
    h.add_edges_from(zip(comps, comps[1:]))
    return from_nx(h)


# Spectral excess from eigenvalues and multiplicities:
#   p_d(k) = n / (pi0^2 * sum_i 1 / (mult_i * m'(lambda_i)^2))
# where m is the minimal polynomial.  The sum over the roots of each
# irreducible factor f of the characteristic polynomial is taken exactly in
# Q[x]/(f) using power sums of the roots.

_X = sympy.Symbol("x")


def _rat(v) -> Fraction:
    return Fraction(int(v.p), int(v.q))


def _root_power_sums(f, count: int) -> list[Fraction]:
    c = [_rat(v) for v in sympy.Poly(f, _X).monic().all_coeffs()]
    deg = len(c) - 1
    e = [(-1) ** i * c[i] if i <= deg else Fraction(0) for i in range(max(count, deg + 1))]
    p = [Fraction(deg)]
    for j in range(1, count):
        s = sum(((-1) ** (i - 1) * e[i] * p[j - i] for i in range(1, j)), Fraction(0))
        p.append(s + (-1) ** (j - 1) * j * e[j])
    return p


def _root_sum(f, h) -> Fraction:
    coeffs = [_rat(v) for v in reversed(sympy.Poly(h, _X).all_coeffs())]
    return sum(a * b for a, b in zip(coeffs, _root_power_sums(f, len(coeffs))))


def spectral_excess_oracle(g: Graph) -> Fraction:
    a = sympy.Matrix(g.adjacency_matrix())
    _, factors = sympy.factor_list(a.charpoly(_X).as_expr(), _X)
    m = sympy.prod(f for f, _ in factors)
    dm = sympy.expand(sympy.diff(m, _X))
    pi0 = _rat(dm.subs(_X, g.degree(0)))
    total = sum(_root_sum(f, sympy.invert(e * dm ** 2, f, _X)) for f, e in factors)
    return g.n / (pi0 ** 2 * total)


def minimal_polynomial_oracle(g: Graph) -> sympy.Poly:
    """A is symmetric, hence diagonalizable: m is the squarefree part of the charpoly."""
    return sympy.Poly(sympy.sqf_part(sympy.Matrix(g.adjacency_matrix()).charpoly(_X).as_expr()), _X)


@st.composite
def regular_graphs(draw, max_n=12):
    from specexcess.generators import random_regular

    n = draw(st.integers(3, max_n))
    k = draw(st.integers(2, n - 1).filter(lambda k: n * k % 2 == 0))
    return random_regular(n, k, random.Random(draw(st.integers(0, 2**32))))
