"""Spectrum-derived objects of a connected regular graph, computed exactly.

Individual eigenvalues are never formed.  Everything comes from the minimal
polynomial ``m`` of the adjacency matrix and the closed-walk counts
``m_j = tr A^j``:

* ``pi0 = q(k)`` with ``q = m / (x - k)``,
* the Hoffman polynomial ``H = (n / pi0) q``, which satisfies ``H(A) = J``,
* ``a_tilde_d``: the sum of the distinct eigenvalues, i.e. minus the
  ``x^d`` coefficient of the monic ``m``,
* the predistance polynomials ``p_0 .. p_d``, orthogonal for
  ``<p, q> = tr(p(A) q(A)) / n`` and normalised by ``<p_i, p_i> = p_i(k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator

from .exact import (
    Polynomial,
    fraction_free_rank,
    identity,
    matrix_minimal_polynomial,
)
from .graph import Graph, GraphError, basic_profile

__all__ = [
    "ConsistencyError",
    "AdjacencyPowers",
    "SpectralData",
    "minimal_polynomial",
    "analyze_spectrum",
    "inner_product",
    "predistance_polynomials",
    "recurrence_coefficients",
    "spectral_excess",
    "average_excess_lemma",
    "spectral_odd_girth",
    "odd_girth_from_spectrum",
    "closed_walks_3",
]

X = Polynomial.x()


class ConsistencyError(ArithmeticError):
    """An identity that must hold exactly failed; indicates a bug."""


class AdjacencyPowers:
    """Memoized integer powers ``A^0, A^1, ...`` of a graph's adjacency matrix."""

    def __init__(self, g: Graph):
        self.graph = g
        self._powers = [identity(g.n)]

    def power(self, j: int) -> list[list[int]]:
        nbrs = self.graph.adjacency_lists()
        n = self.graph.n
        while len(self._powers) <= j:
            prev = self._powers[-1]
            # (P A)[u][v] = sum of P[u][w] over neighbours w of v; powers of a
            # symmetric matrix are symmetric, so fill the upper triangle only
            nxt = [[0] * n for _ in range(n)]
            for u in range(n):
                row, out = prev[u], nxt[u]
                for v in range(u, n):
                    s = 0
                    for w in nbrs[v]:
                        s += row[w]
                    out[v] = s
                    nxt[v][u] = s
            self._powers.append(nxt)
        return self._powers[j]

    def __iter__(self) -> Iterator[list[list[int]]]:
        j = 0
        while True:
            yield self.power(j)
            j += 1

    def trace(self, j: int) -> int:
        p = self.power(j)
        return sum(p[i][i] for i in range(self.graph.n))

    def traces(self, t: int) -> list[int]:
        return [self.trace(j) for j in range(t + 1)]

    def apply(self, p: Polynomial) -> list[list[Fraction]]:
        """``p(A)`` as a combination of cached powers."""
        n = self.graph.n
        out = [[Fraction(0)] * n for _ in range(n)]
        for j, c in enumerate(p.coeffs):
            if c == 0:
                continue
            pw = self.power(j)
            for u in range(n):
                row, src = out[u], pw[u]
                for v in range(n):
                    if src[v]:
                        row[v] += c * src[v]
        return out


@dataclass(frozen=True)
class SpectralData:
    n: int
    k: int
    d: int
    moments: tuple[int, ...]
    min_poly: Polynomial
    pi0: Fraction
    a_tilde_d: Fraction
    hoffman: Polynomial
    predistance: tuple[Polynomial, ...] = ()
    alphas: tuple[Fraction, ...] = ()
    betas: tuple[Fraction, ...] = ()  # beta_0 .. beta_{d-1}
    gammas: tuple[Fraction, ...] = ()  # gamma_1 .. gamma_d

    def moment(self, j: int) -> int:
        return self.moments[j]


def minimal_polynomial(g: Graph, powers: AdjacencyPowers | None = None) -> Polynomial:
    """Monic minimal polynomial of the adjacency matrix."""
    powers = powers or AdjacencyPowers(g)
    return matrix_minimal_polynomial(None, powers=iter(powers), symmetric=True)


def inner_product(p: Polynomial, q: Polynomial, spec: SpectralData) -> Fraction:
    """``<p, q> = tr(p(A) q(A)) / n`` evaluated from the moment sequence.

    Products beyond the stored moments are first reduced modulo the minimal
    polynomial, which does not change ``(pq)(A)``.
    """
    prod = p * q
    if prod.degree >= len(spec.moments):
        prod = prod % spec.min_poly
    total = sum((c * spec.moments[j] for j, c in enumerate(prod.coeffs)), Fraction(0))
    return total / spec.n


def predistance_polynomials(spec: SpectralData) -> tuple[Polynomial, ...]:
    """Gram-Schmidt on ``1, x, ..., x^d`` then rescaling to ``<p_i,p_i> = p_i(k)``."""
    d, k = spec.d, spec.k
    gram = [
        [Fraction(spec.moments[i + j], spec.n) for j in range(d + 1)] for i in range(d + 1)
    ]
    if fraction_free_rank(gram) != d + 1:
        raise ConsistencyError("Gram matrix of 1..x^d is singular")
    monic: list[Polynomial] = []
    norms: list[Fraction] = []
    for i in range(d + 1):
        q = Polynomial.monomial(i)
        xi = q
        for qj, nj in zip(monic, norms):
            q = q - qj * (inner_product(xi, qj, spec) / nj)
        monic.append(q)
        norms.append(inner_product(q, q, spec))
    out = []
    for i, (q, nq) in enumerate(zip(monic, norms)):
        qk = q(k)
        if qk == 0 or nq == 0:
            raise ValueError(f"degenerate orthogonal polynomial at degree {i}")
        out.append(q * (qk / nq))
    if sum(out, Polynomial()) != spec.hoffman:
        raise ConsistencyError("predistance polynomials do not sum to the Hoffman polynomial")
    return tuple(out)


def recurrence_coefficients(
    spec: SpectralData,
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Coefficients of ``x p_i = beta_{i-1} p_{i-1} + alpha_i p_i + gamma_{i+1} p_{i+1}``.

    Returned as ``(alphas[0..d], betas[0..d-1], gammas[1..d])``.  The
    expansion is checked exactly; for ``i = d`` it holds modulo the minimal
    polynomial.
    """
    ps = spec.predistance
    d, k = spec.d, spec.k
    pk = [p(k) for p in ps]
    xps = [X * p for p in ps]
    alphas = tuple(inner_product(xps[i], ps[i], spec) / pk[i] for i in range(d + 1))
    betas = tuple(inner_product(xps[i + 1], ps[i], spec) / pk[i] for i in range(d))
    gammas = tuple(inner_product(xps[i - 1], ps[i], spec) / pk[i] for i in range(1, d + 1))
    for i in range(d + 1):
        rhs = alphas[i] * ps[i]
        if i > 0:
            rhs = rhs + betas[i - 1] * ps[i - 1]
        if i < d:
            rhs = rhs + gammas[i] * ps[i + 1]
            ok = xps[i] == rhs
        else:
            ok = ((xps[i] - rhs) % spec.min_poly).is_zero()
        if not ok:
            raise ConsistencyError(f"three-term recurrence fails at i={i}")
    return alphas, betas, gammas


def analyze_spectrum(g: Graph, powers: AdjacencyPowers | None = None) -> SpectralData:
    """All spectral data of a connected regular graph.

    Raises :class:`GraphError` for disconnected or nonregular input and
    :class:`ConsistencyError` if ``H(A) != J``.
    """
    prof = basic_profile(g)
    if not prof.connected:
        raise GraphError("graph is disconnected")
    if not prof.regular:
        raise GraphError("graph is not regular")
    powers = powers or AdjacencyPowers(g)
    n, k = g.n, prof.valency
    mpoly = minimal_polynomial(g, powers)
    d = mpoly.degree - 1
    q, r = divmod(mpoly, X - k)
    if not r.is_zero():
        raise ConsistencyError("x - k does not divide the minimal polynomial")
    pi0 = q(k)
    if pi0 <= 0:
        raise ConsistencyError(f"pi0 = {pi0} is not positive")
    hoffman = q * (Fraction(n) / pi0)
    hA = powers.apply(hoffman)
    if any(v != 1 for row in hA for v in row):
        raise ConsistencyError("Hoffman polynomial does not evaluate to J")
    spec = SpectralData(
        n=n,
        k=k,
        d=d,
        moments=tuple(powers.traces(2 * d + 1)),
        min_poly=mpoly,
        pi0=pi0,
        a_tilde_d=-mpoly.coeff(d),
        hoffman=hoffman,
    )
    spec = replace(spec, predistance=predistance_polynomials(spec))
    alphas, betas, gammas = recurrence_coefficients(spec)
    return replace(spec, alphas=alphas, betas=betas, gammas=gammas)


def spectral_excess(spec: SpectralData) -> Fraction:
    """``p_d(k)``."""
    return spec.predistance[spec.d](spec.k)


def average_excess_lemma(spec: SpectralData) -> Fraction:
    """Average excess from the spectrum alone: ``n m_{2d+1} / (a_tilde_d pi0^2)``.

    Valid for graphs of finite odd girth at least 2d+1.
    """
    if spec.a_tilde_d == 0:
        raise ValueError("a_tilde_d = 0: the odd-girth hypothesis is violated")
    return Fraction(spec.n * spec.moments[2 * spec.d + 1]) / (spec.a_tilde_d * spec.pi0 ** 2)


def spectral_odd_girth(spec: SpectralData) -> int | float:
    """Smallest odd ``j <= 2d+1`` with ``m_j != 0``; ``math.inf`` if none."""
    for j in range(1, 2 * spec.d + 2, 2):
        if spec.moments[j]:
            return j
    return math.inf


def closed_walks_3(g: Graph) -> int:
    """``tr A^3`` via ``(A^2)_uv = |N(u) & N(v)|``, summed over ordered edges."""
    rows = g.rows
    return sum((rows[u] & rows[v]).bit_count() for u, nb in enumerate(g.adjacency_lists()) for v in nb)


def odd_girth_from_spectrum(g: Graph, powers: AdjacencyPowers | None = None) -> int | float:
    """Odd girth from closed-walk counts, for any graph (regular or not).

    Uses the same rule as :func:`spectral_odd_girth` with ``d`` taken from the
    adjacency minimal polynomial.  A nonzero ``m_3`` needs no ``d``: A has an
    edge and zero diagonal, so it is not scalar and ``d >= 1``.
    """
    if closed_walks_3(g):
        return 3
    powers = powers or AdjacencyPowers(g)
    d = minimal_polynomial(g, powers).degree - 1
    for j in range(5, 2 * d + 2, 2):
        if powers.trace(j):
            return j
    return math.inf
