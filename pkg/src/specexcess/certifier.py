"""Certification of generalized odd graphs via the spectral excess theorem.

A connected regular graph with d+1 distinct eigenvalues and finite odd girth
at least 2d+1 must be a distance-regular generalized odd graph.
:func:`certify_generalized_odd` checks each hypothesis, every intermediate
identity leading to that conclusion, and finally the conclusion itself
against a direct combinatorial count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact import Polynomial, charpoly_from_traces
from .graph import (
    Graph,
    GraphError,
    IntersectionArray,
    basic_profile,
    bfs_layers,
    encode_graph6,
    excess_vector,
    is_distance_regular_direct,
    odd_girth_combinatorial,
)
from .spectral import (
    AdjacencyPowers,
    ConsistencyError,
    SpectralData,
    analyze_spectrum,
    average_excess_lemma,
    minimal_polynomial,
    spectral_excess,
    spectral_odd_girth,
)

GENERALIZED_ODD = "generalized-odd"
DRG_NOT_GENERALIZED_ODD = "distance-regular-not-generalized-odd"
NOT_DRG = "not-distance-regular"
PRECONDITION_FAILED = "precondition-failed"
VERDICTS = (GENERALIZED_ODD, DRG_NOT_GENERALIZED_ODD, NOT_DRG, PRECONDITION_FAILED)

__all__ = [
    "Check",
    "CertificationReport",
    "CospectralReport",
    "check_spectral_excess_theorem",
    "certify_generalized_odd",
    "verify_lemma1",
    "characteristic_polynomial",
    "corollary_cospectral_check",
    "walk_identity_witnesses",
    *("GENERALIZED_ODD", "DRG_NOT_GENERALIZED_ODD", "NOT_DRG", "PRECONDITION_FAILED"),
]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: Any
    rhs: Any


@dataclass
class CertificationReport:
    graph6: str
    summary: dict
    checks: list[Check] = field(default_factory=list)
    verdict: str = PRECONDITION_FAILED
    intersection_array: IntersectionArray | None = None
    distance_regular: bool | None = None

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _require_connected_regular(g: Graph):
    prof = basic_profile(g)
    if not prof.connected:
        raise GraphError("graph is disconnected")
    if not prof.regular:
        raise GraphError("graph is not regular")
    return prof


def check_spectral_excess_theorem(
    g: Graph, spec: SpectralData | None = None
) -> tuple[bool, Fraction, Fraction]:
    """``(is_drg, average_excess, spectral_excess)`` for a connected regular graph.

    The graph is distance-regular exactly when the BFS mean excess at
    distance d equals ``p_d(k)``.
    """
    _require_connected_regular(g)
    spec = spec or analyze_spectrum(g)
    average = Fraction(sum(excess_vector(g, spec.d)), g.n)
    spectral = spectral_excess(spec)
    if average > spectral:
        raise ConsistencyError(f"average excess {average} exceeds spectral excess {spectral}")
    return average == spectral, average, spectral


def verify_lemma1(g: Graph, spec: SpectralData | None = None) -> tuple[Fraction, Fraction, bool]:
    """BFS mean excess vs. ``n tr A^{2d+1} / (a_tilde_d pi0^2)``."""
    _require_connected_regular(g)
    spec = spec or analyze_spectrum(g)
    og = odd_girth_combinatorial(g)
    if og == math.inf or og < 2 * spec.d + 1:
        raise GraphError(f"odd girth {og} is not finite and >= 2d+1 = {2 * spec.d + 1}")
    lhs = Fraction(sum(excess_vector(g, spec.d)), g.n)
    rhs = average_excess_lemma(spec)
    return lhs, rhs, lhs == rhs


def walk_identity_witnesses(
    g: Graph, spec: SpectralData, powers: AdjacencyPowers
) -> tuple[tuple, tuple]:
    """Observed and expected ``((A^d)_uv, (A^{d+1})_uv)`` over pairs at distance d.

    Returns the first deviating pair's values, or the common values when all
    pairs agree.
    """
    d, n = spec.d, spec.n
    expected = (spec.pi0 / n, spec.a_tilde_d * spec.pi0 / n)
    ad, ad1 = powers.power(d), powers.power(d + 1)
    observed = expected
    for u in range(n):
        layers = bfs_layers(g, u)
        if d >= len(layers):
            continue
        mask = layers[d]
        v = 0
        while mask:
            if mask & 1:
                pair = (Fraction(ad[u][v]), Fraction(ad1[u][v]))
                if pair != expected:
                    return pair, expected
            mask >>= 1
            v += 1
    return observed, expected


def certify_generalized_odd(g: Graph) -> CertificationReport:
    """Run every hypothesis and identity check; never raises for valid graphs."""
    report = CertificationReport(graph6=encode_graph6(g), summary={"n": g.n})
    checks = report.checks

    def add(name, lhs, rhs, passed=None):
        ok = (lhs == rhs) if passed is None else bool(passed)
        checks.append(Check(name, ok, lhs, rhs))
        return ok

    prof = basic_profile(g)
    report.summary.update(k=prof.valency, D=prof.diameter)
    if not add("connected", prof.connected, True):
        return report
    if not add("regular", prof.regular, True):
        return report

    powers = AdjacencyPowers(g)
    spec = analyze_spectrum(g, powers)
    d, n, k = spec.d, spec.n, spec.k
    og_comb = odd_girth_combinatorial(g)
    og_spec = spectral_odd_girth(spec)
    report.summary.update(d=d, odd_girth=og_comb, odd_girth_spectral=og_spec)

    add("hoffman polynomial gives J", True, True)
    add("minimal polynomial degree = d+1", spec.min_poly.degree, d + 1)
    add("odd girth: spectral = combinatorial", og_spec, og_comb)

    is_drg, avg, spx = check_spectral_excess_theorem(g, spec)
    array = is_distance_regular_direct(g)
    report.distance_regular = array is not None
    report.intersection_array = array
    add("average excess <= spectral excess", avg, spx, avg <= spx)
    add("excess theorem verdict = direct verdict", is_drg, array is not None)

    hypothesis = og_comb != math.inf and og_comb >= 2 * d + 1
    if not add("odd girth finite and >= 2d+1", og_comb, 2 * d + 1, hypothesis):
        return report

    add("diameter D = d", prof.diameter, d)
    add("odd girth = 2d+1", og_comb, 2 * d + 1)
    add("average excess = spectral excess", avg, spx)
    add("average excess = n m_{2d+1} / (a_tilde_d pi0^2)", avg, average_excess_lemma(spec))
    for i in range(d):
        add(f"alpha_{i} = 0", spec.alphas[i], Fraction(0))
    for i, p in enumerate(spec.predistance):
        add(f"p_{i} has parity {i % 2}", p.has_parity(i), True)
    add("alpha_d = a_tilde_d", spec.alphas[d], spec.a_tilde_d)
    add(
        "alpha_d p_d(k) = n m_{2d+1} / pi0^2",
        spec.alphas[d] * spec.predistance[d](k),
        Fraction(n * spec.moments[2 * d + 1]) / spec.pi0 ** 2,
    )
    add("leading coefficient of p_d = n/pi0", spec.predistance[d].leading, Fraction(n) / spec.pi0)
    observed, expected = walk_identity_witnesses(g, spec, powers)
    add("(A^d)_uv = pi0/n at distance d", observed[0], expected[0])
    add("(A^{d+1})_uv = a_tilde_d pi0/n at distance d", observed[1], expected[1])

    if add("direct intersection array exists", array is not None, True):
        a = array.a
        add("a_i = 0 for i < D", a[:-1], (0,) * (len(a) - 1))
        add("a_D != 0", a[-1] != 0, True)

    if not report.failed:
        report.verdict = GENERALIZED_ODD
    elif array is not None:
        report.verdict = DRG_NOT_GENERALIZED_ODD
    else:
        report.verdict = NOT_DRG
    return report


def characteristic_polynomial(g: Graph, powers: AdjacencyPowers | None = None) -> Polynomial:
    """Monic characteristic polynomial from ``tr A^0 .. tr A^n`` (Newton's identities)."""
    powers = powers or AdjacencyPowers(g)
    cp = charpoly_from_traces(powers.traces(g.n), g.n)
    if not (cp % minimal_polynomial(g, powers)).is_zero():
        raise ConsistencyError("minimal polynomial does not divide the characteristic polynomial")
    return cp


@dataclass(frozen=True)
class CospectralReport:
    spectra_equal: bool
    verdict_first: str
    verdict_second: str

    @property
    def consistent(self) -> bool:
        """False only if a graph cospectral with a generalized odd graph fails to be one."""
        if self.spectra_equal and self.verdict_second == GENERALIZED_ODD:
            return self.verdict_first == GENERALIZED_ODD
        return True


def corollary_cospectral_check(g1: Graph, g2: Graph) -> CospectralReport:
    equal = g1.n == g2.n and characteristic_polynomial(g1) == characteristic_polynomial(g2)
    return CospectralReport(
        spectra_equal=equal,
        verdict_first=certify_generalized_odd(g1).verdict,
        verdict_second=certify_generalized_odd(g2).verdict,
    )
