import math
import random
from fractions import Fraction

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings

from conftest import regular_graphs, to_nx
from specexcess.certifier import (
    DRG_NOT_GENERALIZED_ODD,
    GENERALIZED_ODD,
    NOT_DRG,
    PRECONDITION_FAILED,
    certify_generalized_odd,
    characteristic_polynomial,
    check_spectral_excess_theorem,
    corollary_cospectral_check,
    verify_lemma1,
)
from specexcess.exact import Polynomial
from specexcess.generators import (
    circulant,
    complete,
    complete_bipartite,
    cycle,
    folded_cube,
    hypercube,
    kneser,
    path,
    random_relabel,
)
from specexcess.graph import Graph, GraphError, IntersectionArray, odd_girth_combinatorial


def charpoly_oracle(g: Graph) -> Polynomial:
    x = sympy.Symbol("x")
    cs = sympy.Matrix(g.adjacency_matrix()).charpoly(x).all_coeffs()
    return Polynomial(int(c) for c in reversed(cs))


# spectral excess theorem

@pytest.mark.parametrize(
    "g, expected",
    [
        (kneser(5, 2), True),
        (cycle(7), True),
        (hypercube(3), True),
        (circulant(13, (1, 5)), False),
        (circulant(8, (1, 2)), False),
    ],
)
def test_spectral_excess_theorem_examples(g, expected):
    is_drg, avg, spx = check_spectral_excess_theorem(g)
    assert is_drg is expected
    assert avg <= spx


def test_spectral_excess_theorem_circulant_values():
    is_drg, avg, spx = check_spectral_excess_theorem(circulant(13, (1, 5)))
    # diameter 2 but d >= 4: nothing lies at distance d
    assert not is_drg
    assert avg == 0 and spx > 0


@given(regular_graphs(max_n=10))
@settings(max_examples=60, deadline=None)
def test_spectral_excess_theorem_matches_networkx(g):
    assert check_spectral_excess_theorem(g)[0] == nx.is_distance_regular(to_nx(g))


def test_spectral_excess_theorem_rejects_bad_input():
    with pytest.raises(GraphError):
        check_spectral_excess_theorem(path(3))


# average-excess identity

@pytest.mark.parametrize("g, value", [(kneser(5, 2), 6), (cycle(5), 2), (folded_cube(5), 10), (cycle(7), 2)])
def test_verify_lemma1(g, value):
    lhs, rhs, ok = verify_lemma1(g)
    assert ok and lhs == rhs == value


def test_verify_lemma1_requires_odd_girth_hypothesis():
    with pytest.raises(GraphError):
        verify_lemma1(hypercube(3))
    with pytest.raises(GraphError):
        verify_lemma1(circulant(13, (1, 5)))


# certification verdicts

@pytest.mark.parametrize(
    "g, array",
    [
        (kneser(3, 1), IntersectionArray((2,), (1,))),
        (kneser(5, 2), IntersectionArray((3, 2), (1, 1))),
        (kneser(7, 3), IntersectionArray((4, 3, 3), (1, 1, 2))),
        (folded_cube(3), IntersectionArray((3,), (1,))),
        (folded_cube(5), IntersectionArray((5, 4), (1, 2))),
        (cycle(5), IntersectionArray((2, 1), (1, 1))),
        (cycle(7), IntersectionArray((2, 1, 1), (1, 1, 1))),
    ],
)
def test_certifies_generalized_odd_families(g, array):
    report = certify_generalized_odd(g)
    assert report.verdict == GENERALIZED_ODD
    assert not report.failed
    assert report.intersection_array == array
    assert report.summary["D"] == report.summary["d"] == array.diameter
    assert report.summary["odd_girth"] == 2 * array.diameter + 1


def test_certifies_folded_7_cube_and_relabeling():
    g = folded_cube(7)
    h = random_relabel(g, random.Random(3))
    for graph in (g, h):
        report = certify_generalized_odd(graph)
        assert report.verdict == GENERALIZED_ODD
        assert report.intersection_array == IntersectionArray((7, 6, 5), (1, 2, 3))
    assert corollary_cospectral_check(g, h).spectra_equal


def test_precondition_failures():
    assert certify_generalized_odd(complete_bipartite(3, 3)).verdict == PRECONDITION_FAILED
    assert certify_generalized_odd(path(4)).verdict == PRECONDITION_FAILED
    assert certify_generalized_odd(Graph.from_edges(4, [(0, 1), (2, 3)])).verdict == PRECONDITION_FAILED
    assert certify_generalized_odd(circulant(13, (1, 5))).verdict == PRECONDITION_FAILED


def test_bipartite_report_records_distance_regularity():
    report = certify_generalized_odd(complete_bipartite(3, 3))
    assert report.distance_regular is True
    assert report.check("odd girth finite and >= 2d+1").passed is False


def test_complete_graphs_are_generalized_odd():
    assert certify_generalized_odd(complete(3)).verdict == GENERALIZED_ODD
    # K4: d = 1, odd girth 3 = 2d+1, D = 1, a_1 = 2 != 0
    assert certify_generalized_odd(complete(4)).verdict == GENERALIZED_ODD


def test_drg_that_is_not_generalized_odd():
    # Paley(9) = K3 x K3: strongly regular, d = 2, odd girth 3
    h = nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3))
    idx = {v: i for i, v in enumerate(h.nodes)}
    g = Graph.from_edges(9, ((idx[u], idx[v]) for u, v in h.edges))
    report = certify_generalized_odd(g)
    assert report.verdict == PRECONDITION_FAILED
    assert report.distance_regular is True


@given(regular_graphs(max_n=12))
@settings(max_examples=80, deadline=None)
def test_hypotheses_imply_generalized_odd(g):
    report = certify_generalized_odd(g)
    d = report.summary["d"]
    og = odd_girth_combinatorial(g)
    if og != math.inf and og >= 2 * d + 1:
        assert report.verdict == GENERALIZED_ODD
        assert report.summary["D"] == d and og == 2 * d + 1
    else:
        assert report.verdict == PRECONDITION_FAILED
    assert report.verdict != NOT_DRG
    assert report.verdict != DRG_NOT_GENERALIZED_ODD


@given(regular_graphs(max_n=12))
@settings(max_examples=40, deadline=None)
def test_failed_checks_carry_witnesses(g):
    for c in certify_generalized_odd(g).checks:
        if not c.passed:
            assert c.lhs is not None and c.rhs is not None


# characteristic polynomial and cospectral check

@pytest.mark.parametrize("g", [complete(2), cycle(5), kneser(5, 2), hypercube(3), path(5)])
def test_characteristic_polynomial_matches_sympy(g):
    assert characteristic_polynomial(g) == charpoly_oracle(g)


def test_characteristic_polynomial_examples():
    assert characteristic_polynomial(complete(2)) == Polynomial([-1, 0, 1])
    # (x-2)(x^2+x-1)^2
    assert characteristic_polynomial(cycle(5)) == Polynomial([-2, 5, 0, -5, 0, 1])
    # (x-3)(x-1)^5(x+2)^4
    x = Polynomial.x()
    expected = x - 3
    for _ in range(5):
        expected = expected * (x - 1)
    for _ in range(4):
        expected = expected * (x + 2)
    assert characteristic_polynomial(kneser(5, 2)) == expected


@given(regular_graphs(max_n=10))
@settings(max_examples=30, deadline=None)
def test_characteristic_polynomial_property(g):
    assert characteristic_polynomial(g) == charpoly_oracle(g)


def test_cospectral_relabeling_of_petersen():
    g = kneser(5, 2)
    r = corollary_cospectral_check(g, random_relabel(g, random.Random(1)))
    assert r.spectra_equal and r.consistent
    assert r.verdict_first == r.verdict_second == GENERALIZED_ODD


def test_cospectral_petersen_vs_cycle():
    r = corollary_cospectral_check(kneser(5, 2), cycle(5))
    assert not r.spectra_equal and r.consistent


def test_cospectral_non_isomorphic_pair():
    # K_{1,4} and C_4 + K_1 share the spectrum {2, 0, 0, 0, -2}
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    c4k1 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    r = corollary_cospectral_check(star, c4k1)
    assert r.spectra_equal
    assert r.verdict_first == r.verdict_second == PRECONDITION_FAILED


def test_lhs_rhs_are_exact():
    report = certify_generalized_odd(kneser(5, 2))
    c = report.check("average excess = spectral excess")
    assert isinstance(c.lhs, Fraction) and c.lhs == 6
