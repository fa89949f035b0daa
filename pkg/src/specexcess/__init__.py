"""Exact spectral-excess certification of distance-regular and generalized odd graphs."""

from .certifier import (
    CertificationReport,
    certify_generalized_odd,
    characteristic_polynomial,
    check_spectral_excess_theorem,
    corollary_cospectral_check,
    verify_lemma1,
)
from .exact import Polynomial, poly_divmod, poly_eval
from .graph import Graph, IntersectionArray, encode_graph6, parse_graph6
from .spectral import SpectralData, analyze_spectrum, minimal_polynomial

__version__ = "0.1.0"

__all__ = [
    "CertificationReport",
    "Graph",
    "IntersectionArray",
    "Polynomial",
    "SpectralData",
    "analyze_spectrum",
    "certify_generalized_odd",
    "characteristic_polynomial",
    "check_spectral_excess_theorem",
    "corollary_cospectral_check",
    "encode_graph6",
    "minimal_polynomial",
    "parse_graph6",
    "poly_divmod",
    "poly_eval",
    "verify_lemma1",
]
