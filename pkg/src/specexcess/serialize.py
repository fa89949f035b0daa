"""JSON-ready views of analysis results.  Rationals become ``"num/den"`` strings."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from .certifier import CertificationReport
from .exact import Polynomial, rational_str
from .graph import IntersectionArray
from .spectral import SpectralData, average_excess_lemma, spectral_excess, spectral_odd_girth


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf"
        raise TypeError("floats are not part of any exact report")
    if isinstance(obj, Polynomial):
        return [rational_str(c) for c in obj.coeffs]
    if isinstance(obj, IntersectionArray):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def spectral_to_dict(spec: SpectralData, graph6: str | None = None) -> dict:
    out = {
        "graph6": graph6,
        "n": spec.n,
        "k": spec.k,
        "d": spec.d,
        "moments": list(spec.moments),
        "min_poly": spec.min_poly,
        "pi0": spec.pi0,
        "a_tilde_d": spec.a_tilde_d,
        "hoffman": spec.hoffman,
        "predistance": list(spec.predistance),
        "alphas": list(spec.alphas),
        "betas": list(spec.betas),
        "gammas": list(spec.gammas),
        "spectral_excess": spectral_excess(spec),
        "spectral_odd_girth": spectral_odd_girth(spec),
        "lemma_average_excess": (
            average_excess_lemma(spec) if spec.a_tilde_d != 0 else None
        ),
    }
    return jsonable(out)


def report_to_dict(report: CertificationReport) -> dict:
    return jsonable(
        {
            "graph6": report.graph6,
            "summary": report.summary,
            "verdict": report.verdict,
            "distance_regular": report.distance_regular,
            "intersection_array": report.intersection_array,
            "checks": [
                {"name": c.name, "passed": c.passed, "lhs": c.lhs, "rhs": c.rhs}
                for c in report.checks
            ],
        }
    )
