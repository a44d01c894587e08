"""Exact computations for Hilbert schemes of hypersurfaces in linear subspaces of Grassmannians."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Error,
    hilbert_function,
    hom_dimension,
    lr_multiply,
    pieri,
    plucker_relations,
    tangent_formula,
    tangent_oracle,
)

__all__ = [
    "Error",
    "classify",
    "component_count",
    "hilbert_function",
    "hilbert_poly",
    "hom_dimension",
    "lr_multiply",
    "pieri",
    "planar_curve_poly",
    "plucker_relations",
    "tangent_formula",
    "tangent_oracle",
    "verify",
]


def hilbert_poly(d, m):
    """Coefficients of P_{d,m}(T) as Fractions, constant term first."""
    return [Fraction(c) for c in _core.hilbert_poly(d, m)]


def planar_curve_poly(d):
    return [Fraction(c) for c in _core.planar_curve_poly(d)]


def component_count(d, k, n, m):
    """Component report as a dict (same schema as `grasshilb components --json`)."""
    return json.loads(_core.component_report_json(d, k, n, m))


def classify(spec, seed=0x5EED):
    """Classify a plane given as a family spec or an explicit plane (dict or JSON text)."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return json.loads(_core.classify_json(text, seed))


def verify(scope="fast", seed=42):
    return [
        {"id": i, "name": name, "passed": ok, "detail": detail, "seconds": secs}
        for i, name, ok, detail, secs in _core.verify(scope, seed)
    ]
