"""Exact q-hypergeometric series and verification suites for quantum K-theory
of grassmannians.

The heavy lifting lives in the C++ extension ``qkgr._core``; this package
re-exports its functions and adds small JSON conveniences.
"""

import json as _json

from ._core import (
    critical_gradient_norm,
    critical_orbit_count,
    pairing,
    pairing_equivariant,
    q_degree_gap,
    qint_minus,
    qint_plus,
    run_suite,
    series_coeff_json,
    series_json,
)

__all__ = [
    "critical_gradient_norm",
    "critical_orbit_count",
    "pairing",
    "pairing_equivariant",
    "q_degree_gap",
    "qint_minus",
    "qint_plus",
    "run_suite",
    "series",
    "series_coeff",
    "series_coeff_json",
    "series_json",
    "verify",
]


def series_coeff(kind, n, N, d, level=0):
    """Factored coefficient of Q^d as a dict (prefactor + binomial factors)."""
    return _json.loads(series_coeff_json(kind, level, n, N, list(d)))


def series(kind, n, N, D, level=0):
    """All coefficients with |d| <= D as a dict keyed per the qkgr/1 schema."""
    return _json.loads(series_json(kind, level, n, N, D))


def verify(name="all", seed=20200818, precision=50, jobs=1):
    """Run a verification suite and return the report as a dict."""
    return _json.loads(run_suite(name, seed, precision, jobs))
