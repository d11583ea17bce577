"""Exact weight-enumerator quasi-polynomials of codes over Z/qZ.

The heavy lifting lives in the compiled extension ``zqcode._core``; this
package converts its decimal-string outputs into Python ints and parsed JSON.
"""

import json
from fractions import Fraction

from zqcode._core import (  # noqa: F401
    Analysis,
    BudgetError,
    ConsistencyError,
    char_quasi_closed as _char_quasi_closed,
    family,
    oracle_distribution as _oracle_distribution,
)

__all__ = [
    "Analysis",
    "BudgetError",
    "ConsistencyError",
    "analyze",
    "char_quasi_closed",
    "family",
    "min_weight",
    "minweight_report",
    "oracle_distribution",
    "tutte_eval",
    "weight_distribution",
]


def analyze(rows, max_columns=22, jobs=1):
    """Full constituent table as a dict: rho0, rank, and per divisor class the
    list of weight-coefficient polynomials (Fraction coefficients, lowest
    degree first)."""
    a = Analysis(rows, max_columns, jobs)
    data = json.loads(a.constituents_json())
    classes = {}
    for i, component in enumerate(data["weights"]):
        for key, coeffs in component["constituents"].items():
            classes.setdefault(int(key), [None] * (data["n"] + 1))
            classes[int(key)][i] = [Fraction(c) for c in coeffs]
    return {
        "n": data["n"],
        "rank": data["rank"],
        "rho0": int(data["rho0"]),
        "elementary_divisors": [int(e) for e in a.elementary_divisors()],
        "classes": classes,
        "minimum_period": int(a.minimum_period()),
    }


def weight_distribution(rows, q, **kwargs):
    return [int(c) for c in Analysis(rows, **kwargs).weight_distribution(q)]


def min_weight(rows, q, **kwargs):
    """Minimum weight at q, or None when the code is {0}."""
    return Analysis(rows, **kwargs).min_weight(q)


def minweight_report(rows, **kwargs):
    return json.loads(Analysis(rows, **kwargs).minweight_report_json())


def tutte_eval(rows, u, v, **kwargs):
    return Fraction(Analysis(rows, **kwargs).tutte_eval(str(u), str(v)))


def char_quasi_closed(tag, k, q):
    return int(_char_quasi_closed(tag, k, q))


def oracle_distribution(rows, q, budget=100_000_000):
    return [int(c) for c in _oracle_distribution(rows, q, budget)]
