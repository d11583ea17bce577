"""Smoke tests for the Python bindings. Run with PYTHONPATH pointing at the
built package directory (ctest wires this up)."""

import sys
from fractions import Fraction

import zqcode

failures = 0


def check(cond, label):
    global failures
    if cond:
        print(f"ok:   {label}")
    else:
        print(f"FAIL: {label}")
        failures += 1


diag = [[2, 0], [0, 4]]

report = zqcode.analyze(diag)
check(report["rho0"] == 4, "rho0 of the diagonal matrix")
check(report["rank"] == 2, "rank")
check(report["elementary_divisors"] == [2, 4], "elementary divisors")
check(report["minimum_period"] == 4, "minimum period")
check(sorted(report["classes"]) == [1, 2, 4], "divisor classes")
check(report["classes"][4][1] == [Fraction(-2), Fraction(3, 4)], "class-4 weight-1 coefficients")

check(zqcode.weight_distribution(diag, 4) == [1, 1, 0], "weight distribution at q=4")
check(zqcode.weight_distribution(diag, 5) == [1, 8, 16], "weight distribution at q=5")
check(zqcode.weight_distribution(diag, 4) == zqcode.oracle_distribution(diag, 4),
      "pipeline agrees with the enumeration oracle")

check(zqcode.min_weight(diag, 2) is None, "trivial code reports None")
check(zqcode.min_weight(diag, 4) == 1, "min weight at q=4")

kerdock = [[1, 1, 1, 1], [0, 2, 0, 2], [0, 0, 2, 2]]
check(zqcode.min_weight(kerdock, 2) == 4 and zqcode.min_weight(kerdock, 4) == 2,
      "kerdock boundary case d_2=4 > d_4=2")

mw = zqcode.minweight_report(kerdock)
class2 = next(c for c in mw["classes"] if c["m"] == "2")
check(class2["d_prime"] == 2 and not class2["stable_at_m"], "kerdock class-2 report")

n4 = zqcode.family("n", 4)
check(len(n4) == 4 and len(n4[0]) == 8, "family generator shape")
check(zqcode.analyze(n4)["rho0"] == 6, "family rho0")
check(zqcode.char_quasi_closed("z", 3, 3) == 0, "closed formula value")
check(zqcode.char_quasi_closed("z", 5, 7) == 7**5 - 11 * 7**4 + 50 * 7**3 - 120 * 7**2 + 155 * 7 - 75,
      "closed formula coprime class")

check(zqcode.tutte_eval([[-1, 1, 0, 0], [-1, 0, 1, 0], [-1, 0, 0, 1]], 2, 2) == 16,
      "tutte evaluation counts subsets")

a = zqcode.Analysis(diag)
check(a.verify(max_q=5), "verify() runs the oracle and identity checks")
check(a.degree_ladder(1) == [0, 1, 2], "degree ladder")

try:
    zqcode.analyze([[1, 0], [2, 0]])
    check(False, "zero column rejected")
except ValueError:
    check(True, "zero column rejected")

try:
    zqcode.Analysis([[1] * 12], max_columns=8)
    check(False, "column cap enforced")
except zqcode.BudgetError:
    check(True, "column cap enforced")

print("smoke:", "FAILED" if failures else "all passed")
sys.exit(1 if failures else 0)
