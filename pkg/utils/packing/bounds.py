"""
Closed-form thresholds and lower bounds on packing counts.

Real-valued bounds of the form ``base ** (num / den) / divisor`` are carried
as a :class:`BoundReport` and compared with counts by raising both sides to
the ``den``-th power, so every verdict is an exact integer comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import factorial
from typing import Optional

from sympy import integer_nthroot

from .counting import derangements


@dataclass(frozen=True)
class BoundReport:
    """
    Certificate for ``count >= base ** exponent / divisor``.

    Parameters
    ----------
    applicable
        Whether the hypotheses of the bound hold. Inapplicable reports carry
        the trivial bound 1 (base 1, exponent 0, divisor 1, ceiling 1).
    ceiling
        Least integer that is at least the bound.
    passed
        Set by :func:`check_bound_against_count`; None until a count is compared.
    """
    applicable: bool
    base: int
    exponent: Fraction
    divisor: int
    ceiling: int
    passed: Optional[bool] = None

    def is_tight(self) -> bool:
        num, den = self.exponent.numerator, self.exponent.denominator
        target = self.base ** num
        return (self.ceiling * self.divisor) ** den >= target and ((self.ceiling - 1) * self.divisor) ** den < target

    def to_json(self) -> dict:
        payload = {
            "applicable": self.applicable,
            "base": str(self.base),
            "exponent_num": self.exponent.numerator,
            "exponent_den": self.exponent.denominator,
            "divisor": str(self.divisor),
            "ceiling": str(self.ceiling),
        }
        if self.passed is not None:
            payload["passed"] = self.passed
        return payload


def exact_ceiling(base: int, exponent: Fraction, divisor: int) -> int:
    """Least integer ``c`` with ``(c * divisor) ** den >= base ** num``."""
    if base < 1 or divisor < 1:
        raise ValueError(f"base and divisor must be positive, got base={base}, divisor={divisor}")
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent}")
    target = base ** exponent.numerator
    root, exact = integer_nthroot(target, exponent.denominator)
    root = int(root)
    least = root if exact else root + 1
    return -(-least // divisor)


def _report(base: int, exponent: Fraction, divisor: int) -> BoundReport:
    return BoundReport(
        applicable=True,
        base=base,
        exponent=exponent,
        divisor=divisor,
        ceiling=exact_ceiling(base, exponent, divisor),
    )


def trivial_report() -> BoundReport:
    return BoundReport(applicable=False, base=1, exponent=Fraction(0), divisor=1, ceiling=1)


def dz_threshold(n: int, m: int, k: int) -> int:
    """``n k (k-1) / 2 + m k - 1``: from this q on, list and classical packing counts agree."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got k={k}")
    return n * k * (k - 1) // 2 + m * k - 1


def alon_furedi_nonzero_bound(S: int, n_vars: int, d: int, t: int) -> BoundReport:
    """
    Lower bound ``t ** ((S - n_vars - d) / (t - 1))`` on the number of grid
    points where a degree-``d`` polynomial in ``n_vars`` variables is non-zero,
    for grids of total size ``S`` with all sides at least ``t``.
    """
    if min(S, n_vars, t) < 1 or d < 0:
        raise ValueError(f"Arguments must be positive (d non-negative), got S={S}, n_vars={n_vars}, d={d}, t={t}")
    if S < n_vars + d or t < 2:
        return trivial_report()
    return _report(t, Fraction(S - n_vars - d, t - 1), 1)


def packing_lower_bound(n: int, m: int, q: int, k: int) -> BoundReport:
    """
    ``q ** (k n - (n k (k-1)/2 + k m) / (q - 1)) / k!`` for graphs with ``n``
    vertices and ``m <= n (q - 1 - (k-1)/2)`` edges.

    The grid is the ``k n`` vertices of ``G □ K_k`` with ``q`` colours each and
    the polynomial is the product of ``x_u - x_v`` over its edges.
    """
    if min(n, q, k) < 1 or m < 0:
        raise ValueError(f"Expected positive n, q, k and m >= 0, got n={n}, m={m}, q={q}, k={k}")
    if k > q:
        raise ValueError(f"Packing size k={k} exceeds list size q={q}")
    product_edges = k * m + n * k * (k - 1) // 2
    report = alon_furedi_nonzero_bound(S=k * n * q, n_vars=k * n, d=product_edges, t=q)
    if not report.applicable:
        return report
    return _report(report.base, report.exponent, factorial(k))


def list_coloring_lower_bound(n: int, m: int, q: int) -> BoundReport:
    """``q ** (n - m / (q - 1))`` when ``m <= (q - 1) n``."""
    return packing_lower_bound(n, m, q, 1)


def check_bound_against_count(report: BoundReport, measured: int) -> BoundReport:
    if not report.applicable:
        raise ValueError("Cannot check an inapplicable bound against a count")
    if measured <= 0:
        raise ValueError(f"Bound checks need a positive measured count, got {measured}")
    num, den = report.exponent.numerator, report.exponent.denominator
    passed = (measured * report.divisor) ** den >= report.base ** num
    return replace(report, passed=passed)


def tree_packing_value(n: int, q: int) -> int:
    """``(!q) ** (n - 1)``: list and classical packing count of any tree on ``n`` vertices."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got n={n}")
    return derangements(q) ** (n - 1)


def girth8_bound(n: int) -> BoundReport:
    """``3 ** (n / 6) / 2`` for planar graphs of girth at least 8 with 3-assignments, k = 2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got n={n}")
    return _report(3, Fraction(n, 6), 2)


def planar_girth_edge_cap(n: int, g: int) -> Fraction:
    """Edge cap ``g n / (g - 2)`` of a planar graph with girth ``g``."""
    if g < 3:
        raise ValueError(f"girth must be >= 3, got g={g}")
    return Fraction(g * n, g - 2)


def girth8_exponent_margin(n: int, m: int) -> Fraction:
    """Packing bound exponent at ``q = 3, k = 2`` minus ``n / 6``."""
    return 2 * n - Fraction(n + 2 * m, 2) - Fraction(n, 6)
