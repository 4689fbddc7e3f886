"""Truncated formal power series over exact integers.

The counting generating functions are finite products of sparse factors,

    product over m of 1/(1 - x^(m**s))     -> multiset counts p^s(n)
    product over m of (1 + x^(m**s))       -> distinct counts d^s(n)

truncated at a degree: a factor is included only while its part value fits
under the truncation, and every omitted factor contributes 1 there.
Coefficients are signed (intermediate factors like 1 - x^k need the sign)
even though all final counts are nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatchError, DomainError, ResourceLimitError
from .limits import MAX_DEGREE_ENV, max_series_degree


class IntSeries:
    """Polynomial truncation of a formal power series; exact int coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, degree: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if degree is not None:
            if degree < 0:
                raise DomainError(f"degree must be nonnegative, got {degree!r}")
            coeffs = coeffs[: degree + 1] + [0] * (degree + 1 - len(coeffs))
        elif not coeffs:
            coeffs = [0]
        self._coeffs = tuple(coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.degree:
            raise DomainError(f"coefficient index {n} outside 0..{self.degree}")
        return self._coeffs[n]

    def shifted(self, k: int) -> "IntSeries":
        """Multiply by x**k, keeping the truncation degree."""
        if k < 0:
            raise DomainError(f"shift must be nonnegative, got {k!r}")
        d = self.degree
        if k > d:
            return IntSeries([0], d)
        return IntSeries([0] * k + list(self._coeffs[: d + 1 - k]), d)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "IntSeries") -> "IntSeries":
        d = min(self.degree, other.degree)
        return IntSeries([self._coeffs[i] + other._coeffs[i] for i in range(d + 1)])

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        d = min(self.degree, other.degree)
        return IntSeries([self._coeffs[i] - other._coeffs[i] for i in range(d + 1)])

    def __neg__(self) -> "IntSeries":
        return IntSeries([-c for c in self._coeffs])

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        d = min(self.degree, other.degree)
        a, b = self._coeffs, other._coeffs
        # Iterate the sparser operand on the outside; the factors built here
        # (geometric tails, 1 +/- x^k) are mostly zeros.
        na = sum(1 for c in a[: d + 1] if c)
        nb = sum(1 for c in b[: d + 1] if c)
        if nb < na:
            a, b = b, a
        out = [0] * (d + 1)
        for i in range(d + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(d - i + 1):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return IntSeries(out)

    def __repr__(self) -> str:
        shown = list(self._coeffs[:8])
        tail = "..." if self.degree > 7 else ""
        return f"IntSeries({shown}{tail}, degree={self.degree})"


def mul(a: IntSeries, b: IntSeries) -> IntSeries:
    """Exact product, truncated at the smaller input degree."""
    return a * b


def add(a: IntSeries, b: IntSeries) -> IntSeries:
    return a + b


def _check_degree(degree: int) -> None:
    if not isinstance(degree, int) or degree < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {degree!r}")
    cap = max_series_degree()
    if degree > cap:
        raise ResourceLimitError(
            f"degree={degree} exceeds the series cap {cap} (override with {MAX_DEGREE_ENV})"
        )


def geometric_factor(k: int, degree: int) -> IntSeries:
    """1/(1 - x^k) truncated: 1 + x^k + x^2k + ..."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    _check_degree(degree)
    coeffs = [0] * (degree + 1)
    for j in range(0, degree + 1, k):
        coeffs[j] = 1
    return IntSeries(coeffs)


def one_plus_power(k: int, degree: int) -> IntSeries:
    """1 + x^k truncated."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    _check_degree(degree)
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    if k <= degree:
        coeffs[k] = 1
    return IntSeries(coeffs)


def one_minus_power(k: int, degree: int) -> IntSeries:
    """1 - x^k truncated."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    _check_degree(degree)
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    if k <= degree:
        coeffs[k] = -1
    return IntSeries(coeffs)


def bose_gf(s: int, degree: int, m_max: int | None = None) -> IntSeries:
    """Product of 1/(1 - x^(m**s)); coefficient of x^n counts multisets.

    With m_max set, the product stops at m = m_max; for s = 1 that equals
    the at-most-m_max-parts count by conjugation.
    """
    if not isinstance(s, int) or s < 1:
        raise DomainError(f"s must be a positive integer, got {s!r}")
    if m_max is not None and (not isinstance(m_max, int) or m_max < 1):
        raise DomainError(f"m_max must be a positive integer or None, got {m_max!r}")
    _check_degree(degree)
    out = IntSeries([1], degree)
    m = 1
    while m_max is None or m <= m_max:
        v = m**s
        if v > degree:
            break
        out = out * geometric_factor(v, degree)
        m += 1
    return out


def fermi_gf(s: int, degree: int) -> IntSeries:
    """Product of (1 + x^(m**s)); coefficient of x^n counts distinct partitions."""
    if not isinstance(s, int) or s < 1:
        raise DomainError(f"s must be a positive integer, got {s!r}")
    _check_degree(degree)
    out = IntSeries([1], degree)
    m = 1
    while m**s <= degree:
        out = out * one_plus_power(m**s, degree)
        m += 1
    return out


def distinct_restricted_gf(n_parts: int, degree: int) -> IntSeries:
    """Generating function for at-most-n_parts distinct partitions (s = 1).

    Sum over i of x^(i(i+1)/2) * product_{v<=i} 1/(1 - x^v), staircase form;
    the i = 0 term contributes the constant 1 so that the coefficient of x^0
    matches the empty-partition convention.
    """
    if not isinstance(n_parts, int) or n_parts < 1:
        raise DomainError(f"n_parts must be a positive integer, got {n_parts!r}")
    _check_degree(degree)
    out = [0] * (degree + 1)
    out[0] = 1
    prod = IntSeries([1], degree)
    for i in range(1, n_parts + 1):
        tri = i * (i + 1) // 2
        if tri > degree:
            break
        prod = prod * geometric_factor(i, degree)
        pc = prod.coeffs
        for n in range(degree + 1 - tri):
            c = pc[n]
            if c:
                out[tri + n] += c
    return IntSeries(out)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of a coefficient-by-coefficient comparison."""

    equal: bool
    first_mismatch: int | None
    degree: int

    def __str__(self) -> str:
        if self.equal:
            return f"equal up to degree {self.degree}"
        return f"mismatch at index {self.first_mismatch}"


def verify_identity(lhs: IntSeries, rhs: IntSeries) -> IdentityReport:
    """Compare two series sharing a truncation degree."""
    if lhs.degree != rhs.degree:
        raise DegreeMismatchError(
            f"degrees differ: {lhs.degree} vs {rhs.degree}"
        )
    for n in range(lhs.degree + 1):
        if lhs.coeffs[n] != rhs.coeffs[n]:
            return IdentityReport(False, n, lhs.degree)
    return IdentityReport(True, None, lhs.degree)
