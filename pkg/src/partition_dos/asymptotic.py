"""Closed-form smooth asymptotics for partition counts.

The number of partitions of a large integer E into parts m**s grows like
exp(const * E**(1/(1+s))) with algebraic prefactors.  The constants come
from two special-function combinations:

    C(s) = Gamma(1 + 1/s) * zeta(1 + 1/s)      (multiset counts)
    D(s) = Gamma(1 + 1/s) * eta(1 + 1/s)       (distinct counts)

together with kappa_s = (C/s)**(s/(1+s)) and lambda_s = (D/s)**(s/(1+s)).
This module provides the real-line special functions, the general smooth
densities for both statistics, the classical s = 1 and s = 2 printed forms,
the exponentially small at-most-N-parts correction (Erdos-Lehner), and its
distinct-partition analogue built from a staircase-shifted subtraction
series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import counting
from .errors import DomainError

BOSE = "bose"
FERMI = "fermi"

#: C(1) = pi**2/6; also the lower edge of the restricted-formula validity region.
C1 = math.pi**2 / 6

# Term count for the accelerated alternating series; the acceleration gains
# a factor (3 + sqrt(8)) per term, so 40 terms are far below double rounding.
_ACCEL_TERMS = 40


def eta(x: float) -> float:
    """Dirichlet eta (alternating zeta) for x > 0.

    Evaluates sum of (-1)**(k-1) / k**x with the Cohen-Rodriguez
    Villegas-Zagier Chebyshev acceleration, which converges like
    (3 + sqrt(8))**-n independent of x.
    """
    if x <= 0:
        raise DomainError(f"eta requires x > 0, got {x!r}")
    n = _ACCEL_TERMS
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    total = 0.0
    for k in range(n):
        c = b - c
        total += c / (k + 1) ** x
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1))
    return total / d


def zeta(x: float) -> float:
    """Riemann zeta for x > 1, derived from eta via zeta = eta/(1 - 2**(1-x))."""
    if x <= 1:
        raise DomainError(f"zeta requires x > 1, got {x!r}")
    return eta(x) / (1.0 - 2.0 ** (1.0 - x))


def gamma_real(x: float) -> float:
    """Gamma function on the positive real axis."""
    if x <= 0:
        raise DomainError(f"gamma_real requires x > 0, got {x!r}")
    return math.gamma(x)


@dataclass(frozen=True)
class AsymptoticModel:
    """Constants of the smooth density for one (s, statistics) pair.

    rademacher_shift replaces E by E - 1/24 in the s = 1 multiset formula,
    turning it into the leading term of the convergent series for p(n).
    """

    s: float
    statistics: str
    rademacher_shift: bool
    C: float
    D: float
    kappa: float
    lam: float


def make_model(s: float, statistics: str, rademacher_shift: bool = False) -> AsymptoticModel:
    if not s > 0:
        raise DomainError(f"s must be positive, got {s!r}")
    if statistics not in (BOSE, FERMI):
        raise DomainError(f"statistics must be {BOSE!r} or {FERMI!r}, got {statistics!r}")
    if rademacher_shift and not (statistics == BOSE and s == 1):
        raise DomainError("the -1/24 shift applies only to s=1 multiset counting")
    s = float(s)
    arg = 1.0 + 1.0 / s
    g = gamma_real(arg)
    c = g * zeta(arg)
    d = g * eta(arg)
    return AsymptoticModel(
        s=s,
        statistics=statistics,
        rademacher_shift=rademacher_shift,
        C=c,
        D=d,
        kappa=(c / s) ** (s / (1.0 + s)),
        lam=(d / s) ** (s / (1.0 + s)),
    )


def rho_unrestricted(model: AsymptoticModel, E: float) -> float:
    """Smooth density of the unbounded count at energy E (general s).

    Multiset statistics:

        kappa_s / (2 pi)**((s+1)/2) * sqrt(s/(s+1))
            * E**(-(3s+1)/(2(s+1))) * exp(kappa_s (s+1) E**(1/(1+s)))

    Distinct statistics:

        sqrt(s lambda_s) * exp((1+s) lambda_s E**(1/(1+s)))
            / (2 sqrt(pi (1+s) E**((2s+1)/(s+1))))
    """
    s = model.s
    if model.statistics == BOSE:
        if model.rademacher_shift:
            if E <= 1.0 / 24.0:
                raise DomainError(f"E must exceed 1/24 with the shift active, got {E!r}")
            E = E - 1.0 / 24.0
        elif E <= 0:
            raise DomainError(f"E must be positive, got {E!r}")
        k = model.kappa
        return (
            k
            / (2.0 * math.pi) ** ((s + 1.0) / 2.0)
            * math.sqrt(s / (s + 1.0))
            * E ** (-(3.0 * s + 1.0) / (2.0 * (s + 1.0)))
            * math.exp(k * (s + 1.0) * E ** (1.0 / (1.0 + s)))
        )
    if E <= 0:
        raise DomainError(f"E must be positive, got {E!r}")
    lam = model.lam
    return (
        math.sqrt(s * lam)
        * math.exp((1.0 + s) * lam * E ** (1.0 / (1.0 + s)))
        / (2.0 * math.sqrt(math.pi * (1.0 + s) * E ** ((2.0 * s + 1.0) / (s + 1.0))))
    )


def bose_density_s1(E: float, rademacher_shift: bool = False) -> float:
    """exp(pi sqrt(2E/3)) / (4 sqrt(3) E): the classical smooth p(n) curve."""
    if rademacher_shift:
        if E <= 1.0 / 24.0:
            raise DomainError(f"E must exceed 1/24 with the shift active, got {E!r}")
        E = E - 1.0 / 24.0
    elif E <= 0:
        raise DomainError(f"E must be positive, got {E!r}")
    return math.exp(math.pi * math.sqrt(2.0 * E / 3.0)) / (4.0 * math.sqrt(3.0) * E)


def bose_density_s2(E: float) -> float:
    """sqrt(2/3) kappa_2 / (2 pi)**1.5 * exp(3 kappa_2 E**(1/3)) / E**(7/6)."""
    if E <= 0:
        raise DomainError(f"E must be positive, got {E!r}")
    kappa2 = (gamma_real(1.5) * zeta(1.5) / 2.0) ** (2.0 / 3.0)
    return (
        math.sqrt(2.0 / 3.0)
        * kappa2
        / (2.0 * math.pi) ** 1.5
        * math.exp(3.0 * kappa2 * E ** (1.0 / 3.0))
        / E ** (7.0 / 6.0)
    )


def fermi_density_s1(E: float) -> float:
    """exp(pi sqrt(E/3)) / (4 * 3**(1/4) * E**(3/4)): smooth distinct count."""
    if E <= 0:
        raise DomainError(f"E must be positive, got {E!r}")
    return math.exp(math.pi * math.sqrt(E / 3.0)) / (4.0 * 3.0**0.25 * E**0.75)


def validity_region(n_parts: int) -> tuple[float, float]:
    """(C(1), C(1) N**2): where the at-most-N-parts correction is trustworthy."""
    if n_parts < 1:
        raise DomainError(f"n_parts must be a positive integer, got {n_parts!r}")
    return (C1, C1 * n_parts * n_parts)


def erdos_lehner_factor(E: float, n_parts: int, keep_half_term: bool = True) -> float:
    """Exponentially small suppression from capping the number of parts at N:

        exp[-(sqrt(6E)/pi - 1/2) * exp(-pi N / sqrt(6E))]

    keep_half_term=False drops the -1/2, which is negligible at large E.
    """
    if E <= 0:
        raise DomainError(f"E must be positive, got {E!r}")
    if n_parts < 1:
        raise DomainError(f"n_parts must be a positive integer, got {n_parts!r}")
    root = math.sqrt(6.0 * E)
    amplitude = root / math.pi - (0.5 if keep_half_term else 0.0)
    return math.exp(-amplitude * math.exp(-math.pi * n_parts / root))


@dataclass(frozen=True)
class RestrictedDensity:
    """Smooth restricted density plus a soft flag for the validity window."""

    value: float
    in_validity_region: bool


def rho_restricted_bose(
    E: float,
    n_parts: int,
    keep_half_term: bool = True,
    rademacher_shift: bool = False,
) -> RestrictedDensity:
    """Smooth at-most-N-parts density for s = 1 (unrestricted curve times
    the Erdos-Lehner factor).  The flag marks C(1) < E < C(1) N**2; outside
    that window the value is still returned but is not meaningful.
    """
    lo, hi = validity_region(n_parts)
    value = bose_density_s1(E, rademacher_shift) * erdos_lehner_factor(
        E, n_parts, keep_half_term
    )
    return RestrictedDensity(value, lo < E < hi)


def rho_restricted_fermi(E: float, n_parts: int, keep_half_term: bool = True) -> float:
    """Smooth at-most-N-parts distinct density for s = 1.

    Subtracts from the unrestricted distinct curve one staircase-shifted
    restricted term per excess part count i > N:

        rho_NF(E) = rho_F(E) - sum_{i>N} rho_i(E - i(i+1)/2)

    with each rho_i the at-most-i-parts smooth density evaluated with i (not
    N) in its inner exponent.  Terms whose shifted energy falls below twice
    C(1) are outside the inner formula's validity floor; for integer E they
    are replaced by the exact restricted count, otherwise dropped.
    """
    if E <= 0:
        raise DomainError(f"E must be positive, got {E!r}")
    if n_parts < 1:
        raise DomainError(f"n_parts must be a positive integer, got {n_parts!r}")
    total = fermi_density_s1(E)
    floor = 2.0 * C1
    integral = float(E).is_integer()
    i = n_parts + 1
    while True:
        shifted = E - i * (i + 1) / 2.0
        if shifted < 0:
            break
        if shifted < floor:
            if integral:
                m = int(shifted)
                total -= counting.conjugate_restricted_table(i, m)[m]
        else:
            total -= bose_density_s1(shifted) * erdos_lehner_factor(
                shifted, i, keep_half_term
            )
        i += 1
    return total
