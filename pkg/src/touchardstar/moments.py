"""Stirling numbers, Touchard polynomial values and Poisson raw moments.

The l-th raw moment of a Poisson(m) variable,

    mu_l = exp(-m) * sum_{n>=0} n**l * m**n / n!,

equals the Touchard (Bell / exponential) polynomial T_l(m).  Two independent
evaluation routes are provided:

* :func:`poisson_moment_closed` builds T_l(m) = sum_k S(l,k) m**k from exact
  Stirling numbers of the second kind (integer l only).
* :func:`poisson_moment_series` sums the defining series directly with
  compensated summation and a certified tail bound (any real l >= 0; the
  non-integer case is an experimental extension, reachable only here).

:func:`tail_moment` is the same sum restricted to n >= 1.  For l >= 1 it
equals mu_l (the n = 0 term vanishes); for l = 0 it equals 1 - exp(-m).
Dropping the n = 0 term in a single formula is what lets the membership
criteria downstream avoid a special case at l = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidIndex, NoConvergence, OrderTooLarge, ParameterError

#: Largest moment order kept in the exact Stirling table.  Values for l <= 64
#: fit comfortably in Python integers; the cap exists so a typo cannot demand
#: a gigantic triangle.
L_MAX = 64

#: Hard cap on the number of series terms before giving up.
SERIES_TERM_CAP = 10_000

METHOD_CLOSED = "closed_form"
METHOD_SERIES = "series"


@dataclass(frozen=True)
class TouchardParams:
    """Moment order ``l`` and Poisson parameter ``m`` of the coefficient kernel.

    ``l`` must be a nonnegative integer for every closed-form code path;
    the direct-summation path also accepts nonnegative real ``l``.
    """

    l: float
    m: float

    def __post_init__(self) -> None:
        if not (isinstance(self.m, (int, float)) and math.isfinite(self.m) and self.m > 0):
            raise ParameterError(f"Poisson parameter m must be a positive finite real, got {self.m!r}")
        if not (isinstance(self.l, (int, float)) and math.isfinite(self.l) and self.l >= 0):
            raise ParameterError(f"moment order l must be a nonnegative finite real, got {self.l!r}")

    @property
    def integer_order(self) -> int:
        """``l`` as an int; raises if the order is not integer-valued."""
        return _as_integer_order(self.l)


@dataclass(frozen=True)
class MomentValue:
    """A computed raw moment plus provenance.

    ``truncation_terms`` counts the series terms accumulated (0 for the
    closed form).  ``tail_bound`` is a rigorous bound on the neglected tail;
    on success it is below the tolerance that was requested.
    """

    value: float
    method: str
    truncation_terms: int = 0
    tail_bound: float = 0.0

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "truncation_terms": self.truncation_terms,
            "tail_bound": self.tail_bound,
        }


def _as_integer_order(l) -> int:
    if isinstance(l, bool) or not isinstance(l, (int, float)):
        raise ParameterError(f"moment order must be numeric, got {l!r}")
    if isinstance(l, float):
        if not l.is_integer():
            raise ParameterError(
                f"closed-form path takes integer moment orders only, got l={l!r} "
                "(use the series path for real orders)"
            )
        l = int(l)
    if l < 0:
        raise ParameterError(f"moment order must be nonnegative, got {l}")
    return l


def _check_m(m: float) -> float:
    if not (isinstance(m, (int, float)) and math.isfinite(m) and m > 0):
        raise ParameterError(f"Poisson parameter m must be a positive finite real, got {m!r}")
    return float(m)


# Triangular table of Stirling numbers of the second kind, grown on demand.
# Row l holds S(l, 0..l) as exact Python ints.  Rows are appended once and
# never mutated afterwards, so concurrent readers are safe.
_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling2(l: int, k: int, *, l_max: int = L_MAX) -> int:
    """Stirling number of the second kind S(l, k), exactly.

    S(l, k) counts the partitions of an l-element set into k nonempty
    blocks.  Computed by the recurrence S(l,k) = k*S(l-1,k) + S(l-1,k-1)
    with S(0,0) = 1 and S(l,0) = 0 for l >= 1, in exact integer arithmetic.
    """
    if not isinstance(l, int) or not isinstance(k, int) or isinstance(l, bool) or isinstance(k, bool):
        raise ParameterError(f"stirling2 takes integer arguments, got ({l!r}, {k!r})")
    if l < 0 or k < 0:
        raise InvalidIndex(f"indices must be nonnegative, got ({l}, {k})")
    if l > l_max:
        raise OrderTooLarge(f"order l={l} exceeds the exact-arithmetic cap {l_max}")
    if k > l:
        raise InvalidIndex(f"k={k} exceeds l={l}")
    while len(_STIRLING_ROWS) <= l:
        prev = _STIRLING_ROWS[-1]
        i = len(_STIRLING_ROWS)
        row = [0] * (i + 1)
        for j in range(1, i):
            row[j] = j * prev[j] + prev[j - 1]
        row[i] = 1
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[l][k]


def poisson_moment_closed(l: int, m: float, *, l_max: int = L_MAX) -> MomentValue:
    """Raw Poisson moment by the Touchard polynomial T_l(m) = sum_k S(l,k) m**k.

    Exact Stirling coefficients, floating powers of m, exactly rounded sum.
    mu_0 = 1 for every m.
    """
    l = _as_integer_order(l)
    m = _check_m(m)
    if l > l_max:
        raise OrderTooLarge(f"order l={l} exceeds the exact-arithmetic cap {l_max}")
    terms = []
    power = 1.0
    for k in range(l + 1):
        terms.append(stirling2(l, k, l_max=l_max) * power)
        power *= m
    return MomentValue(value=math.fsum(terms), method=METHOD_CLOSED)


def poisson_moment_series(
    l: float, m: float, tol: float = 1e-12, *, term_cap: int = SERIES_TERM_CAP
) -> MomentValue:
    """Raw Poisson moment by direct summation of exp(-m) * sum n**l m**n / n!.

    Accepts any real l >= 0 (the only route for non-integer orders).  Terms
    are generated from their predecessor by the ratio
    ((n+1)/n)**l * m/(n+1), so no factorial is ever formed, and accumulated
    with Kahan compensation.  Summation stops once the next term t, with all
    later term ratios bounded by some rho < 1/2, certifies a geometric tail
    t/(1-rho) below ``tol``; that bound is reported.

    The n = 0 term uses the 0**0 = 1 convention, so it contributes exp(-m)
    when l = 0 and nothing when l > 0.
    """
    m = _check_m(m)
    if not (isinstance(l, (int, float)) and math.isfinite(l) and l >= 0):
        raise ParameterError(f"moment order must be a nonnegative real, got {l!r}")
    if not (tol > 0):
        raise ParameterError(f"tolerance must be positive, got {tol!r}")
    scale = math.exp(-m)
    if scale == 0.0:
        raise NoConvergence(f"exp(-m) underflows for m={m}; series path unusable this far out")

    total = scale if l == 0 else 0.0
    terms = 1 if l == 0 else 0
    comp = 0.0  # Kahan carry
    term = scale * m  # n = 1 term: 1**l * m**1 / 1!
    n = 1
    while n <= term_cap:
        # add `term` (index n) with compensation
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        terms += 1
        nxt = term * ((n + 1.0) / n) ** l * (m / (n + 1.0))
        rho = ((n + 2.0) / (n + 1.0)) ** l * (m / (n + 2.0))
        if rho < 0.5:
            bound = nxt / (1.0 - rho)
            if bound < tol:
                return MomentValue(
                    value=total, method=METHOD_SERIES, truncation_terms=terms, tail_bound=bound
                )
        term = nxt
        n += 1
    raise NoConvergence(
        f"series for l={l}, m={m} did not certify tail < {tol} within {term_cap} terms"
    )


def tail_moment(l: int, m: float) -> float:
    """The moment sum restricted to n >= 1: exp(-m) * sum_{n>=1} n**l m**n / n!.

    Equals mu_l for l >= 1 and 1 - exp(-m) for l = 0.  The membership
    criteria are all linear combinations of these tails, which is what makes
    one formula cover both the l = 0 and l >= 1 cases.
    """
    l = _as_integer_order(l)
    m = _check_m(m)
    if l == 0:
        return -math.expm1(-m)
    return poisson_moment_closed(l, m).value
