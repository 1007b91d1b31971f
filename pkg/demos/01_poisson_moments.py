"""Raw Poisson moments three ways.

The l-th raw moment of a Poisson(m) variable equals the Touchard polynomial
T_l(m).  This script computes moments from exact Stirling numbers, by direct
series summation with a certified tail bound, and through the binomial shift
recurrence, and shows the three routes agreeing.
"""

import math

from touchardstar import (
    poisson_moment_closed,
    poisson_moment_series,
    stirling2,
    tail_moment,
)

print("Stirling numbers of the second kind, row l = 4:")
print("  ", [stirling2(4, k) for k in range(5)])
print("so T_4(m) = m + 7 m^2 + 6 m^3 + m^4\n")

m = 2.0
print(f"moments at m = {m} (closed form vs direct summation):")
for l in range(7):
    closed = poisson_moment_closed(l, m)
    series = poisson_moment_series(l, m, 1e-13)
    print(
        f"  l={l}:  {closed.value:<22.15g} {series.value:<22.15g} "
        f"({series.truncation_terms} terms, tail < {series.tail_bound:.1e})"
    )

print("\nbinomial shift recurrence  mu_{l+1} = m * sum_k C(l,k) mu_k:")
mus = [poisson_moment_closed(l, m).value for l in range(7)]
for l in range(6):
    rhs = m * math.fsum(math.comb(l, k) * mus[k] for k in range(l + 1))
    print(f"  l={l}: direct {mus[l + 1]:.12g}   via recurrence {rhs:.12g}")

print("\ntail sums (the n >= 1 part of the moment):")
print(f"  order 0: {tail_moment(0, m):.15g}  (equals 1 - e^-m = {-math.expm1(-m):.15g})")
print(f"  order 3: {tail_moment(3, m):.15g}  (equals the full third moment)")

print("\nnon-integer order is experimental and lives on the series path only:")
for l in (1.0, 1.25, 1.5, 1.75, 2.0):
    print(f"  l={l}: {poisson_moment_series(l, m, 1e-11).value:.12g}")
print("(values interpolate monotonically between the integer moments)")
