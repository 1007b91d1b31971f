"""Membership criteria: coefficient sums against their closed forms.

For positive-coefficient series, membership of the starlike-type class
(order alpha, parameter lambda) comes down to

    sum_{n>=2} [n - (1 + n*lambda - lambda) * alpha] * a_n  <=  alpha - 1,

with an extra factor n for the convex-type class.  For the Poisson-weighted
kernel those sums collapse into closed forms built from moment tails.
"""

from touchardstar import (
    ClassParams,
    RTauParams,
    TouchardParams,
    TruncatedSeries,
    brute_force_M,
    brute_force_N,
    rtau_coeff_bound,
    theorem_M_lhs,
    theorem_N_lhs,
    theorem_integral_operator,
    theorem_rtau_inclusion,
    lemma_sum_M,
)

p = ClassParams(lam=0.25, alpha=1.2)
print(f"class parameters: lambda={p.lam}, alpha={p.alpha}, bound = alpha-1 = {p.bound}\n")

print("closed form vs truncated coefficient sum (starlike type):")
print(f"{'l':>3} {'m':>5} {'closed':>22} {'coefficient sum':>22} {'member':>7}")
for l, m in [(0, 0.3), (0, 1.0), (1, 0.5), (2, 0.5), (3, 2.0)]:
    tp = TouchardParams(l, m)
    closed = theorem_M_lhs(tp, p)
    brute = brute_force_M(tp, p)
    print(f"{l:>3} {m:>5} {closed.criterion_value:>22.15g} "
          f"{brute.criterion_value:>22.15g} {str(closed.member):>7}")

print("\nsame for the convex type:")
for l, m in [(0, 0.1), (1, 0.2), (2, 0.5)]:
    tp = TouchardParams(l, m)
    closed = theorem_N_lhs(tp, p)
    brute = brute_force_N(tp, p)
    print(f"{l:>3} {m:>5} {closed.criterion_value:>22.15g} "
          f"{brute.criterion_value:>22.15g} {str(closed.member):>7}")

# boundary construction: one coefficient placed exactly on the bound
w2 = p.weight(2)
a2 = p.bound / w2
boundary = TruncatedSeries([1.0, a2])
report = lemma_sum_M(boundary, p)
print(f"\nboundary series z + {a2:.6g} z^2: value {report.criterion_value:.15g}"
      f" vs bound {p.bound:.15g}, member={report.member}")
report = lemma_sum_M(TruncatedSeries([1.0, 1.01 * a2]), p)
print(f"growing a_2 by 1%: value {report.criterion_value:.15g}, member={report.member}")

# the derivative-distortion class: sharp envelope |a_n| <= (A-B)|tau|/n
r = RTauParams(tau=1.0, A=1.0, B=-1.0)
print(f"\ndistortion class gain (A-B)|tau| = {r.gain}")
print("sharp coefficient envelope:", [round(rtau_coeff_bound(n, r), 4) for n in range(2, 8)])

tp = TouchardParams(1, 0.4)
incl = theorem_rtau_inclusion(tp, p, r)
star = theorem_M_lhs(tp, p)
print(f"inclusion criterion = gain * starlike criterion: "
      f"{incl.criterion_value:.15g} = {r.gain} * {star.criterion_value:.15g}")

# integral transform: dividing coefficients by n cancels the convex weight's n
integ = theorem_integral_operator(tp, p)
print(f"integral-transform criterion equals the starlike one: "
      f"{integ.criterion_value == star.criterion_value}")
