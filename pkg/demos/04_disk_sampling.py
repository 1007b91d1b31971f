"""Sampling the defining analytic conditions on the unit disk.

The coefficient tests work with sums; this goes back to the definitions and
evaluates Re(quotient) on a polar grid.  Sampling gives one-sided evidence:
a violation disproves membership, zero violations merely fail to disprove
it.  The last section shows why verdicts that rest on negative weights must
not be trusted, which is exactly the case the report detail flags.
"""

from touchardstar import (
    ClassParams,
    DiskGrid,
    RTauParams,
    TouchardParams,
    TruncatedSeries,
    lemma_sum_M,
    theorem_M_lhs,
    touchard_series,
    verify_M,
    verify_rtau,
)

grid = DiskGrid.default()
print(f"default grid: {len(grid.radii)} radii up to {grid.r_max}, "
      f"{grid.angles_per_ring} angles, {grid.size} samples\n")

# a certified member stays below alpha on the whole sampled disk
p = ClassParams(0.0, 4.0 / 3.0)
tp = TouchardParams(0, 0.3)
f = touchard_series(tp, 64)
print("certified member (l=0, m=0.3, lambda=0, alpha=4/3):")
print("  closed-form verdict:", theorem_M_lhs(tp, p).member)
report = verify_M(f, p, grid)
print(f"  disk scan: max Re = {report.max_real_part:.6f} at {report.arg_of_max:.3f}, "
      f"{report.violations} violations\n")

# push one coefficient 50% past the bound: the scan finds the breach
a2 = 1.5 * p.bound / p.weight(2)
probe = TruncatedSeries([1.0, a2])
dense = DiskGrid.uniform(0.99, rings=30, angles=128)
report = verify_M(probe, p, dense)
print(f"series z + {a2:.3g} z^2 (sum 50% past the bound), dense grid to r=0.99:")
print(f"  max Re = {report.max_real_part:.4f} >= alpha, "
      f"{report.violations} violating samples\n")

# distortion-class check at half the sharp envelope
r = RTauParams(1.0, 1.0, -1.0)
half = TruncatedSeries([1.0] + [0.5 * r.gain / n for n in range(2, 65)])
report = verify_rtau(half, r, grid)
print("distortion check at half the sharp envelope:")
print(f"  max modulus = {report.max_real_part:.6f} < 1, {report.violations} violations\n")

# the cautionary tale: at alpha*lambda = 1 every weight is -1/3, so the
# coefficient sum passes for ANY positive-coefficient series, yet the
# analytic condition genuinely fails for this kernel
corner = ClassParams(0.75, 4.0 / 3.0)
g = touchard_series(TouchardParams(1, 2.0), 64)
verdict = lemma_sum_M(g, corner)
scan = verify_M(g, corner, grid)
print("negative-weight corner (lambda=0.75, alpha=4/3, kernel l=1, m=2):")
print(f"  coefficient verdict: member={verdict.member}")
print(f"  report detail: {verdict.detail}")
print(f"  disk scan disagrees: {scan.violations} violations, "
      f"max Re = {scan.max_real_part:.3f}")
print("  moral: a verdict built on negative weights certifies nothing")
