"""The Poisson-weighted kernel series and its operators.

Builds z + sum (n-1)^l m^(n-1)/(n-1)! e^-m z^n, convolves other series with
it coefficient-wise, forms the integral transform, and evaluates everything
inside the unit disk.
"""

import math

import numpy as np

from touchardstar import (
    TouchardParams,
    TruncatedSeries,
    apply_operator_I,
    apply_operator_L,
    evaluate,
    hadamard,
    series_to_csv,
    touchard_series,
)

tp = TouchardParams(l=2, m=2.0)
kernel = touchard_series(tp, order=10)
print("kernel series coefficients (l=2, m=2, first 10):")
print(series_to_csv(kernel))

print("a_4 should be 3^2 * 2^3 / 3! * e^-2 = 12 e^-2:",
      kernel.a(4), "=", 12 * math.exp(-2.0))

# Hadamard product: coefficient-wise, with the geometric series as identity
ones = TruncatedSeries(np.ones(10))
assert np.array_equal(hadamard(kernel, ones).coeffs, kernel.coeffs)
print("\nconvolving with the all-ones series returns the kernel unchanged")

# the convolution operator damps a test series with the kernel coefficients
test = TruncatedSeries(np.arange(1.0, 11.0))  # a_n = n
damped = apply_operator_I(tp, test)
print("\noperator applied to a_n = n (first five coefficients):")
for n in range(1, 6):
    print(f"  n={n}: {test.a(n):g} -> {damped.a(n):.6g}")

# the integral transform divides coefficient n by n
integral = apply_operator_L(tp, 10)
print("\nintegral transform: n * coefficient recovers the kernel:")
print("  max |n*c_n - kernel_n| =",
      float(np.max(np.abs(np.arange(1, 11) * integral.coeffs - kernel.coeffs))))

# evaluation inside the disk, with derivatives
z = 0.4 + 0.3j
print(f"\nkernel at z = {z}:")
print("  f  =", evaluate(kernel, z, 0))
print("  f' =", evaluate(kernel, z, 1))
print("  f''=", evaluate(kernel, z, 2))
print("normalization: f(0) =", evaluate(kernel, 0.0), " f'(0) =", evaluate(kernel, 0.0, 1))

# order-zero kernel has the closed form z (1 - e^-m + e^{m(z-1)})
k0 = touchard_series(TouchardParams(0, 1.0), 60)
got = evaluate(k0, 0.5)
want = 0.5 * (1 - math.exp(-1.0) + math.exp(0.5 - 1.0))
print(f"\nclosed-form check at l=0, m=1, z=0.5: {got.real:.15g} vs {want:.15g}")
