"""Derivative family and five-term recurrence checks.

Differentiating the identity in R gives another closed form,
2 i^{n-m} P_n^m(cos a) j_n'(R); and the integral family satisfies a
five-term recurrence tying (n, m) to (n+-1, m+-1).  Both are verified here
three independent ways: quadrature of the analytic derivative integrand,
central finite differences, and residuals of the recurrence evaluated with
the closed form (rounding-level) and with quadrature (oracle-level).
"""

import math

from lbk import IntegralParams, closed_form_dI_dR
from lbk.verify import (
    SWEEP_ORACLE_SPEC,
    check_derivative,
    check_recurrence_F,
    check_recurrence_I,
)

print("R-derivative: quadrature error and finite-difference error (h = 1e-5)")
for (n, m, alpha, R) in [(0, 0, 0.7, math.pi), (2, 1, math.pi / 3, 2.0),
                         (7, -4, 1.9, 14.0), (15, 9, 0.6, 42.0)]:
    p = IntegralParams(n, m, alpha, R)
    errs = check_derivative(p, SWEEP_ORACLE_SPEC, h=1e-5)
    scale = 1.0 + abs(closed_form_dI_dR(p))
    print(f"  (n={n:>2}, m={m:>3}, alpha={alpha:.3f}, R={R:>5.1f}): "
          f"quad {errs.quad_err / scale:.2e}, fd {errs.fd_err / scale:.2e}")

print()
print("Five-term recurrence residuals (normalized by the largest term):")
print(f"{'n':>3} {'m':>3} {'alpha':>7} {'R':>6} | {'closed form':>12} {'quadrature':>12}")
for (n, m, alpha, R) in [(2, 1, math.pi / 3, 2.0), (5, 2, 1.0, 10.0),
                         (10, 5, 0.5, 40.0), (18, 9, 2.8, 25.0)]:
    res_f = check_recurrence_F(n, m, alpha, R)
    res_i = check_recurrence_I(n, m, alpha, R, SWEEP_ORACLE_SPEC)
    print(f"{n:>3} {m:>3} {alpha:>7.3f} {R:>6.1f} | {res_f:>12.2e} "
          f"{res_i.residual:>12.2e}")
