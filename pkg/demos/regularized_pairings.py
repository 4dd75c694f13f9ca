"""
Regularized pairings: divergent kernel integrals summed by Gaussian damping.
"""

import math

from klbessel import (
    PSI_ONE,
    PSI_ZERO,
    SummabilityQuery,
    closed_cosh,
    closed_sinh,
    cos_spec,
    f_epsilon,
    tau_integral_rhs,
    theorem2_check,
    theorem3_check,
    type_threshold,
)

## The tau integral of the kernel against e^{x cosh(...)} weights diverges;
## a Gaussian damp e^{-eps tau^2} makes it finite, and the limit eps -> 0
## exists.  f_epsilon is the damped x-side integrand value.
print("Abel approach of f_epsilon at x = 1, a = 0 (limit is pi/2):")
for eps in (1e-1, 1e-2, 1e-3):
    value = f_epsilon(SummabilityQuery(), eps)
    print(f"  eps = {eps:.0e}  f_eps = {value:.9f}"
          f"  off by {value - 0.5 * math.pi: .2e}")

## The same limits come out of gamma-weighted tau integrals with closed
## forms; at eps = 0 they match to machine precision
prefactor = 2.0**-1.0 * math.sqrt(math.pi) / math.gamma(1.5)
cosh_value = tau_integral_rhs(1.0, 0.3, 0.0, PSI_ONE, PSI_ZERO) / prefactor
sinh_value = tau_integral_rhs(1.0, 0.3, 0.0, PSI_ZERO, PSI_ONE) / prefactor
print("\nclosed forms at s = 1, a = 0.3:")
print(f"  cosh weight: numeric {cosh_value:.12f}"
      f"  closed {closed_cosh(1.0, 0.3):.12f}")
print(f"  sinh weight: numeric {sinh_value:.12f}"
      f"  closed {closed_sinh(1.0, 0.3):.12f}")

## Constant test function: the pairing converges to (pi/2) (1 - sin a)^{-s}
report = theorem2_check(SummabilityQuery(a=0.5))
print("\nconstant psi, a = 0.5: pairing values along the eps schedule")
for eps, value, err in zip(report.query.epsilon_schedule,
                           report.pairing_values, report.errors):
    print(f"  eps = {eps:.0e}  pairing = {value:.9f}  error = {err:.2e}")
print(f"  target {report.target:.9f}  converged {report.converged}")

## Entire test functions of small exponential type are admissible too;
## the growth cap is (1 - sin a)/(2e)
print(f"\ntype threshold at a = 0: {type_threshold(0.0):.6f}")
query = SummabilityQuery(psi1=cos_spec(0.05))
report = theorem3_check(query)
print("psi1 = cos(0.05 tau): target", report.target,
      " converged", report.converged)

## Too much growth is rejected outright
try:
    SummabilityQuery(psi1=cos_spec(0.2))
except ValueError as exc:
    print("cos(0.2 tau) is rejected:", exc)
