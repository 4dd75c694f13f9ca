"""
The large-order oscillatory expansion and its explicit remainder bound.
"""

import math

from klbessel import (
    EvaluationPoint,
    expansion_report,
    k_itau_oracle,
    leading_term,
    natural_scale,
    phase,
    remainder_bound,
    remainder_measured,
    stirling_r_gamma,
)

## For large tau the kernel is a cosine with an explicit phase:
## K = scale * (cos(phase) + R), scale = sqrt(2 pi / tau) e^{-pi tau/2}
p = EvaluationPoint(1.0, 10.0)
print("at x = 1, tau = 10:")
print("  phase        ", phase(p))
print("  leading term ", leading_term(p))
print("  oracle       ", k_itau_oracle(p))
print("  remainder R  ", remainder_measured(p))

## The remainder is certified: |R| <= an a priori bound that decays as 1/tau
print("\nmeasured remainder against the a priori bound (x = 1, N = 1):")
print("  tau      |R| measured   bound        tau*|R|")
for tau in (1.0, 2.0, 5.0, 10.0, 20.0, 40.0):
    q = EvaluationPoint(1.0, tau)
    measured = abs(remainder_measured(q))
    bound = remainder_bound(tau, 1.0, 5.0, 1)
    print(f"  {tau:5.1f}  {measured:.6e}  {bound:.4e}  {tau * measured:.4f}")

## expansion_report bundles the whole check for one point
report = expansion_report(EvaluationPoint(0.25, 20.0), N=2, tau0=1.0, X=5.0)
print("\nreport at x = 0.25, tau = 20, N = 2:")
print("  leading            ", report.leading)
print("  remainder measured ", report.remainder_measured)
print("  remainder explicit ", report.remainder_explicit)
print("  remainder bound    ", report.remainder_bound)
print("  within bound       ", report.within_bound)

## The Stirling remainder r(tau) of Gamma(i tau) sits inside its envelope
print("\nStirling remainder vs envelope e^{1/(6 tau)} - 1:")
for tau in (0.5, 1.0, 5.0, 40.0):
    r = stirling_r_gamma(tau)
    print(f"  tau = {tau:5.1f}  |r| = {abs(r):.6f}"
          f"  envelope = {math.expm1(1.0 / (6.0 * tau)):.6f}")

## The expansion degrades gracefully: even at tau = 1 the leading term
## carries most of the value
q = EvaluationPoint(1.0, 1.0)
print("\nat tau = 1: K =", k_itau_oracle(q),
      " leading =", leading_term(q),
      " scale =", natural_scale(1.0))
