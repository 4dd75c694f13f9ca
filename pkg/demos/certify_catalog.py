"""
Certifying the printed upper bounds on |K_{i tau}(x)| over a grid.
"""

from klbessel import (
    EvaluationPoint,
    all_default_descriptors,
    catalog_ids,
    certify_bound,
    default_grid,
    evaluate_bound,
    kernel_grid_values,
    make_descriptor,
    measure_c,
    olenko_c,
)

## The catalog: every bound carries its printed label and validity region
print("catalog:")
for d in all_default_descriptors():
    params = ", ".join(f"{k}={v}" for k, v in d.params) or "-"
    print(f"  {d.id:15s} label {d.label:5s} params {params}")

## Certify one bound on a coarse grid: max of |K| / bound must stay <= 1
grid = default_grid(nx=8, ntau=8)
cert = certify_bound(make_descriptor("LEBEDEV_15"), grid)
print(f"\nLEBEDEV_15 over {len(grid)} points:"
      f" max ratio {cert.max_ratio:.4f}, passed {cert.passed}")
print(f"  worst point x = {cert.worst_point.x:.3f},"
      f" tau = {cert.worst_point.tau:.3f}")

## Bounds sharing a kernel order can reuse one set of kernel values
shared = kernel_grid_values(grid, 0.0)
for bound_id in ("MODIFIED_110", "LS_RE_113", "EXP_DECAY_315"):
    cert = certify_bound(make_descriptor(bound_id), grid, kernel_values=shared)
    print(f"  {bound_id:15s} max ratio {cert.max_ratio:.4f}"
          f" passed {cert.passed}")

## Parameters are validated before anything is evaluated
try:
    make_descriptor("K1_115", nu=1.0)
except ValueError as exc:
    print("\nK1_115 with nu = 1.0 is rejected:", exc)

## A bound is a number you can just evaluate
d = make_descriptor("LEBEDEV_15")
p = EvaluationPoint(1.0, 1.0)
print("\nLEBEDEV_15 right-hand side at (1, 1):", evaluate_bound(d, p))

## The sup constants behind several bounds: the closed-form estimate
## dominates the numerically measured supremum
print("\nsup_x sqrt(x)|J_nu(x)|, measured vs estimate:")
for nu in (0.5, 1.0, 2.0, 5.0):
    print(f"  nu = {nu:3.1f}  measured {measure_c(nu):.6f}"
          f"  estimate {olenko_c(nu):.6f}")

print("\ncatalog ids:", ", ".join(catalog_ids()))
