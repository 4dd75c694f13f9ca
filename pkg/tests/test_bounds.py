import json
import math

import numpy as np
import pytest

from klbessel.bounds import (
    RATIO_SLACK,
    all_default_descriptors,
    catalog_ids,
    catalog_to_json,
    certificate_to_json,
    certify_bound,
    default_descriptor,
    default_grid,
    evaluate_bound,
    kernel_grid_values,
    make_descriptor,
    measure_c,
    olenko_c,
    verify_representation,
)
from klbessel.kernel import EvaluationPoint
from klbessel.special import bessel_k0, log_abs_gamma

SQRT_2_OVER_PI = 0.79788456080286536

OLENKO_PINS = {
    0.5: 1.5386946214955759,
    1.0: 1.3308943036433258,
    2.0: 1.2165560693338529,
    5.0: 1.1692972801268634,
}

# sup sqrt(x)|J_nu(x)| measured on a dense scan, pinned
MEASURED_SUP_PINS = {
    1.0: 0.82503089558735139,
    2.0: 0.86842068068480486,
}

POINT_1_1 = EvaluationPoint(1.0, 1.0)

BOUND_PINS_AT_1_1 = {
    "LEBEDEV_15": 0.75439497560291942,
    "MODIFIED_110": 0.92444820335962766,
    "COMPOSITE_126": 1.8868045492691137,
}


@pytest.fixture(scope="module")
def small_grid():
    return default_grid(nx=7, ntau=7)


@pytest.fixture(scope="module")
def kernel_cache(small_grid):
    mus = sorted({d.order_mu for d in all_default_descriptors()})
    return {mu: kernel_grid_values(small_grid, mu) for mu in mus}


def test_olenko_c_pins():
    for nu, want in OLENKO_PINS.items():
        assert math.isclose(olenko_c(nu), want, rel_tol=1e-14)
    with pytest.raises(ValueError):
        olenko_c(0.0)


def test_measure_c_szego_range():
    # on |nu| <= 1/2 the sup is the x -> inf envelope sqrt(2/pi)
    assert abs(measure_c(0.0) - SQRT_2_OVER_PI) <= 1e-6
    assert abs(measure_c(0.5) - SQRT_2_OVER_PI) <= 1e-6


def test_measure_c_pins_and_domination():
    for nu, want in MEASURED_SUP_PINS.items():
        got = measure_c(nu, x_max=100.0)
        assert math.isclose(got, want, rel_tol=1e-10)
        assert olenko_c(nu) >= got
    with pytest.raises(ValueError):
        measure_c(-0.6)
    with pytest.raises(ValueError):
        measure_c(1.0, x_max=50.0)


def test_catalog_is_complete():
    assert len(catalog_ids()) == 17
    for bound_id in catalog_ids():
        d = default_descriptor(bound_id)
        assert d.id == bound_id
        assert evaluate_bound(d, POINT_1_1) > 0.0


def test_bound_pins():
    for bound_id, want in BOUND_PINS_AT_1_1.items():
        got = evaluate_bound(make_descriptor(bound_id), POINT_1_1)
        assert math.isclose(got, want, rel_tol=1e-12), bound_id
    got = evaluate_bound(make_descriptor("ITER_130", n=3), POINT_1_1)
    assert math.isclose(got, 1.9135782328447553, rel_tol=1e-12)


def test_descriptor_validation():
    bad = [
        ("FAMILY_17", dict(nu=-0.6)),
        ("FAMILY_17", dict(nu=0.3, mu=0.5)),
        ("HALF_RANGE_18", dict(nu=0.6)),
        ("HALF_RANGE_18", dict(nu=-0.5)),
        ("OLENKO_19", dict(nu=0.0)),
        ("DELTA_111", dict(delta=1.0)),
        ("MU_EQ_NU_112", dict(nu=0.5)),
        ("K1_115", dict(nu=1.5)),
        ("K1_115", dict(nu=1.5005)),  # inside the fixed pole margin
        ("VIA_116_117", dict(nu=1.0)),
        ("DELTA_118", dict(delta=0.0)),
        ("COMPOSITE_126", dict(M=0)),
        ("ITER_130", dict(n=0)),
        ("ITER_130", dict(n=1.5)),
        ("EXP_DECAY_315", dict(delta=1.6)),
        ("LEBEDEV_15", dict(nu=1.0)),
    ]
    for bound_id, params in bad:
        with pytest.raises(ValueError):
            make_descriptor(bound_id, **params)
    with pytest.raises(ValueError):
        make_descriptor("NO_SUCH_BOUND")
    # the margin boundary itself is admissible
    make_descriptor("K1_115", nu=1.501)
    make_descriptor("VIA_116_117", nu=1.501)


def test_iterated_family_consistency():
    d2 = make_descriptor("ITER_130", n=2)
    d3 = make_descriptor("ITER_130", n=3)
    for x in (0.01, 1.0, 100.0):
        for tau in (0.1, 1.0, 40.0):
            p = EvaluationPoint(x, tau)
            assert math.isclose(
                evaluate_bound(make_descriptor("ITER_128"), p), evaluate_bound(d2, p), rel_tol=1e-14
            )
            assert math.isclose(
                evaluate_bound(make_descriptor("ITER_129"), p), evaluate_bound(d3, p), rel_tol=1e-14
            )


def test_iterated_bounds_stay_finite_at_deep_order():
    for n in range(1, 21):
        d = make_descriptor("ITER_130", n=n)
        for p in (EvaluationPoint(0.01, 40.0), EvaluationPoint(100.0, 0.1)):
            v = evaluate_bound(d, p)
            assert math.isfinite(v) and v > 0.0


def test_half_range_ratio_matches_formula():
    # the nu=1/2 to nu=0 bound ratio reduces to an explicit gamma expression
    x, tau = 4.0, 2.0
    p = EvaluationPoint(x, tau)
    got = evaluate_bound(make_descriptor("HALF_RANGE_18", nu=0.5), p) / evaluate_bound(
        make_descriptor("HALF_RANGE_18", nu=0.0), p
    )
    want = math.exp(
        math.lgamma(1.0) - math.lgamma(1.5)
        + log_abs_gamma(complex(1.5, tau)) - log_abs_gamma(complex(1.0, tau))
        - math.lgamma(0.5)
        - 0.5 * math.log(x)
    )
    assert math.isclose(got, want, rel_tol=1e-13)


def test_exp_decay_zero_angle_is_k0(cfg):
    d = make_descriptor("EXP_DECAY_315", delta=0.0)
    for x in (0.5, 1.0, 10.0):
        assert math.isclose(
            evaluate_bound(d, EvaluationPoint(x, 7.0)), bessel_k0(x, cfg), rel_tol=1e-12
        )
    # tight as the index vanishes
    from klbessel.kernel import k_itau_oracle

    p = EvaluationPoint(1.0, 0.01)
    ratio = k_itau_oracle(p, cfg) / evaluate_bound(d, p)
    assert 0.999 <= ratio <= 1.0 + RATIO_SLACK


def test_whole_catalog_certifies_on_small_grid(small_grid, kernel_cache):
    for d in all_default_descriptors():
        cert = certify_bound(d, small_grid, kernel_values=kernel_cache[d.order_mu])
        assert cert.passed, (d.id, cert.max_ratio)
        assert cert.max_ratio <= 1.0 + RATIO_SLACK
        assert len(cert.ratios) == len(small_grid)
        assert not cert.indeterminate


def test_certificate_flags_indeterminate_points(small_grid, kernel_cache):
    d = default_descriptor("LEBEDEV_15")
    values = list(kernel_cache[0.0])
    values[5] = None  # emulate an accuracy failure at one grid point
    cert = certify_bound(d, small_grid, kernel_values=values)
    assert not cert.passed
    assert cert.indeterminate == (small_grid[5],)
    assert len(cert.ratios) == len(small_grid) - 1


def test_parallel_grid_matches_serial(small_grid):
    sub = small_grid[:10]
    assert kernel_grid_values(sub, 0.0, workers=2) == kernel_grid_values(sub, 0.0)


def test_default_grid_shape():
    grid = default_grid()
    assert len(grid) == 625
    xs = {p.x for p in grid}
    taus = {p.tau for p in grid}
    assert min(xs) == 0.01 and max(xs) == 100.0
    assert min(taus) == 0.1 and max(taus) == 40.0


def test_representation_residuals():
    assert verify_representation("EQ_1_27", EvaluationPoint(1.0, 1.0)) <= 1e-8
    assert verify_representation("EQ_1_4", EvaluationPoint(0.5, 1.0)) <= 1e-6
    assert verify_representation("EQ_1_21", EvaluationPoint(0.5, 2.0)) <= 1e-4
    assert verify_representation("EQ_1_6", EvaluationPoint(1.0, 1.0)) <= 1e-8


def test_representation_validation():
    with pytest.raises(ValueError):
        verify_representation("EQ_9_99", POINT_1_1)
    with pytest.raises(ValueError):
        verify_representation("EQ_1_6", POINT_1_1, nu=-1.5)


def test_catalog_json_round_trip():
    text = catalog_to_json()
    doc = json.loads(text)
    assert len(doc["bounds"]) == 17
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == text
    by_id = {rec["id"]: rec for rec in doc["bounds"]}
    assert by_id["LEBEDEV_15"]["label"] == "1.5"
    assert by_id["FAMILY_17"]["params"] == {"nu": 0.3, "mu": 0.1}


def test_certificate_json_round_trip(small_grid, kernel_cache):
    cert = certify_bound(
        default_descriptor("MODIFIED_110"), small_grid, kernel_values=kernel_cache[0.0]
    )
    text = certificate_to_json(cert)
    doc = json.loads(text)
    assert doc["pass"] is True
    assert len(doc["ratios"]) == len(small_grid)
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == text
