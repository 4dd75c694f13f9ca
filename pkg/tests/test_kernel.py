import cmath
import math

import numpy as np
import pytest

from klbessel.kernel import (
    EvaluationPoint,
    OrderSpec,
    k_complex_order,
    k_itau_defseries,
    k_itau_keyformula,
    k_itau_oracle,
    k_itau_smallx,
    natural_scale,
)
from klbessel.special import bessel_k0, complex_log_gamma

# Frozen reference values, computed once with 50-digit arithmetic from the
# definitional series in the index and pinned here.
ORACLE_PINS = {
    (1.0, 1.0): 0.28942803702599213,
    (0.5, 0.5): 0.79173430541261812,
    (2.0, 3.0): 0.014238040755583181,
    (1.0, 5.0): 0.00038046182799756373,
    (10.0, 10.0): 9.8241574381992468e-08,
    (1.0, 10.0): 1.1294550821681802e-07,
    (1.0, 2.0): 0.080616997622365979,
    (1.0, 40.0): -1.7004412809804201e-28,
    (5.0, 40.0): 8.2429354939537821e-29,
    (0.01, 40.0): -3.4839334554752914e-29,
    (100.0, 40.0): 1.4577751747902302e-48,
    (0.1, 1.0): 0.2253818853015678,
    (0.25, 5.0): 0.00043408080033387927,
    (1.0, 20.0): -1.1699083627287349e-14,
    (2.0, 4.0): 0.0013951624312788747,
    (10.0, 2.0): 1.4682032629621981e-05,
    (10.0, 0.5): 1.7569107704141348e-05,
    (5.0, 10.0): -1.0825398134796981e-07,
    (5.0, 5.0): 0.0003185910251867459,
    (0.01, 0.1): 4.5141924451990133,
    (100.0, 0.1): 4.6563965552537267e-45,
    (2.0, 1.0): 0.092385459890391182,
    (0.5, 2.0): 0.016502018949481443,
}

COMPLEX_PINS = {
    (0.5, 1.0, 1.0): 0.29882498908739135 + 0.11894469430135909j,
    (0.1, 1.0, 1.0): 0.28980724348949198 + 0.022325634675164246j,
    (0.25, 2.0, 0.5): -0.00024285214005731559 + 0.045841561052075675j,
    (1.0, 3.0, 2.0): 0.0018610519511282289 + 0.021357061133374772j,
    (1.0, 1.0, 1.0): 0.32545977186584141 + 0.28942803702599213j,
}

CROSS_GRID_X = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
CROSS_GRID_TAU = (0.5, 1.0, 2.0, 5.0, 10.0)


def test_point_validation():
    with pytest.raises(ValueError):
        EvaluationPoint(0.0, 1.0)
    with pytest.raises(ValueError):
        EvaluationPoint(1.0, -1.0)
    with pytest.raises(ValueError):
        EvaluationPoint(math.inf, 1.0)
    with pytest.raises(ValueError):
        OrderSpec(0.5, 0.0)


def test_natural_scale():
    tau = 3.0
    want = math.sqrt(2.0 * math.pi / tau) * math.exp(-0.5 * math.pi * tau)
    assert math.isclose(natural_scale(tau), want, rel_tol=1e-15)


@pytest.mark.parametrize("key", sorted(ORACLE_PINS))
def test_oracle_pins(cfg, key):
    x, tau = key
    want = ORACLE_PINS[key]
    got = k_itau_oracle(EvaluationPoint(x, tau), cfg)
    assert abs(got - want) <= 1e-11 * abs(want)


def test_oracle_continuity_at_zero_index(cfg):
    got = k_itau_oracle(EvaluationPoint(1.0, 1e-8), cfg)
    assert math.isclose(got, bessel_k0(1.0, cfg), rel_tol=1e-10)


def test_oracle_oscillates_in_x(cfg):
    # for large index the kernel changes sign on (0, 2 tau)
    tau = 5.0
    xs = np.linspace(0.2, 2.0 * tau - 0.2, 60)
    signs = np.sign([k_itau_oracle(EvaluationPoint(float(x), tau), cfg) for x in xs])
    assert np.sum(signs[1:] != signs[:-1]) >= 1


@pytest.mark.parametrize("key", sorted(COMPLEX_PINS))
def test_complex_order_pins(cfg, key):
    mu, tau, x = key
    want = COMPLEX_PINS[key]
    got = k_complex_order(OrderSpec(mu, tau), x, cfg)
    assert abs(got - want) <= 1e-11 * abs(want)


def test_complex_order_reduces_to_real_kernel(cfg):
    p = EvaluationPoint(2.0, 3.0)
    got = k_complex_order(OrderSpec(0.0, 3.0), 2.0, cfg)
    assert got.imag == 0.0
    assert math.isclose(got.real, k_itau_oracle(p, cfg), rel_tol=1e-12)


@pytest.mark.parametrize("tau", CROSS_GRID_TAU)
@pytest.mark.parametrize("x", CROSS_GRID_X)
def test_index_raising_identity(cfg, x, tau):
    # tau*K_{i tau}(x) = x*Im K_{1 + i tau}(x)
    lhs = tau * k_itau_oracle(EvaluationPoint(x, tau), cfg)
    rhs = x * k_complex_order(OrderSpec(1.0, tau), x, cfg).imag
    assert abs(lhs - rhs) <= 1e-10 * abs(lhs) + 1e-14


def test_index_raising_identity_pinned(cfg):
    lhs = 3.0 * k_itau_oracle(EvaluationPoint(2.0, 3.0), cfg)
    assert abs(lhs - 0.042714122266749543) <= 1e-10 * lhs


@pytest.mark.parametrize("n_terms", [0, 2, 4])
def test_keyformula_matches_oracle(cfg, n_terms):
    worst = 0.0
    for x in CROSS_GRID_X:
        for tau in CROSS_GRID_TAU:
            p = EvaluationPoint(x, tau)
            a = k_itau_keyformula(p, n_terms, cfg)
            b = k_itau_oracle(p, cfg)
            worst = max(worst, abs(a - b) / natural_scale(tau))
    assert worst <= 1e-8


def test_keyformula_rejects_bad_order_count(cfg):
    p = EvaluationPoint(1.0, 1.0)
    with pytest.raises(ValueError):
        k_itau_keyformula(p, -1, cfg)
    with pytest.raises(ValueError):
        k_itau_keyformula(p, 21, cfg)


def test_keyformula_small_x_leading_term(cfg):
    x, tau = 1e-4, 1.0
    got = k_itau_keyformula(EvaluationPoint(x, tau), 2, cfg)
    lead = (cmath.exp(complex_log_gamma(1j * tau)) * (0.5 * x) ** (-1j * tau)).real
    assert abs(got - lead) <= 1e-9


def test_defseries_matches_pins():
    for (x, tau), want in ORACLE_PINS.items():
        if x > 10.0 or tau > 10.0:
            continue
        got = k_itau_defseries(EvaluationPoint(x, tau))
        assert abs(got - want) <= 1e-9 * natural_scale(tau), (x, tau)


def test_defseries_domain():
    with pytest.raises(ValueError):
        k_itau_defseries(EvaluationPoint(10.5, 1.0))
    with pytest.raises(ValueError):
        k_itau_defseries(EvaluationPoint(1.0, 10.5))


def test_smallx_evaluator(cfg):
    for tau in (0.5, 1.0, 5.0, 20.0):
        p = EvaluationPoint(0.01, tau)
        a = k_itau_smallx(p)
        b = k_itau_oracle(p, cfg)
        assert abs(a - b) <= 1e-11 * abs(b), tau
    with pytest.raises(ValueError):
        k_itau_smallx(EvaluationPoint(0.06, 1.0))
