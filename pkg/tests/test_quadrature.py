import math

import numpy as np
import pytest

from klbessel.quadrature import (
    AccuracyError,
    QuadratureConfig,
    averaged_tail,
    integrate,
    panel_sums,
    phase_edges,
)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=-1.0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_refinements=0)
    with pytest.raises(ValueError):
        QuadratureConfig(truncation_threshold=0.0)


def test_panel_sums_exact_on_polynomial():
    # 16-point Gauss-Legendre is exact through degree 31
    edges = np.array([0.0, 0.3, 1.0])
    got = panel_sums(lambda x: 6.0 * x**5, edges)
    assert got.shape == (2,)
    assert math.isclose(got.sum(), 1.0, rel_tol=1e-14)
    assert math.isclose(got[0], 0.3**6, rel_tol=1e-14)


def test_panel_sums_complex():
    edges = np.linspace(0.0, 1.0, 5)
    got = panel_sums(lambda x: np.exp(1j * x), edges).sum()
    want = (np.exp(1j) - 1.0) / 1j
    assert abs(got - want) < 1e-14


def test_integrate_smooth(cfg):
    val = integrate(np.exp, np.linspace(-1.0, 1.0, 4), cfg)
    assert math.isclose(val, math.e - 1.0 / math.e, rel_tol=1e-13)


def test_integrate_raises_on_stubborn_singularity():
    cfg = QuadratureConfig(abs_tol=1e-15, rel_tol=1e-15, max_refinements=3)
    with pytest.raises(AccuracyError) as exc:
        integrate(lambda x: 1.0 / np.sqrt(x), np.array([0.0, 1.0]), cfg)
    assert exc.value.achieved is not None and exc.value.achieved > 1e-15


def test_phase_edges_cover_and_order():
    edges = phase_edges(lambda u: 3.0 * u, 0.0, 10.0)
    assert edges[0] == 0.0 and edges[-1] == 10.0
    assert np.all(np.diff(edges) > 0)
    # ~3*10/pi phase crossings must appear as interior edges
    assert edges.size >= int(30.0 / math.pi)


def test_phase_edges_track_chirp():
    # frequency grows with u, so edges must get denser toward the right end
    edges = phase_edges(lambda u: u * u, 0.1, 20.0)
    left = np.diff(edges[edges < 5.0])
    right = np.diff(edges[edges > 15.0])
    assert right.mean() < left.mean()


def test_integrate_oscillatory_with_phase_edges(cfg):
    # int_0^{20pi} cos(7u) e^{-u/10} du has a closed form
    def f(u):
        return np.cos(7.0 * u) * np.exp(-u / 10.0)

    hi = 20.0 * math.pi
    edges = phase_edges(lambda u: 7.0 * u, 0.0, hi)
    got = integrate(f, edges, cfg)
    a = -0.1
    want = ((a * math.cos(7 * hi) + 7 * math.sin(7 * hi)) * math.exp(a * hi) - a) / (a * a + 49.0)
    assert math.isclose(got, want, rel_tol=1e-12, abs_tol=1e-14)


def test_averaged_tail_alternating_geometric():
    k = np.arange(64)
    panels = (-0.97) ** k
    got, spread = averaged_tail(panels)
    want = 1.0 / 1.97
    assert abs(got - want) < 1e-10
    assert abs(spread) < 1e-8


def test_averaged_tail_short_converged_input():
    # a tail that has already converged must come back unchanged
    panels = np.array([2.0, 0.0, 0.0])
    got, spread = averaged_tail(panels)
    assert got == 2.0
    assert spread == 0.0
