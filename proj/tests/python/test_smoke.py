"""Smoke tests for the python bindings (built extension on PYTHONPATH)."""

import math

import pytest

cl = pytest.importorskip("cornerlight")


def test_sector_and_closest_point():
    d = cl.SectorDomain(0.5, math.pi / 4)
    point, distance = cl.closest_point(d, -0.3 + 0j)
    assert point == 0j
    assert distance == pytest.approx(0.3, abs=1e-14)
    point, distance = cl.closest_point(d, 1.0 + 0j)
    assert point == pytest.approx(0.5 + 0j)
    assert distance == pytest.approx(0.5)
    with pytest.raises(ValueError):
        cl.closest_point(d, 0.2 + 0j)


def test_scheme_and_phi():
    s = cl.build_scheme(4, 2.0)
    assert s.poles[0] == -1.0
    assert s.poles[3] == pytest.approx(-math.exp(-3.0), rel=1e-15)
    assert s.epsilon_split == -s.poles[3]
    one = cl.build_scheme(1, 2.0)
    assert cl.eval_phi(one, 1.0 + 0j).value() == pytest.approx(0.5 + 0j)


def test_fastdec_values():
    assert cl.eval_base(0j) == 1 + 0j
    assert cl.eval_base(-1 / 3 + 0j).real == pytest.approx(20 / 27, rel=1e-15)
    lc = cl.eval_reference(50, -1 / 3 + 0j)
    assert lc.magnitude() == pytest.approx((20 / 27) ** 50, rel=1e-9)
    report = cl.certify_bounds(50, 40)
    assert report.sup_inner <= 1 + 1e-10
    assert report.sup_extended < 20


def test_grids_and_quadrature():
    d = cl.SectorDomain(0.5, math.pi / 4)
    grid = cl.boundary_grid(d, 50, cl.Clustering.EXPONENTIAL_TOWARD_ORIGIN)
    assert len(grid.points) == 50
    assert min(abs(z) for z in grid.points) <= 1e-12
    rule = cl.slit_quadrature(1e-16, 16)
    assert rule.panel_count == 37
    assert len(rule.nodes) == 592
    assert sum(rule.weights) == pytest.approx(1.0, abs=1e-12)


def test_approximant_reproduces_entire_target():
    d = cl.SectorDomain(0.5, math.pi / 4)
    f = cl.make_target("entire-z2")
    approx = cl.build_approximant(f, d, 16, 2.0)
    for z in (0.3 + 0.1j, 0.05 - 0.02j, 0.49 + 0j):
        assert abs(cl.evaluate(approx, z) - z * z) < 1e-11
    assert approx.slit_order == 16
    assert approx.circular_degree == 16


def test_approximant_converges_on_zsqrt():
    d = cl.SectorDomain(0.5, math.pi / 4)
    f = cl.make_target("zsqrt")
    coarse = cl.build_approximant(f, d, 16, 2.0)
    finer = cl.build_approximant(f, d, 64, 2.0)
    z = 0.4 + 0.1j
    exact = z ** 0.5
    assert abs(cl.evaluate(finer, z) - exact) < abs(cl.evaluate(coarse, z) - exact)
    assert abs(cl.evaluate(finer, z) - exact) < 1e-5


def test_minimax_ratio():
    samples = [complex(math.cos(2 * math.pi * k / 128), math.sin(2 * math.pi * k / 128))
               for k in range(128)]
    values = [1.0 / (z - 2.0) for z in samples]
    est = []
    for degree in (5, 6):
        problem = cl.MinimaxProblem(samples, values, degree)
        est.append(cl.solve_minimax(problem).error_estimate)
    assert est[0] / est[1] == pytest.approx(2.0, abs=0.2)


def test_fit_rate():
    pts = [(n, math.exp(-2.0 * math.sqrt(n))) for n in (16, 36, 64, 100)]
    fit = cl.fit_rate(pts, cl.RateModel.EXP_SQRT)
    assert fit.slope == pytest.approx(-2.0, abs=1e-10)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-10)
