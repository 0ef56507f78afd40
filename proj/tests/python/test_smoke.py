import math

import pytest

import fracpde


def test_version():
    assert fracpde.__version__ == "0.1.0"


def test_weight_values():
    assert fracpde.grunwald_derivative_weights(0.5, 2) == pytest.approx([1.0, -0.5, -0.125], abs=1e-15)
    assert fracpde.grunwald_integral_weights(0.5, 2) == pytest.approx([1.0, 0.5, 0.375], abs=1e-15)
    assert fracpde.lambda_subdiffusion(0.5, 1) == pytest.approx([1.25, -0.875], abs=1e-15)
    assert fracpde.lambda_wave(0.5, 1) == pytest.approx([0.75, 0.625], abs=1e-15)


def test_order_validation():
    with pytest.raises(ValueError):
        fracpde.grunwald_derivative_weights(1.5, 3)
    with pytest.raises(ValueError):
        fracpde.lambda_wave(0.0, 3)


def test_generating_functions():
    assert fracpde.gen_fn_subdiffusion(0.5, math.pi) == pytest.approx(1.5 * math.sqrt(2.0), rel=1e-13)
    assert fracpde.gen_fn_wave(0.5, math.pi) == pytest.approx(0.5 / math.sqrt(2.0), rel=1e-13)
    with pytest.raises(ValueError):
        fracpde.gen_fn_wave(0.5, 0.0)


def test_problem_ids():
    assert set(fracpde.problem_ids()) == {"sub.sinx", "sub.t2sin2pix", "wave.exp", "wave.sin2pix_vel"}


def test_toeplitz_min_eigenvalue():
    assert fracpde.toeplitz_min_eigenvalue("lambda_subdiffusion", 0.5, 2) == pytest.approx(0.8125, abs=1e-12)
    for kind in ("lambda_subdiffusion", "lambda_wave"):
        for size in (1, 10, 50):
            assert fracpde.toeplitz_min_eigenvalue(kind, 0.35, size) >= -1e-10
    with pytest.raises(ValueError):
        fracpde.toeplitz_min_eigenvalue("grunwald_derivative", 0.5, 4)


def test_solve_final_reports_errors():
    out = fracpde.solve_final("sub.sinx", 0.35, 0.05, 30, 40)
    assert len(out["x"]) == 31
    assert len(out["u"]) == 31
    assert out["x"][0] == 0.0
    assert out["x"][-1] == pytest.approx(1.0)
    assert out["e_inf"] == pytest.approx(1.2567e-5, rel=2e-3)
    assert 0.0 < out["e_l2"] < out["e_inf"]

    vel = fracpde.solve_final("wave.sin2pix_vel", 0.5, 0.5, 16, 16)
    assert "e_inf" not in vel
    assert len(vel["u"]) == 17


def test_rate_study_orders():
    rows = fracpde.rate_study("sub.sinx", 0.35, 0.05, "temporal", 30, [5, 10, 20, 40])
    assert rows[0]["rate_inf"] is None
    assert all(abs(r["rate_inf"] - 2.0) < 0.1 for r in rows[1:])
    assert rows[3]["e_inf"] == pytest.approx(1.2567e-5, rel=2e-3)
    with pytest.raises(ValueError):
        fracpde.rate_study("sub.sinx", 0.35, 0.05, "diagonal", 30, [5, 10])
    with pytest.raises(ValueError):
        fracpde.rate_study("sub.sinx", 0.35, 0.05, "temporal", 30, [5, 12])
