import numpy as np
import pytest

from noma_secrecy import (
    BENCHMARK_SCHEMES,
    DecodingOrder,
    RiMatrix,
    SystemParams,
    benchmark_gains,
    draw_realizations,
    optimize_batch,
    secrecy_rates,
    sweep_alpha,
    sweep_snr,
)

RI = RiMatrix(0.5, 0.2, 0.5, 0.2)


def test_scheme_table():
    names = [s.name for s in BENCHMARK_SCHEMES]
    assert names == ["joint", "odep", "odfp", "fdep", "fdfp"]
    assert BENCHMARK_SCHEMES[0].alpha is None
    assert [s.order for s in BENCHMARK_SCHEMES] == [
        DecodingOrder.D2, DecodingOrder.D2, DecodingOrder.D2,
        DecodingOrder.D4, DecodingOrder.D4]
    assert [s.alpha for s in BENCHMARK_SCHEMES[1:]] == [0.5, 0.33, 0.5, 0.33]


def test_sweep_alpha_series_and_determinism():
    params = SystemParams(rho_t_db=60.0)
    grid = np.arange(0.0, 1.0001, 0.05)
    orders = [DecodingOrder.D2, DecodingOrder.D4]
    out = sweep_alpha(orders, grid, params, RI, n_realizations=50, seed=19)
    assert out.axis_name == "alpha"
    assert set(out.series) == {"rs1_d2", "rs2_d2", "min_d2",
                               "rs1_d4", "rs2_d4", "min_d4"}
    for vals in out.series.values():
        assert vals.shape == grid.shape
        assert np.all(vals >= 0.0)
    # endpoints kill one device's rate, so the fair value is zero there
    assert out.series["min_d2"][0] == 0.0
    assert out.series["min_d2"][-1] == 0.0
    again = sweep_alpha(orders, grid, params, RI, n_realizations=50, seed=19)
    for key in out.series:
        assert np.array_equal(out.series[key], again.series[key])


def test_sweep_alpha_matches_direct_average():
    params = SystemParams(rho_t_db=60.0)
    out = sweep_alpha([DecodingOrder.D2], [0.4], params, RI,
                      n_realizations=64, seed=5)
    draws = draw_realizations(params, 5, 64)
    rs = secrecy_rates(DecodingOrder.D2, 0.4, draws.g1, draws.g2,
                       params.rho_t, RI)
    assert out.series["rs1_d2"][0] == pytest.approx(rs.rs1.mean(), rel=1e-14)
    assert out.series["min_d2"][0] == pytest.approx(
        rs.min_rate().mean(), rel=1e-14)


def test_sweep_alpha_validation():
    params = SystemParams()
    with pytest.raises(ValueError):
        sweep_alpha([DecodingOrder.D2], [], params, RI, 10, 1)
    with pytest.raises(ValueError):
        sweep_alpha([], [0.5], params, RI, 10, 1)
    with pytest.raises(ValueError):
        sweep_alpha([DecodingOrder.D2], [0.5], params, RI, 0, 1)


def test_sweep_snr_series_shapes_and_ordering():
    params = SystemParams()
    rho_grid = np.array([50.0, 60.0, 70.0])
    out = sweep_snr(params, RI, rho_grid, [100.0, 200.0],
                    n_realizations=200, seed=23)
    assert out.axis_name == "rho_t_db"
    assert set(out.series) == {"value_d2_100", "value_d2_200"}
    for vals in out.series.values():
        assert vals.shape == rho_grid.shape
        # more transmit power never hurts the optimal value on average
        # (the far-distance series can sit at 0 until splits feasible)
        assert np.all(np.diff(vals) >= 0.0)
    assert np.all(np.diff(out.series["value_d2_100"]) > 0.0)
    # a farther weak device hurts at every SNR here
    assert np.all(out.series["value_d2_100"] > out.series["value_d2_200"])


def test_sweep_snr_matches_direct_batch():
    params = SystemParams()
    out = sweep_snr(params, RI, [60.0], [100.0], n_realizations=100, seed=31)
    draws = draw_realizations(params, 31, 100)
    direct = optimize_batch(draws.g1, draws.g2, 10.0 ** 6.0, RI).value.mean()
    assert out.series["value_d2_100"][0] == pytest.approx(direct, rel=1e-14)


def test_sweep_snr_validation():
    params = SystemParams()
    with pytest.raises(ValueError):
        sweep_snr(params, RI, [], [100.0], 10, 1)
    with pytest.raises(ValueError):
        sweep_snr(params, RI, [60.0], [], 10, 1)
    with pytest.raises(ValueError):
        sweep_snr(params, RI, [60.0], [25.0], 10, 1)
    with pytest.raises(ValueError):
        sweep_snr(params, RI, [60.0], [100.0], 0, 1)


def test_benchmark_gains_structure_and_bounds():
    params = SystemParams()
    out = benchmark_gains(params, RI, [50.0, 60.0, 70.0],
                          n_realizations=300, seed=41)
    assert set(out.means) == {"joint", "odep", "odfp", "fdep", "fdfp"}
    assert out.gains["joint"] == 0.0
    for name in ("odep", "odfp", "fdep", "fdfp"):
        # joint is optimal per realization, so every gain is in [0, 100]
        assert 0.0 <= out.gains[name] <= 100.0
        assert out.means[name] <= out.means["joint"]
    assert sum(out.winning_cases.values()) == 3 * 300
    assert out.sweep.axis_name == "rho_t_db"
    rerun = benchmark_gains(params, RI, [50.0, 60.0, 70.0],
                            n_realizations=300, seed=41)
    assert rerun.gains == out.gains


def test_benchmark_grand_mean_consistency():
    params = SystemParams()
    out = benchmark_gains(params, RI, [50.0, 70.0], n_realizations=100, seed=3)
    for name, vals in out.sweep.series.items():
        assert out.means[name] == pytest.approx(vals.mean(), rel=1e-14)
    expect = (1.0 - out.means["odep"] / out.means["joint"]) * 100.0
    assert out.gains["odep"] == pytest.approx(expect, rel=1e-12)


def test_benchmark_validation():
    params = SystemParams()
    with pytest.raises(ValueError):
        benchmark_gains(params, RI, [], 10, 1)
    with pytest.raises(ValueError):
        benchmark_gains(params, RI, [60.0], 0, 1)
