"""Monte Carlo sweeps and benchmark comparisons over fading realizations.

All series within one run are averaged over the identical realization set
(paired sampling), so curve shapes and gain signs are not washed out by
independent sampling noise.  Results are plain arrays keyed by series
name, ready for CSV serialization by the CLI.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .channel import SystemParams, draw_realizations
from .optimizer import optimize_batch
from .rates import DecodingOrder, RiMatrix, secrecy_rates

_DB_SCALE = 10.0


def _to_linear(db: float) -> float:
    return 10.0 ** (db / _DB_SCALE)


@dataclass(frozen=True)
class BenchmarkScheme:
    """A fixed or optimal (decoding order, power split) policy.

    alpha None means the per-realization optimal split; a number means
    that split is applied to every realization.
    """

    name: str
    order: DecodingOrder
    alpha: float | None


JOINT = BenchmarkScheme("joint", DecodingOrder.D2, None)
ODEP = BenchmarkScheme("odep", DecodingOrder.D2, 0.5)
ODFP = BenchmarkScheme("odfp", DecodingOrder.D2, 0.33)
FDEP = BenchmarkScheme("fdep", DecodingOrder.D4, 0.5)
FDFP = BenchmarkScheme("fdfp", DecodingOrder.D4, 0.33)
BENCHMARK_SCHEMES = (JOINT, ODEP, ODFP, FDEP, FDFP)


@dataclass(frozen=True)
class SweepResult:
    """One experiment's axis, named mean-value series, and provenance."""

    axis_name: str
    axis: np.ndarray
    series: dict[str, np.ndarray]
    n_realizations: int
    seed: int


def _scheme_values(scheme: BenchmarkScheme, g1, g2, rho_t, ri) -> np.ndarray:
    """Per-realization min secrecy rate achieved by one scheme."""
    if scheme.alpha is None:
        return optimize_batch(g1, g2, rho_t, ri).value
    rs = secrecy_rates(scheme.order, scheme.alpha, g1, g2, rho_t, ri)
    return np.asarray(rs.min_rate())


def _validate_counts(n_realizations: int) -> None:
    if n_realizations <= 0:
        raise ValueError("realization count must be positive")


def sweep_alpha(orders: list[DecodingOrder], alpha_grid, params: SystemParams,
                ri: RiMatrix, n_realizations: int, seed: int) -> SweepResult:
    """Mean rs1, rs2, and min secrecy rate per order over an alpha grid.

    Series are named rs1_<order>/rs2_<order>/min_<order> with lowercase
    order names; all orders share one realization set.
    """
    _validate_counts(n_realizations)
    alpha_grid = np.asarray(alpha_grid, dtype=float)
    if alpha_grid.size == 0 or not orders:
        raise ValueError("alpha grid and order list must be nonempty")
    draws = draw_realizations(params, seed, n_realizations)
    g1 = np.asarray(draws.g1)[None, :]
    g2 = np.asarray(draws.g2)[None, :]
    alphas = alpha_grid[:, None]
    series: dict[str, np.ndarray] = {}
    for order in orders:
        key = order.name.lower()
        rs = secrecy_rates(order, alphas, g1, g2, params.rho_t, ri)
        series[f"rs1_{key}"] = rs.rs1.mean(axis=1)
        series[f"rs2_{key}"] = rs.rs2.mean(axis=1)
        series[f"min_{key}"] = rs.min_rate().mean(axis=1)
    return SweepResult("alpha", alpha_grid, series, n_realizations, seed)


def _distance_key(d2: float) -> str:
    return str(int(d2)) if float(d2).is_integer() else repr(float(d2))


def sweep_snr(params: SystemParams, ri: RiMatrix, rho_grid_db,
              d2_values, n_realizations: int, seed: int) -> SweepResult:
    """Mean optimal secrecy-fairness value over a transmit-SNR grid.

    One series per far-device distance, named value_d2_<meters>.  Each
    distance redraws its gain set from the same seed, so the underlying
    fading variates are shared across distances.
    """
    _validate_counts(n_realizations)
    rho_grid_db = np.asarray(rho_grid_db, dtype=float)
    d2_values = [float(d) for d in np.atleast_1d(d2_values)]
    if rho_grid_db.size == 0 or not d2_values:
        raise ValueError("SNR grid and distance list must be nonempty")
    if any(d <= params.d1 for d in d2_values):
        raise ValueError("every d2 must exceed d1 (device 2 is the far one)")
    series: dict[str, np.ndarray] = {}
    for d2 in d2_values:
        draws = draw_realizations(replace(params, d2=d2), seed, n_realizations)
        means = np.empty(rho_grid_db.size)
        for i, db in enumerate(rho_grid_db):
            res = optimize_batch(draws.g1, draws.g2, _to_linear(db), ri)
            means[i] = res.value.mean()
        series[f"value_d2_{_distance_key(d2)}"] = means
    return SweepResult("rho_t_db", rho_grid_db, series, n_realizations, seed)


@dataclass(frozen=True)
class BenchmarkResult:
    """Benchmark sweep plus the summary gain figures.

    means: grand mean min secrecy rate per scheme over the full
    (SNR grid x realizations) cell set.  gains: percentage of the joint
    optimum's mean that each scheme gives up, computed from those grand
    means so that realizations scoring 0 under a fixed scheme are
    included rather than dropped.  Normalizing by the joint mean keeps
    the figure bounded by 100 even for schemes whose value collapses at
    high SNR (the fixed-order ones are interference limited there).
    winning_cases: how often each KKT case won.
    """

    sweep: SweepResult
    means: dict[str, float]
    gains: dict[str, float]
    winning_cases: dict[str, int]


def benchmark_gains(params: SystemParams, ri: RiMatrix, rho_grid_db,
                    n_realizations: int, seed: int) -> BenchmarkResult:
    """Compare the joint optimum against the four fixed-policy baselines.

    gain(scheme) = (mean_joint - mean_scheme) / mean_joint * 100, with
    both means taken over all realizations and all grid SNRs first.
    """
    _validate_counts(n_realizations)
    rho_grid_db = np.asarray(rho_grid_db, dtype=float)
    if rho_grid_db.size == 0:
        raise ValueError("SNR grid must be nonempty")
    draws = draw_realizations(params, seed, n_realizations)
    series = {s.name: np.empty(rho_grid_db.size) for s in BENCHMARK_SCHEMES}
    case_counts: dict[str, int] = {}
    for i, db in enumerate(rho_grid_db):
        rho_t = _to_linear(db)
        joint = optimize_batch(draws.g1, draws.g2, rho_t, ri)
        series["joint"][i] = joint.value.mean()
        kinds, counts = np.unique(joint.winning_case, return_counts=True)
        for kind, count in zip(kinds, counts):
            case_counts[str(kind)] = case_counts.get(str(kind), 0) + int(count)
        for scheme in BENCHMARK_SCHEMES[1:]:
            values = _scheme_values(scheme, draws.g1, draws.g2, rho_t, ri)
            series[scheme.name][i] = values.mean()
    sweep = SweepResult("rho_t_db", rho_grid_db, series, n_realizations, seed)
    means = {name: float(vals.mean()) for name, vals in series.items()}
    joint_mean = means["joint"]
    gains = {
        name: (joint_mean - mean) / joint_mean * 100.0 if joint_mean > 0.0
        else np.inf
        for name, mean in means.items()
    }
    return BenchmarkResult(sweep, means, gains,
                           dict(sorted(case_counts.items())))
