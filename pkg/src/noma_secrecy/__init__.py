"""Secrecy-fairness power allocation for two-device untrusted NOMA downlinks.

A base station serves two untrusted devices by power-domain superposition.
Each device tries to decode the other's signal, successive interference
cancellation is imperfect, and the power split is chosen to maximize the
minimum of the two secrecy rates.  The package provides the channel and
rate models, per-decoding-order feasibility analysis, the closed-form
max-min solver with brute-force validation oracles, Monte Carlo
experiments, and a CLI that writes reproducible CSVs.
"""
from .channel import (
    ChannelRealization,
    SystemParams,
    draw_realization,
    draw_realizations,
    mean_gain,
    realization_rng,
)
from .estimator import MaxMinSecrecyAllocator
from .experiments import (
    BENCHMARK_SCHEMES,
    BenchmarkResult,
    BenchmarkScheme,
    SweepResult,
    benchmark_gains,
    sweep_alpha,
    sweep_snr,
)
from .feasibility import (
    FeasibleInterval,
    OrderFeasibility,
    feasibility_d1,
    feasibility_d2,
    feasibility_d3,
    feasibility_d4,
    order_feasibility,
    secure_set,
)
from .optimizer import (
    BatchOptResult,
    KktCandidate,
    OptResult,
    case2_roots,
    case3_roots,
    case4_cubic,
    optimal_order,
    optimize,
    optimize_batch,
)
from .oracle import GridSpec, fd_secrecy_slope, grid_max_min
from .rates import (
    DecodingOrder,
    RiMatrix,
    SecrecyRates,
    SinrParams,
    data_rate,
    link_rate,
    min_secrecy_rate,
    secrecy_gap,
    secrecy_rates,
    sinr,
    table1_params,
)

__version__ = "0.1.0"

__all__ = [
    "BENCHMARK_SCHEMES",
    "BatchOptResult",
    "BenchmarkResult",
    "BenchmarkScheme",
    "ChannelRealization",
    "DecodingOrder",
    "FeasibleInterval",
    "GridSpec",
    "KktCandidate",
    "MaxMinSecrecyAllocator",
    "OptResult",
    "OrderFeasibility",
    "RiMatrix",
    "SecrecyRates",
    "SinrParams",
    "SweepResult",
    "SystemParams",
    "benchmark_gains",
    "case2_roots",
    "case3_roots",
    "case4_cubic",
    "data_rate",
    "draw_realization",
    "draw_realizations",
    "fd_secrecy_slope",
    "feasibility_d1",
    "feasibility_d2",
    "feasibility_d3",
    "feasibility_d4",
    "grid_max_min",
    "link_rate",
    "mean_gain",
    "min_secrecy_rate",
    "optimal_order",
    "optimize",
    "optimize_batch",
    "order_feasibility",
    "realization_rng",
    "secrecy_gap",
    "secrecy_rates",
    "secure_set",
    "sinr",
    "sweep_alpha",
    "sweep_snr",
    "table1_params",
    "__version__",
]
