"""Brute-force references for validating the closed-form solver.

Two independent checks live here: an exhaustive grid search of the
max-min objective, and centered finite differences of the unclamped
secrecy margin.  Neither shares code paths with the candidate algebra in
`optimizer`, which is what makes the cross-validation meaningful.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rates import DecodingOrder, RiMatrix, min_secrecy_rate, secrecy_gap


@dataclass(frozen=True)
class GridSpec:
    """Evenly spaced alpha search grid.

    The grid has round((upper - lower)/step) + 1 inclusive points built by
    integer division of the span, so a refined grid contains every point
    of a coarser one exactly (10x refinement keeps old points bit-equal),
    making grid refinement provably monotone.
    """

    step: float = 1e-4
    lower: float = 0.0
    upper: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.step < self.upper - self.lower:
            raise ValueError("step must satisfy 0 < step < upper - lower")

    def points(self) -> np.ndarray:
        n = round((self.upper - self.lower) / self.step)
        return self.lower + (self.upper - self.lower) * np.arange(n + 1) / n


def grid_max_min(order: DecodingOrder, g1: float, g2: float, rho_t: float,
                 ri: RiMatrix, spec: GridSpec = GridSpec()) -> tuple[float, float]:
    """Exhaustive argmax of min(rs1, rs2) on the grid.

    Ties resolve to the smallest alpha (first grid hit), mirroring the
    closed-form solver's tie rule.
    """
    alphas = spec.points()
    values = min_secrecy_rate(order, alphas, g1, g2, rho_t, ri)
    best = int(np.argmax(values))
    return float(alphas[best]), float(values[best])


def fd_secrecy_slope(order: DecodingOrder, device: int, alpha: float,
                     g1: float, g2: float, rho_t: float, ri: RiMatrix,
                     step: float = 1e-7) -> float:
    """Centered finite difference of the unclamped secrecy margin.

    Differentiates R_nn - R_nm rather than the clamped rate so the
    estimate stays meaningful at points where the clamp is active.
    """
    hi = secrecy_gap(order, device, alpha + step, g1, g2, rho_t, ri)
    lo = secrecy_gap(order, device, alpha - step, g1, g2, rho_t, ri)
    return float((hi - lo) / (2.0 * step))
