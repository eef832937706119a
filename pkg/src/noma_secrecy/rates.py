"""Achievable and secrecy rates of the two-device downlink under imperfect SIC.

The base station superimposes both signals with power fraction alpha on
device 1 (the strong channel) and 1 - alpha on device 2.  Each receiver
decodes both signals in one of four decoding orders; cancelling a decoded
signal leaves behind a residual-interference fraction beta of its power.
Every SINR then has the form

    a * g_m / (b * g_m + 1 / rho_t)

where a is the power fraction of the decoded signal and b the interfering
fraction, attenuated by the matching beta when the interferer was decoded
at the earlier stage.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

_LN2 = np.log(2.0)


class DecodingOrder(Enum):
    """Stage-by-receiver decoding schedule.

    The value is a 2x2 matrix: entry (k, m) is the device whose signal
    receiver m decodes at stage k.  D1 is the conventional weak-first
    schedule at both receivers, D4 strong-first at both; D2 and D3 are the
    mixed schedules (own signal last / first at the strong device).
    """

    D1 = ((2, 2), (1, 1))
    D2 = ((2, 1), (1, 2))
    D3 = ((1, 2), (2, 1))
    D4 = ((1, 1), (2, 2))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.value)

    def decoded_first(self, receiver: int) -> int:
        """Device whose signal `receiver` (1 or 2) decodes at stage 1."""
        return self.value[0][receiver - 1]


@dataclass(frozen=True)
class RiMatrix:
    """Residual interference fractions left by imperfect cancellation.

    b_nm is the fraction of signal n's power still interfering at
    receiver m after that receiver decoded and cancelled signal n.
    0 is perfect SIC, 1 is no cancellation at all.
    """

    b11: float = 0.0
    b12: float = 0.0
    b21: float = 0.0
    b22: float = 0.0

    def __post_init__(self):
        for name in ("b11", "b12", "b21", "b22"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")

    def residual(self, signal: int, receiver: int) -> float:
        return getattr(self, f"b{signal}{receiver}")


class SinrParams(NamedTuple):
    """Numerator (a) and interference (b) power fractions of one SINR."""

    a: float
    b: float


def table1_params(order: DecodingOrder, n: int, m: int, alpha,
                  ri: RiMatrix) -> SinrParams:
    """SINR power fractions (a, b) of signal n at receiver m under `order`.

    The interfering signal contributes its full fraction unless receiver m
    decoded it at stage 1, in which case only the residual beta fraction
    remains.
    """
    if n not in (1, 2) or m not in (1, 2):
        raise ValueError("signal and receiver indices must be 1 or 2")
    other = 2 if n == 1 else 1
    a = alpha if n == 1 else 1.0 - alpha
    b = (1.0 - alpha) if n == 1 else alpha
    if order.decoded_first(m) == other:
        b = b * ri.residual(other, m)
    return SinrParams(a, b)


def sinr(a, b, g, rho_t):
    """a * g / (b * g + 1 / rho_t), elementwise."""
    return a * g / (b * g + 1.0 / rho_t)


def data_rate(sinr_value):
    """Shannon rate log2(1 + SINR) in bits/s/Hz."""
    return np.log1p(sinr_value) / _LN2


def link_rate(order: DecodingOrder, n: int, m: int, alpha, g1, g2, rho_t,
              ri: RiMatrix):
    """Rate of signal n as decoded at receiver m (g chosen by receiver)."""
    g = g1 if m == 1 else g2
    a, b = table1_params(order, n, m, alpha, ri)
    return data_rate(sinr(a, b, g, rho_t))


def secrecy_gap(order: DecodingOrder, device: int, alpha, g1, g2, rho_t,
                ri: RiMatrix):
    """Unclamped secrecy margin R_nn - R_nm of `device` (may be negative).

    The clamped secrecy rate is max(0, gap); the raw gap is what the
    stationarity and equal-rate conditions differentiate.
    """
    other = 2 if device == 1 else 1
    own = link_rate(order, device, device, alpha, g1, g2, rho_t, ri)
    leak = link_rate(order, device, other, alpha, g1, g2, rho_t, ri)
    return own - leak


@dataclass(frozen=True)
class SecrecyRates:
    """Per-device secrecy rates of one (order, alpha) operating point."""

    rs1: float | np.ndarray
    rs2: float | np.ndarray

    def min_rate(self):
        return np.minimum(self.rs1, self.rs2)


def secrecy_rates(order: DecodingOrder, alpha, g1, g2, rho_t,
                  ri: RiMatrix) -> SecrecyRates:
    """Secrecy rates of both devices, clamped to exactly 0 when negative.

    Arguments broadcast elementwise, so alpha grids and realization
    batches can be combined in one call.
    """
    rs1 = np.maximum(secrecy_gap(order, 1, alpha, g1, g2, rho_t, ri), 0.0)
    rs2 = np.maximum(secrecy_gap(order, 2, alpha, g1, g2, rho_t, ri), 0.0)
    if np.ndim(rs1) == 0 and np.ndim(rs2) == 0:
        return SecrecyRates(float(rs1), float(rs2))
    return SecrecyRates(rs1, rs2)


def min_secrecy_rate(order: DecodingOrder, alpha, g1, g2, rho_t,
                     ri: RiMatrix):
    """min(rs1, rs2) at the given operating point."""
    return secrecy_rates(order, alpha, g1, g2, rho_t, ri).min_rate()
