"""Power-split ranges with positive secrecy, per decoding order and device.

The sign of each device's secrecy rate reduces to a linear inequality in
alpha, so the feasible set per (order, device) is an open sub-interval of
(0, 1) with one end pinned at 0 or 1.  An order is secure when the two
intervals overlap; only D2 and D4 can be secure, and D4 only when the
strong device's residual at its own receiver exceeds the one it leaves at
the weak receiver (b11 > b12).
"""
from __future__ import annotations

from dataclasses import dataclass

from .rates import DecodingOrder, RiMatrix


@dataclass(frozen=True)
class FeasibleInterval:
    """Open interval (lower, upper) of power splits; may be empty."""

    lower: float
    upper: float

    @property
    def empty(self) -> bool:
        return not self.lower < self.upper

    def contains(self, alpha: float) -> bool:
        return self.lower < alpha < self.upper

    def intersect(self, other: "FeasibleInterval") -> "FeasibleInterval":
        lo = max(self.lower, other.lower)
        hi = min(self.upper, other.upper)
        return FeasibleInterval(lo, hi) if lo < hi else EMPTY_INTERVAL


EMPTY_INTERVAL = FeasibleInterval(0.0, 0.0)
FULL_INTERVAL = FeasibleInterval(0.0, 1.0)


@dataclass(frozen=True)
class OrderFeasibility:
    """Positive-secrecy intervals of one decoding order.

    interval_u1 / interval_u2 are the alpha ranges with strictly positive
    secrecy rate for device 1 / device 2; the order is secure when their
    intersection is nonempty.
    """

    order: DecodingOrder
    interval_u1: FeasibleInterval
    interval_u2: FeasibleInterval

    @property
    def joint(self) -> FeasibleInterval:
        return self.interval_u1.intersect(self.interval_u2)

    @property
    def secure(self) -> bool:
        return not self.joint.empty


def _check_gains(g1: float, g2: float) -> None:
    if not g1 > g2 > 0:
        raise ValueError("channel gains must satisfy g1 > g2 > 0")


def _threshold(g1: float, g2: float, rho_t: float, slope: float) -> float:
    """Positive root of alpha * g1 * g2 * rho_t * slope = g1 - g2."""
    return (g1 - g2) / (g1 * g2 * rho_t * slope)


def _lower_anchored(g1, g2, rho_t, slope) -> FeasibleInterval:
    """Interval (1 - threshold, 1), clipped at 0; full when slope <= 0."""
    if slope <= 0.0:
        return FULL_INTERVAL
    return FeasibleInterval(max(0.0, 1.0 - _threshold(g1, g2, rho_t, slope)), 1.0)


def _upper_anchored(g1, g2, rho_t, slope) -> FeasibleInterval:
    """Interval (threshold, 1); empty when slope <= 0 or threshold >= 1."""
    if slope <= 0.0:
        return EMPTY_INTERVAL
    lo = _threshold(g1, g2, rho_t, slope)
    return FeasibleInterval(lo, 1.0) if lo < 1.0 else EMPTY_INTERVAL


def feasibility_d1(g1: float, g2: float, rho_t: float,
                   ri: RiMatrix) -> OrderFeasibility:
    """Weak-first decoding at both receivers: device 2 is never secured.

    Device 1 keeps positive secrecy on all of (0, 1) when b22 >= b21;
    otherwise only above 1 - (g1-g2)/(g1 g2 rho_t (b21-b22)), since the
    larger residual at its own receiver erodes its advantage as the
    cancelled signal's power grows.
    """
    _check_gains(g1, g2)
    u1 = _lower_anchored(g1, g2, rho_t, ri.b21 - ri.b22)
    return OrderFeasibility(DecodingOrder.D1, u1, EMPTY_INTERVAL)


def feasibility_d2(g1: float, g2: float, rho_t: float,
                   ri: RiMatrix) -> OrderFeasibility:
    """Own-signal-last at the strong device: secure whenever the device-2
    lower bound (g1-g2)/(g1 g2 rho_t (1-b12)) stays below 1.

    Device 1 is positive on all of (0, 1); b12 = 1 leaves no feasible
    alpha for device 2.
    """
    _check_gains(g1, g2)
    u2 = _upper_anchored(g1, g2, rho_t, 1.0 - ri.b12)
    return OrderFeasibility(DecodingOrder.D2, FULL_INTERVAL, u2)


def feasibility_d3(g1: float, g2: float, rho_t: float,
                   ri: RiMatrix) -> OrderFeasibility:
    """Own-signal-first at the strong device: device 2 is never secured;
    device 1 only above 1 - (g1-g2)/(g1 g2 rho_t (1-b22))."""
    _check_gains(g1, g2)
    u1 = _lower_anchored(g1, g2, rho_t, 1.0 - ri.b22)
    return OrderFeasibility(DecodingOrder.D3, u1, EMPTY_INTERVAL)


def feasibility_d4(g1: float, g2: float, rho_t: float,
                   ri: RiMatrix) -> OrderFeasibility:
    """Strong-first at both receivers: secure only when b11 > b12, with
    device 2 positive above (g1-g2)/(g1 g2 rho_t (b11-b12))."""
    _check_gains(g1, g2)
    u2 = _upper_anchored(g1, g2, rho_t, ri.b11 - ri.b12)
    return OrderFeasibility(DecodingOrder.D4, FULL_INTERVAL, u2)


_DISPATCH = {
    DecodingOrder.D1: feasibility_d1,
    DecodingOrder.D2: feasibility_d2,
    DecodingOrder.D3: feasibility_d3,
    DecodingOrder.D4: feasibility_d4,
}


def order_feasibility(order: DecodingOrder, g1: float, g2: float,
                      rho_t: float, ri: RiMatrix) -> OrderFeasibility:
    """Positive-secrecy intervals of one decoding order."""
    return _DISPATCH[order](g1, g2, rho_t, ri)


def secure_set(g1: float, g2: float, rho_t: float,
               ri: RiMatrix) -> list[DecodingOrder]:
    """Orders whose joint interval is nonempty; always a subset of {D2, D4}.

    May be empty, e.g. when b12 = 1 and b11 <= b12; callers must handle
    the no-positive-fairness outcome.
    """
    return [o for o in DecodingOrder
            if order_feasibility(o, g1, g2, rho_t, ri).secure]
