"""Closed-form max-min secrecy-fairness power allocation.

The decoding order that pointwise-dominates the others for both devices is
D2 (own signal decoded last at the strong device), so the search reduces
to the single scalar problem

    maximize   min(rs1(alpha), rs2(alpha))
    subject to L < alpha < 1,      L = (g1-g2)/(g1 g2 rho_t (1-b12))

whose optimum must be a KKT candidate of one of three kinds: a stationary
point of rs2 (case 2, quadratic), a stationary point of rs1 (case 3,
quadratic), or an equal-rate crossing rs1 = rs2 (case 4, cubic).  The
candidates are enumerated in closed form, filtered to the strict interior
of the feasible interval, and the argmax of the evaluated objective wins.

Root evaluation is arranged to avoid catastrophic cancellation: the
quadratic roots prone to it are computed from the factored form of the
discriminant defect, and the cubic is normalized and solved through the
companion matrix with two Newton polishing steps.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .rates import DecodingOrder, RiMatrix, min_secrecy_rate

logger = logging.getLogger(__name__)

_TIE_TOL = 1e-12
_REAL_IMAG_TOL = 1e-9
NONE_FEASIBLE = "none-feasible"


@dataclass(frozen=True)
class KktCandidate:
    """One closed-form candidate power split.

    case_id names the KKT case that produced it; root_index is the root's
    position within that case (matching the +/- branch order for the
    quadratics, ascending for the cubic).
    """

    alpha: float
    case_id: str
    root_index: int


@dataclass(frozen=True)
class OptResult:
    """Outcome of the joint order / power-split optimization."""

    order: DecodingOrder
    alpha_hat: float
    value: float
    winning_case: str


def optimal_order() -> DecodingOrder:
    """The secure decoding order that dominates all others: D2.

    Both of device 1's SINR parameters and both of device 2's are weakly
    better under D2 than under any other order, for every alpha and every
    residual matrix, so no per-instance search is needed.
    """
    return DecodingOrder.D2


def _case2_excluded_root(g1: float, g2: float, rho_t: float,
                         b12: float) -> float:
    """'+' branch of the rs2 stationarity quadratic; never positive."""
    k = (1.0 - b12) * g1
    s = (1.0 - b12) * g1 * (g1 - b12 * g2) * (b12 * g2 * rho_t + 1.0)
    return (k + math.sqrt(s)) / (b12 * (b12 - 1.0) * g1 * g2 * rho_t)


def case2_roots(g1: float, g2: float, rho_t: float,
                ri: RiMatrix) -> list[KktCandidate]:
    """Stationary point of device 2's secrecy rate (one usable root).

    The quadratic d rs2/d alpha = 0 has one root that is always <= 0
    (checked, logged if violated) and one positive root, evaluated in the
    cancellation-free form

        alpha = [(g1-g2) + g2 rho_t (g1 - b12 g2)] / (g2 rho_t (k + sqrt(s)))

    obtained by factoring k^2 - s.  Degenerate b12 in {0, 1} emits no
    candidates; the remaining cases cover the search.
    """
    b12 = ri.b12
    if not 0.0 < b12 < 1.0:
        return []
    excluded = _case2_excluded_root(g1, g2, rho_t, b12)
    if excluded > 0.0:
        logger.warning("case2 '+' root unexpectedly positive: %r", excluded)
    k = (1.0 - b12) * g1
    s = (1.0 - b12) * g1 * (g1 - b12 * g2) * (b12 * g2 * rho_t + 1.0)
    numer = (g1 - g2) + g2 * rho_t * (g1 - b12 * g2)
    alpha = numer / (g2 * rho_t * (k + math.sqrt(s)))
    return [KktCandidate(alpha, "case2", 2)]


def case3_roots(g1: float, g2: float, rho_t: float,
                ri: RiMatrix) -> list[KktCandidate]:
    """Stationary points of device 1's secrecy rate (0 or 2 real roots).

    Real roots require g2 > b21 g1; otherwise the discriminant is
    negative and the case contributes nothing.  The '+' branch root is
    evaluated through the factored k^2 - s form to dodge cancellation;
    the '-' branch sums like-signed terms and is computed directly.
    Degenerate b21 in {0, 1} emits no candidates.
    """
    b21 = ri.b21
    if not 0.0 < b21 < 1.0:
        return []
    c = (1.0 - b21) * g2 * (b21 * g1 * rho_t + 1.0)
    s = c * (g2 - b21 * g1)
    if s <= 0.0:
        return []
    k = (b21 - 1.0) * g2 * (b21 * g1 * rho_t + 1.0)
    sq = math.sqrt(s)
    denom = b21 * (b21 - 1.0) * g1 * g2 * rho_t
    x3 = (1.0 - b21) * g1 * g2 * rho_t + (g1 - g2)
    plus = (b21 * g1 * rho_t + 1.0) * x3 / ((sq - k) * g1 * rho_t)
    minus = (k - sq) / denom
    return [KktCandidate(plus, "case3", 1), KktCandidate(minus, "case3", 2)]


def cubic_coeffs(g1: float, g2: float, rho_t: float,
                 ri: RiMatrix) -> tuple[float, float, float, float]:
    """Coefficients (m3, m2, m1, m0) of the equal-rate cubic in alpha.

    Writing each 1 + SINR factor of rs1 = rs2 as a ratio of affine
    functions of alpha and cross-multiplying yields a cubic; the
    coefficients are assembled from those affine building blocks.
    """
    a1 = ri.b21 * g1 * rho_t + 1.0
    b1 = (1.0 - ri.b21) * g1 * rho_t
    c1 = -ri.b21 * g1 * rho_t
    d1 = g2 * rho_t + 1.0
    e1 = -g2 * rho_t
    f1 = (ri.b12 - 1.0) * g2 * rho_t
    g1r = ri.b12 * g2 * rho_t
    h1 = g1 * rho_t
    i1 = g1 * rho_t + 1.0
    m3 = b1 * e1 * g1r * i1 - f1 * h1 * c1 * d1
    m2 = (b1 * e1 * i1 + (a1 * e1 + b1 * d1) * g1r * i1
          - f1 * h1 * a1 * d1 - (d1 * h1 + f1) * c1 * d1)
    m1 = ((a1 * e1 + b1 * d1) * i1 + a1 * d1 * g1r * i1
          - (d1 * h1 + f1) * a1 * d1 - c1 * d1 * d1)
    m0 = a1 * d1 * i1 - a1 * d1 * d1
    return m3, m2, m1, m0


def _polish_newton(coeffs: np.ndarray, x, steps: int = 2):
    """A few Newton steps of the polynomial with descending `coeffs`."""
    dcoeffs = np.polyder(coeffs)
    for _ in range(steps):
        dp = np.polyval(dcoeffs, x)
        p = np.polyval(coeffs, x)
        x = np.where(dp != 0.0, x - p / np.where(dp != 0.0, dp, 1.0), x)
    return x


def _real_roots(coeffs: np.ndarray) -> list[float]:
    """Real roots of a polynomial, scaled, polished, sorted ascending."""
    if coeffs.size == 0:
        return []
    scale = np.max(np.abs(coeffs))
    if scale == 0.0:
        return []
    c = coeffs / scale
    roots = np.roots(c)
    out = []
    for r in roots:
        if abs(r.imag) < _REAL_IMAG_TOL * (1.0 + abs(r.real)):
            out.append(float(_polish_newton(c, r.real)))
    out.sort()
    return out


def case4_cubic(g1: float, g2: float, rho_t: float,
                ri: RiMatrix) -> list[KktCandidate]:
    """Equal-rate crossings rs1 = rs2 (up to 3 real roots).

    The leading coefficient vanishes when b12 and b21 are both 0 or both
    1; root extraction then degrades to the lower-degree polynomial.
    """
    coeffs = np.array(cubic_coeffs(g1, g2, rho_t, ri))
    roots = _real_roots(np.trim_zeros(coeffs, "f"))
    return [KktCandidate(r, "case4", i + 1) for i, r in enumerate(roots)]


def feasible_lower_bound(g1: float, g2: float, rho_t: float,
                         ri: RiMatrix) -> float:
    """Lower end L of the feasible interval (L, 1); inf when b12 = 1."""
    if ri.b12 >= 1.0:
        return math.inf
    return (g1 - g2) / (g1 * g2 * rho_t * (1.0 - ri.b12))


def _select(candidates, evaluate):
    """Argmax with ascending-alpha iteration; smaller alpha wins ties.

    `evaluate` maps alpha to the objective; a later candidate replaces the
    incumbent only when it improves by more than the tie tolerance.
    """
    best_alpha = math.nan
    best_value = -math.inf
    best_case = NONE_FEASIBLE
    for cand in sorted(candidates, key=lambda c: c.alpha):
        value = evaluate(cand.alpha)
        if value > best_value + _TIE_TOL:
            best_alpha, best_value, best_case = cand.alpha, value, cand.case_id
    return best_alpha, best_value, best_case


def optimize(g1: float, g2: float, rho_t: float, ri: RiMatrix) -> OptResult:
    """Globally optimal (order, alpha) for one channel realization.

    Enumerates the closed-form candidates, keeps those strictly inside
    (L, 1), and returns the argmax of min(rs1, rs2).  When the feasible
    interval is empty or no candidate lands inside it, the result is the
    defined none-feasible outcome (value 0), not an error.
    """
    if not g1 > g2 > 0:
        raise ValueError("channel gains must satisfy g1 > g2 > 0")
    order = optimal_order()
    lower = feasible_lower_bound(g1, g2, rho_t, ri)
    if lower >= 1.0:
        return OptResult(order, math.nan, 0.0, NONE_FEASIBLE)

    candidates = [
        c
        for c in (case2_roots(g1, g2, rho_t, ri)
                  + case3_roots(g1, g2, rho_t, ri)
                  + case4_cubic(g1, g2, rho_t, ri))
        if lower < c.alpha < 1.0
    ]
    alpha, value, case = _select(
        candidates,
        lambda a: float(min_secrecy_rate(order, a, g1, g2, rho_t, ri)),
    )
    if case == NONE_FEASIBLE:
        return OptResult(order, math.nan, 0.0, NONE_FEASIBLE)
    return OptResult(order, alpha, value, case)


# ---------------------------------------------------------------------------
# batched path: same candidate algebra, vectorized over realizations

_CASE_LABELS = {0: NONE_FEASIBLE, 2: "case2", 3: "case3", 4: "case4"}


@dataclass(frozen=True)
class BatchOptResult:
    """Per-realization optimization outcome over a batch of channel draws."""

    order: DecodingOrder
    alpha_hat: np.ndarray
    value: np.ndarray
    winning_case: np.ndarray


def _batch_case2(g1, g2, rho_t, b12, out_alpha):
    if not 0.0 < b12 < 1.0:
        return
    k = (1.0 - b12) * g1
    s = (1.0 - b12) * g1 * (g1 - b12 * g2) * (b12 * g2 * rho_t + 1.0)
    out_alpha[:, 0] = ((g1 - g2) + g2 * rho_t * (g1 - b12 * g2)) \
        / (g2 * rho_t * (k + np.sqrt(s)))


def _batch_case3(g1, g2, rho_t, b21, out_alpha):
    if not 0.0 < b21 < 1.0:
        return
    c = (1.0 - b21) * g2 * (b21 * g1 * rho_t + 1.0)
    s = c * (g2 - b21 * g1)
    mask = s > 0.0
    if not np.any(mask):
        return
    g1m, g2m, sm = g1[mask], g2[mask], s[mask]
    k = (b21 - 1.0) * g2m * (b21 * g1m * rho_t + 1.0)
    sq = np.sqrt(sm)
    denom = b21 * (b21 - 1.0) * g1m * g2m * rho_t
    x3 = (1.0 - b21) * g1m * g2m * rho_t + (g1m - g2m)
    out_alpha[mask, 1] = (b21 * g1m * rho_t + 1.0) * x3 \
        / ((sq - k) * g1m * rho_t)
    out_alpha[mask, 2] = (k - sq) / denom


def _batch_case4(g1, g2, rho_t, ri, out_alpha):
    a1 = ri.b21 * g1 * rho_t + 1.0
    b1 = (1.0 - ri.b21) * g1 * rho_t
    c1 = -ri.b21 * g1 * rho_t
    d1 = g2 * rho_t + 1.0
    e1 = -g2 * rho_t
    f1 = (ri.b12 - 1.0) * g2 * rho_t
    g1r = ri.b12 * g2 * rho_t
    h1 = g1 * rho_t
    i1 = g1 * rho_t + 1.0
    m = np.stack([
        b1 * e1 * g1r * i1 - f1 * h1 * c1 * d1,
        (b1 * e1 * i1 + (a1 * e1 + b1 * d1) * g1r * i1
         - f1 * h1 * a1 * d1 - (d1 * h1 + f1) * c1 * d1),
        ((a1 * e1 + b1 * d1) * i1 + a1 * d1 * g1r * i1
         - (d1 * h1 + f1) * a1 * d1 - c1 * d1 * d1),
        a1 * d1 * i1 - a1 * d1 * d1,
    ], axis=1)
    scale = np.max(np.abs(m), axis=1, keepdims=True)
    m = m / np.where(scale == 0.0, 1.0, scale)

    cubic = m[:, 0] != 0.0
    if np.any(cubic):
        mc = m[cubic] / m[cubic, :1]
        n = mc.shape[0]
        comp = np.zeros((n, 3, 3))
        comp[:, 1, 0] = 1.0
        comp[:, 2, 1] = 1.0
        comp[:, 0, 2] = -mc[:, 3]
        comp[:, 1, 2] = -mc[:, 2]
        comp[:, 2, 2] = -mc[:, 1]
        roots = np.linalg.eigvals(comp)
        real = np.abs(roots.imag) < _REAL_IMAG_TOL * (1.0 + np.abs(roots.real))
        x = roots.real
        # vectorized two-step Newton polish against the monic cubic
        for _ in range(2):
            p = ((x + mc[:, 1:2]) * x + mc[:, 2:3]) * x + mc[:, 3:4]
            dp = (3.0 * x + 2.0 * mc[:, 1:2]) * x + mc[:, 2:3]
            x = np.where(dp != 0.0, x - p / np.where(dp != 0.0, dp, 1.0), x)
        x = np.where(real, x, np.nan)
        x.sort(axis=1)  # NaNs sort last, keeping real roots ascending
        out_alpha[cubic, 3:6] = x
    degenerate = np.flatnonzero(~cubic)
    for idx in degenerate:
        roots = _real_roots(np.trim_zeros(m[idx], "f"))
        out_alpha[idx, 3:3 + min(len(roots), 3)] = roots[:3]


def _batch_objective(alpha, g1, g2, rho_t, ri):
    """min secrecy rate at each (row, candidate) entry; NaN passes through."""
    order = optimal_order()
    b12, b21 = ri.b12, ri.b21
    inv = 1.0 / rho_t
    g1c, g2c = g1[:, None], g2[:, None]
    log2 = np.log(2.0)
    r11 = np.log1p(alpha * g1c / ((1.0 - alpha) * b21 * g1c + inv)) / log2
    r12 = np.log1p(alpha * g2c / ((1.0 - alpha) * g2c + inv)) / log2
    r22 = np.log1p((1.0 - alpha) * g2c / (alpha * b12 * g2c + inv)) / log2
    r21 = np.log1p((1.0 - alpha) * g1c / (alpha * g1c + inv)) / log2
    return np.minimum(np.maximum(r11 - r12, 0.0), np.maximum(r22 - r21, 0.0))


def optimize_batch(g1, g2, rho_t: float, ri: RiMatrix) -> BatchOptResult:
    """Vectorized optimize() over arrays of realizations (shared rho, ri).

    Candidate columns hold case 2 (1 root), case 3 (2 roots), and case 4
    (3 roots); infeasible or absent candidates are NaN.  Selection scans
    candidates in ascending alpha with the same tie rule as the scalar
    path, so both paths agree realization by realization.
    """
    g1 = np.asarray(g1, dtype=float)
    g2 = np.asarray(g2, dtype=float)
    if g1.shape != g2.shape or g1.ndim != 1:
        raise ValueError("g1 and g2 must be equal-length 1-d arrays")
    if not (np.all(g2 > 0) and np.all(g1 > g2)):
        raise ValueError("channel gains must satisfy g1 > g2 > 0")
    n = g1.shape[0]
    order = optimal_order()

    cand = np.full((n, 6), np.nan)
    case_code = np.array([2, 3, 3, 4, 4, 4])
    _batch_case2(g1, g2, rho_t, ri.b12, cand)
    _batch_case3(g1, g2, rho_t, ri.b21, cand)
    _batch_case4(g1, g2, rho_t, ri, cand)

    if ri.b12 >= 1.0:
        lower = np.full(n, np.inf)
    else:
        lower = (g1 - g2) / (g1 * g2 * rho_t * (1.0 - ri.b12))
    feasible = (cand > lower[:, None]) & (cand < 1.0)
    cand = np.where(feasible, cand, np.nan)

    with np.errstate(invalid="ignore"):
        value = _batch_objective(cand, g1, g2, rho_t, ri)

    sort_key = np.where(np.isnan(cand), np.inf, cand)
    col_order = np.argsort(sort_key, axis=1)
    alpha_sorted = np.take_along_axis(cand, col_order, axis=1)
    value_sorted = np.take_along_axis(value, col_order, axis=1)
    case_sorted = case_code[col_order]

    best_alpha = np.full(n, np.nan)
    best_value = np.full(n, -np.inf)
    best_case = np.zeros(n, dtype=int)
    for j in range(6):
        v = np.where(np.isnan(value_sorted[:, j]), -np.inf, value_sorted[:, j])
        upd = v > best_value + _TIE_TOL
        best_value = np.where(upd, v, best_value)
        best_alpha = np.where(upd, alpha_sorted[:, j], best_alpha)
        best_case = np.where(upd, case_sorted[:, j], best_case)

    none = best_case == 0
    best_value = np.where(none, 0.0, best_value)
    best_alpha = np.where(none, np.nan, best_alpha)
    labels = np.array([_CASE_LABELS[c] for c in (0, 2, 3, 4)])
    label_idx = np.searchsorted((0, 2, 3, 4), best_case)
    return BatchOptResult(order, best_alpha, best_value, labels[label_idx])
