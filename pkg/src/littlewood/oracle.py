"""Brute-force reference norms.

The real oracle enumerates the 16 sign-vertex argument pairs.  The complex
oracle maximizes the phase profile f(t) on a dense grid over [0, 2pi) and
then tightens the best bracket by golden-section search.  Both exist to
cross-check the closed forms, so they never call them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .forms import FormCoefficients, boundary_profile, evaluate_real

__all__ = [
    "PhaseGridConfig",
    "oracle_norm_real",
    "oracle_norm_complex",
    "oracle_norm_real_batch",
    "oracle_norm_complex_batch",
]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

_VERTICES = [
    (x, y)
    for x in itertools.product((-1.0, 1.0), repeat=2)
    for y in itertools.product((-1.0, 1.0), repeat=2)
]

# Precomputed monomial values x_i * y_j for the 16 vertex pairs, ordered
# (x1*y1, x2*y1, x1*y2, x2*y2) to match the coefficient order.
_VERTEX_MONOMIALS = np.array(
    [[x[0] * y[0], x[1] * y[0], x[0] * y[1], x[1] * y[1]] for x, y in _VERTICES]
)


@dataclass(frozen=True)
class PhaseGridConfig:
    coarse_points: int = 4096
    refine_iters: int = 60
    tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.coarse_points < 8:
            raise ValueError("coarse_points must be >= 8")
        if self.refine_iters < 0:
            raise ValueError("refine_iters must be >= 0")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")


def oracle_norm_real(T: FormCoefficients) -> float:
    """Exact max of |T(x, y)| over the 16 vertex pairs of the two cubes."""
    return max(abs(evaluate_real(T, x, y)) for x, y in _VERTICES)


def oracle_norm_real_batch(coeffs: np.ndarray) -> np.ndarray:
    """Vertex enumeration for an (n, 4) coefficient array."""
    return np.max(np.abs(coeffs @ _VERTEX_MONOMIALS.T), axis=1)


def _golden_max(f, lo: float, hi: float, iters: int, tol: float) -> float:
    """Golden-section maximization of a unimodal-enough f on [lo, hi]."""
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if hi - lo < tol:
            break
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
    return max(fc, fd)


def oracle_norm_complex(T: FormCoefficients, cfg: PhaseGridConfig | None = None) -> float:
    """Grid + golden-section maximum of the phase profile.

    The result never exceeds the true norm and is within cfg.tol of it for
    the default config (f is Lipschitz in cos t and the coarse grid isolates
    the global basin).
    """
    if cfg is None:
        cfg = PhaseGridConfig()
    ts = np.linspace(0.0, 2.0 * math.pi, cfg.coarse_points, endpoint=False)
    a, b, c, d = T.as_tuple()
    cos = np.cos(ts)
    values = np.sqrt(np.maximum(a * a + b * b + 2.0 * a * b * cos, 0.0)) + np.sqrt(
        np.maximum(c * c + d * d + 2.0 * c * d * cos, 0.0)
    )
    best = int(np.argmax(values))
    coarse_max = float(values[best])
    spacing = 2.0 * math.pi / cfg.coarse_points
    refined = _golden_max(
        lambda t: boundary_profile(T, t).f_of_t,
        ts[best] - spacing,
        ts[best] + spacing,
        cfg.refine_iters,
        cfg.tol,
    )
    return max(coarse_max, refined)


def _profile_batch(coeffs: np.ndarray, t: np.ndarray) -> np.ndarray:
    """f(t) per row: coeffs is (n, 4), t is (n,) or broadcastable."""
    a, b, c, d = coeffs[:, 0], coeffs[:, 1], coeffs[:, 2], coeffs[:, 3]
    cos = np.cos(t)
    return np.sqrt(np.maximum(a * a + b * b + 2.0 * a * b * cos, 0.0)) + np.sqrt(
        np.maximum(c * c + d * d + 2.0 * c * d * cos, 0.0)
    )


def oracle_norm_complex_batch(
    coeffs: np.ndarray,
    cfg: PhaseGridConfig | None = None,
    chunk: int = 512,
) -> np.ndarray:
    """Phase oracle for an (n, 4) coefficient array.

    Coarse sampling is chunked to bound memory; the golden-section stage runs
    vectorized across all rows at once.
    """
    if cfg is None:
        cfg = PhaseGridConfig()
    n = coeffs.shape[0]
    ts = np.linspace(0.0, 2.0 * math.pi, cfg.coarse_points, endpoint=False)
    spacing = 2.0 * math.pi / cfg.coarse_points

    best_t = np.empty(n)
    best_val = np.empty(n)
    cos_grid = np.cos(ts)
    for start in range(0, n, chunk):
        block = coeffs[start : start + chunk]
        a, b, c, d = block[:, 0:1], block[:, 1:2], block[:, 2:3], block[:, 3:4]
        vals = np.sqrt(
            np.maximum(a * a + b * b + 2.0 * a * b * cos_grid, 0.0)
        ) + np.sqrt(np.maximum(c * c + d * d + 2.0 * c * d * cos_grid, 0.0))
        idx = np.argmax(vals, axis=1)
        rows = np.arange(block.shape[0])
        best_t[start : start + chunk] = ts[idx]
        best_val[start : start + chunk] = vals[rows, idx]

    lo = best_t - spacing
    hi = best_t + spacing
    c_pt = hi - _INV_PHI * (hi - lo)
    d_pt = lo + _INV_PHI * (hi - lo)
    fc = _profile_batch(coeffs, c_pt)
    fd = _profile_batch(coeffs, d_pt)
    for _ in range(cfg.refine_iters):
        left = fc > fd
        hi = np.where(left, d_pt, hi)
        lo = np.where(left, lo, c_pt)
        new_c = hi - _INV_PHI * (hi - lo)
        new_d = lo + _INV_PHI * (hi - lo)
        # One of the two probes is inherited; recompute both for simplicity
        # (still O(n) per iteration).
        c_pt, d_pt = new_c, new_d
        fc = _profile_batch(coeffs, c_pt)
        fd = _profile_batch(coeffs, d_pt)
        if np.max(hi - lo) < cfg.tol:
            break
    return np.maximum(best_val, np.maximum(fc, fd))
