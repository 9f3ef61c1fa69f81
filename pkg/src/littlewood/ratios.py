"""Littlewood 4/3 ratios, optimizer characterization, and grid scans.

The optimal-constant problem is handled through the scale-invariant ratio
l_{4/3}(coefficients) / norm, whose sup over nonzero forms equals the sup of
the 4/3 sum over the unit ball.  The real sup is sqrt(2), attained exactly on
the odd-parity equal-magnitude forms; the complex(real-coefficient) evidence
scan reproduces the observed bound 1.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .forms import (
    FormCoefficients,
    NormResult,
    ScalarField,
    coeff_lp_norm,
    lp_norm_batch,
    norm_complex_batch,
    norm_complex_real_coeffs,
    norm_real,
    norm_real_batch,
)

__all__ = [
    "RatioReport",
    "CaseLabel",
    "ScanConfig",
    "ScanReport",
    "ZeroForm",
    "UncoveredCase",
    "littlewood_ratio",
    "is_real_optimizer",
    "classify_complex_case",
    "grid_scan",
    "verify_case_bound",
]

LITTLEWOOD_EXPONENT = 4.0 / 3.0
ARGMAX_TOL = 1e-9


class ZeroForm(ValueError):
    """The ratio is undefined for the zero form."""


class UncoveredCase(ValueError):
    """verify_case_bound has no contract outside the five proved cases."""


@dataclass(frozen=True)
class RatioReport:
    ratio: float
    field: ScalarField
    norm_used: NormResult


class CaseLabel(enum.Enum):
    CASE1_ZERO_PRODUCT = "case1_zero_product"
    CASE2_POS_POS = "case2_pos_pos"
    CASE3_NEG_NEG = "case3_neg_neg"
    CASE4_POS_NEG_BALANCED = "case4_pos_neg_balanced"
    CASE5_NEG_POS_BALANCED = "case5_neg_pos_balanced"
    UNCOVERED = "uncovered"


@dataclass(frozen=True)
class ScanConfig:
    step: float
    box: tuple[float, float] = (-1.0, 1.0)
    field: ScalarField = ScalarField.REAL
    exclude_zero_forms: bool = True

    def __post_init__(self) -> None:
        lo, hi = self.box
        if not (self.step > 0.0 and hi > lo):
            raise ValueError("need step > 0 and box hi > lo")
        cells = (hi - lo) / self.step
        if abs(cells - round(cells)) > 1e-12:
            raise ValueError(f"step {self.step} does not divide box {self.box}")

    def axis_values(self) -> np.ndarray:
        """Grid coordinates as single-rounding multiples of step."""
        lo, hi = self.box
        n = round((hi - lo) / self.step)
        k0 = lo / self.step
        if abs(k0 - round(k0)) <= 1e-12:
            base = round(k0)
            return np.array([(base + i) * self.step for i in range(n + 1)])
        return np.array([lo + i * self.step for i in range(n + 1)])

    def to_dict(self) -> dict:
        return {
            "step": self.step,
            "box": list(self.box),
            "field": self.field.value,
            "exclude_zero_forms": self.exclude_zero_forms,
        }


@dataclass(frozen=True)
class ScanReport:
    max_ratio: float
    argmax_list: list[FormCoefficients]
    points_scanned: int
    config: ScanConfig

    def to_dict(self) -> dict:
        return {
            "max_ratio": self.max_ratio,
            "argmax": [list(c.as_tuple()) for c in self.argmax_list],
            "points_scanned": self.points_scanned,
            "config": self.config.to_dict(),
        }


def _field_norm(T: FormCoefficients, field: ScalarField) -> NormResult:
    if field is ScalarField.REAL:
        return norm_real(T)
    return norm_complex_real_coeffs(T)


def _field_norm_batch(coeffs: np.ndarray, field: ScalarField) -> np.ndarray:
    if field is ScalarField.REAL:
        return norm_real_batch(coeffs)
    return norm_complex_batch(coeffs)


def littlewood_ratio(T: FormCoefficients, field: ScalarField) -> RatioReport:
    """Scale-invariant ratio l_{4/3} / norm for a nonzero form."""
    if T.is_zero():
        raise ZeroForm("ratio undefined for the zero form")
    norm = _field_norm(T, field)
    return RatioReport(coeff_lp_norm(T, LITTLEWOOD_EXPONENT) / norm.value, field, norm)


def is_real_optimizer(T: FormCoefficients, tol: float = 1e-9) -> bool:
    """True iff T attains the sharp real constant sqrt(2).

    These are exactly the nonzero forms with four equal-magnitude
    coefficients and odd sign parity.
    """
    t = T.as_tuple()
    if any(v == 0.0 for v in t):
        return False
    m = abs(t[0])
    if any(abs(abs(v) - m) > tol for v in t):
        return False
    return t[0] * t[1] * t[2] * t[3] < 0.0


def classify_complex_case(T: FormCoefficients) -> CaseLabel:
    """Which of the five proved complex-bound cases T falls in, if any."""
    p = T.a11 * T.a21
    q = T.a12 * T.a22
    if p == 0.0 or q == 0.0:
        return CaseLabel.CASE1_ZERO_PRODUCT
    if p > 0.0 and q > 0.0:
        return CaseLabel.CASE2_POS_POS
    if p < 0.0 and q < 0.0:
        return CaseLabel.CASE3_NEG_NEG
    if p + q == 0.0:
        if p > 0.0:
            return CaseLabel.CASE4_POS_NEG_BALANCED
        return CaseLabel.CASE5_NEG_POS_BALANCED
    return CaseLabel.UNCOVERED


def _worker_count() -> int:
    env = os.environ.get("LITTLEWOOD_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def _grid_chunks(cfg: ScanConfig) -> Iterator[np.ndarray]:
    """Grid points in lexicographic order, one chunk per leading axis value."""
    vals = cfg.axis_values()
    rest = np.array(
        np.meshgrid(vals, vals, vals, indexing="ij")
    ).reshape(3, -1).T
    for v in vals:
        chunk = np.empty((rest.shape[0], 4))
        chunk[:, 0] = v
        chunk[:, 1:] = rest
        yield chunk


def _scan_chunk(
    chunk: np.ndarray, cfg: ScanConfig
) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    if cfg.exclude_zero_forms:
        nonzero = np.any(chunk != 0.0, axis=1)
        chunk = chunk[nonzero]
    norms = _field_norm_batch(chunk, cfg.field)
    # The zero form (kept only when exclude_zero_forms is off) yields 0/0;
    # its NaN ratio never wins the argmax comparison.
    with np.errstate(invalid="ignore", divide="ignore"):
        ratios = lp_norm_batch(chunk, LITTLEWOOD_EXPONENT) / norms
    return chunk, norms, ratios, chunk.shape[0]


def grid_scan(
    cfg: ScanConfig,
    on_chunk: Callable[[np.ndarray, np.ndarray, np.ndarray], None] | None = None,
) -> ScanReport:
    """Evaluate the ratio at every grid point and report the max and argmax.

    Chunks are processed by a worker pool (capped by LITTLEWOOD_THREADS) but
    merged in index order, so the report and any on_chunk(coeffs, norms,
    ratios) side channel are deterministic.
    """
    results = []
    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        for out in pool.map(lambda ch: _scan_chunk(ch, cfg), _grid_chunks(cfg)):
            results.append(out)

    max_ratio = -np.inf
    points = 0
    for chunk, norms, ratios, count in results:
        points += count
        if count and ratios.max() > max_ratio:
            max_ratio = float(ratios.max())
        if on_chunk is not None:
            on_chunk(chunk, norms, ratios)

    argmax: list[FormCoefficients] = []
    for chunk, _, ratios, count in results:
        if count:
            hits = chunk[ratios >= max_ratio - ARGMAX_TOL]
            argmax.extend(FormCoefficients(*row) for row in hits.tolist())
    argmax.sort(key=lambda c: c.as_tuple())
    return ScanReport(max_ratio, argmax, points, cfg)


def _sample_case(case: CaseLabel, samples: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    u = rng.uniform(-1.0, 1.0, size=(samples, 4))
    c = u.copy()
    if case is CaseLabel.CASE1_ZERO_PRODUCT:
        slots = rng.integers(0, 4, size=samples)
        c[np.arange(samples), slots] = 0.0
    elif case is CaseLabel.CASE2_POS_POS:
        c[:, 1] = np.abs(u[:, 1]) * np.sign(u[:, 0])
        c[:, 3] = np.abs(u[:, 3]) * np.sign(u[:, 2])
    elif case is CaseLabel.CASE3_NEG_NEG:
        c[:, 1] = -np.abs(u[:, 1]) * np.sign(u[:, 0])
        c[:, 3] = -np.abs(u[:, 3]) * np.sign(u[:, 2])
    elif case is CaseLabel.CASE4_POS_NEG_BALANCED:
        c[:, 1] = np.abs(u[:, 1]) * np.sign(u[:, 0])
        with np.errstate(divide="ignore", invalid="ignore"):
            c[:, 3] = -(c[:, 0] * c[:, 1]) / c[:, 2]
    elif case is CaseLabel.CASE5_NEG_POS_BALANCED:
        c[:, 1] = -np.abs(u[:, 1]) * np.sign(u[:, 0])
        with np.errstate(divide="ignore", invalid="ignore"):
            c[:, 3] = -(c[:, 0] * c[:, 1]) / c[:, 2]
    else:
        raise UncoveredCase("no sampling construction for the uncovered region")
    keep = np.all(np.isfinite(c), axis=1) & np.any(c != 0.0, axis=1)
    if case is not CaseLabel.CASE1_ZERO_PRODUCT:
        keep &= np.all(c != 0.0, axis=1)
    return c[keep]


def verify_case_bound(case: CaseLabel, samples: int, seed: int) -> float:
    """Worst observed complex ratio over forms sampled inside one proved case.

    The contract is result <= 1 + 1e-12.
    """
    if case is CaseLabel.UNCOVERED:
        raise UncoveredCase("the uncovered region carries no proved bound")
    if samples <= 0:
        raise ValueError("samples must be positive")
    c = _sample_case(case, samples, seed)
    ratios = lp_norm_batch(c, LITTLEWOOD_EXPONENT) / norm_complex_batch(c)
    return float(np.max(ratios))
