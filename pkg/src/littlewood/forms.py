"""Core coefficient types and closed-form norms for 2x2 bilinear forms.

A form T(x, y) = a11*x1*y1 + a21*x2*y1 + a12*x1*y2 + a22*x2*y2 acts on the
two-dimensional max-norm space.  The operator norm has an exact finite
expression in the real case (two vertex candidates) and, for complex
arguments with real coefficients, one extra interior candidate obtained from
the phase-difference profile f(t).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FormCoefficients",
    "ScalarField",
    "NormBranch",
    "NormResult",
    "BoundaryProfilePoint",
    "NonFiniteInput",
    "InvalidExponent",
    "NegativeRadicand",
    "make_form",
    "evaluate_real",
    "norm_real",
    "norm_complex_real_coeffs",
    "boundary_profile",
    "coeff_lp_norm",
    "norm_real_batch",
    "norm_complex_batch",
    "lp_norm_batch",
]

# Radicands of the profile are >= (|a|-|b|)^2 analytically; anything below
# this is a genuine error, not rounding.
RADICAND_DIP_TOL = 1e-12


class NonFiniteInput(ValueError):
    """A coefficient or argument is NaN or infinite."""


class InvalidExponent(ValueError):
    """coeff_lp_norm called with p < 1."""


class NegativeRadicand(ValueError):
    """A profile radicand fell below -1e-12, beyond rounding dips."""


@dataclass(frozen=True)
class FormCoefficients:
    """The four real coefficients, fixed order (a11, a21, a12, a22)."""

    a11: float
    a21: float
    a12: float
    a22: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a11, self.a21, self.a12, self.a22)

    def scale(self, factor: float) -> "FormCoefficients":
        return FormCoefficients(
            factor * self.a11, factor * self.a21, factor * self.a12, factor * self.a22
        )

    def is_zero(self) -> bool:
        return self.a11 == 0.0 and self.a21 == 0.0 and self.a12 == 0.0 and self.a22 == 0.0


class ScalarField(enum.Enum):
    REAL = "real"
    COMPLEX_REAL_COEFFS = "complex"


class NormBranch(enum.Enum):
    VERTEX_PLUS = "vertex_plus"
    VERTEX_MINUS = "vertex_minus"
    INTERIOR_CRITICAL = "interior_critical"


@dataclass(frozen=True)
class NormResult:
    value: float
    branch: NormBranch
    critical_cos: float | None = None


@dataclass(frozen=True)
class BoundaryProfilePoint:
    t: float
    f_of_t: float


def make_form(a11: float, a21: float, a12: float, a22: float) -> FormCoefficients:
    """Build a coefficient record, rejecting NaN/Inf entries."""
    for name, v in (("a11", a11), ("a21", a21), ("a12", a12), ("a22", a22)):
        if not math.isfinite(v):
            raise NonFiniteInput(f"coefficient {name} is not finite: {v!r}")
    return FormCoefficients(float(a11), float(a21), float(a12), float(a22))


def evaluate_real(
    T: FormCoefficients, x: tuple[float, float], y: tuple[float, float]
) -> float:
    x1, x2 = x
    y1, y2 = y
    return T.a11 * x1 * y1 + T.a21 * x2 * y1 + T.a12 * x1 * y2 + T.a22 * x2 * y2


def _vertex_candidates(T: FormCoefficients) -> tuple[float, float]:
    plus = abs(T.a11 + T.a21) + abs(T.a12 + T.a22)
    minus = abs(T.a11 - T.a21) + abs(T.a12 - T.a22)
    return plus, minus


def norm_real(T: FormCoefficients) -> NormResult:
    """Operator norm over real arguments: the larger of the two vertex sums.

    Ties report the plus branch.
    """
    plus, minus = _vertex_candidates(T)
    if plus >= minus:
        return NormResult(plus, NormBranch.VERTEX_PLUS)
    return NormResult(minus, NormBranch.VERTEX_MINUS)


def _clamped_sqrt(radicand: float) -> float:
    if radicand < 0.0:
        if radicand < -RADICAND_DIP_TOL:
            raise NegativeRadicand(f"radicand {radicand} below -{RADICAND_DIP_TOL}")
        radicand = 0.0
    return math.sqrt(radicand)


def boundary_profile(T: FormCoefficients, t: float) -> BoundaryProfilePoint:
    """Profile f(t) of the complex norm in the phase difference t."""
    if not math.isfinite(t):
        raise NonFiniteInput(f"t is not finite: {t!r}")
    c = math.cos(t)
    if c == 1.0:
        # The radicals collapse to |a+b|; evaluate them that way so the
        # vertex identity holds exactly.
        return BoundaryProfilePoint(t, abs(T.a11 + T.a21) + abs(T.a12 + T.a22))
    if c == -1.0:
        return BoundaryProfilePoint(t, abs(T.a11 - T.a21) + abs(T.a12 - T.a22))
    left = _clamped_sqrt(T.a11 * T.a11 + T.a21 * T.a21 + 2.0 * T.a11 * T.a21 * c)
    right = _clamped_sqrt(T.a12 * T.a12 + T.a22 * T.a22 + 2.0 * T.a12 * T.a22 * c)
    return BoundaryProfilePoint(t, left + right)


def _interior_cos(T: FormCoefficients) -> float | None:
    """Return cos(t0) of the interior critical point if the case-A conditions
    hold, else None.

    Conditions: all four coefficients nonzero, the products a11*a21 and
    a12*a22 have opposite signs, and |N| <= |D| for the critical-cos
    numerator N and denominator D.
    """
    a, b, c, d = T.as_tuple()
    if a == 0.0 or b == 0.0 or c == 0.0 or d == 0.0:
        return None
    ab = a * b
    cd = c * d
    if not (ab * cd < 0.0):
        return None
    ratio = ab / cd
    num = (ratio * ratio) * (c * c + d * d) - (a * a + b * b)
    den = 2.0 * ab * (1.0 - ratio)
    if abs(num) > abs(den):
        return None
    return num / den


def norm_complex_real_coeffs(T: FormCoefficients) -> NormResult:
    """Operator norm over complex arguments (real coefficients).

    The two vertex candidates always compete; when the interior critical
    point exists it is the third candidate and wins only if strictly larger.
    """
    plus, minus = _vertex_candidates(T)
    cos0 = _interior_cos(T)
    if cos0 is not None:
        a, b, c, d = T.as_tuple()
        interior = _clamped_sqrt(a * a + b * b + 2.0 * a * b * cos0) + _clamped_sqrt(
            c * c + d * d + 2.0 * c * d * cos0
        )
        if interior > plus and interior > minus:
            return NormResult(interior, NormBranch.INTERIOR_CRITICAL, critical_cos=cos0)
    if plus >= minus:
        return NormResult(plus, NormBranch.VERTEX_PLUS)
    return NormResult(minus, NormBranch.VERTEX_MINUS)


def coeff_lp_norm(T: FormCoefficients, p: float) -> float:
    """The l_p norm of the coefficient vector, p >= 1."""
    if not (p >= 1.0):
        raise InvalidExponent(f"p must be >= 1, got {p}")
    return float(
        (abs(T.a11) ** p + abs(T.a21) ** p + abs(T.a12) ** p + abs(T.a22) ** p)
        ** (1.0 / p)
    )


# Vectorized counterparts used by the scans and large property suites.  Each
# takes an (n, 4) array of coefficient rows in the fixed order and mirrors the
# scalar algebra exactly.


def norm_real_batch(coeffs: np.ndarray) -> np.ndarray:
    a, b, c, d = coeffs[:, 0], coeffs[:, 1], coeffs[:, 2], coeffs[:, 3]
    plus = np.abs(a + b) + np.abs(c + d)
    minus = np.abs(a - b) + np.abs(c - d)
    return np.maximum(plus, minus)


def norm_complex_batch(coeffs: np.ndarray) -> np.ndarray:
    a, b, c, d = coeffs[:, 0], coeffs[:, 1], coeffs[:, 2], coeffs[:, 3]
    plus = np.abs(a + b) + np.abs(c + d)
    minus = np.abs(a - b) + np.abs(c - d)
    value = np.maximum(plus, minus)

    ab = a * b
    cd = c * d
    case_a = ab * cd < 0.0
    if np.any(case_a):
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(case_a, ab / np.where(case_a, cd, 1.0), 0.0)
            num = (ratio * ratio) * (c * c + d * d) - (a * a + b * b)
            den = 2.0 * ab * (1.0 - ratio)
            admissible = case_a & (np.abs(num) <= np.abs(den))
            cos0 = np.where(admissible, num / np.where(admissible, den, 1.0), 0.0)
        left = np.sqrt(np.maximum(a * a + b * b + 2.0 * ab * cos0, 0.0))
        right = np.sqrt(np.maximum(c * c + d * d + 2.0 * cd * cos0, 0.0))
        interior = left + right
        value = np.where(admissible, np.maximum(value, interior), value)
    return value


def lp_norm_batch(coeffs: np.ndarray, p: float) -> np.ndarray:
    if not (p >= 1.0):
        raise InvalidExponent(f"p must be >= 1, got {p}")
    return np.sum(np.abs(coeffs) ** p, axis=1) ** (1.0 / p)
