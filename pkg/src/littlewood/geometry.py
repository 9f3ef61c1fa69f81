"""Extreme and exposed points of the real unit ball.

The closed unit ball of these forms has exactly 16 extreme points: the eight
signed monomials and the eight half-magnitude forms whose four signs have odd
parity.  Everything else in the ball is a proper midpoint, and this module
produces the explicit split pair certifying that.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

from .forms import FormCoefficients, norm_real

__all__ = [
    "ExtremeKind",
    "ExtremePoint",
    "SplitWitness",
    "Verdict",
    "ClassificationResult",
    "DualFunctional",
    "IsExtreme",
    "OutsideBall",
    "NotExtremePoint",
    "extreme_points",
    "classify",
    "split_witness",
    "exposing_functional",
    "dual_norm",
]

NORM_SLACK = 1e-12
DEFAULT_MATCH_TOL = 1e-9


class IsExtreme(ValueError):
    """split_witness called on one of the 16 extreme points."""


class OutsideBall(ValueError):
    """split_witness called on a form of norm > 1."""


class NotExtremePoint(ValueError):
    """exposing_functional called on something not in the extreme list."""


class ExtremeKind(enum.Enum):
    MONOMIAL = "monomial"
    HALF_FORM = "half_form"


class Verdict(enum.Enum):
    EXTREME = "extreme"
    NOT_EXTREME = "not_extreme"
    OUTSIDE_BALL = "outside_ball"


@dataclass(frozen=True)
class ExtremePoint:
    coeffs: FormCoefficients
    kind: ExtremeKind
    sign_pattern: tuple[int, int, int, int]


@dataclass(frozen=True)
class SplitWitness:
    A: FormCoefficients
    B: FormCoefficients
    epsilon: float


@dataclass(frozen=True)
class ClassificationResult:
    verdict: Verdict
    matched: ExtremePoint | None = None
    witness: SplitWitness | None = None


@dataclass(frozen=True)
class DualFunctional:
    """f(T) = c11*a11 + c21*a21 + c12*a12 + c22*a22 on coefficient space."""

    c11: float
    c21: float
    c12: float
    c22: float
    dual_norm: float

    def apply(self, T: FormCoefficients) -> float:
        return (
            self.c11 * T.a11 + self.c21 * T.a21 + self.c12 * T.a12 + self.c22 * T.a22
        )


def _odd_parity_patterns() -> list[tuple[int, int, int, int]]:
    pats = [
        s for s in itertools.product((-1, 1), repeat=4) if s[0] * s[1] * s[2] * s[3] == -1
    ]
    return sorted(pats)


_HALF_PATTERNS = _odd_parity_patterns()


def extreme_points() -> list[ExtremePoint]:
    """The 16 extreme points, monomials first, then half-forms in
    lexicographic sign order."""
    points: list[ExtremePoint] = []
    for slot in range(4):
        for sign in (1, -1):
            c = [0.0, 0.0, 0.0, 0.0]
            c[slot] = float(sign)
            pattern = [1, 1, 1, 1]
            pattern[slot] = sign
            points.append(
                ExtremePoint(FormCoefficients(*c), ExtremeKind.MONOMIAL, tuple(pattern))
            )
    for s in _HALF_PATTERNS:
        coeffs = FormCoefficients(*(0.5 * si for si in s))
        points.append(ExtremePoint(coeffs, ExtremeKind.HALF_FORM, s))
    return points


_EXTREME_POINTS = extreme_points()


def _match_extreme(T: FormCoefficients, tol: float) -> ExtremePoint | None:
    t = T.as_tuple()
    for E in _EXTREME_POINTS:
        e = E.coeffs.as_tuple()
        if all(abs(ti - ei) <= tol for ti, ei in zip(t, e)):
            return E
    return None


def classify(T: FormCoefficients, tol: float = DEFAULT_MATCH_TOL) -> ClassificationResult:
    """Extreme / not-extreme / outside-ball, with a certificate either way."""
    if tol < 0.0:
        raise ValueError("tol must be >= 0")
    if norm_real(T).value > 1.0 + tol:
        return ClassificationResult(Verdict.OUTSIDE_BALL)
    matched = _match_extreme(T, tol)
    if matched is not None:
        return ClassificationResult(Verdict.EXTREME, matched=matched)
    return ClassificationResult(
        Verdict.NOT_EXTREME, witness=split_witness(T, match_tol=tol)
    )


def _pow2_floor(x: float) -> float:
    if x <= 0.0:
        return 0.0
    return 2.0 ** math.floor(math.log2(x))


def _perturbed(
    T: FormCoefficients, direction: tuple[int, int, int, int], eps: float
) -> tuple[FormCoefficients, FormCoefficients]:
    t = T.as_tuple()
    A = FormCoefficients(*(ti + eps * di for ti, di in zip(t, direction)))
    B = FormCoefficients(*(ti - eps * di for ti, di in zip(t, direction)))
    return A, B


def _witness_valid(T: FormCoefficients, A: FormCoefficients, B: FormCoefficients) -> bool:
    if A == B:
        return False
    for ai, bi, ti in zip(A.as_tuple(), B.as_tuple(), T.as_tuple()):
        if (ai + bi) / 2.0 != ti:
            return False
    return (
        norm_real(A).value <= 1.0 + NORM_SLACK and norm_real(B).value <= 1.0 + NORM_SLACK
    )


def _try_direction(
    T: FormCoefficients,
    direction: tuple[int, int, int, int],
    eps: float,
    halvings: int = 60,
) -> SplitWitness | None:
    """Shrink eps (powers of two) until the perturbed pair is a valid witness."""
    eps = _pow2_floor(eps)
    for _ in range(halvings):
        if eps == 0.0:
            return None
        A, B = _perturbed(T, direction, eps)
        if _witness_valid(T, A, B):
            return SplitWitness(A, B, eps)
        eps /= 2.0
    return None


def _primary_direction_and_eps(
    T: FormCoefficients,
) -> tuple[tuple[int, int, int, int], float] | None:
    """The proof's per-case perturbation for T's zero/sign pattern.

    Epsilon is half of the corresponding open-interval upper bound.  Returns
    None for degenerate boundary patterns, which fall through to the
    direction search.
    """
    t = T.as_tuple()
    nz = [i for i, v in enumerate(t) if v != 0.0]
    plus = abs(t[0] + t[1]) + abs(t[2] + t[3])
    minus = abs(t[0] - t[1]) + abs(t[2] - t[3])
    norm = max(plus, minus)

    if len(nz) == 0:
        return (1, 0, 0, 0), 0.5
    if len(nz) == 1:
        d = [0, 0, 0, 0]
        d[nz[0]] = 1
        return tuple(d), (1.0 - abs(t[nz[0]])) / 2.0
    if len(nz) == 2:
        i, j = nz
        d = [0, 0, 0, 0]
        d[i] = 1 if t[i] > 0 else -1
        d[j] = -1 if t[j] > 0 else 1
        return tuple(d), min(abs(t[i]), abs(t[j])) / 2.0

    # Three or four nonzero entries: perturb inside a fully nonzero pair,
    # choosing the direction that leaves the attaining vertex candidate
    # unchanged and grows only the slack one.
    pair = (0, 1) if t[0] != 0.0 and t[1] != 0.0 else (2, 3)
    if len(nz) == 4:
        p, q = t[0] * t[1], t[2] * t[3]
        if p > 0.0 and q < 0.0:
            pair = (0, 1)
        elif p < 0.0 and q > 0.0:
            pair = (2, 3)
    i, j = pair
    product = t[i] * t[j]
    if product > 0.0 and plus > minus:
        d = [0, 0, 0, 0]
        d[i], d[j] = 1, -1
        return tuple(d), (1.0 - minus) / 2.0
    if product < 0.0 and minus > plus:
        d = [0, 0, 0, 0]
        d[i], d[j] = 1, 1
        return tuple(d), (1.0 - plus) / 2.0
    if plus != minus:
        # Mixed sign layout: still safe to grow only the slack candidate.
        d = [0, 0, 0, 0]
        if plus > minus:
            d[i], d[j] = 1, -1
            return tuple(d), (1.0 - minus) / 2.0
        d[i], d[j] = 1, 1
        return tuple(d), (1.0 - plus) / 2.0

    # plus == minus == norm.
    if all(abs(v) == abs(t[0]) for v in t) and t[0] * t[1] * t[2] * t[3] < 0.0:
        # Scaled half-form direction keeps both candidates equal to 2*(m+eps).
        d = tuple(1 if v > 0 else -1 for v in t)
        return d, (0.5 - abs(t[0])) / 2.0
    if norm < 1.0:
        return (1, 0, 0, 0), (1.0 - norm) / 2.0
    return None


_FALLBACK_DIRECTIONS: list[tuple[int, int, int, int]] = (
    [s for s in itertools.product((-1, 1), repeat=4)]
    + [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, -1, 0, 0),
        (1, 1, 0, 0),
        (0, 0, 1, -1),
        (0, 0, 1, 1),
        (1, 0, -1, 0),
        (0, 1, 0, -1),
        (1, 0, 0, -1),
        (0, 1, -1, 0),
    ]
)


def split_witness(
    T: FormCoefficients, match_tol: float = DEFAULT_MATCH_TOL
) -> SplitWitness:
    """Explicit pair (A, B) in the ball with exact midpoint T and A != B.

    Follows the per-case perturbation of the non-extremality constructions;
    degenerate sign layouts fall back to a search over a fixed direction list
    with epsilon halving.  Never returns an unverified pair.
    """
    if norm_real(T).value > 1.0 + NORM_SLACK:
        raise OutsideBall(f"norm {norm_real(T).value} exceeds 1")
    if _match_extreme(T, match_tol) is not None:
        raise IsExtreme(f"{T} is an extreme point of the unit ball")

    primary = _primary_direction_and_eps(T)
    if primary is not None:
        direction, eps = primary
        found = _try_direction(T, direction, eps)
        if found is not None:
            return found
    for direction in _FALLBACK_DIRECTIONS:
        found = _try_direction(T, direction, 0.5)
        if found is not None:
            return found
    raise RuntimeError(f"no valid split witness found for {T}")


def exposing_functional(E: ExtremePoint) -> DualFunctional:
    """The norm-one functional attaining 1 exactly at E.

    For a signed monomial the functional has +-1 in that slot; for a
    half-form it carries the half-magnitude sign pattern.  In both cases the
    functional's coefficients coincide with E's.
    """
    if E not in _EXTREME_POINTS:
        raise NotExtremePoint(f"{E} is not one of the 16 extreme points")
    c = E.coeffs.as_tuple()
    return DualFunctional(c[0], c[1], c[2], c[3], dual_norm=1.0)


def dual_norm(f: DualFunctional) -> float:
    """Max of |f| over the 16 extreme points (where the ball sup is attained)."""
    return max(abs(f.apply(E.coeffs)) for E in _EXTREME_POINTS)
