"""Executable forms of the appendix lemmata about a, b, c > 0, d < 0.

Each biconditional lemma is exposed as a pair of predicates (inequality side,
sign-condition side) so the equivalence itself can be sampled.  The
verify_lemma_suite runner draws seeded random quadruples and reports any
mismatch outside a small boundary band where rounding can flip a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SignedQuadruple",
    "InvalidRegion",
    "HypothesisNotMet",
    "maxpos_equiv",
    "maxneg_equiv",
    "maxig_check",
    "monomax_check",
    "monomax_grid_max",
    "tec01_equiv",
    "verify_lemma_suite",
]

MONOMAX_GRID_POINTS = 10_000
MONOMAX_TOL = 1e-12
DEFAULT_BAND = 1e-9


class InvalidRegion(ValueError):
    """Inputs violate a, b, c > 0 and d < 0."""


class HypothesisNotMet(ValueError):
    """A lemma's hypothesis fails for the given quadruple."""


@dataclass(frozen=True)
class SignedQuadruple:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and self.b > 0.0 and self.c > 0.0 and self.d < 0.0):
            raise InvalidRegion(f"need a, b, c > 0 and d < 0, got {self}")


def maxpos_equiv(q: SignedQuadruple) -> tuple[bool, bool]:
    """a+b+|c+d| >= |a-b|+c-d  vs  (a,b,c >= -d) or (a,b,-d >= c)."""
    a, b, c, d = q.a, q.b, q.c, q.d
    lhs = a + b + abs(c + d) >= abs(a - b) + c - d
    rhs = (a >= -d and b >= -d and c >= -d) or (a >= c and b >= c and -d >= c)
    return lhs, rhs


def maxneg_equiv(q: SignedQuadruple) -> tuple[bool, bool]:
    """|a-b|+c-d >= a+b+|c+d|  vs  (a,c,-d >= b) or (b,c,-d >= a)."""
    a, b, c, d = q.a, q.b, q.c, q.d
    lhs = abs(a - b) + c - d >= a + b + abs(c + d)
    rhs = (a >= b and c >= b and -d >= b) or (b >= a and c >= a and -d >= a)
    return lhs, rhs


def maxig_check(q: SignedQuadruple, tol: float = 1e-9) -> bool:
    """Under |a+b|+|c+d| = |a-b|+|c-d| and a != b: conclude b = -d or a = -d."""
    a, b, c, d = q.a, q.b, q.c, q.d
    if abs((abs(a + b) + abs(c + d)) - (abs(a - b) + abs(c - d))) > 1e-12:
        raise HypothesisNotMet("the two vertex candidates differ")
    if a == b:
        raise HypothesisNotMet("requires a != b")
    return abs(b + d) <= tol or abs(a + d) <= tol


def monomax_grid_max(a: float, b: float, c: float, d: float) -> float:
    """Max of |a+bt| + |c+dt| over the 10^4-point grid on [-1, 1]."""
    t = np.linspace(-1.0, 1.0, MONOMAX_GRID_POINTS)
    return float(np.max(np.abs(a + b * t) + np.abs(c + d * t)))


def monomax_check(a: float, b: float, c: float, d: float) -> bool:
    """Grid max of |a+bt| + |c+dt| never beats the endpoints t = +-1."""
    if a == 0.0 or b == 0.0:
        raise HypothesisNotMet("requires a, b nonzero")
    endpoint = max(abs(a + b) + abs(c + d), abs(a - b) + abs(c - d))
    return monomax_grid_max(a, b, c, d) <= endpoint + MONOMAX_TOL


def tec01_equiv(q: SignedQuadruple) -> tuple[bool, bool]:
    """|(ab/cd)^2 (c^2+d^2) - (a^2+b^2)| <= 2ab(1 - ab/(cd))
    vs  |cd/(ab) (a-b)| <= c-d  and  |ab/(cd) (c+d)| <= a+b."""
    a, b, c, d = q.a, q.b, q.c, q.d
    k = (a * b) / (c * d)
    lhs = abs(k * k * (c * c + d * d) - (a * a + b * b)) <= 2.0 * a * b * (1.0 - k)
    rhs = abs((a - b) / k) <= c - d and abs(k * (c + d)) <= a + b
    return lhs, rhs


# Vectorized suite internals.  Arrays a, b, c are positive, d negative.


def _maxpos_arrays(a, b, c, d):
    lhs = a + b + np.abs(c + d) >= np.abs(a - b) + c - d
    rhs = ((a >= -d) & (b >= -d) & (c >= -d)) | ((a >= c) & (b >= c) & (-d >= c))
    scale = np.maximum.reduce([a, b, c, -d])
    margin = np.minimum.reduce(
        [
            np.abs((a + b + np.abs(c + d)) - (np.abs(a - b) + c - d)),
            np.abs(a + d),
            np.abs(b + d),
            np.abs(c + d),
            np.abs(a - c),
            np.abs(b - c),
            np.abs(-d - c),
        ]
    )
    return lhs, rhs, margin / scale


def _maxneg_arrays(a, b, c, d):
    lhs = np.abs(a - b) + c - d >= a + b + np.abs(c + d)
    rhs = ((a >= b) & (c >= b) & (-d >= b)) | ((b >= a) & (c >= a) & (-d >= a))
    scale = np.maximum.reduce([a, b, c, -d])
    margin = np.minimum.reduce(
        [
            np.abs((np.abs(a - b) + c - d) - (a + b + np.abs(c + d))),
            np.abs(a - b),
            np.abs(c - b),
            np.abs(-d - b),
            np.abs(c - a),
            np.abs(-d - a),
        ]
    )
    return lhs, rhs, margin / scale


def _tec01_arrays(a, b, c, d):
    k = (a * b) / (c * d)
    lhs_left = np.abs(k * k * (c * c + d * d) - (a * a + b * b))
    lhs_right = 2.0 * a * b * (1.0 - k)
    lhs = lhs_left <= lhs_right
    r1_left = np.abs((a - b) / k)
    r1_right = c - d
    r2_left = np.abs(k * (c + d))
    r2_right = a + b
    rhs = (r1_left <= r1_right) & (r2_left <= r2_right)
    margin = np.minimum.reduce(
        [
            np.abs(lhs_left - lhs_right) / np.maximum(lhs_left + lhs_right, 1e-300),
            np.abs(r1_left - r1_right) / np.maximum(r1_left + r1_right, 1e-300),
            np.abs(r2_left - r2_right) / np.maximum(r2_left + r2_right, 1e-300),
        ]
    )
    return lhs, rhs, margin


def _monomax_batch_ok(a, b, c, d) -> np.ndarray:
    """Vectorized grid check via the kink structure of |a+bt| + |c+dt|.

    The profile is piecewise linear with kinks at -a/b and -c/d, so its max
    over the uniform grid is attained at t = -1, t = 1, or a grid point
    adjacent to a kink.  A full-grid cross-check lives in the test suite.
    """
    h = 2.0 / (MONOMAX_GRID_POINTS - 1)
    candidates = [np.full_like(a, -1.0), np.full_like(a, 1.0)]
    for kink in (-a / b, np.where(d != 0.0, -c / np.where(d != 0.0, d, 1.0), 2.0)):
        idx = (kink + 1.0) / h
        for side in (np.floor(idx), np.ceil(idx)):
            side = np.clip(side, 0, MONOMAX_GRID_POINTS - 1)
            candidates.append(-1.0 + side * h)
    grid_max = np.maximum.reduce(
        [np.abs(a + b * t) + np.abs(c + d * t) for t in candidates]
    )
    endpoint = np.maximum(
        np.abs(a + b) + np.abs(c + d), np.abs(a - b) + np.abs(c - d)
    )
    return grid_max <= endpoint + MONOMAX_TOL


def _counterexamples(a, b, c, d, mask, limit: int = 5) -> list[list[float]]:
    idx = np.flatnonzero(mask)[:limit]
    return [[float(a[i]), float(b[i]), float(c[i]), float(d[i])] for i in idx]


def verify_lemma_suite(
    samples: int, seed: int, band: float = DEFAULT_BAND
) -> dict:
    """Sample the lemma biconditionals and coverage, return a report dict.

    Quadruples use log-uniform magnitudes in [1e-3, 1e3]; the monomax check
    uses uniform [-1, 1] inputs with nonzero a, b.
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    mags = 10.0 ** rng.uniform(-3.0, 3.0, size=(samples, 4))
    a, b, c = mags[:, 0], mags[:, 1], mags[:, 2]
    d = -mags[:, 3]

    report: dict = {"samples": samples, "seed": seed, "band": band}
    for name, fn in (
        ("maxpos", _maxpos_arrays),
        ("maxneg", _maxneg_arrays),
        ("tec01", _tec01_arrays),
    ):
        lhs, rhs, margin = fn(a, b, c, d)
        inside = margin >= band
        mismatch = (lhs != rhs) & inside
        report[name] = {
            "tested": int(np.sum(inside)),
            "excluded": int(samples - np.sum(inside)),
            "mismatches": int(np.sum(mismatch)),
            "counterexamples": _counterexamples(a, b, c, d, mismatch),
        }

    pos_lhs, _, _ = _maxpos_arrays(a, b, c, d)
    neg_lhs, _, _ = _maxneg_arrays(a, b, c, d)
    uncovered = ~(pos_lhs | neg_lhs)
    report["coverage"] = {
        "violations": int(np.sum(uncovered)),
        "counterexamples": _counterexamples(a, b, c, d, uncovered),
    }

    m = rng.uniform(-1.0, 1.0, size=(samples, 4))
    ok = (m[:, 0] != 0.0) & (m[:, 1] != 0.0)
    ma, mb, mc, md = m[ok, 0], m[ok, 1], m[ok, 2], m[ok, 3]
    failures = ~_monomax_batch_ok(ma, mb, mc, md)
    report["monomax"] = {
        "tested": int(ma.shape[0]),
        "failures": int(np.sum(failures)),
        "counterexamples": _counterexamples(ma, mb, mc, md, failures),
    }

    report["passed"] = (
        report["maxpos"]["mismatches"] == 0
        and report["maxneg"]["mismatches"] == 0
        and report["tec01"]["mismatches"] == 0
        and report["coverage"]["violations"] == 0
        and report["monomax"]["failures"] == 0
    )
    return report
