"""Scalar-analysis utilities: bracketed root finding, numerical derivatives,
and grid-based certification of monotonicity, sign, concavity and
chord-domination.

A grid certificate is evidence, not proof: it records that a property held
with positive margin at every sample of a fixed deterministic grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ConvergenceError, GridEvaluationError, NoSignChangeError, ParameterError

__all__ = [
    "EPS_DOM",
    "GridCertificate",
    "RootResult",
    "certify_concave",
    "certify_monotone",
    "certify_sign",
    "derivative",
    "find_root",
    "finite_difference",
    "linspace",
    "shrink_open",
    "verify_chord_property",
]

#: relative inward shrink applied to open interval endpoints before sampling
EPS_DOM = 1e-9

GRID_PROPERTIES = ("increasing", "decreasing", "concave", "positive", "negative", "above_chord")


@dataclass(frozen=True)
class RootResult:
    """A bisection result: final bracket, root estimate, residual f(root)."""

    bracket_lo: float
    bracket_hi: float
    root: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class GridCertificate:
    """Outcome of checking one property of a scalar function on a fixed grid.

    Margins are oriented so that positive means the property holds with
    slack; ``witness`` is the sample argument realizing the worst margin.
    """

    domain_lo: float
    domain_hi: float
    points: int
    property: str
    worst_margin: float
    witness: float
    passed: bool

    def __post_init__(self):
        if self.property not in GRID_PROPERTIES:
            raise ParameterError(f"unknown grid property {self.property!r}")


def linspace(lo: float, hi: float, points: int) -> list[float]:
    """Uniform grid with exact endpoints."""
    if points < 2:
        raise ParameterError(f"need at least 2 grid points, got {points}")
    if not lo < hi:
        raise ParameterError(f"empty interval [{lo!r}, {hi!r}]")
    last = points - 1
    return [lo + (hi - lo) * i / last if i < last else hi for i in range(points)]


def shrink_open(lo: float, hi: float, open_lo: bool = True, open_hi: bool = True,
                eps: float = EPS_DOM) -> tuple[float, float]:
    """Pull open endpoints inward by a relative margin so grids stay inside
    an open domain."""
    span = hi - lo
    return (lo + eps * span if open_lo else lo, hi - eps * span if open_hi else hi)


def find_root(f: Callable[[float], float], lo: float, hi: float,
              tol: float = 1e-10, max_iter: int = 200) -> RootResult:
    """Bisect a sign change of f in [lo, hi].

    Stops when |f(mid)| <= tol or the bracket width drops below tol.
    Deterministic: identical inputs give identical results.
    """
    if not tol > 0:
        raise ParameterError(f"tolerance must be positive, got {tol!r}")
    if not lo < hi:
        raise ParameterError(f"invalid bracket [{lo!r}, {hi!r}]")
    f_lo, f_hi = f(lo), f(hi)
    if f_lo * f_hi >= 0:
        raise NoSignChangeError(
            f"f({lo!r})={f_lo!r} and f({hi!r})={f_hi!r} do not bracket a root"
        )
    for i in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if abs(f_mid) <= tol or (hi - lo) <= tol:
            return RootResult(lo, hi, mid, f_mid, i)
        if f_lo * f_mid < 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    raise ConvergenceError(f"no convergence after {max_iter} bisection steps")


def finite_difference(f: Callable[[float], float], x: float, step: float) -> float:
    """Centered difference (f(x+step) - f(x-step)) / (2*step)."""
    if not step > 0:
        raise ParameterError(f"step must be positive, got {step!r}")
    return (f(x + step) - f(x - step)) / (2 * step)


def derivative(f: Callable[[float], float], x: float, step: float = 1e-6) -> float:
    """Centered difference with one Richardson extrapolation level."""
    d1 = finite_difference(f, x, step)
    d2 = finite_difference(f, x, step / 2)
    return (4 * d2 - d1) / 3


def _sample(f: Callable[[float], float], xs: Sequence[float]) -> list[float]:
    ys = []
    for x in xs:
        try:
            ys.append(f(x))
        except Exception as exc:
            raise GridEvaluationError(x, exc) from exc
    return ys


def _worst(margins: Sequence[float], witnesses: Sequence[float]) -> tuple[float, float]:
    worst = min(range(len(margins)), key=margins.__getitem__)
    return margins[worst], witnesses[worst]


def certify_monotone(f: Callable[[float], float], lo: float, hi: float,
                     points: int, direction: str = "increasing") -> GridCertificate:
    """Check strict monotonicity on a uniform grid.

    The margin of a grid cell is the oriented consecutive difference; the
    witness is the left endpoint of the worst cell.
    """
    if direction not in ("increasing", "decreasing"):
        raise ParameterError(f"direction must be increasing or decreasing, got {direction!r}")
    xs = linspace(lo, hi, points)
    ys = _sample(f, xs)
    sign = 1.0 if direction == "increasing" else -1.0
    margins = [sign * (ys[i + 1] - ys[i]) for i in range(points - 1)]
    worst, witness = _worst(margins, xs[:-1])
    return GridCertificate(lo, hi, points, direction, worst, witness, worst > 0)


def certify_sign(f: Callable[[float], float], lo: float, hi: float,
                 points: int, sign: str = "positive") -> GridCertificate:
    """Check a strict sign condition at every grid point."""
    if sign not in ("positive", "negative"):
        raise ParameterError(f"sign must be positive or negative, got {sign!r}")
    xs = linspace(lo, hi, points)
    ys = _sample(f, xs)
    orient = 1.0 if sign == "positive" else -1.0
    margins = [orient * y for y in ys]
    worst, witness = _worst(margins, xs)
    return GridCertificate(lo, hi, points, sign, worst, witness, worst > 0)


def certify_concave(f: Callable[[float], float], lo: float, hi: float,
                    points: int) -> GridCertificate:
    """Check strict midpoint concavity f(mid) > (f(a)+f(b))/2 on every grid cell."""
    xs = linspace(lo, hi, points)
    ys = _sample(f, xs)
    mids = [0.5 * (xs[i] + xs[i + 1]) for i in range(points - 1)]
    fmids = _sample(f, mids)
    margins = [fmids[i] - 0.5 * (ys[i] + ys[i + 1]) for i in range(points - 1)]
    worst, witness = _worst(margins, mids)
    return GridCertificate(lo, hi, points, "concave", worst, witness, worst > 0)


def verify_chord_property(f: Callable[[float], float], a: float, b: float,
                          points: int) -> GridCertificate:
    """Check that the graph of f lies strictly above the chord joining
    (a, f(a)) and (b, f(b)) at every interior grid point.

    Two margin families enter the certificate: the pointwise chord gap
    f(x) - chord(x), and the symmetric-sum gap f(a+x) + f(b-x) - f(a) - f(b)
    at mirrored grid points.  The latter is implied by the former (each
    symmetric-sum margin is the sum of two chord margins), so the verdict is
    equivalent to strict chord domination.
    """
    if points < 3:
        raise ParameterError(f"need at least 3 grid points, got {points}")
    xs = linspace(a, b, points)
    ys = _sample(f, xs)
    fa, fb = ys[0], ys[-1]
    last = points - 1
    margins, witnesses = [], []
    for i in range(1, last):
        chord = fa + (fb - fa) * i / last
        margins.append(ys[i] - chord)
        witnesses.append(xs[i])
    for i in range(1, (last + 1) // 2):
        margins.append(ys[i] + ys[last - i] - (fa + fb))
        witnesses.append(xs[i])
    worst, witness = _worst(margins, witnesses)
    return GridCertificate(a, b, points, "above_chord", worst, witness, worst > 0)
