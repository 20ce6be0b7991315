"""Closed-form geometry of regular hyperbolic polygons.

Everything here derives from the Gauss-Bonnet formula: a regular n-gon with
interior angle theta has hyperbolic area a = (n - 2)*pi - n*theta.  Polygons
are parametrized by (side count, area), so the angle is always derived and
Gauss-Bonnet cannot be violated by construction.  The area-0 polygon is the
legal degenerate case with perimeter exactly 0.

All computation is 64-bit floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "ACOSH_CLAMP",
    "GenusParams",
    "RegularPolygon",
    "interior_angle",
    "mg",
    "perim_area_deriv",
    "perim_continuous",
    "perim_regular",
    "threshold_angle",
]

# acosh arguments this close below 1 are rounding artifacts of the
# degenerate (perimeter 0) limit and get clamped; anything smaller is a
# genuine domain violation.
ACOSH_CLAMP = 1e-12


def _check_sides(n: int) -> None:
    if int(n) != n or n < 3:
        raise DomainError(f"side count must be an integer >= 3, got {n!r}")


def _check_area(sides: float, area: float) -> None:
    hi = (sides - 2) * math.pi
    if not 0.0 <= area < hi:
        raise DomainError(
            f"area {area!r} outside [0, (n-2)*pi) = [0, {hi!r}) for {sides} sides"
        )


def _acosh_clamped(arg: float) -> float:
    if arg < 1.0:
        if arg < 1.0 - ACOSH_CLAMP:
            raise DomainError(f"acosh argument {arg!r} below 1")
        return 0.0
    return math.acosh(arg)


def interior_angle(n: int, area: float) -> float:
    """Interior angle ((n-2)*pi - area) / n of a regular hyperbolic n-gon."""
    _check_sides(n)
    _check_area(n, area)
    return ((n - 2) * math.pi - area) / n


def perim_continuous(sides: float, area: float) -> float:
    """Perimeter formula with a real-valued side count.

        2*sides * acosh( cos(pi/sides) / sin(((sides-2)*pi - area) / (2*sides)) )

    Used for the monotonicity-in-side-count checks, where the side count is
    treated as a continuous variable > 2.
    """
    if not sides > 2:
        raise DomainError(f"continuous side count must exceed 2, got {sides!r}")
    _check_area(sides, area)
    if area == 0.0:
        return 0.0
    half_angle = ((sides - 2) * math.pi - area) / (2 * sides)
    return 2 * sides * _acosh_clamped(math.cos(math.pi / sides) / math.sin(half_angle))


def perim_regular(n: int, area: float) -> float:
    """Perimeter of the regular hyperbolic n-gon with the given area.

    Strictly increasing in area for fixed n, strictly decreasing in n for
    fixed area > 0, and exactly 0 for the degenerate area-0 polygon.
    """
    _check_sides(n)
    return perim_continuous(n, area)


def perim_area_deriv(n: int, x: float) -> float:
    """Derivative of perim_regular(n, .) with respect to area, at area x.

        cos(pi/n) * tan((2*pi+x)/(2n)) / sqrt(cos^2(pi/n) - cos^2((2*pi+x)/(2n)))

    Positive on the whole domain 0 < x < (n-2)*pi and divergent as x -> 0+.
    """
    _check_sides(n)
    if not 0.0 < x < (n - 2) * math.pi:
        raise DomainError(f"area {x!r} outside (0, (n-2)*pi) for n={n}")
    c = math.cos(math.pi / n)
    v = (2 * math.pi + x) / (2 * n)
    return c * math.tan(v) / math.sqrt(c * c - math.cos(v) ** 2)


def mg(g: int) -> float:
    """Perimeter (8g-4) * acosh(2*cos(2*pi/(8g-4)) + 1) of the regular
    right-angled hyperbolic (8g-4)-gon of genus g."""
    if int(g) != g or g < 2:
        raise DomainError(f"genus must be an integer >= 2, got {g!r}")
    n = 8 * g - 4
    return n * math.acosh(2 * math.cos(2 * math.pi / n) + 1)


def threshold_angle(k: int) -> float:
    """Angle acos(-1 + 2*sin(pi/k)) above which splitting the area of a
    regular k-gon between two regular k-gons cannot shorten total perimeter."""
    if int(k) != k or k < 3:
        raise DomainError(f"side count must be an integer >= 3, got {k!r}")
    return math.acos(-1 + 2 * math.sin(math.pi / k))


@dataclass(frozen=True)
class RegularPolygon:
    """A regular hyperbolic polygon given by side count and area."""

    sides: int
    area: float

    def __post_init__(self):
        _check_sides(self.sides)
        _check_area(self.sides, self.area)

    @property
    def interior_angle(self) -> float:
        return interior_angle(self.sides, self.area)

    @property
    def perimeter(self) -> float:
        return perim_regular(self.sides, self.area)

    @property
    def is_degenerate(self) -> bool:
        return self.area == 0.0


@dataclass(frozen=True)
class GenusParams:
    """Genus-indexed extremal data: the right-angled (8g-4)-gon whose area
    equals the area 4*pi*(g-1) of the closed genus-g surface."""

    genus: int

    def __post_init__(self):
        if int(self.genus) != self.genus or self.genus < 2:
            raise DomainError(f"genus must be an integer >= 2, got {self.genus!r}")

    @property
    def sides(self) -> int:
        return 8 * self.genus - 4

    @property
    def area_total(self) -> float:
        return 4 * math.pi * (self.genus - 1)

    def polygon(self) -> RegularPolygon:
        return RegularPolygon(self.sides, self.area_total)
