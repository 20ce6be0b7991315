"""Partitions of a regular polygon's area among smaller even-sided polygons:
filling-pair combinatorics, the step-by-step merge argument, the total
perimeter inequality against the comparison regular polygon, and a
brute-force grid-search minimizer used as an independent oracle.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError, HypothesisError, ParameterError, SideCountError, StepAngleError
from .geometry import interior_angle, mg, perim_regular
from .report import VerificationReport

__all__ = [
    "ANGLE_SLACK",
    "PERIM_SLACK",
    "FillingCombinatorics",
    "MergeStep",
    "MergeTrace",
    "Partition",
    "brute_force_min",
    "enumerate_partition_shapes",
    "merge_induction",
    "random_area_split",
    "random_genus_partition",
    "random_partition",
    "systole_lower_bound",
    "verify_main_theorem",
]

#: slack for >= comparisons between computed perimeters
PERIM_SLACK = 1e-9
#: slack for right-angle hypothesis tests on computed interior angles
ANGLE_SLACK = 1e-12
#: slack for intermediate merge-step angles
STEP_ANGLE_SLACK = 1e-9

HALF_PI = math.pi / 2


@dataclass(frozen=True)
class Partition:
    """An ordered list of pieces (m, area), each a regular hyperbolic
    2m-gon, partitioning the area of one comparison polygon."""

    pieces: tuple[tuple[int, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple((int(m), float(a)) for m, a in self.pieces))
        if not self.pieces:
            raise ParameterError("partition needs at least one piece")
        for m, a in self.pieces:
            if m < 2:
                raise ParameterError(f"piece half-side count must be >= 2, got {m}")
            if not 0.0 <= a < (2 * m - 2) * math.pi:
                raise DomainError(f"piece area {a!r} outside [0, (2m-2)*pi) for m={m}")
        if self.comparison_sides < 3:
            raise ParameterError(
                f"side counts {self.shape} leave no valid comparison polygon"
            )

    @property
    def k(self) -> int:
        return len(self.pieces)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.pieces)

    @property
    def side_sum(self) -> int:
        return sum(self.shape)

    @property
    def total_area(self) -> float:
        return sum(a for _, a in self.pieces)

    @property
    def comparison_sides(self) -> int:
        """Side count N = 4(1-k) + 2*sum(m_i) of the comparison regular polygon."""
        return 4 * (1 - self.k) + 2 * self.side_sum

    def piece_angles(self) -> tuple[float, ...]:
        return tuple(interior_angle(2 * m, a) for m, a in self.pieces)

    def piece_perimeters(self) -> tuple[float, ...]:
        return tuple(perim_regular(2 * m, a) for m, a in self.pieces)


@dataclass(frozen=True)
class FillingCombinatorics:
    """Euler-characteristic bookkeeping for a filling pair of curves on a
    closed genus-g surface whose complement has k faces."""

    genus: int
    faces: int

    def __post_init__(self):
        if self.genus < 2:
            raise ParameterError(f"genus must be >= 2, got {self.genus}")
        if self.faces < 1:
            raise ParameterError(f"face count must be >= 1, got {self.faces}")

    @property
    def vertices(self) -> int:
        """Vertex count 2g + k - 2; equals the intersection number of the pair."""
        return 2 * self.genus + self.faces - 2

    @property
    def edges(self) -> int:
        return 4 * self.genus + 2 * self.faces - 4

    @property
    def side_sum(self) -> int:
        """Required sum of half-side counts over the complementary polygons."""
        return 4 * self.genus + 2 * self.faces - 4

    @property
    def comparison_sides(self) -> int:
        return 8 * self.genus - 4


@dataclass(frozen=True)
class MergeStep:
    index: int
    half_sides: int
    area: float
    angle: float
    perimeter: float


@dataclass(frozen=True)
class MergeTrace:
    """Record of the inductive pairwise merge of a partition's pieces."""

    steps: tuple[MergeStep, ...]
    final_is_Pg: bool
    sorted_pieces: tuple[tuple[int, float], ...]
    step_margins: tuple[float, ...]

    @property
    def telescoped_margin(self) -> float:
        """Sum of the per-step perimeter slacks; equals total piece perimeter
        minus the final merged perimeter."""
        return sum(self.step_margins)


def enumerate_partition_shapes(g: int, k: int) -> list[tuple[int, ...]]:
    """All multisets (m_1 <= ... <= m_k) of integers >= 2 with
    sum(m_i) = 4g + 2k - 4."""
    if g < 2:
        raise ParameterError(f"genus must be >= 2, got {g}")
    if k < 1:
        raise ParameterError(f"face count must be >= 1, got {k}")
    target = 4 * g + 2 * k - 4

    def rec(remaining: int, parts: int, m_min: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            if remaining >= m_min:
                yield (remaining,)
            return
        for m in range(m_min, remaining // parts + 1):
            for rest in rec(remaining - m, parts - 1, m):
                yield (m, *rest)

    return list(rec(target, k, 2))


def _genus_of_sides(sides: int) -> int | None:
    g, rem = divmod(sides + 4, 8)
    return g if rem == 0 and g >= 2 else None


def _require_not_acute(sides: int, area: float) -> float:
    theta = interior_angle(sides, area)
    if theta < HALF_PI - ANGLE_SLACK:
        raise HypothesisError(
            f"comparison {sides}-gon with area {area!r} is acute "
            f"(angle {theta!r} < pi/2); inequality not claimed"
        )
    return theta


def merge_induction(partition: Partition) -> MergeTrace:
    """Merge the pieces pairwise, largest interior angle first.

    Step j replaces the running polygon (half-sides M, area A) and piece
    (m_j, a_j) by a regular polygon with half-sides M + m_j - 2 and area
    A + a_j.  Each intermediate angle must stay >= pi/2 and each step must
    satisfy Perim(merged) <= Perim(piece) + Perim(previous); a violation
    raises StepAngleError since it would contradict the certified bound.
    """
    _require_not_acute(partition.comparison_sides, partition.total_area)
    angles = partition.piece_angles()
    order = sorted(
        range(partition.k),
        key=lambda i: (-angles[i], -partition.pieces[i][0], i),
    )
    pieces = tuple(partition.pieces[i] for i in order)

    steps: list[MergeStep] = []
    margins: list[float] = []
    m_run, a_run = pieces[0]
    for j, (m, a) in enumerate(pieces, start=1):
        if j > 1:
            prev_perim = steps[-1].perimeter
            m_run += m - 2
            a_run += a
        try:
            theta = interior_angle(2 * m_run, a_run)
        except DomainError as exc:
            raise StepAngleError(f"merge step {j} left the polygon domain: {exc}") from exc
        if theta < HALF_PI - STEP_ANGLE_SLACK:
            raise StepAngleError(
                f"merge step {j} produced interior angle {theta!r} < pi/2"
            )
        perim = perim_regular(2 * m_run, a_run)
        steps.append(MergeStep(j, m_run, a_run, theta, perim))
        if j > 1:
            piece_perim = perim_regular(2 * m, a)
            margins.append(piece_perim + prev_perim - perim)

    final = steps[-1]
    g = _genus_of_sides(2 * final.half_sides)
    final_is_pg = g is not None and math.isclose(
        final.area, 4 * math.pi * (g - 1), rel_tol=0, abs_tol=PERIM_SLACK
    )
    return MergeTrace(tuple(steps), final_is_pg, pieces, tuple(margins))


def verify_main_theorem(partition: Partition) -> VerificationReport:
    """Check that the pieces' total perimeter is at least the perimeter of
    the comparison regular polygon with the same total area.

    Requires the comparison polygon to be non-acute (angle >= pi/2); acute
    input raises HypothesisError instead of producing a verdict.  The
    reported worst_margin is the raw inequality margin shifted by the
    1e-9 perimeter slack, so the exact-equality case still passes; the raw
    margin is kept in the witness.
    """
    n_sides = partition.comparison_sides
    total = partition.total_area
    theta = _require_not_acute(n_sides, total)
    piece_total = sum(partition.piece_perimeters())
    reference = perim_regular(n_sides, total)
    margin = piece_total - reference
    worst = margin + PERIM_SLACK
    return VerificationReport(
        lemma_id="T3_1",
        params={
            "shape": list(partition.shape),
            "areas": [a for _, a in partition.pieces],
        },
        passed=worst > 0,
        worst_margin=worst,
        witness={
            "margin": margin,
            "piece_total": piece_total,
            "reference_perimeter": reference,
            "reference_angle": theta,
        },
        notes="worst_margin is the raw margin plus the 1e-9 perimeter slack",
    )


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for c in range(total + 1):
        for rest in _compositions(total - c, parts - 1):
            yield (c, *rest)


def _scan_simplex(
    shape: Sequence[int],
    lo: Sequence[float],
    span: float,
    grid: int,
    caps: Sequence[float],
    best: tuple[float, tuple[float, ...]] | None,
) -> tuple[float, tuple[float, ...]] | None:
    k = len(shape)
    for comp in _compositions(grid, k):
        areas = tuple(lo[i] + span * comp[i] / grid for i in range(k))
        if any(a >= caps[i] for i, a in enumerate(areas)):
            continue
        value = sum(perim_regular(2 * shape[i], areas[i]) for i in range(k))
        if best is None or value < best[0]:
            best = (value, areas)
    return best


def brute_force_min(shape: Sequence[int], total_area: float,
                    grid: int) -> tuple[float, tuple[float, ...]]:
    """Minimize total piece perimeter over all splits of total_area.

    Scans the area simplex {a_i >= 0, sum a_i = total_area} on a uniform
    grid, then rescans once at finer resolution over the simplex patch left
    after pinning each coordinate to within one cell of the incumbent.
    Deterministic: cells are visited in a fixed order and only strict
    improvements move the incumbent.
    """
    shape = tuple(int(m) for m in shape)
    if any(m < 2 for m in shape):
        raise ParameterError(f"invalid shape {shape}: half-side counts must be >= 2")
    if grid < 2:
        raise ParameterError(f"grid must be >= 2, got {grid}")
    caps = tuple((2 * m - 2) * math.pi for m in shape)
    if not 0 < total_area < sum(caps):
        raise ParameterError(f"total area {total_area!r} not splittable among {shape}")

    k = len(shape)
    best = _scan_simplex(shape, (0.0,) * k, total_area, grid, caps, None)
    if best is None:
        raise ParameterError(f"no feasible split of {total_area!r} among {shape} at grid {grid}")

    h = total_area / grid
    lo = tuple(max(0.0, a - h) for a in best[1])
    span = total_area - sum(lo)
    if span > 0:
        best = _scan_simplex(shape, lo, span, grid, caps, best)
    return best


def systole_lower_bound(g: int) -> float:
    """Certified lower bound mg(g)/2 on the total length of any filling pair
    of simple closed geodesics on a closed genus-g hyperbolic surface."""
    return mg(g) / 2


def random_area_split(shape: Sequence[int], total_area: float,
                      rng: random.Random) -> tuple[float, ...]:
    """Sample a uniform point of the valid area simplex by normalized
    exponentials, rejecting splits where a piece reaches its area bound."""
    caps = [(2 * m - 2) * math.pi for m in shape]
    if not 0 < total_area < sum(caps):
        raise ParameterError(f"total area {total_area!r} not splittable among {tuple(shape)}")
    for _ in range(100_000):
        draws = [rng.expovariate(1.0) for _ in shape]
        s = sum(draws)
        areas = tuple(total_area * d / s for d in draws)
        if all(a < cap for a, cap in zip(areas, caps)):
            return areas
    raise RuntimeError(f"rejection sampling failed for shape {tuple(shape)}")


def random_genus_partition(g: int, k: int, rng: random.Random) -> Partition:
    """Random valid partition for genus g with k pieces: uniform shape
    choice, then a uniform area split of 4*pi*(g-1)."""
    shapes = enumerate_partition_shapes(g, k)
    shape = shapes[rng.randrange(len(shapes))]
    areas = random_area_split(shape, 4 * math.pi * (g - 1), rng)
    return Partition(tuple(zip(shape, areas)))


def random_partition(k: int, rng: random.Random, m_hi: int = 10) -> tuple[Partition, int]:
    """Random k-piece partition with its comparison polygon's half-side
    count n = sum(m_i) - 2k + 2; the total area is drawn below both the
    comparison polygon's bound and the pieces' combined bound."""
    if k < 1:
        raise ParameterError(f"face count must be >= 1, got {k}")
    shape = tuple(sorted(rng.randint(2, m_hi) for _ in range(k)))
    n = sum(shape) - 2 * k + 2
    bound = min((2 * n - 2) * math.pi, sum((2 * m - 2) * math.pi for m in shape))
    total = rng.uniform(0.05, 0.95) * bound
    areas = random_area_split(shape, total, rng)
    return Partition(tuple(zip(shape, areas))), n
