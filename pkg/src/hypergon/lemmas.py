"""One verification routine per analytic inequality used by the partition
perimeter bound, each returning a reproducible VerificationReport.

Margins are oriented so positive means the claimed property holds with
slack; every check records its parameters and a witness locating the worst
margin.  Open domains are sampled after shrinking endpoints inward (see
analysis.shrink_open).
"""

from __future__ import annotations

import math
import random

from .analysis import (
    RootResult,
    certify_concave,
    certify_monotone,
    certify_sign,
    find_root,
    linspace,
    shrink_open,
    verify_chord_property,
)
from .errors import DomainError, ParameterError, SideCountError
from .geometry import (
    interior_angle,
    perim_area_deriv,
    perim_continuous,
    perim_regular,
    threshold_angle,
)
from .partitions import ANGLE_SLACK, Partition, random_partition
from .report import VerificationReport

__all__ = [
    "angle_balance",
    "check_angle_lemmas",
    "fixed_angle_min_halfsides",
    "half_perim_fixed_angle",
    "half_perim_fixed_angle_second",
    "inequality_4_2_margin",
    "octagon_perim",
    "octagon_perim_second",
    "octagon_tangent_gap",
    "octagon_tangent_root",
    "perim_area_deriv_sq",
    "perim_drop",
    "quad_split_total",
    "side_split_total",
    "verify_base_cases",
    "verify_chord_octagon",
    "verify_cor_4_4",
    "verify_f2m_min",
    "verify_lemma_4_2",
    "verify_lemma_4_3",
    "verify_lemma_5_1",
    "verify_lemma_6_3",
    "verify_lemma_7_1",
    "verify_prop_4_1",
    "verify_psi_endpoints",
    "verify_threshold_instance",
]

HALF_PI = math.pi / 2
OCTAGON_AREA_SUP = 6 * math.pi


class _Margins:
    """Collect (margin, witness, family) entries and report the worst."""

    def __init__(self):
        self.entries = []

    def add(self, margin: float, family: str, **witness: float):
        self.entries.append((margin, witness, family))

    def exact(self, ok: bool, family: str, **witness: float):
        """An all-or-nothing check folded into the margin ordering."""
        self.add(math.inf if ok else -1.0, family, **witness)

    def report(self, lemma_id: str, params: dict, witness: dict | None = None,
               notes: str = "") -> VerificationReport:
        worst, wit, family = min(self.entries, key=lambda e: e[0])
        merged = dict(witness or {})
        merged.update(wit)
        tail = f"worst margin family: {family}"
        return VerificationReport(
            lemma_id=lemma_id,
            params=params,
            passed=worst > 0,
            worst_margin=worst,
            witness=merged,
            notes=f"{notes}; {tail}" if notes else tail,
        )


# ---------------------------------------------------------------------------
# trigonometric inequality behind the derivative comparison


def inequality_4_2_margin(x: float, y: float) -> float:
    """Margin of the strict inequality

        cos^2(x)/cos^2(y) + (x tan x)/(y tan y) sin^2(y)  >  1 + sin^2(y)

    for 0 < x <= pi/4 and x < y < pi/2.  Tends to 0+ as x -> y."""
    if not 0 < x <= math.pi / 4:
        raise ParameterError(f"x={x!r} outside (0, pi/4]")
    if not x < y < HALF_PI:
        raise ParameterError(f"y={y!r} outside ({x!r}, pi/2)")
    lhs = 1 + math.sin(y) ** 2
    rhs = (math.cos(x) / math.cos(y)) ** 2 + (
        x * math.tan(x) / (y * math.tan(y))
    ) * math.sin(y) ** 2
    return rhs - lhs


def verify_lemma_4_2(grid_x: int = 64, grid_y: int = 64) -> VerificationReport:
    """Certify inequality_4_2_margin > 0 on a triangular grid of (x, y),
    plus the auxiliary bound sin(y)cos(y) <= y on the y-range.

    The margin vanishes identically on the diagonal y = x and to third
    order in x near the origin, so the grid insets here are wider than the
    generic endpoint shrink: they keep every true margin several orders of
    magnitude above double-precision noise, where strict positivity is
    actually certifiable."""
    if grid_x < 16 or grid_y < 16:
        raise ParameterError(f"grids must be >= 16, got ({grid_x}, {grid_y})")
    m = _Margins()
    for x in linspace(1e-2, math.pi / 4, grid_x):
        inset = 1e-6 * (HALF_PI - x)
        for y in linspace(x + inset, HALF_PI - inset, grid_y):
            m.add(inequality_4_2_margin(x, y), "main inequality", x=x, y=y)
    for y in linspace(1e-3, HALF_PI * (1 - 1e-6), grid_y):
        m.add(y - math.sin(y) * math.cos(y), "auxiliary sin(y)cos(y) <= y", y=y)
    return m.report(
        "L4_2",
        {"grid_x": grid_x, "grid_y": grid_y},
        notes="triangular grid on [1e-2, pi/4] x (x, pi/2) with 1e-6 relative "
        "diagonal inset",
    )


# ---------------------------------------------------------------------------
# squared perimeter-area derivative, decreasing in the side count


def perim_area_deriv_sq(sides: float, area: float) -> float:
    """Square of d(perimeter)/d(area) with a continuous side count t:

        cos^2(pi/t) tan^2((2pi+x)/(2t)) / (cos^2(pi/t) - cos^2((2pi+x)/(2t)))

    for t > 2 + area/pi and area > 0."""
    if not area > 0:
        raise DomainError(f"area must be positive, got {area!r}")
    if not sides > 2 + area / math.pi:
        raise DomainError(f"side count {sides!r} must exceed 2 + area/pi")
    c = math.cos(math.pi / sides)
    v = (2 * math.pi + area) / (2 * sides)
    return c * c * math.tan(v) ** 2 / (c * c - math.cos(v) ** 2)


def verify_lemma_4_3(x: float = 2 * math.pi, t_lo: float | None = None,
                     t_hi: float = 50.0, points: int = 512) -> VerificationReport:
    """Certify that perim_area_deriv_sq(., x) is strictly decreasing in the
    side count on [t_lo, t_hi], where t_lo must exceed 2 + x/pi."""
    if not x > 0:
        raise ParameterError(f"area must be positive, got {x!r}")
    c_x = 2 + x / math.pi
    if t_lo is None:
        t_lo = c_x + 0.5
    if not t_lo > c_x:
        raise ParameterError(f"t_lo={t_lo!r} must exceed 2 + x/pi = {c_x!r}")
    if not t_hi > t_lo:
        raise ParameterError(f"empty range [{t_lo!r}, {t_hi!r}]")
    cert = certify_monotone(lambda t: perim_area_deriv_sq(t, x), t_lo, t_hi,
                            points, "decreasing")
    m = _Margins()
    m.add(cert.worst_margin, "decreasing in side count", t=cert.witness)
    return m.report("L4_3", {"x": x, "t_lo": t_lo, "t_hi": t_hi, "points": points})


# ---------------------------------------------------------------------------
# adding one side shortens the perimeter, and the saving grows with area


def perim_drop(n: int, x: float) -> float:
    """Perimeter drop perim(n, x) - perim(n+1, x) from adding one side at
    equal area; zero at x = 0 and increasing in x."""
    return perim_regular(n, x) - perim_regular(n + 1, x)


def verify_prop_4_1(n: int = 8, points: int = 512) -> VerificationReport:
    """Certify perim_drop(n, .) strictly increasing on (0, (n-2)*pi), that
    it vanishes exactly at area 0, and the sufficient derivative comparison
    perim_area_deriv(n, x) > perim_area_deriv(n+1, x) on the same grid."""
    if n < 4:
        raise ParameterError(f"side count must be >= 4, got {n}")
    if points < 2:
        raise ParameterError(f"points must be >= 2, got {points}")
    lo, hi = shrink_open(0.0, (n - 2) * math.pi)
    cert = certify_monotone(lambda t: perim_drop(n, t), lo, hi, points, "increasing")
    m = _Margins()
    m.add(cert.worst_margin, "perimeter drop increasing", x=cert.witness)
    for t in linspace(lo, hi, points):
        m.add(perim_area_deriv(n, t) - perim_area_deriv(n + 1, t),
              "derivative decreasing in side count", x=t)
    m.exact(perim_drop(n, 0.0) == 0.0, "exact zero at area 0", x=0.0)
    return m.report("P4_1", {"n": n, "points": points})


# ---------------------------------------------------------------------------
# octagon perimeter and its through-origin tangency gap


def octagon_perim(x: float) -> float:
    """Perimeter of the regular octagon with area x, for 0 < x < 6*pi."""
    if not 0 < x < OCTAGON_AREA_SUP:
        raise DomainError(f"octagon area {x!r} outside (0, 6*pi)")
    return perim_regular(8, x)


def octagon_tangent_gap(x: float) -> float:
    """Gap x*f'(x) - f(x) for the octagon perimeter f: zero exactly where
    the tangent line at x passes through the origin."""
    if not 0 < x < OCTAGON_AREA_SUP:
        raise DomainError(f"octagon area {x!r} outside (0, 6*pi)")
    return x * perim_area_deriv(8, x) - perim_regular(8, x)


def octagon_perim_second(x: float) -> float:
    """Closed-form second derivative of the octagon perimeter in area."""
    if not 0 < x < OCTAGON_AREA_SUP:
        raise DomainError(f"octagon area {x!r} outside (0, 6*pi)")
    u = (OCTAGON_AREA_SUP - x) / 16
    c = math.cos(math.pi / 8)
    gap = c * c - math.sin(u) ** 2
    return (c / math.sin(u) ** 2 / (16 * math.sqrt(gap))
            - c * math.cos(u) ** 2 / (16 * gap ** 1.5))


def octagon_tangent_root(tol: float = 1e-10) -> RootResult:
    """Bisect the unique zero of octagon_tangent_gap inside [9, 10]."""
    return find_root(octagon_tangent_gap, 9.0, 10.0, tol)


def verify_lemma_6_3(tol: float = 1e-10, points: int = 512) -> VerificationReport:
    """Locate the tangency-gap root and certify the evidence that it is the
    only one: sign anchors at 9 and 10, the gap negative below the root and
    positive above it, the root exceeding 2*pi, the vanishing limit at 0+,
    a single sign change of the perimeter's second derivative, and the
    tangency bijection's codomain bound."""
    root = octagon_tangent_root(tol)
    x0 = root.root
    gap9 = octagon_tangent_gap(9.0)
    gap10 = octagon_tangent_gap(10.0)
    left = certify_sign(octagon_tangent_gap, *shrink_open(0.0, x0), points, "negative")
    right = certify_sign(octagon_tangent_gap, *shrink_open(x0, OCTAGON_AREA_SUP),
                         points, "positive")

    signs = [octagon_perim_second(t) > 0
             for t in linspace(*shrink_open(0.0, OCTAGON_AREA_SUP), points)]
    changes = sum(signs[i] != signs[i + 1] for i in range(len(signs) - 1))

    codomain_hi = math.sin(3 * math.pi / 8) ** 2 * (1 + math.cos(3 * math.pi / 8) ** 2)
    target = math.cos(math.pi / 8) ** 2

    m = _Margins()
    m.add(min(x0 - 9.33, 9.35 - x0), "root inside [9.33, 9.35]", root=x0)
    m.add(min(gap9 + 0.46, -0.44 - gap9), "gap(9) inside [-0.46, -0.44]", gap9=gap9)
    m.add(min(gap10 - 1.04, 1.06 - gap10), "gap(10) inside [1.04, 1.06]", gap10=gap10)
    m.add(left.worst_margin, "gap negative below root", x=left.witness)
    m.add(right.worst_margin, "gap positive above root", x=right.witness)
    m.add(x0 - 2 * math.pi, "root above 2*pi", root=x0)
    m.add(1e-2 - abs(octagon_tangent_gap(1e-6)), "vanishing limit at 0+", x=1e-6)
    m.exact(changes == 1, "single second-derivative sign change",
            sign_changes=float(changes))
    m.add(min(codomain_hi - target, target), "codomain bound", target=target)
    return m.report(
        "L6_3",
        {"tol": tol, "points": points},
        witness={"root": x0, "residual": root.residual,
                 "iterations": float(root.iterations), "gap9": gap9, "gap10": gap10},
    )


def verify_chord_octagon(a: float = 2 * math.pi, points: int = 512) -> VerificationReport:
    """Certify that the octagon perimeter graph on [0, a] lies strictly
    above its chord from the origin, including the symmetric-sum form
    f(x) + f(a-x) > f(a)."""
    if not 0 < a < OCTAGON_AREA_SUP:
        raise ParameterError(f"chord endpoint {a!r} outside (0, 6*pi)")
    cert = verify_chord_property(lambda t: perim_regular(8, t), 0.0, a, points)
    m = _Margins()
    m.add(cert.worst_margin, "graph above chord", x=cert.witness)
    return m.report("L6_2_phi", {"a": a, "points": points},
                    notes="fails by design when a exceeds the tangency root near 9.34")


# ---------------------------------------------------------------------------
# peeling a quadrilateral off never beats the single polygon


def quad_split_total(m: int, a: float, x: float) -> float:
    """Total perimeter perim(4, x) + perim(2m, a - x) after peeling area x
    into a quadrilateral."""
    return perim_regular(4, x) + perim_regular(2 * m, a - x)


def verify_f2m_min(m: int = 6, a: float = 4 * math.pi,
                   points: int = 512) -> VerificationReport:
    """Certify that quad_split_total(m, a, .) on [0, min(2*pi, a)) attains
    its minimum at 0: every positive grid sample exceeds the value at 0.

    Requires a <= (m-2)*pi, the non-acute hypothesis on the comparison
    polygon; the minimum genuinely moves off 0 beyond it.  The default is
    the genus-2 boundary instance (m=6, a=4*pi)."""
    if m < 4:
        raise ParameterError(f"half-side count must be >= 4, got {m}")
    if not 0 < a <= (m - 2) * math.pi:
        raise ParameterError(f"area {a!r} outside (0, (m-2)*pi] for m={m}")
    if points < 2:
        raise ParameterError(f"points must be >= 2, got {points}")
    b = min(2 * math.pi, a)
    base = quad_split_total(m, a, 0.0)
    lo, hi = shrink_open(0.0, b)
    mg_ = _Margins()
    for x in linspace(lo, hi, points):
        mg_.add(quad_split_total(m, a, x) - base, "minimum at 0", x=x)
    return mg_.report("P6_1", {"m": m, "a": a, "points": points},
                      witness={"value_at_0": base},
                      notes="margins sampled at x > 0 against the x = 0 value")


def verify_cor_4_4(a: float = 2 * math.pi, m_lo: int = 4, m_hi: int = 10,
                   points: int = 256) -> VerificationReport:
    """Certify the min-at-0 propagation: quad_split_total minimized at 0 for
    every m in [m_lo, m_hi], and each consecutive difference
    quad_split_total(m, a, .) - quad_split_total(m+1, a, .) maximized at 0."""
    if m_lo < 4 or m_hi < m_lo:
        raise ParameterError(f"need 4 <= m_lo <= m_hi, got ({m_lo}, {m_hi})")
    mg_ = _Margins()
    for m in range(m_lo, m_hi + 1):
        sub = verify_f2m_min(m, a, points)
        mg_.add(sub.worst_margin, "minimum at 0", m=float(m),
                x=sub.witness.get("x", 0.0))
    lo, hi = shrink_open(0.0, min(2 * math.pi, a))
    for m in range(m_lo, m_hi):
        def diff(x, m=m):
            return quad_split_total(m, a, x) - quad_split_total(m + 1, a, x)
        d0 = diff(0.0)
        for x in linspace(lo, hi, points):
            mg_.add(d0 - diff(x), "difference maximized at 0", m=float(m), x=x)
    return mg_.report("C4_4", {"a": a, "m_lo": m_lo, "m_hi": m_hi, "points": points})


# ---------------------------------------------------------------------------
# perimeter decreasing in the side count at fixed area


def verify_lemma_5_1(t: float = 4 * math.pi, x_lo: float | None = None,
                     x_hi: float = 60.0, points: int = 512,
                     n_hi: int = 40) -> VerificationReport:
    """Certify perim_continuous(., t) strictly decreasing on [x_lo, x_hi]
    and its restriction to integer side counts up to n_hi."""
    if not t > 0:
        raise ParameterError(f"area must be positive, got {t!r}")
    floor = t / math.pi + 2
    if x_lo is None:
        x_lo = floor + 0.1
    if not x_lo > floor:
        raise ParameterError(f"x_lo={x_lo!r} must exceed t/pi + 2 = {floor!r}")
    if not x_hi > x_lo:
        raise ParameterError(f"empty range [{x_lo!r}, {x_hi!r}]")
    cert = certify_monotone(lambda x: perim_continuous(x, t), x_lo, x_hi,
                            points, "decreasing")
    m = _Margins()
    m.add(cert.worst_margin, "decreasing in continuous side count", x=cert.witness)
    for n in range(math.ceil(x_lo), min(n_hi, math.floor(x_hi))):
        m.add(perim_regular(n, t) - perim_regular(n + 1, t),
              "integer restriction decreasing", x=float(n))
    return m.report(
        "L5_1",
        {"t": t, "x_lo": x_lo, "x_hi": x_hi, "points": points, "n_hi": n_hi},
    )


# ---------------------------------------------------------------------------
# fixed-interior-angle half perimeter, concave in the half-side count


def fixed_angle_min_halfsides(c: float) -> float:
    """Smallest admissible half-side count pi / (2*acos(1/c)) for the
    fixed-angle half perimeter; the polygon there is degenerate."""
    if not c > 1:
        raise DomainError(f"angle parameter must exceed 1, got {c!r}")
    return math.pi / (2 * math.acos(1 / c))


def half_perim_fixed_angle(c: float, x: float) -> float:
    """Half perimeter 2x * acosh(c * cos(pi/(2x))) of the regular 2x-gon
    whose interior angle theta satisfies c = 1/sin(theta/2), as a function
    of a continuous half-side count x >= fixed_angle_min_halfsides(c)."""
    a_c = fixed_angle_min_halfsides(c)
    # the computed domain minimum can land one ulp above the exact one
    if x < a_c - 1e-12 * max(1.0, a_c):
        raise DomainError(f"half-side count {x!r} below minimum {a_c!r}")
    arg = c * math.cos(math.pi / (2 * x))
    if arg < 1.0 - 1e-12:
        raise DomainError(f"acosh argument {arg!r} below 1")
    if abs(arg - 1.0) <= 1e-12:
        # the boundary x = a_c is not exactly representable; rounding puts
        # its acosh argument within an ulp of 1 on either side
        return 0.0
    return 2 * x * math.acosh(arg)


def half_perim_fixed_angle_second(c: float, x: float) -> float:
    """Closed-form second derivative of half_perim_fixed_angle in x;
    negative on the whole open domain."""
    a_c = fixed_angle_min_halfsides(c)
    if not x > a_c:
        raise DomainError(f"half-side count {x!r} not above minimum {a_c!r}")
    s = math.sin(math.pi / (2 * x))
    co = math.cos(math.pi / (2 * x))
    rt = math.sqrt(c * c * co * co - 1)
    q = math.pi ** 2 * c / (x ** 3)
    return (-q * c * s * s / (4 * (c * co - 1) * rt)
            - q * c * s * s / (4 * (c * co + 1) * rt)
            - q * co / (2 * rt))


def verify_lemma_7_1(c: float = math.sqrt(2), x_hi: float = 50.0,
                     points: int = 256) -> VerificationReport:
    """Certify strict concavity of half_perim_fixed_angle(c, .) twice over:
    the midpoint test on every grid cell, the closed-form second derivative
    negative at every cell midpoint, and cell-by-cell agreement of the two."""
    if not c > 1:
        raise ParameterError(f"angle parameter must exceed 1, got {c!r}")
    a_c = fixed_angle_min_halfsides(c)
    if not x_hi > a_c:
        raise ParameterError(f"x_hi={x_hi!r} must exceed the domain minimum {a_c!r}")
    lo, hi = shrink_open(a_c, x_hi, open_hi=False)
    xs = linspace(lo, hi, points)
    ys = [half_perim_fixed_angle(c, x) for x in xs]
    m = _Margins()
    disagreements = 0
    for i in range(points - 1):
        mid = 0.5 * (xs[i] + xs[i + 1])
        midpoint_margin = half_perim_fixed_angle(c, mid) - 0.5 * (ys[i] + ys[i + 1])
        second = half_perim_fixed_angle_second(c, mid)
        m.add(midpoint_margin, "midpoint concavity", x=mid)
        m.add(-second, "second derivative negative", x=mid)
        if (midpoint_margin > 0) != (second < 0):
            disagreements += 1
    m.exact(disagreements == 0, "cellwise agreement of both tests",
            disagreements=float(disagreements))
    return m.report("L7_1", {"c": c, "x_hi": x_hi, "points": points},
                    witness={"domain_min": a_c})


# ---------------------------------------------------------------------------
# splitting the side-count budget between two fixed-angle polygons


def side_split_total(n: int, theta1: float, theta2: float, x: float) -> float:
    """Total fixed-angle half perimeter when x of the half-side budget n+2
    goes to the angle-theta1 polygon and n+2-x to the angle-theta2 one."""
    c1 = 1 / math.sin(theta1 / 2)
    c2 = 1 / math.sin(theta2 / 2)
    return half_perim_fixed_angle(c1, x) + half_perim_fixed_angle(c2, n + 2 - x)


def verify_psi_endpoints(n: int = 6, theta1: float = HALF_PI,
                         theta2: float = HALF_PI,
                         points: int = 256) -> VerificationReport:
    """Certify that the side-split total is strictly concave on its domain
    [max(2, a1), min(n, n+2-a2)], hence minimized at an endpoint, and that
    no interior grid sample goes below the smaller endpoint value."""
    for theta in (theta1, theta2):
        if not 0 < theta < math.pi:
            raise ParameterError(f"interior angle {theta!r} outside (0, pi)")
    if points < 3:
        raise ParameterError(f"points must be >= 3, got {points}")
    a1 = fixed_angle_min_halfsides(1 / math.sin(theta1 / 2))
    a2 = fixed_angle_min_halfsides(1 / math.sin(theta2 / 2))
    b1 = max(2.0, a1)
    b2 = min(float(n), n + 2 - a2)
    if not b1 < b2:
        raise ParameterError(f"empty side-split domain [{b1!r}, {b2!r}]")

    def f(x):
        return side_split_total(n, theta1, theta2, x)

    cert = certify_concave(f, b1, b2, points)
    v1, v2 = f(b1), f(b2)
    endpoint_min = min(v1, v2)
    m = _Margins()
    m.add(cert.worst_margin, "concavity", x=cert.witness)
    for x in linspace(b1, b2, points)[1:-1]:
        m.add(f(x) - endpoint_min, "interior above endpoint minimum", x=x)
    return m.report(
        "PSI_ENDPOINTS",
        {"n": n, "theta1": theta1, "theta2": theta2, "points": points},
        witness={"b1": b1, "b2": b2, "value_b1": v1, "value_b2": v2},
    )


# ---------------------------------------------------------------------------
# smallest comparison polygons


def verify_threshold_instance(k: int = 6, points: int = 64) -> VerificationReport:
    """Instance check of the cited threshold-angle split bound: for a
    regular k-gon with interior angle at or above threshold_angle(k),
    splitting its area between two regular k-gons never shortens the total
    perimeter."""
    if points < 2:
        raise ParameterError(f"points must be >= 2, got {points}")
    area_max = (k - 2) * math.pi - k * threshold_angle(k)
    m = _Margins()
    # near the (0, 0) corner both split pieces degenerate and the true
    # margin drops below double resolution, so inset wider than the generic
    # endpoint shrink
    lo_t, hi_t = shrink_open(0.0, area_max, open_hi=False, eps=1e-4)
    lo_s, hi_s = shrink_open(0.0, 1.0, eps=1e-4)
    for total in linspace(lo_t, hi_t, points):
        whole = perim_regular(k, total)
        for s in linspace(lo_s, hi_s, points):
            split = perim_regular(k, s * total) + perim_regular(k, (1 - s) * total)
            m.add(split - whole, "split never shorter", total=total, s=s)
    return m.report("T5_2_instance", {"k": k, "points": points},
                    witness={"area_max": area_max},
                    notes="statement of a cited result, instance-checked only")


def verify_base_cases(points: int = 64) -> VerificationReport:
    """Certify the two smallest comparison cases.

    Quadrilateral case: a regular quadrilateral with interior angle >= pi/2
    has area <= 0, so only the degenerate polygon qualifies (checked exactly
    at pi/2 and with positive margin above it).  Hexagon case: peeling area
    a1 > 0 into a quadrilateral while a hexagon keeps a2 loses against the
    single hexagon of area a1 + a2; the hexagon's threshold angle is exactly
    pi/2, so the split bound applies on the whole non-acute range."""
    if points < 2:
        raise ParameterError(f"points must be >= 2, got {points}")
    m = _Margins()
    m.exact(2 * math.pi - 4 * HALF_PI == 0.0, "quadrilateral degenerate at pi/2",
            theta=HALF_PI)
    for theta in linspace(*shrink_open(HALF_PI, math.pi), points):
        m.add(4 * theta - 2 * math.pi, "quadrilateral area negative above pi/2",
              theta=theta)

    # sin(pi/6) rounds one ulp below 1/2, so allow rounding-scale slack
    m.add(1e-12 - abs(threshold_angle(6) - HALF_PI),
          "hexagon threshold angle is pi/2", theta=threshold_angle(6))
    # wider inset than the generic shrink keeps the corner margins, which
    # scale like sqrt(a1), well above double-precision noise
    total_lo, total_hi = shrink_open(0.0, math.pi, open_hi=False, eps=1e-6)
    frac_lo, _ = shrink_open(0.0, 1.0, open_hi=False, eps=1e-6)
    for total in linspace(total_lo, total_hi, points):
        whole = perim_regular(6, total)
        m.exact(perim_regular(4, 0.0) + whole - whole == 0.0,
                "exact equality at a1 = 0", total=total)
        for s in linspace(frac_lo, 1.0, points):
            a1 = s * total
            gain = perim_regular(4, a1) + perim_regular(6, total - a1) - whole
            m.add(gain, "quadrilateral-hexagon split margin", a1=a1, a2=total - a1)
    return m.report("L5_3", {"points": points})


# ---------------------------------------------------------------------------
# angle balance across a partition


def angle_balance(partition: Partition, n: int) -> tuple[float, float]:
    """Interior angle of the comparison 2n-gon and the residual of the
    angle-balance identity

        sum(m_i * theta_i) = n*theta + (k - 1)*pi,

    which Gauss-Bonnet forces for any partition with consistent side counts.
    Raises SideCountError when 2n != 4(1-k) + 2*sum(m_i)."""
    if n != partition.side_sum - 2 * partition.k + 2:
        raise SideCountError(
            f"half-side count {n} inconsistent with shape {partition.shape} "
            f"and k={partition.k}"
        )
    thetas = partition.piece_angles()
    theta = interior_angle(2 * n, partition.total_area)
    lhs = sum(mi * t for (mi, _), t in zip(partition.pieces, thetas))
    residual = abs(lhs - n * theta - (partition.k - 1) * math.pi)
    return theta, residual


def check_angle_lemmas(k: int = 2, draws: int = 100, seed: int = 0) -> VerificationReport:
    """Draw random valid partitions and certify the angle-balance residual
    below 1e-10, plus the angle bounds min(theta_i) <= theta and
    max(theta_i) >= pi/2 whenever the comparison angle theta is >= pi/2."""
    if draws < 1:
        raise ParameterError(f"draws must be >= 1, got {draws}")
    rng = random.Random(seed)
    m = _Margins()
    right_angle_cases = 0
    for i in range(draws):
        partition, n = random_partition(k, rng)
        theta, residual = angle_balance(partition, n)
        m.add(1e-10 - residual, "identity residual below 1e-10", draw=float(i))
        if theta >= HALF_PI - ANGLE_SLACK:
            right_angle_cases += 1
            thetas = partition.piece_angles()
            m.add(theta - min(thetas) + ANGLE_SLACK, "min piece angle <= theta",
                  draw=float(i))
            m.add(max(thetas) - HALF_PI + ANGLE_SLACK, "max piece angle >= pi/2",
                  draw=float(i))
    return m.report(
        "ANGLE_BALANCE",
        {"k": k, "draws": draws, "seed": seed},
        witness={"right_angle_cases": float(right_angle_cases)},
        notes="angle-bound margins carry a 1e-12 slack so exact equality passes",
    )
