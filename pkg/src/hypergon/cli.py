"""Command-line front end.

Subcommands: mg (bound tables), verify (single lemma checks), certify
(main-theorem sweeps with the brute-force oracle), plotdata (curve data for
external plotting), minimize (direct access to the brute-force minimizer).

Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.
Randomized sweeps use a seeded generator; --seed beats the HYPERGON_SEED
environment variable, which beats the default 0.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

import click

from .errors import (
    ConvergenceError,
    DomainError,
    HypothesisError,
    NoSignChangeError,
    ParameterError,
    SideCountError,
)
from .geometry import interior_angle, mg, perim_continuous, perim_regular
from .lemmas import (
    check_angle_lemmas,
    octagon_tangent_gap,
    perim_area_deriv_sq,
    perim_drop,
    quad_split_total,
    side_split_total,
    verify_base_cases,
    verify_chord_octagon,
    verify_cor_4_4,
    verify_f2m_min,
    verify_lemma_4_2,
    verify_lemma_4_3,
    verify_lemma_5_1,
    verify_lemma_6_3,
    verify_lemma_7_1,
    verify_prop_4_1,
    verify_psi_endpoints,
    verify_threshold_instance,
)
from .partitions import (
    PERIM_SLACK,
    Partition,
    brute_force_min,
    enumerate_partition_shapes,
    random_area_split,
    verify_main_theorem,
)
from .report import LEMMA_IDS, SCHEMA_VERSION

HALF_PI = math.pi / 2
#: slack for the grid-resolution-limited brute-force oracle margin
BF_SLACK = 1e-6

USAGE_ERRORS = (
    DomainError,
    ParameterError,
    SideCountError,
    NoSignChangeError,
    HypothesisError,
    ConvergenceError,
)


@dataclass
class RunConfig:
    """Validated common run options."""

    command: str
    genus_lo: int = 2
    genus_hi: int = 2
    k_max: int = 1
    grid: int = 512
    samples: int = 50
    seed: int = 0
    tol: float = 1e-10
    fmt: str = "json"
    out: str | None = None

    def __post_init__(self):
        if self.genus_lo < 2 or self.genus_hi < self.genus_lo:
            raise ParameterError(f"bad genus range {self.genus_lo}..{self.genus_hi}")
        if self.grid < 16:
            raise ParameterError(f"grid must be >= 16, got {self.grid}")
        if self.k_max < 1:
            raise ParameterError(f"k-max must be >= 1, got {self.k_max}")
        if self.samples < 1:
            raise ParameterError(f"samples must be >= 1, got {self.samples}")
        if not self.tol > 0:
            raise ParameterError(f"tolerance must be positive, got {self.tol}")
        if self.fmt not in ("json", "csv"):
            raise ParameterError(f"format must be json or csv, got {self.fmt!r}")


class GenusRange(click.ParamType):
    """Accepts '3' or '2..4'."""

    name = "genus-range"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        text = str(value)
        try:
            if ".." in text:
                lo, hi = text.split("..", 1)
                return int(lo), int(hi)
            g = int(text)
            return g, g
        except ValueError:
            self.fail(f"{value!r} is not a genus or genus range like 2..4", param, ctx)


class FloatRange(click.ParamType):
    """Accepts 'LO:HI'."""

    name = "lo:hi"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            lo, hi = str(value).split(":", 1)
            return float(lo), float(hi)
        except ValueError:
            self.fail(f"{value!r} is not a range like 0:18", param, ctx)


class ShapeSpec(click.ParamType):
    """Accepts comma-separated half-side counts like '3,5'."""

    name = "shape"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(p) for p in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not a shape like 2,6", param, ctx)


def _resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("HYPERGON_SEED")
    return int(env) if env else 0


def _fmt_cell(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _emit_rows(rows: list[dict], fmt: str, out: str | None, header: list[str]):
    if fmt == "json":
        _write(json.dumps(rows, indent=2) + "\n", out)
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt_cell(row[h]) for h in header])
    _write(buf.getvalue(), out)


def _emit_report(report, fmt: str, out: str | None):
    d = report.to_dict()
    if fmt == "json":
        _write(json.dumps(d, indent=2) + "\n", out)
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["schema", "lemma_id", "passed", "worst_margin", "params",
                     "witness", "notes"])
    writer.writerow([d["schema"], d["lemma_id"], _fmt_cell(d["passed"]),
                     _fmt_cell(d["worst_margin"]), json.dumps(d["params"]),
                     json.dumps(d["witness"]), d["notes"]])
    _write(buf.getvalue(), out)


def _usage_guard(fn):
    """Translate library domain/parameter errors into exit code 2."""

    def wrapped(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except USAGE_ERRORS as exc:
            raise click.UsageError(str(exc))

    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


@click.group()
@click.version_option(version="0.1.0", prog_name="hypergon")
def cli():
    """Numerical certification of hyperbolic polygon isoperimetric
    inequalities and filling-pair length bounds.

    \b
    Examples:
        hypergon mg --genus 2..6
        hypergon verify L6_3
        hypergon certify --genus 2..4 --k-max 3 --samples 50 --seed 0
        hypergon plotdata phi --range 0:18 --points 200 --chord 6
        hypergon minimize --shape 3,5 --genus 2 --grid 256
    """


@cli.command(name="mg")
@click.option("--genus", "genus", type=GenusRange(), default="2",
              help="Genus or range, e.g. 2 or 2..50.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(), default=None, help="Write to a file instead of stdout.")
@_usage_guard
def cmd_mg(genus, fmt, out):
    """Table of right-angled polygon perimeters and filling-pair bounds:
    one row (g, N=8g-4, m_g, m_g/2) per genus."""
    g_lo, g_hi = genus
    cfg = RunConfig("mg", genus_lo=g_lo, genus_hi=g_hi, fmt=fmt, out=out)
    rows = [
        {"g": g, "N": 8 * g - 4, "m_g": mg(g), "m_g_half": mg(g) / 2}
        for g in range(cfg.genus_lo, cfg.genus_hi + 1)
    ]
    _emit_rows(rows, cfg.fmt, cfg.out, ["g", "N", "m_g", "m_g_half"])


@cli.command(name="verify")
@click.argument("lemma_id", type=click.Choice(LEMMA_IDS))
@click.option("--grid", type=int, default=None, help="Grid points (default 512; 64 for L4_2).")
@click.option("--grid-x", type=int, default=None, help="L4_2 only: x-grid points.")
@click.option("--grid-y", type=int, default=None, help="L4_2 only: y-grid points.")
@click.option("--tol", type=float, default=1e-10, help="Root-finding tolerance (L6_3).")
@click.option("--n", type=int, default=None, help="Side count (P4_1) or half-side budget (PSI_ENDPOINTS).")
@click.option("--m", type=int, default=None, help="Half-side count (P6_1).")
@click.option("--m-lo", type=int, default=4, help="C4_4: first half-side count.")
@click.option("--m-hi", type=int, default=10, help="C4_4: last half-side count.")
@click.option("--a", type=float, default=None, help="Area parameter (P6_1, C4_4, L6_2_phi).")
@click.option("--x", type=float, default=None, help="Fixed area (L4_3).")
@click.option("--t", type=float, default=None, help="Fixed area (L5_1).")
@click.option("--t-lo", type=float, default=None, help="L4_3: side-count range start.")
@click.option("--t-hi", type=float, default=50.0, help="L4_3: side-count range end.")
@click.option("--x-lo", type=float, default=None, help="L5_1: side-count range start.")
@click.option("--x-hi", type=float, default=None, help="Range end (L5_1, L7_1).")
@click.option("--c", type=float, default=None, help="Angle parameter > 1 (L7_1).")
@click.option("--theta1", type=float, default=HALF_PI, help="PSI_ENDPOINTS: first interior angle.")
@click.option("--theta2", type=float, default=HALF_PI, help="PSI_ENDPOINTS: second interior angle.")
@click.option("--k", type=int, default=None, help="Side count (T5_2_instance) or piece count (ANGLE_BALANCE).")
@click.option("--draws", type=int, default=100, help="ANGLE_BALANCE: number of random partitions.")
@click.option("--seed", type=int, default=None, help="Seed (ANGLE_BALANCE); beats HYPERGON_SEED.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
@_usage_guard
def cmd_verify(ctx, lemma_id, grid, grid_x, grid_y, tol, n, m, m_lo, m_hi, a, x, t,
               t_lo, t_hi, x_lo, x_hi, c, theta1, theta2, k, draws, seed, fmt, out):
    """Run one lemma check and emit its report.  Exits 0 when the check
    passed, 1 when it failed, 2 on bad parameters."""
    points = grid if grid is not None else 512
    cfg = RunConfig("verify", grid=points, tol=tol, fmt=fmt, out=out)
    if lemma_id == "L4_2":
        gx = grid_x if grid_x is not None else (grid if grid is not None else 64)
        gy = grid_y if grid_y is not None else (grid if grid is not None else 64)
        if gx < 16 or gy < 16:
            raise ParameterError(f"grid must be >= 16, got ({gx}, {gy})")
        report = verify_lemma_4_2(gx, gy)
    elif lemma_id == "L4_3":
        report = verify_lemma_4_3(x if x is not None else 2 * math.pi, t_lo, t_hi, points)
    elif lemma_id == "P4_1":
        report = verify_prop_4_1(n if n is not None else 8, points)
    elif lemma_id == "C4_4":
        report = verify_cor_4_4(a if a is not None else 2 * math.pi, m_lo, m_hi, points)
    elif lemma_id == "L5_1":
        report = verify_lemma_5_1(t if t is not None else 4 * math.pi, x_lo,
                                  x_hi if x_hi is not None else 60.0, points)
    elif lemma_id == "T5_2_instance":
        report = verify_threshold_instance(k if k is not None else 6, min(points, 128))
    elif lemma_id == "L5_3":
        report = verify_base_cases(min(points, 128))
    elif lemma_id == "P6_1":
        report = verify_f2m_min(m if m is not None else 6,
                                a if a is not None else 4 * math.pi, points)
    elif lemma_id == "L6_2_phi":
        report = verify_chord_octagon(a if a is not None else 2 * math.pi, points)
    elif lemma_id == "L6_3":
        report = verify_lemma_6_3(cfg.tol, points)
    elif lemma_id == "L7_1":
        report = verify_lemma_7_1(c if c is not None else math.sqrt(2),
                                  x_hi if x_hi is not None else 50.0, points)
    elif lemma_id == "PSI_ENDPOINTS":
        report = verify_psi_endpoints(n if n is not None else 6, theta1, theta2, points)
    else:  # ANGLE_BALANCE
        report = check_angle_lemmas(k if k is not None else 2, draws, _resolve_seed(seed))
    _emit_report(report, cfg.fmt, cfg.out)
    ctx.exit(0 if report.passed else 1)


@cli.command(name="certify")
@click.option("--genus", "genus", type=GenusRange(), default="2",
              help="Genus or range, e.g. 2..4.")
@click.option("--k-max", type=int, default=3, help="Largest piece count to sweep.")
@click.option("--samples", type=int, default=50, help="Random area splits per shape.")
@click.option("--seed", type=int, default=None, help="Seed; beats HYPERGON_SEED.")
@click.option("--grid", type=int, default=64, help="Brute-force simplex grid per shape.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
@_usage_guard
def cmd_certify(ctx, genus, k_max, samples, seed, grid, fmt, out):
    """Sweep every partition shape up to --k-max at each genus: check the
    perimeter inequality on random area splits and against the brute-force
    minimum.  Exits 0 iff every shape passes."""
    import random as _random

    g_lo, g_hi = genus
    seed = _resolve_seed(seed)
    cfg = RunConfig("certify", genus_lo=g_lo, genus_hi=g_hi, k_max=k_max,
                    samples=samples, seed=seed, grid=grid, fmt=fmt, out=out)
    rng = _random.Random(cfg.seed)
    rows = []
    all_passed = True
    for g in range(cfg.genus_lo, cfg.genus_hi + 1):
        total = 4 * math.pi * (g - 1)
        for k in range(1, cfg.k_max + 1):
            for shape in enumerate_partition_shapes(g, k):
                worst = math.inf
                for _ in range(cfg.samples):
                    areas = random_area_split(shape, total, rng)
                    rep = verify_main_theorem(Partition(tuple(zip(shape, areas))))
                    worst = min(worst, rep.witness["margin"])
                reference = perim_regular(8 * g - 4, total)
                bf_min, _argmin = brute_force_min(shape, total, cfg.grid)
                bf_margin = bf_min - reference
                passed = worst >= -PERIM_SLACK and bf_margin >= -BF_SLACK
                all_passed = all_passed and passed
                rows.append({
                    "genus": g,
                    "k": k,
                    "shape": "-".join(map(str, shape)),
                    "worst_margin": worst,
                    "bf_min": bf_min,
                    "bf_margin": bf_margin,
                    "reference_perimeter": reference,
                    "passed": passed,
                })
    header = ["genus", "k", "shape", "worst_margin", "bf_min", "bf_margin",
              "reference_perimeter", "passed"]
    if cfg.fmt == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "command": "certify",
            "params": {"genus_lo": cfg.genus_lo, "genus_hi": cfg.genus_hi,
                       "k_max": cfg.k_max, "samples": cfg.samples,
                       "seed": cfg.seed, "grid": cfg.grid},
            "all_passed": all_passed,
            "shapes": rows,
        }
        _write(json.dumps(payload, indent=2) + "\n", cfg.out)
    else:
        _emit_rows(rows, "csv", cfg.out, header)
    ctx.exit(0 if all_passed else 1)


PLOT_FUNCTIONS = ("phi", "phi_tilde", "g_n", "p_t", "H_x", "psi", "f_2m")


@cli.command(name="plotdata")
@click.argument("function_id", type=click.Choice(PLOT_FUNCTIONS))
@click.option("--range", "xrange", type=FloatRange(), required=True,
              help="Sample range LO:HI.")
@click.option("--points", type=int, default=200, help="Number of samples.")
@click.option("--chord", type=float, default=None,
              help="phi only: also emit the chord from the origin to (a, phi(a)).")
@click.option("--n", type=int, default=6, help="g_n / psi side parameter.")
@click.option("--t", type=float, default=4 * math.pi, help="p_t: fixed area.")
@click.option("--x", type=float, default=2 * math.pi, help="H_x: fixed area.")
@click.option("--m", type=int, default=6, help="f_2m: half-side count.")
@click.option("--a", type=float, default=4 * math.pi, help="f_2m: total area.")
@click.option("--theta1", type=float, default=HALF_PI, help="psi: first angle.")
@click.option("--theta2", type=float, default=HALF_PI, help="psi: second angle.")
@click.option("--out", type=click.Path(), default=None)
@_usage_guard
def cmd_plotdata(function_id, xrange, points, chord, n, t, x, m, a, theta1, theta2, out):
    """Emit CSV rows (x, f(x)) of a named curve for external plotting."""
    if points < 2:
        raise ParameterError(f"points must be >= 2, got {points}")
    lo, hi = xrange
    if not lo < hi:
        raise ParameterError(f"empty range {lo}:{hi}")
    fns = {
        "phi": lambda s: perim_regular(8, s),
        "phi_tilde": octagon_tangent_gap,
        "g_n": lambda s: perim_drop(n, s),
        "p_t": lambda s: perim_continuous(s, t),
        "H_x": lambda s: perim_area_deriv_sq(s, x),
        "psi": lambda s: side_split_total(n, theta1, theta2, s),
        "f_2m": lambda s: quad_split_total(m, a, s),
    }
    f = fns[function_id]
    header = ["x", function_id]
    chord_slope = None
    if chord is not None:
        if function_id != "phi":
            raise ParameterError("--chord applies to phi only")
        chord_slope = perim_regular(8, chord) / chord
        header.append("chord")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    last = points - 1
    for i in range(points):
        s = lo + (hi - lo) * i / last if i < last else hi
        row = [s, f(s)]
        if chord_slope is not None:
            row.append(chord_slope * s)
        writer.writerow([_fmt_cell(v) for v in row])
    _write(buf.getvalue(), out)


@cli.command(name="minimize")
@click.option("--shape", type=ShapeSpec(), required=True,
              help="Half-side counts, e.g. 3,5.")
@click.option("--total-area", type=float, default=None,
              help="Area to split; defaults to 4*pi*(genus-1) when --genus is given.")
@click.option("--genus", type=int, default=None,
              help="Genus supplying the default total area.")
@click.option("--grid", type=int, default=64, help="Simplex grid resolution.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(), default=None)
@_usage_guard
def cmd_minimize(shape, total_area, genus, grid, fmt, out):
    """Brute-force the minimal total piece perimeter over area splits and
    compare it against the comparison regular polygon."""
    if total_area is None:
        if genus is None:
            raise ParameterError("need --total-area or --genus")
        if genus < 2:
            raise ParameterError(f"genus must be >= 2, got {genus}")
        total_area = 4 * math.pi * (genus - 1)
    cfg = RunConfig("minimize", grid=grid, fmt=fmt, out=out)
    min_value, argmin = brute_force_min(shape, total_area, cfg.grid)
    n_sides = 4 * (1 - len(shape)) + 2 * sum(shape)
    row = {
        "shape": "-".join(map(str, shape)),
        "total_area": total_area,
        "grid": cfg.grid,
        "min_value": min_value,
        "argmin": list(argmin),
        "comparison_sides": n_sides,
    }
    if n_sides >= 3 and total_area < (n_sides - 2) * math.pi:
        reference = perim_regular(n_sides, total_area)
        row["reference_perimeter"] = reference
        row["margin"] = min_value - reference
        row["not_acute"] = bool(interior_angle(n_sides, total_area) >= HALF_PI - 1e-12)
    if cfg.fmt == "json":
        _write(json.dumps(row, indent=2) + "\n", cfg.out)
    else:
        header = list(row)
        row["argmin"] = " ".join(_fmt_cell(v) for v in row["argmin"])
        _emit_rows([row], "csv", cfg.out, header)


def main():
    cli(prog_name="hypergon")


if __name__ == "__main__":
    main()
