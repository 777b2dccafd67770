"""Command-line front end.

Subcommands:

- ``analyze``  closed-form bound report, reference capacity and competing
               bounds for a matrix file (``--json`` for machine output);
- ``generate`` write a family matrix in the shared CSV format;
- ``sweep``    evaluate bound and capacity across a parameter grid, emitting
               a CSV (and optionally an SVG line chart);
- ``compare``  one CSV line naming the tightest bound for a matrix file.

Exit codes: 0 success, 2 input/validation error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .bounds import Condition, capacity_upper_bound
from .errors import (
    ConvergenceFailure,
    DmcError,
    InputError,
    InvalidRange,
    NotPositive,
    NumericError,
    SingularMatrix,
)
from .families import FamilySpec, build_family, canonical_family, parameter_domain
from .formatting import fmt
from .matrix import ChannelMatrix, dump_matrix_csv, load_matrix_csv
from .reference import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    arimoto_upper_bound,
    blahut_arimoto,
    boyd_chiang_upper_bound,
)
from .svg import render_line_chart

SWEEP_HEADER = (
    "parameter,upper_bound,ba_capacity,arimoto,"
    "boyd_chiang_col,boyd_chiang_row,prop3,cor2,feasible"
)
COMPARE_HEADER = "upper_bound,ba_capacity,arimoto,boyd_chiang_col,boyd_chiang_row,tightest"


@dataclass(frozen=True)
class SweepRecord:
    """One grid point of a parameter sweep; None marks unavailable values."""

    parameter: float
    upper_bound: float | None
    ba_capacity: float | None
    arimoto: float
    boyd_col: float
    boyd_row: float
    spectral: Condition | None
    gershgorin: Condition | None
    feasible: bool | None

    def to_csv_row(self) -> str:
        def opt(v) -> str:
            if v is None:
                return "NA"
            if isinstance(v, Condition):
                return v.value
            return fmt(v)

        return ",".join(
            [
                fmt(self.parameter),
                opt(self.upper_bound),
                opt(self.ba_capacity),
                fmt(self.arimoto),
                fmt(self.boyd_col),
                fmt(self.boyd_row),
                opt(self.spectral),
                opt(self.gershgorin),
                opt(self.feasible),
            ]
        )


def _analyze_document(matrix: ChannelMatrix, tol: float, max_iter: int) -> dict:
    report = capacity_upper_bound(matrix)
    est = blahut_arimoto(matrix, tol, max_iter)
    return {
        "n": matrix.n,
        "upper_bound": report.upper_bound,
        "feasible": report.p_star_feasible,
        "feasibility_condition": report.feasibility_condition.value,
        "spectral_condition": report.spectral_condition.value,
        "coarse_condition": report.coarse_condition.value,
        "gershgorin_condition": report.gershgorin_condition.value,
        "c_min": report.analysis.c_min,
        "sigma_min": report.analysis.sigma_min,
        "sigma_star": report.sigma_star,
        "h_max": report.analysis.h_max,
        "h_max_star": report.h_max_star,
        "root_exponent": report.root_exponent,
        "inverse_entropies": [float(x) for x in report.inverse_entropies],
        "q_star": [float(x) for x in report.q_star],
        "p_star": [float(x) for x in report.p_star],
        "ba_capacity": est.capacity,
        "ba_iterations": est.iterations,
        "ba_gap": est.gap,
        "arimoto_bound": arimoto_upper_bound(matrix),
        "boyd_chiang_col": boyd_chiang_upper_bound(matrix, "column-max"),
        "boyd_chiang_row": boyd_chiang_upper_bound(matrix, "row-max"),
    }


def _document_text(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, list):
            rendered = ",".join(fmt(v) for v in value)
        elif isinstance(value, bool):
            rendered = fmt(value)
        elif isinstance(value, float):
            rendered = fmt(value)
        else:
            rendered = str(value)
        lines.append(f"{key}: {rendered}")
    return "\n".join(lines)


def _json_safe(doc: dict) -> dict:
    def conv(v):
        if isinstance(v, float) and (math.isnan(v) or math.isinf(v)):
            return fmt(v)
        if isinstance(v, list):
            return [conv(x) for x in v]
        return v

    return {k: conv(v) for k, v in doc.items()}


def cmd_analyze(args) -> int:
    matrix = load_matrix_csv(args.matrix)
    doc = _analyze_document(matrix, args.tol, args.max_iter)
    if args.json:
        print(json.dumps(_json_safe(doc), indent=2))
    else:
        print(_document_text(doc))
    return 0


def cmd_generate(args) -> int:
    spec = FamilySpec(
        family=args.family, n=args.n, parameter=args.param, seed=args.seed
    )
    matrix = build_family(spec)
    if args.out:
        dump_matrix_csv(matrix, args.out)
    else:
        sys.stdout.write(dump_matrix_csv(matrix))
    return 0


def sweep_record(spec: FamilySpec, tol: float, max_iter: int) -> SweepRecord:
    """Evaluate one grid point; numeric failures turn into NA columns."""
    matrix = build_family(spec)
    try:
        ba = blahut_arimoto(matrix, tol, max_iter).capacity
    except NumericError:
        ba = None
    upper = feasible = None
    spectral = gershgorin = None
    try:
        report = capacity_upper_bound(matrix)
        upper = report.upper_bound
        feasible = report.p_star_feasible
        spectral = report.spectral_condition
        gershgorin = report.gershgorin_condition
    except (SingularMatrix, NotPositive):
        # dominance implies invertibility and the conditions assume a
        # positive matrix, so the hypotheses cannot hold here
        spectral = Condition.PRECONDITION_NOT_MET
        gershgorin = Condition.PRECONDITION_NOT_MET
    except ConvergenceFailure:
        pass
    return SweepRecord(
        parameter=spec.parameter,
        upper_bound=upper,
        ba_capacity=ba,
        arimoto=arimoto_upper_bound(matrix),
        boyd_col=boyd_chiang_upper_bound(matrix, "column-max"),
        boyd_row=boyd_chiang_upper_bound(matrix, "row-max"),
        spectral=spectral,
        gershgorin=gershgorin,
        feasible=feasible,
    )


def run_sweep(
    family: str,
    n: int | None,
    lo: float,
    hi: float,
    steps: int,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int | None = None,
) -> list[SweepRecord]:
    family = canonical_family(family)
    if steps < 2:
        raise InvalidRange(f"steps must be at least 2, got {steps}")
    if not lo < hi:
        raise InvalidRange(f"range must satisfy lo < hi, got {lo!r}:{hi!r}")
    dom_lo, dom_hi, closed = parameter_domain(family)
    inside = (dom_lo <= lo and hi <= dom_hi) if closed else (dom_lo < lo and hi < dom_hi)
    if not inside:
        raise InvalidRange(
            f"range [{lo}, {hi}] outside the {family} parameter domain"
        )
    records = []
    for i in range(steps):
        x = hi if i == steps - 1 else lo + i * (hi - lo) / (steps - 1)
        spec = FamilySpec(family=family, n=n, parameter=x, seed=seed)
        records.append(sweep_record(spec, tol, max_iter))
    return records


def sweep_csv(records: list[SweepRecord]) -> str:
    return "\n".join([SWEEP_HEADER] + [r.to_csv_row() for r in records]) + "\n"


def sweep_svg(records: list[SweepRecord], family: str) -> str:
    def points(getter):
        pts = []
        for r in records:
            y = getter(r)
            if y is not None and not math.isnan(y):
                pts.append((r.parameter, y))
        return pts

    series = [
        ("upper_bound", points(lambda r: r.upper_bound)),
        ("ba_capacity", points(lambda r: r.ba_capacity)),
        ("arimoto", points(lambda r: r.arimoto)),
        ("boyd_chiang_col", points(lambda r: r.boyd_col)),
        ("boyd_chiang_row", points(lambda r: r.boyd_row)),
    ]
    return render_line_chart(
        series, "parameter", "bits", f"capacity and upper bounds ({family})"
    )


def cmd_sweep(args) -> int:
    try:
        lo_s, hi_s = args.range.split(":")
        lo, hi = float(lo_s), float(hi_s)
    except ValueError:
        raise InvalidRange(f"--range must be lo:hi, got {args.range!r}") from None
    records = run_sweep(
        args.family, args.n, lo, hi, args.steps, args.tol, args.max_iter, args.seed
    )
    text = sweep_csv(records)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        with open(args.svg, "w", encoding="ascii") as fh:
            fh.write(sweep_svg(records, canonical_family(args.family)))
    return 0


def cmd_compare(args) -> int:
    matrix = load_matrix_csv(args.matrix)
    report = capacity_upper_bound(matrix)
    est = blahut_arimoto(matrix, args.tol, args.max_iter)
    bounds = [
        ("closed-form", report.upper_bound),
        ("arimoto", arimoto_upper_bound(matrix)),
        ("boyd-chiang-col", boyd_chiang_upper_bound(matrix, "column-max")),
        ("boyd-chiang-row", boyd_chiang_upper_bound(matrix, "row-max")),
    ]
    tightest = min(bounds, key=lambda kv: kv[1])[0]
    row = ",".join(
        [
            fmt(report.upper_bound),
            fmt(est.capacity),
            fmt(bounds[1][1]),
            fmt(bounds[2][1]),
            fmt(bounds[3][1]),
            tightest,
        ]
    )
    print(COMPARE_HEADER)
    print(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmcbounds",
        description="closed-form capacity bounds for discrete memoryless channels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_solver_flags(p):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)

    p_an = sub.add_parser("analyze", help="report bounds and capacity for a matrix file")
    p_an.add_argument("matrix", help="matrix CSV path")
    p_an.add_argument("--json", action="store_true")
    add_solver_flags(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_gen = sub.add_parser("generate", help="write a family matrix as CSV")
    p_gen.add_argument("--family", required=True)
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--param", type=float)
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--out")
    p_gen.set_defaults(func=cmd_generate)

    p_sw = sub.add_parser("sweep", help="sweep a family parameter, emit CSV/SVG")
    p_sw.add_argument("--family", required=True)
    p_sw.add_argument("--n", type=int)
    p_sw.add_argument("--range", required=True, help="lo:hi")
    p_sw.add_argument("--steps", type=int, required=True)
    p_sw.add_argument("--seed", type=int)
    p_sw.add_argument("--out")
    p_sw.add_argument("--svg")
    add_solver_flags(p_sw)
    p_sw.set_defaults(func=cmd_sweep)

    p_cmp = sub.add_parser("compare", help="one-line CSV of all bounds for a matrix file")
    p_cmp.add_argument("matrix", help="matrix CSV path")
    add_solver_flags(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DmcError as exc:  # any stragglers count as input problems
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
