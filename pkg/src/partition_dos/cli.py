"""Command-line front end.

Subcommands: exact (count tables), asym (smooth formulas), saddle (numeric
stationary-point densities), compare (exact vs smooth), fluct (residual and
amplitude-ratio report), audit (exact identity suite), figure (the six
standard comparison datasets).  Output is CSV (with one #-prefixed metadata
line) or JSON matching docs/output_schema.json.  Exit codes: 0 success,
1 identity failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__, asymptotic, counting, fluctuation, saddle, series
from .errors import (
    DegreeMismatchError,
    DomainError,
    EnumerationOverflowError,
    PrecisionLossError,
    ResourceLimitError,
    SpecMismatchError,
)

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


# ---------------------------------------------------------------------------
# output


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_cell(value):
    if value is None or isinstance(value, (float, str)):
        return value
    return str(value)  # exact integers as decimal strings, no precision loss


def write_dataset(meta: dict, columns: list[str], rows: list[tuple], args) -> None:
    text_rows = None
    if args.format == "csv":
        lines = ["# " + " ".join(f"{k}={v}" for k, v in meta.items())]
        lines.append(",".join(columns))
        lines.extend(",".join(_csv_cell(v) for v in row) for row in rows)
        text_rows = "\n".join(lines) + "\n"
    else:
        payload = {
            "meta": {k: str(v) for k, v in meta.items()},
            "columns": columns,
            "rows": [[_json_cell(v) for v in row] for row in rows],
        }
        text_rows = json.dumps(payload) + "\n"
    if args.output == "-":
        sys.stdout.write(text_rows)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text_rows)


def _meta(command: str, **fields) -> dict:
    meta = {"command": command}
    meta.update({k: v for k, v in fields.items() if v is not None})
    meta["version"] = __version__
    return meta


# ---------------------------------------------------------------------------
# grids


def _energy_grid(args) -> list[float]:
    if getattr(args, "energies", None):
        try:
            return [float(tok) for tok in args.energies.split(",") if tok.strip()]
        except ValueError as exc:
            raise DomainError(f"bad --energies list: {exc}") from exc
    if args.max is None:
        raise DomainError("either --energies or --max is required")
    if args.max < args.min:
        raise DomainError("--max must be at least --min")
    if args.step <= 0:
        raise DomainError("--step must be positive")
    n_steps = int(math.floor((args.max - args.min) / args.step + 1e-9))
    return [args.min + k * args.step for k in range(n_steps + 1)]


def _validity_grid(n_parts: int) -> range:
    lo, hi = asymptotic.validity_region(n_parts)
    return range(int(math.floor(lo)) + 1, int(math.ceil(hi)))


# ---------------------------------------------------------------------------
# commands


def cmd_exact(args) -> int:
    spec = counting.SpectrumSpec(args.s, args.distinct, args.parts)
    if args.min < 0 or args.min > args.max:
        raise DomainError("need 0 <= --min <= --max")
    table = counting.build_table(spec, args.max)
    rows = [(n, table.counts[n]) for n in range(args.min, args.max + 1)]
    meta = _meta(
        "exact",
        s=args.s,
        distinct=args.distinct,
        parts=args.parts if args.parts is not None else "unbounded",
        min=args.min,
        max=args.max,
    )
    write_dataset(meta, ["n", "count"], rows, args)
    return EXIT_OK


def cmd_asym(args) -> int:
    stats = args.statistics
    grid = _energy_grid(args)
    if args.parts is not None:
        if args.s != 1:
            raise DomainError("restricted formulas are available only for s=1")
        if stats == asymptotic.BOSE:
            rows = []
            for e in grid:
                r = asymptotic.rho_restricted_bose(
                    e, args.parts, keep_half_term=not args.drop_half_term
                )
                rows.append((e, r.value, int(r.in_validity_region)))
            columns = ["E", "density", "in_validity"]
        else:
            rows = [
                (e, asymptotic.rho_restricted_fermi(
                    e, args.parts, keep_half_term=not args.drop_half_term
                ))
                for e in grid
            ]
            columns = ["E", "density"]
    else:
        model = asymptotic.make_model(args.s, stats, args.shift)
        rows = [(e, asymptotic.rho_unrestricted(model, e)) for e in grid]
        columns = ["E", "density"]
    meta = _meta(
        "asym",
        s=args.s,
        statistics=stats,
        shift=args.shift,
        parts=args.parts,
        drop_half_term=args.drop_half_term if args.parts is not None else None,
    )
    write_dataset(meta, columns, rows, args)
    return EXIT_OK


def cmd_saddle(args) -> int:
    spec = saddle.ThermoSpec(args.s, args.statistics, args.parts)
    rows = []
    for e in _energy_grid(args):
        r = saddle.find_saddle(spec, e)
        rows.append((e, r.beta0, r.entropy, r.curvature, r.density, r.residual))
    meta = _meta("saddle", s=args.s, statistics=args.statistics, parts=args.parts)
    write_dataset(
        meta, ["E", "beta0", "entropy", "curvature", "density", "residual"], rows, args
    )
    return EXIT_OK


def cmd_compare(args) -> int:
    spec = counting.SpectrumSpec(args.s, args.distinct)
    stats = asymptotic.FERMI if args.distinct else asymptotic.BOSE
    model = asymptotic.make_model(args.s, stats, args.shift)
    if args.min < 1 or args.min > args.max:
        raise DomainError("need 1 <= --min <= --max")
    table = counting.build_table(spec, args.max)
    rows = []
    for n in range(args.min, args.max + 1):
        exact = table.counts[n]
        smooth = asymptotic.rho_unrestricted(model, float(n))
        try:
            rel = (smooth - exact) / exact
        except OverflowError as exc:
            raise DomainError(
                f"count at n={n} is too large for a float comparison"
            ) from exc
        rows.append((n, exact, smooth, rel))
    meta = _meta("compare", s=args.s, distinct=args.distinct, shift=args.shift,
                 min=args.min, max=args.max)
    write_dataset(meta, ["n", "exact", "asymptote", "rel_err"], rows, args)
    return EXIT_OK


def cmd_fluct(args) -> int:
    spec = counting.SpectrumSpec(args.s, args.distinct)
    stats = asymptotic.FERMI if args.distinct else asymptotic.BOSE
    model = asymptotic.make_model(args.s, stats)
    table = counting.build_table(spec, args.max)
    report = fluctuation.analyze(
        table, model, window=args.window, n_min=args.min, spectrum=args.spectrum
    )
    offset = args.window // 2
    rows = []
    for idx, n in enumerate(report.n_grid):
        j = idx - offset
        ratio = report.ratio[j] if 0 <= j < len(report.ratio) else None
        rows.append((int(n), float(report.residual[idx]), ratio))
    meta = _meta(
        "fluct",
        s=args.s,
        distinct=args.distinct,
        window=args.window,
        min=args.min,
        max=args.max,
        first_ratio=repr(report.summary["first_ratio"]),
        last_ratio=repr(report.summary["last_ratio"]),
        decreasing=report.summary["decreasing"],
    )
    if args.spectrum:
        for rank, (freq, power) in enumerate(report.summary.get("peaks", []), start=1):
            meta[f"peak{rank}"] = f"{freq!r}:{power!r}"
    write_dataset(meta, ["n", "residual", "ratio"], rows, args)
    return EXIT_OK


def _audit_checks(degree: int, inject_fault: bool):
    """Yield (name, ok, first_mismatch) for the exact identity suite."""
    dp_table = list(counting.build_table(counting.SpectrumSpec(1, False), degree).counts)
    if inject_fault:
        dp_table[min(3, degree)] += 1
    gf = series.bose_gf(1, degree)
    yield _compare_seq("gf_vs_dp_bose_s1", gf.coeffs, dp_table)

    for s, distinct, name in (
        (2, False, "gf_vs_dp_bose_s2"),
        (1, True, "gf_vs_dp_fermi_s1"),
        (2, True, "gf_vs_dp_fermi_s2"),
    ):
        table = counting.build_table(counting.SpectrumSpec(s, distinct), degree).counts
        gf = series.fermi_gf(s, degree) if distinct else series.bose_gf(s, degree)
        yield _compare_seq(name, gf.coeffs, table)

    for n_parts in (4, 10, 30):
        via_identity = counting.distinct_restricted_table(n_parts, degree)
        direct = counting.build_table(
            counting.SpectrumSpec(1, True, n_parts), degree
        ).counts
        yield _compare_seq(f"staircase_decomposition_N{n_parts}", via_identity, direct)

    # Staircase series form: the full distinct product equals the staircase
    # sum once every truncated staircase offset is included.
    i_eff = 1
    while i_eff * (i_eff + 1) // 2 <= degree:
        i_eff += 1
    report = series.verify_identity(
        series.fermi_gf(1, degree), series.distinct_restricted_gf(i_eff, degree)
    )
    yield ("staircase_series", report.equal, report.first_mismatch)

    for n_parts in (2, 7, 20, 50):
        conj = counting.conjugate_restricted_table(n_parts, degree)
        direct = counting.build_table(
            counting.SpectrumSpec(1, False, n_parts), degree
        ).counts
        yield _compare_seq(f"conjugation_N{n_parts}", conj, direct)

    odd = counting.odd_parts_table(degree)
    distinct = counting.build_table(counting.SpectrumSpec(1, True), degree).counts
    yield _compare_seq("euler_odd_equals_distinct", odd, distinct)

    for s in (1, 2):
        lhs = series.fermi_gf(s, degree)
        rhs = series.IntSeries([1], degree)
        m = 1
        while m**s <= degree:
            rhs = rhs * series.one_minus_power(2 * m**s, degree)
            rhs = rhs * series.geometric_factor(m**s, degree)
            m += 1
        report = series.verify_identity(lhs, rhs)
        yield (f"euler_factorization_s{s}", report.equal, report.first_mismatch)


def _compare_seq(name, got, expected):
    for n, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            return (name, False, n)
    return (name, True, None)


def cmd_audit(args) -> int:
    rows = []
    failed = False
    for name, ok, first_mismatch in _audit_checks(args.degree, args.inject_fault):
        rows.append((name, "ok" if ok else "mismatch", first_mismatch))
        failed = failed or not ok
    meta = _meta("audit", degree=args.degree, inject_fault=args.inject_fault)
    write_dataset(meta, ["identity", "status", "first_mismatch"], rows, args)
    return EXIT_IDENTITY if failed else EXIT_OK


def cmd_figure(args) -> int:
    fid = args.id
    if fid in (1, 2, 3, 4):
        s = 1 if fid in (1, 3) else 2
        distinct = fid in (3, 4)
        stats = asymptotic.FERMI if distinct else asymptotic.BOSE
        n_max = args.max if args.max is not None else 1000
        table = counting.build_table(counting.SpectrumSpec(s, distinct), n_max)
        model = asymptotic.make_model(s, stats)
        rows = [
            (n, table.counts[n], asymptotic.rho_unrestricted(model, float(n)))
            for n in range(1, n_max + 1)
        ]
        meta = _meta("figure", id=fid, s=s, distinct=distinct, max=n_max)
        write_dataset(meta, ["n", "exact", "asymptote"], rows, args)
        return EXIT_OK

    if fid in (5, 6):
        n_parts = args.parts
        grid = _validity_grid(n_parts)
        top = grid.stop - 1
        rows = []
        if fid == 5:
            exact = counting.conjugate_restricted_table(n_parts, top)
            for n in grid:
                p_n = float(exact[n])
                unrestricted = asymptotic.bose_density_s1(float(n))
                restricted = asymptotic.rho_restricted_bose(float(n), n_parts).value
                rows.append((n, unrestricted - p_n, restricted - p_n))
        else:
            exact = counting.distinct_restricted_table(n_parts, top)
            for n in grid:
                d_n = float(exact[n])
                unrestricted = asymptotic.fermi_density_s1(float(n))
                restricted = asymptotic.rho_restricted_fermi(float(n), n_parts)
                rows.append((n, unrestricted - d_n, restricted - d_n))
        meta = _meta("figure", id=fid, parts=n_parts, min=grid.start, max=top)
        write_dataset(meta, ["n", "diff_unrestricted", "diff_restricted"], rows, args)
        return EXIT_OK

    raise DomainError(f"unknown figure id {fid}; expected 1..6")


# ---------------------------------------------------------------------------
# parser / entry point


def _add_io_options(sp) -> None:
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--output", default="-", help="output path, or - for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-dos",
        description="Exact partition counts and their smooth density asymptotics.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("exact", help="exact count table for a spec")
    sp.add_argument("--s", type=int, default=1, help="part values are m**s")
    sp.add_argument("--distinct", action="store_true")
    sp.add_argument("--parts", type=int, default=None, help="at most N parts")
    sp.add_argument("--min", type=int, default=0)
    sp.add_argument("--max", type=int, required=True)
    _add_io_options(sp)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("asym", help="smooth closed-form density")
    sp.add_argument("--s", type=float, default=1.0)
    sp.add_argument("--statistics", choices=(asymptotic.BOSE, asymptotic.FERMI),
                    default=asymptotic.BOSE)
    sp.add_argument("--shift", action="store_true", help="use E - 1/24 (s=1 bose)")
    sp.add_argument("--parts", type=int, default=None,
                    help="restricted formula with at most N parts (s=1)")
    sp.add_argument("--drop-half-term", action="store_true",
                    help="drop the -1/2 inside the restricted exponent")
    sp.add_argument("--energies", default=None, help="comma-separated E values")
    sp.add_argument("--min", type=float, default=1.0)
    sp.add_argument("--max", type=float, default=None)
    sp.add_argument("--step", type=float, default=1.0)
    _add_io_options(sp)
    sp.set_defaults(func=cmd_asym)

    sp = sub.add_parser("saddle", help="numeric stationary-point density")
    sp.add_argument("--s", type=float, default=1.0)
    sp.add_argument("--statistics", choices=(asymptotic.BOSE, asymptotic.FERMI),
                    default=asymptotic.BOSE)
    sp.add_argument("--parts", type=int, default=None,
                    help="finite level count (bose s=1 only)")
    sp.add_argument("--energies", default=None, help="comma-separated E values")
    sp.add_argument("--min", type=float, default=1.0)
    sp.add_argument("--max", type=float, default=None)
    sp.add_argument("--step", type=float, default=1.0)
    _add_io_options(sp)
    sp.set_defaults(func=cmd_saddle)

    sp = sub.add_parser("compare", help="exact counts next to the smooth curve")
    sp.add_argument("--s", type=int, default=1)
    sp.add_argument("--distinct", action="store_true")
    sp.add_argument("--shift", action="store_true")
    sp.add_argument("--min", type=int, default=1)
    sp.add_argument("--max", type=int, required=True)
    _add_io_options(sp)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("fluct", help="residuals and windowed amplitude ratios")
    sp.add_argument("--s", type=int, default=2)
    sp.add_argument("--distinct", action="store_true")
    sp.add_argument("--window", type=int, default=50)
    sp.add_argument("--min", type=int, default=1)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--spectrum", action="store_true", help="append spectral peaks")
    _add_io_options(sp)
    sp.set_defaults(func=cmd_fluct)

    sp = sub.add_parser("audit", help="run the exact identity suite")
    sp.add_argument("--degree", type=int, default=200)
    sp.add_argument("--inject-fault", action="store_true",
                    help="corrupt one coefficient to demonstrate detection")
    _add_io_options(sp)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("figure", help="standard comparison datasets 1..6")
    sp.add_argument("id", type=int)
    sp.add_argument("--parts", type=int, default=20, help="N for figures 5 and 6")
    sp.add_argument("--max", type=int, default=None, help="n range for figures 1-4")
    _add_io_options(sp)
    sp.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        DomainError,
        SpecMismatchError,
        DegreeMismatchError,
        EnumerationOverflowError,
        PrecisionLossError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
