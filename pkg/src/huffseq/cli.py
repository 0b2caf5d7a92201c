"""Command-line front end.

Subcommands: generate, verify, spectrum, zeros, sweep, fixtures, identities.
Exit codes: 0 success / canonical, 1 a checked property failed, 2 bad
usage, unparseable input or an invalid construction.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import correlate, families, fibpoly, roots, spectral
from .errors import HuffmanError
from .numeric import Scale, parse_number
from .sequence import Family, HuffmanSequence
from .serialize import dumps, read_sequence, sequence_to_json, write_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

BUILDABLE = [f.value for f in (Family.FIB, Family.FIB_CYCLIC, Family.TANGENT, Family.THREE, Family.INT)]


class UsageError(HuffmanError):
    code = "usage"


# helpers


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _scale_arg(text: str) -> Scale:
    try:
        return Scale.parse(text)
    except HuffmanError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _source(args) -> HuffmanSequence:
    if getattr(args, "input", None):
        return read_sequence(args.input)
    if getattr(args, "fixture", None):
        try:
            return families.fixture(args.fixture)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from exc
    if not args.family:
        raise UsageError("give --family (with --length/--scale), --fixture or --input")
    if args.family != Family.THREE.value and args.scale is None:
        raise UsageError(f"--scale is required for family {args.family}")
    if args.length is None:
        raise UsageError("--length is required")
    return families.build(args.family, args.length, args.scale)


def _report(seq: HuffmanSequence, tol: float | None) -> dict:
    prof = correlate.acorr_aperiodic(seq)
    rep = correlate.is_canonical(prof, tol)
    out = {
        "canonical": rep.is_canonical,
        "peak": rep.peak,
        "end_value": rep.end_value,
        "max_interior_abs": rep.max_interior_abs,
        "tolerance": rep.tolerance_used,
    }
    try:
        m = correlate.metrics(seq)
        out.update(merit_factor=m.merit_factor, peak_ratio=m.peak_ratio, flatness=m.spectral_flatness)
    except HuffmanError:
        out.update(merit_factor=None, peak_ratio=None, flatness=None)
    return out


# subcommands


def cmd_generate(args) -> int:
    seq = _source(args)
    if args.format == "csv":
        _emit(args, write_csv(["index", "value"], [[i, v] for i, v in enumerate(seq.elements)]))
    else:
        _emit(args, dumps(sequence_to_json(seq, _report(seq, args.tol))))
    return EXIT_OK


def cmd_verify(args) -> int:
    seq = _source(args)
    report = _report(seq, args.tol)
    if args.format == "csv":
        prof = correlate.acorr_aperiodic(seq)
        _emit(args, write_csv(["shift", "value"], [[d, prof.value(d)] for d in prof.shifts]))
    else:
        _emit(args, dumps(sequence_to_json(seq, report)))
    return EXIT_OK if report["canonical"] else EXIT_FAIL


def _closed_form_bins(seq: HuffmanSequence) -> np.ndarray | None:
    N, s = seq.length, seq.scale
    if seq.family is Family.FIB_CYCLIC:
        return np.array([spectral.dft_closed_cyclic(N, s, q) for q in range(N)])
    if seq.family is Family.FIB:
        # H is H_c rotated right by (N-1)/2, i.e. a linear phase ramp
        k = (N - 1) // 2
        return np.array(
            [np.exp(-2j * np.pi * k * q / N) * spectral.dft_closed_cyclic(N, s, q) for q in range(N)]
        )
    return None


def _closed_form_power(seq: HuffmanSequence) -> list[float | None]:
    N = seq.length
    if seq.family in (Family.FIB, Family.FIB_CYCLIC) and seq.scale is not None:
        return [spectral.power_spectrum_closed(N, seq.scale, q) for q in range(N)]
    # any canonical array: transform of the wrapped correlation [A_0, a, 0, ..., 0, a]
    rep = correlate.is_canonical(correlate.acorr_aperiodic(seq))
    if not rep.is_canonical:
        return [None] * N
    a0, a = float(rep.peak), float(rep.end_value)
    if N == 1:
        return [a0]
    return [a0 + 2 * a * math.cos(2 * math.pi * q / N) for q in range(N)]


def cmd_spectrum(args) -> int:
    seq = _source(args)
    N = seq.length
    if args.closed_form:
        bins = _closed_form_bins(seq)
        if bins is None:
            raise UsageError("closed-form bins exist only for the fib and fib_cyclic families")
    else:
        bins = spectral.dft(seq).bins
    closed = _closed_form_power(seq)
    header = ["q", "re", "im", "magnitude", "power", "closed_form_power", "abs_rel_diff"]
    rows = []
    for q in range(N):
        g = complex(bins[q])
        p = abs(g) ** 2
        c = closed[q]
        diff = abs(p - c) / abs(c) if c else (None if c is None else abs(p))
        rows.append([q, g.real, g.imag, abs(g), p, c, diff])
    if args.emit_plot_data:
        lines = [f"{q} {repr(row[4])}" for q, row in enumerate(rows)]
        Path(args.emit_plot_data).write_text("\n".join(lines) + "\n", encoding="utf-8")
    if args.format == "csv":
        _emit(args, write_csv(header, rows))
    else:
        _emit(args, dumps({"length": N, "family": seq.family.value, "rows": [dict(zip(header, r)) for r in rows]}))
    diffs = [r[6] for r in rows if r[6] is not None]
    if diffs and max(diffs) > args.check_tol:
        return EXIT_FAIL
    return EXIT_OK


def cmd_zeros(args) -> int:
    seq = _source(args)
    z = roots.z_zeros(seq)
    radius_tol = args.tol if args.tol is not None else 1e-6
    rep = roots.circle_fit(z, radius_tol, args.angle_tol)
    if args.format == "csv":
        rows = [[w.real, w.imag, abs(w), float(np.angle(w))] for w in rep.roots]
        _emit(args, write_csv(["re", "im", "modulus", "argument"], rows))
    else:
        _emit(args, dumps(rep.to_json()))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    items = [sequence_to_json(f, _report(f, args.tol)) for f in families.fixtures()]
    if args.format == "csv":
        rows = [[f.label, i, v] for f in families.fixtures() for i, v in enumerate(f.elements)]
        _emit(args, write_csv(["label", "index", "value"], rows))
    else:
        _emit(args, dumps(items))
    return EXIT_OK


def cmd_identities(args) -> int:
    kinds = tuple(args.kinds.split(",")) if args.kinds else fibpoly.IDENTITY_KINDS
    for k in kinds:
        if k not in fibpoly.IDENTITY_KINDS:
            raise UsageError(f"unknown identity kind {k!r}")
    summary = fibpoly.run_identity_suite(args.count, args.seed or 0, kinds)
    ok = all(v["passed"] == v["cases"] for v in summary.values())
    if args.format == "csv":
        rows = [[k, v["cases"], v["passed"]] for k, v in summary.items()]
        _emit(args, write_csv(["kind", "cases", "passed"], rows))
    else:
        payload = {
            k: {
                "cases": v["cases"],
                "passed": v["passed"],
                "failures": [{"case": vars(c), "lhs": r.lhs, "rhs": r.rhs} for c, r in v["failures"][:5]],
            }
            for k, v in summary.items()
        }
        _emit(args, dumps({"seed": args.seed or 0, "all_passed": ok, "kinds": payload}))
    return EXIT_OK if ok else EXIT_FAIL


# sweep


def parse_range(text: str, integer: bool = False) -> list:
    """``start:stop:step`` (stop inclusive) or a comma-separated list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (parse_number(p) for p in parts)
        if step <= 0:
            raise UsageError("range step must be positive")
        if stop < start:
            raise UsageError(f"empty range {text!r}")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        if all(isinstance(v, Fraction) for v in (start, stop, step)):
            values = [start + k * step for k in range(count)]
        else:
            values = [round(float(start) + k * float(step), 12) + 0.0 for k in range(count)]
    else:
        values = [parse_number(p) for p in text.split(",") if p.strip()]
    if not values:
        raise UsageError(f"empty range {text!r}")
    if integer:
        if any(isinstance(v, float) or v.denominator != 1 for v in values):
            raise UsageError(f"lengths must be integers: {text!r}")
        return [int(v) for v in values]
    return values


def _check_lengths(family: str, lengths: list[int]) -> None:
    for N in lengths:
        ok = {
            "fib": N >= 7 and N % 4 == 3,
            "fib_cyclic": N >= 7 and N % 4 == 3,
            "tangent": N >= 5 and N % 4 == 1,
            "three": N >= 5 and N % 2 == 1,
            "int": N >= 3,
        }[family]
        if not ok:
            raise UsageError(f"length {N} is invalid for family {family}")


def sweep_row(family: str, N: int, s, tol: float | None) -> list:
    """One sweep record; construction errors land in the ``error`` column."""
    row = {"family": family, "length": N, "scale": s}
    try:
        seq = families.build(family, N, None if family == "three" else s)
        rep = correlate.is_canonical(correlate.acorr_aperiodic(seq), tol)
        row.update(
            canonical=rep.is_canonical,
            peak=rep.peak,
            end_value=rep.end_value,
            max_interior_abs=rep.max_interior_abs,
            flatness=spectral.flatness(seq),
        )
        if family in ("fib", "fib_cyclic"):
            try:
                row["flatness_bound"] = spectral.flatness_bound(N, s)
            except HuffmanError:
                pass
    except HuffmanError as exc:
        row.update(canonical=False, error=f"{exc.code}: {exc}")
    return [row.get(c) for c in SWEEP_COLUMNS]


SWEEP_COLUMNS = [
    "family",
    "length",
    "scale",
    "canonical",
    "peak",
    "end_value",
    "max_interior_abs",
    "flatness",
    "flatness_bound",
    "error",
]


def _sweep_task(item):
    return sweep_row(*item)


def run_sweep(family: str, lengths, scales, tol=None, exclude=(), jobs: int = 1) -> list[list]:
    if family == "three":
        scales = [None]
    excluded = {float(x) for x in exclude}
    grid = sorted(
        ((N, s) for N in lengths for s in scales if s is None or float(s) not in excluded),
        key=lambda t: (t[0], float(t[1]) if t[1] is not None else 0.0),
    )
    tasks = [(family, N, s, tol) for N, s in grid]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_task, tasks, chunksize=8))
    return [_sweep_task(t) for t in tasks]


def cmd_sweep(args) -> int:
    lengths = parse_range(args.lengths, integer=True)
    _check_lengths(args.family, lengths)
    scales = parse_range(args.scales) if args.scales else [None]
    if args.family != "three" and scales == [None]:
        raise UsageError("--scales is required for this family")
    exclude = parse_range(args.exclude) if args.exclude else []
    rows = run_sweep(args.family, lengths, scales, args.tol, exclude, args.jobs)
    if args.format == "json":
        _emit(args, dumps([dict(zip(SWEEP_COLUMNS, r)) for r in rows]))
    else:
        _emit(args, write_csv(SWEEP_COLUMNS, rows))
    failed = any(not r[SWEEP_COLUMNS.index("canonical")] for r in rows)
    return EXIT_FAIL if failed else EXIT_OK


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default=None, help="default json (csv for sweep)")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--tol", type=float, default=None, help="relative tolerance for canonical checks")
    common.add_argument("--seed", type=int, default=None)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--family", choices=BUILDABLE)
    source.add_argument("--length", type=int, help="sequence length (spectrum length L for tangent)")
    source.add_argument("--scale", type=_scale_arg, help="scale s; '1/2' or '3' exact, '0.5' float")
    source.add_argument("--fixture", help="use a stored fixture, e.g. H_non_11")
    source.add_argument("--input", metavar="FILE", help="read elements from a JSON or CSV file")

    parser = argparse.ArgumentParser(prog="huffseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common, source], help="build a sequence")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common, source], help="canonical check and quality metrics")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", parents=[common, source], help="per-bin DFT table")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--closed-form", action="store_true", help="bins from the closed form")
    mode.add_argument("--fft", action="store_true", help="bins from the reference DFT (default)")
    p.add_argument("--emit-plot-data", metavar="PATH", help="write 'q power' columns for plotting")
    p.add_argument("--check-tol", type=float, default=1e-9, help="max abs_rel_diff before exit 1")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("zeros", parents=[common, source], help="z-transform zeros and circle fit")
    p.add_argument("--angle-tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("sweep", parents=[common], help="grid of (length, scale) checks")
    p.add_argument("--family", choices=BUILDABLE, required=True)
    p.add_argument("--lengths", required=True, help="start:stop:step (inclusive) or a,b,c")
    p.add_argument("--scales", help="start:stop:step or a,b,c; use --scales=-2:2:0.1 for negatives")
    p.add_argument("--exclude", help="comma-separated scales to skip")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep, default_format="csv")

    p = sub.add_parser("fixtures", parents=[common], help="list stored fixture arrays")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("identities", parents=[common], help="randomized Fibonacci identity suite")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--kinds", help="comma-separated subset of " + ",".join(fibpoly.IDENTITY_KINDS))
    p.set_defaults(func=cmd_identities)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    try:
        return args.func(args)
    except HuffmanError as exc:
        sys.stdout.write(dumps({"error": {"code": exc.code, "message": str(exc)}}))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
