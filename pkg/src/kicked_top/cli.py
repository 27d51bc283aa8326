"""Command-line interface: ``qkt run | sweep | portrait | spectrum``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .classical import generate_portrait
from .errors import KickedTopError, UsageError
from .evolution import DephasingSpec
from .observables import DEFAULT_PAD, spectrum
from .pipeline import GRADIENT_TABLE, RunConfig, SweepConfig, run, sweep

RUN_DEFAULTS = {
    "representation": "spin_j",
    "two_j": 2,
    "k": 3.0,
    "initial": "A",
    "theta": None,
    "phi": None,
    "kicks": 25,
    "noise_model": "coherence_order",
    "noise_strength": None,
    "gradient": None,
    "gradient_table": None,
    "epsilon": 1.0,
    "corr_mode": "state_overlap",
    "out": None,
    "format": "csv",
}
SWEEP_DEFAULTS = {"axis": None, "values": None, "parallelism": 1, "measure": "tunneling", "out_dir": None}


def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file of option values; flags override it")
    p.add_argument("--representation", choices=["spin_j", "multiqubit"])
    p.add_argument("--two-j", dest="two_j", type=int, help="twice the spin quantum number")
    p.add_argument("--k", type=float, help="chaoticity parameter")
    p.add_argument("--initial", help="named point (A, A', B, C, E, E') for the initial coherent state")
    p.add_argument("--theta", type=float, help="explicit initial theta (with --phi)")
    p.add_argument("--phi", type=float, help="explicit initial phi (with --theta)")
    p.add_argument("--kicks", type=int)
    p.add_argument("--noise-model", dest="noise_model", choices=["coherence_order", "per_qubit"])
    p.add_argument("--noise-strength", dest="noise_strength", type=float)
    p.add_argument("--gradient", type=float, help="PFG label in G/cm, mapped through the gradient table")
    p.add_argument("--epsilon", type=float, help="pseudo-pure polarization")
    p.add_argument("--corr-mode", dest="corr_mode", choices=["state_overlap", "vector"])
    p.add_argument("--format", choices=["csv", "json"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qkt", description="Quantum kicked top tunneling simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="simulate one trajectory")
    _add_run_options(p)
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("sweep", help="scan two_j, k or the noise strength")
    _add_run_options(p)
    p.add_argument("--axis", choices=["two_j", "k", "noise_strength"])
    p.add_argument("--values", help="comma list or inclusive range start:stop[:step]")
    p.add_argument("--parallelism", type=int)
    p.add_argument("--measure", choices=["tunneling", "overlap"])
    p.add_argument("--out-dir", dest="out_dir")

    p = sub.add_parser("portrait", help="classical phase portrait as CSV")
    p.add_argument("--k", type=float, default=3.0)
    p.add_argument("--grid", type=int, default=20)
    p.add_argument("--iters", type=int, default=200)
    p.add_argument("--out")

    p = sub.add_parser("spectrum", help="FFT of one column of a trajectory CSV")
    p.add_argument("--in", dest="in_csv", required=True)
    p.add_argument("--column", default="jz")
    p.add_argument("--pad", type=int, default=DEFAULT_PAD)
    p.add_argument("--window", choices=["none", "hann"], default="none")
    p.add_argument("--out")
    return parser


def _merged(args: argparse.Namespace, defaults: dict) -> dict:
    opts = dict(defaults)
    if getattr(args, "config", None):
        try:
            loaded = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file {args.config}: {exc}") from None
        unknown = set(loaded) - set(defaults)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        opts.update(loaded)
    for key in defaults:
        val = getattr(args, key, None)
        if val is not None:
            opts[key] = val
    return opts


def _noise(opts: dict) -> DephasingSpec | None:
    strength = opts["noise_strength"]
    if opts["gradient"] is not None:
        if strength is not None:
            raise UsageError("give either --gradient or --noise-strength, not both")
        table = GRADIENT_TABLE
        if opts["gradient_table"]:
            table = {float(g): float(lam) for g, lam in opts["gradient_table"].items()}
        g = float(opts["gradient"])
        if g not in table:
            raise UsageError(f"gradient {g} G/cm not in table {sorted(table)}")
        strength = table[g]
    if strength is None:
        return None
    try:
        return DephasingSpec(opts["noise_model"], float(strength))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def run_config_from(opts: dict) -> RunConfig:
    if (opts["theta"] is None) != (opts["phi"] is None):
        raise UsageError("--theta and --phi must be given together")
    initial = opts["initial"] if opts["theta"] is None else (opts["theta"], opts["phi"])
    cfg = RunConfig(
        representation=opts["representation"],
        two_j=int(opts["two_j"]),
        k=float(opts["k"]),
        initial=initial,
        n_kicks=int(opts["kicks"]),
        noise=_noise(opts),
        epsilon=float(opts["epsilon"]),
        corr_mode=opts["corr_mode"],
        output=opts.get("out"),
        format=opts["format"],
    )
    cfg.validate()
    return cfg


def parse_values(text) -> tuple:
    if isinstance(text, (list, tuple)):
        return tuple(text)
    if not text:
        raise UsageError("--values is required")
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) > 2 else 1
            return tuple(range(start, stop + 1, step))
        items = [s.strip() for s in text.split(",") if s.strip()]
        if all(s.lstrip("-").isdigit() for s in items):
            return tuple(int(s) for s in items)
        return tuple(float(s) for s in items)
    except ValueError:
        raise UsageError(f"cannot parse --values {text!r}") from None


def cmd_run(args) -> int:
    cfg = run_config_from(_merged(args, RUN_DEFAULTS))
    _, text = run(cfg)
    if not cfg.output:
        sys.stdout.write(text)
    return 0


def cmd_sweep(args) -> int:
    opts = _merged(args, {**RUN_DEFAULTS, **SWEEP_DEFAULTS})
    if opts["axis"] is None:
        raise UsageError("--axis is required")
    base = run_config_from({**opts, "out": None})
    cfg = SweepConfig(
        axis=opts["axis"],
        values=parse_values(opts["values"]),
        base=base,
        parallelism=int(opts["parallelism"]),
        measure=opts["measure"],
        out_dir=opts["out_dir"],
    )
    rows, summary = sweep(cfg)
    if not cfg.out_dir:
        sys.stdout.write(summary)
    failed = [] if cfg.measure == "overlap" else [r for r in rows if r.error]
    for r in failed:
        print(f"point {r.value} failed: {r.error}", file=sys.stderr)
    return 1 if failed else 0


def cmd_portrait(args) -> int:
    try:
        portrait = generate_portrait(args.k, args.grid, args.iters)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = io.portrait_csv(portrait)
    if args.out:
        io.write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_spectrum(args) -> int:
    try:
        series = io.read_csv_column(args.in_csv, args.column)
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.in_csv}") from None
    except KeyError:
        raise UsageError(f"column {args.column!r} not found in {args.in_csv}") from None
    try:
        res = spectrum(series, args.pad, args.window)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = io.spectrum_csv(res)
    if args.out:
        io.write_text(args.out, text)
    if res.aperiodic:
        print(f"{args.column}: aperiodic (peak ratio {io.fmt(res.peak_ratio)})")
    else:
        print(f"{args.column}: peak_frequency={io.fmt(res.peak_frequency)} period_kicks={io.fmt(res.period_kicks)}")
    return 0


COMMANDS = {"run": cmd_run, "sweep": cmd_sweep, "portrait": cmd_portrait, "spectrum": cmd_spectrum}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except KickedTopError as exc:
        print(f"qkt {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
