"""Prepare -> evolve -> observe pipeline, plus parameter sweeps."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

import mpmath
import numpy as np

from . import io
from .angmom import build_collective_ops, build_spin_ops, max_qubits
from .classical import NAMED_POINTS, SphericalCoord, named_point
from .errors import ResourceCapError, UsageError
from .evolution import DephasingSpec, QktParams, build_floquet, evolve_schrodinger
from .observables import TrajectoryRecord, correlation, expectations, trace_fidelity, tunneling_period
from .states import (
    PseudoPureSpec,
    check_density_matrix,
    coherent_deviation_fidelity,
    coherent_state,
    deviation,
    fidelity_dps,
    make_pseudo_pure,
    projector,
    purity,
)

REPRESENTATIONS = ("spin_j", "multiqubit")

# PFG strength label (G/cm) -> coherence-order dephasing strength per kick.
# No physical calibration exists; values only reproduce the qualitative ordering.
GRADIENT_TABLE = {0.0: 0.0, 0.005: 0.02, 0.05: 0.2}


@dataclass(frozen=True)
class RunConfig:
    representation: str = "spin_j"
    two_j: int = 2
    k: float = 3.0
    initial: str | tuple[float, float] = "A"
    n_kicks: int = 25
    noise: DephasingSpec | None = None
    epsilon: float = 1.0
    corr_mode: str = "state_overlap"
    output: str | None = None
    format: str = "csv"

    def validate(self) -> None:
        if self.representation not in REPRESENTATIONS:
            raise UsageError(f"representation must be one of {REPRESENTATIONS}")
        if self.two_j < 1:
            raise UsageError("--two-j must be >= 1")
        if self.n_kicks < 1:
            raise UsageError("--kicks must be >= 1")
        if self.k < 0:
            raise UsageError("--k must be non-negative")
        if not 0 < self.epsilon <= 1:
            raise UsageError("--epsilon must lie in (0, 1]")
        if self.format not in ("csv", "json"):
            raise UsageError("--format must be csv or json")
        if self.corr_mode not in ("state_overlap", "vector"):
            raise UsageError("--corr-mode must be state_overlap or vector")
        if self.representation == "multiqubit" and self.two_j > max_qubits():
            raise ResourceCapError(
                f"multiqubit representation needs {self.two_j} qubits, cap is {max_qubits()}"
            )
        self.initial_coord()

    def initial_coord(self) -> SphericalCoord:
        if isinstance(self.initial, str):
            try:
                return named_point(self.initial)
            except KeyError as exc:
                raise UsageError(str(exc.args[0])) from None
        theta, phi = self.initial
        try:
            return SphericalCoord.wrapped(theta, phi)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["initial"] = self.initial if isinstance(self.initial, str) else list(self.initial)
        d.pop("output")
        return d


def _operators(config: RunConfig):
    if config.representation == "multiqubit":
        return build_collective_ops(config.two_j)
    return build_spin_ops(config.two_j)


def simulate(config: RunConfig) -> list[TrajectoryRecord]:
    """Run one trajectory and return the per-kick records.

    Observables are taken on the pure-state equivalent I/d + deviation/epsilon,
    so every reported quantity is independent of the pseudo-pure polarization.
    """
    config.validate()
    ops = _operators(config)
    rep, two_j = config.representation, config.two_j
    psi = coherent_state(rep, two_j, config.initial_coord())
    rho0 = make_pseudo_pure(PseudoPureSpec(config.epsilon, psi))
    f = build_floquet(QktParams(two_j, config.k), ops)
    states = evolve_schrodinger(rho0, f, config.n_kicks, config.noise)

    dim = ops.dim
    refs = {s: coherent_state(rep, two_j, NAMED_POINTS[s]) for s in io.CORR_LABELS}
    ref_devs = {s: deviation(projector(refs[s])) for s in io.FID_LABELS}
    eye = np.eye(dim) / dim
    records = []
    for n, rho in enumerate(states):
        dev = deviation(rho) / config.epsilon
        pure = eye + dev
        # the spectrum check is O(d^3); once at the end is enough
        check_density_matrix(pure, atol=1e-9, eig_floor=-1e-8 if n == len(states) - 1 else None)
        jx, jy, jz = expectations(pure, ops)
        records.append(
            TrajectoryRecord(
                kick=n,
                jx=jx,
                jy=jy,
                jz=jz,
                fid={s: trace_fidelity(dev, ref_devs[s]) for s in io.FID_LABELS},
                corr={s: correlation(pure, refs[s], config.corr_mode, ops) for s in io.CORR_LABELS},
                purity=purity(pure),
            )
        )
    return records


def render_trajectory(config: RunConfig, records) -> str:
    if config.format == "json":
        return io.trajectory_json(records, config.to_dict())
    return io.trajectory_csv(records)


def run(config: RunConfig) -> tuple[list[TrajectoryRecord], str]:
    records = simulate(config)
    text = render_trajectory(config, records)
    if config.output:
        io.write_text(config.output, text)
    return records, text


SWEEP_AXES = ("two_j", "k", "noise_strength")


@dataclass(frozen=True)
class SweepConfig:
    axis: str
    values: tuple
    base: RunConfig = field(default_factory=RunConfig)
    parallelism: int = 1
    measure: str = "tunneling"
    out_dir: str | None = None

    def validate(self) -> None:
        if self.axis not in SWEEP_AXES:
            raise UsageError(f"--axis must be one of {SWEEP_AXES}")
        if not self.values:
            raise UsageError("sweep needs at least one value")
        if list(self.values) != sorted(self.values):
            raise UsageError("sweep values must be sorted ascending")
        if self.parallelism < 1:
            raise UsageError("--parallelism must be >= 1")
        if self.measure not in ("tunneling", "overlap"):
            raise UsageError("--measure must be tunneling or overlap")
        if self.measure == "overlap" and self.axis != "two_j":
            raise UsageError("the overlap scan runs over two_j only")

    def point_config(self, value) -> RunConfig:
        if self.axis == "two_j":
            return replace(self.base, two_j=int(value))
        if self.axis == "k":
            return replace(self.base, k=float(value))
        noise = self.base.noise or DephasingSpec()
        return replace(self.base, noise=replace(noise, strength=float(value)))


@dataclass(frozen=True)
class SweepRow:
    value: float
    period_kicks: float
    max_fid_Ap: float
    aperiodic: bool
    error: str | None = None


def _tunneling_point(args) -> tuple[SweepRow, str]:
    value, config = args
    try:
        records = simulate(config)
    except Exception as exc:  # recorded per point; the sweep keeps going
        return SweepRow(value, math.nan, math.nan, True, f"{type(exc).__name__}: {exc}"), ""
    res = tunneling_period(records, "z")
    max_fid = max(r.fid["A'"] for r in records[1:])
    aperiodic = res.aperiodic
    row = SweepRow(value, res.period_kicks, max_fid, aperiodic)
    return row, render_trajectory(config, records)


def _map(fn, items, parallelism: int):
    if parallelism == 1 or len(items) == 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class OverlapScan:
    """|F| between the deviation matrices of coherent states A and A'.

    ``rows`` holds (two_j, value) with extended-precision values; ``dps`` is
    the working precision they need for comparisons.
    """

    rows: list
    dps: int

    def first_below(self, threshold) -> int | None:
        with mpmath.workdps(self.dps):
            limit = mpmath.mpf(str(threshold))
            return next((t for t, v in self.rows if v < limit), None)

    def strictly_decreasing(self) -> bool:
        with mpmath.workdps(self.dps):
            vals = [v for _, v in self.rows]
            return all(b < a for a, b in zip(vals, vals[1:]))


def overlap_scan(two_js) -> OverlapScan:
    a, ap = NAMED_POINTS["A"], NAMED_POINTS["A'"]
    dps = max(fidelity_dps(int(t), a, ap) for t in two_js)
    with mpmath.workdps(dps):
        rows = [(int(t), abs(coherent_deviation_fidelity(int(t), a, ap, dps))) for t in two_js]
    return OverlapScan(rows, dps)


def sweep(config: SweepConfig) -> tuple[list, str]:
    """Run every sweep point; returns (rows, summary CSV text).

    Rows are assembled in value order, so the summary is independent of the
    worker count. Trajectory files go to ``out_dir`` when it is set.
    """
    config.validate()
    if config.measure == "overlap":
        scan = overlap_scan(config.values)
        text = io.render_csv(("two_j", "overlap_AAp"), [(t, float(v)) for t, v in scan.rows])
        if config.out_dir:
            io.write_text(Path(config.out_dir) / "summary.csv", text)
        return scan, text

    items = [(v, config.point_config(v)) for v in config.values]
    results = _map(_tunneling_point, items, config.parallelism)
    rows = [r for r, _ in results]
    summary = io.render_csv(
        ("value", "period_kicks", "max_fid_Ap", "aperiodic_flag"),
        [(r.value, r.period_kicks, r.max_fid_Ap, "error" if r.error else str(int(r.aperiodic)))
         for r in rows],
    )
    if config.out_dir:
        out = Path(config.out_dir)
        ext = config.base.format
        for (row, text), (value, _) in zip(results, items):
            if text:
                io.write_text(out / f"{config.axis}_{io.fmt(value)}.{ext}", text)
        io.write_text(out / "summary.csv", summary)
    return rows, summary
