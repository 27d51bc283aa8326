"""Quantum kicked top: Floquet dynamics, classical limit and tunneling diagnostics."""

from .angmom import AngularMomentumOps, CollectiveOps, build_collective_ops, build_spin_ops, casimir_check
from .classical import (
    NAMED_POINTS,
    ClassicalState,
    SphericalCoord,
    classical_step,
    classical_trajectory,
    generate_portrait,
    named_point,
    to_cartesian,
)
from .evolution import DephasingSpec, QktParams, apply_dephasing, build_floquet, evolve_heisenberg, evolve_schrodinger
from .observables import correlation, expectations, expectations_from_reduced, spectrum, trace_fidelity, tunneling_period
from .pipeline import RunConfig, SweepConfig, simulate, sweep
from .states import coherent_state_multiqubit, coherent_state_spin_j, deviation, PseudoPureSpec, make_pseudo_pure

__version__ = "0.1.0"

__all__ = [
    "AngularMomentumOps",
    "ClassicalState",
    "CollectiveOps",
    "DephasingSpec",
    "NAMED_POINTS",
    "PseudoPureSpec",
    "QktParams",
    "RunConfig",
    "SphericalCoord",
    "SweepConfig",
    "apply_dephasing",
    "build_collective_ops",
    "build_floquet",
    "build_spin_ops",
    "casimir_check",
    "classical_step",
    "classical_trajectory",
    "coherent_state_multiqubit",
    "coherent_state_spin_j",
    "correlation",
    "deviation",
    "evolve_heisenberg",
    "evolve_schrodinger",
    "expectations",
    "expectations_from_reduced",
    "generate_portrait",
    "make_pseudo_pure",
    "named_point",
    "simulate",
    "spectrum",
    "sweep",
    "to_cartesian",
    "trace_fidelity",
    "tunneling_period",
]
