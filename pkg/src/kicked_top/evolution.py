"""Floquet operator of the kicked top, kick-by-kick evolution and dephasing."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .angmom import AngularMomentumOps, build_spin_ops

DEPHASING_MODELS = ("coherence_order", "per_qubit")


@dataclass(frozen=True)
class QktParams:
    two_j: int
    k: float
    kick_angle: float = math.pi / 2

    def __post_init__(self):
        if self.two_j < 1:
            raise ValueError("the kicked top needs j >= 1/2 (two_j >= 1)")
        if self.k < 0:
            raise ValueError(f"chaoticity k must be non-negative, got {self.k}")

    @property
    def j(self) -> float:
        return self.two_j / 2


@dataclass(frozen=True)
class FloquetOperator:
    params: QktParams
    u: np.ndarray
    u_kick: np.ndarray
    u_nl: np.ndarray
    m_values: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.u.shape[0]


def _expm_hermitian(h: np.ndarray, t: float) -> np.ndarray:
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * t * w)) @ v.conj().T


def build_floquet(params: QktParams, ops: AngularMomentumOps | None = None) -> FloquetOperator:
    """U = U_nl U_kick with ideal instantaneous kicks.

    Passing collective operators builds the same map on 2j qubits.
    """
    if ops is None:
        ops = build_spin_ops(params.two_j)
    if ops.two_j != params.two_j:
        raise ValueError(f"operators are for two_j={ops.two_j}, params ask for {params.two_j}")
    m = ops.m_values
    u_kick = _expm_hermitian(ops.jy, params.kick_angle)
    nl_phase = np.exp(-1j * (params.k / (2 * params.j)) * m**2)
    u_nl = np.diag(nl_phase)
    u = nl_phase[:, None] * u_kick
    for a in (u, u_kick, u_nl, m):
        a.flags.writeable = False
    return FloquetOperator(params, u, u_kick, u_nl, m)


@dataclass(frozen=True)
class DephasingSpec:
    """Net per-kick dephasing in the J_z / computational basis.

    ``coherence_order`` damps element (m, m') by exp(-strength (m - m')^2);
    ``per_qubit`` applies an independent phase flip with probability
    ``strength`` to every qubit.
    """

    model: str = "coherence_order"
    strength: float = 0.0

    def __post_init__(self):
        if self.model not in DEPHASING_MODELS:
            raise ValueError(f"unknown dephasing model {self.model!r}; choose from {DEPHASING_MODELS}")
        if self.strength < 0:
            raise ValueError("dephasing strength must be non-negative")
        if self.model == "per_qubit" and self.strength > 0.5:
            raise ValueError("per-qubit phase-flip probability must lie in [0, 1/2]")


def dephasing_mask(spec: DephasingSpec, dim: int, m_values: np.ndarray | None = None) -> np.ndarray:
    """Real elementwise multiplier implementing the channel."""
    if spec.model == "coherence_order":
        if m_values is None:
            m_values = (dim - 1) / 2 - np.arange(dim)
        dm = np.subtract.outer(m_values, m_values)
        if math.isinf(spec.strength):
            return (dm == 0).astype(float)
        return np.exp(-spec.strength * dm**2)
    n = dim.bit_length() - 1
    if 2**n != dim:
        raise ValueError(f"per_qubit dephasing needs a 2^n dimension, got {dim}")
    idx = np.arange(dim)
    flips = idx[:, None] ^ idx[None, :]
    hamming = sum((flips >> b) & 1 for b in range(n))
    # each qubit: rho -> (1-p) rho + p Z rho Z, i.e. coherence scaled by (1-2p)
    return (1 - 2 * spec.strength) ** hamming


def apply_dephasing(rho: np.ndarray, spec: DephasingSpec, m_values: np.ndarray | None = None) -> np.ndarray:
    return rho * dephasing_mask(spec, rho.shape[0], m_values)


def _check_dim(rho: np.ndarray, f: FloquetOperator) -> None:
    if rho.shape != f.u.shape:
        raise ValueError(f"state has shape {rho.shape}, Floquet operator {f.u.shape}")


def evolve_schrodinger(
    rho: np.ndarray,
    f: FloquetOperator,
    n_kicks: int,
    noise: DephasingSpec | None = None,
) -> list[np.ndarray]:
    """States after 0..n_kicks periods; dephasing follows each unitary."""
    _check_dim(rho, f)
    if n_kicks < 0:
        raise ValueError("n_kicks must be non-negative")
    mask = None
    if noise is not None and noise.strength > 0:
        mask = dephasing_mask(noise, f.dim, f.m_values)
    u, ud = f.u, f.u.conj().T
    states = [rho]
    for _ in range(n_kicks):
        rho = u @ rho @ ud
        if mask is not None:
            rho = rho * mask
        states.append(rho)
    return states


def evolve_heisenberg(
    ops: AngularMomentumOps, f: FloquetOperator, n_kicks: int
) -> list[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Operator triples J_alpha(n), with J_alpha(n+1) = U^dag J_alpha(n) U."""
    if ops.jz.shape != f.u.shape:
        raise ValueError(f"operators have shape {ops.jz.shape}, Floquet operator {f.u.shape}")
    if n_kicks < 0:
        raise ValueError("n_kicks must be non-negative")
    u, ud = f.u, f.u.conj().T
    current = ops.components()
    out = [current]
    for _ in range(n_kicks):
        current = tuple(ud @ a @ u for a in current)
        out.append(current)
    return out


def parity_operator(two_j: int) -> np.ndarray:
    """exp(-i pi J_y), the y-axis pi rotation that maps A onto A'."""
    return _expm_hermitian(build_spin_ops(two_j).jy, math.pi)

