"""Spin coherent states, pseudo-pure states and deviation matrices.

Density matrices are plain complex ndarrays; ``check_density_matrix`` and
``check_deviation`` validate the invariants where a caller needs them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np

from .angmom import build_spin_ops, check_qubit_cap
from .classical import SphericalCoord, to_cartesian
from .errors import NumericalIntegrityError


@lru_cache(maxsize=64)
def _eigh(two_j: int, axis: str):
    ops = build_spin_ops(two_j)
    return np.linalg.eigh(getattr(ops, "j" + axis))


def rotation(two_j: int, axis: str, angle: float) -> np.ndarray:
    """exp(-i angle J_axis) for spin-j, through the Hermitian eigendecomposition."""
    if axis == "z":
        m = build_spin_ops(two_j).m_values
        return np.diag(np.exp(-1j * angle * m))
    w, v = _eigh(two_j, axis)
    return (v * np.exp(-1j * angle * w)) @ v.conj().T


def coherent_state_spin_j(two_j: int, c: SphericalCoord) -> np.ndarray:
    """exp(-i phi J_z) exp(-i theta J_y) |j, j>."""
    top = np.zeros(two_j + 1, dtype=complex)
    top[0] = 1.0
    psi = rotation(two_j, "y", c.theta) @ top
    m = build_spin_ops(two_j).m_values
    return np.exp(-1j * c.phi * m) * psi


def qubit_coherent_state(c: SphericalCoord) -> np.ndarray:
    half = c.theta / 2
    return np.array(
        [np.exp(-0.5j * c.phi) * math.cos(half), np.exp(0.5j * c.phi) * math.sin(half)]
    )


def coherent_state_multiqubit(n_qubits: int, c: SphericalCoord) -> np.ndarray:
    """Product state U_theta_phi |0...0> with the same rotation on every qubit."""
    check_qubit_cap(n_qubits)
    q = qubit_coherent_state(c)
    psi = q
    for _ in range(n_qubits - 1):
        psi = np.kron(psi, q)
    return psi


def coherent_state(representation: str, two_j: int, c: SphericalCoord) -> np.ndarray:
    if representation == "spin_j":
        return coherent_state_spin_j(two_j, c)
    if representation == "multiqubit":
        return coherent_state_multiqubit(two_j, c)
    raise ValueError(f"unknown representation {representation!r}")


def coherent_overlap(two_j: int, a: SphericalCoord, b: SphericalCoord) -> float:
    """Analytic |<a|b>|^2 = cos^{4j}(Theta/2) for spin coherent states."""
    cos_theta = float(np.dot(to_cartesian(a).as_array(), to_cartesian(b).as_array()))
    return ((1 + cos_theta) / 2) ** two_j


def _unit_mp(c: SphericalCoord):
    return [mpmath.sin(c.theta) * mpmath.cos(c.phi), mpmath.sin(c.theta) * mpmath.sin(c.phi), mpmath.cos(c.theta)]


def fidelity_dps(two_j: int, a: SphericalCoord, b: SphericalCoord) -> int:
    """Decimal digits needed to resolve d |<a|b>|^2 next to 1."""
    base = coherent_overlap(1, a, b)
    if base <= 0:
        return 30
    return 30 + math.ceil(two_j * max(0.0, -math.log10(base)))


def coherent_deviation_fidelity(
    two_j: int, a: SphericalCoord, b: SphericalCoord, dps: int | None = None
) -> mpmath.mpf:
    """Trace fidelity between the deviation matrices of two spin-j coherent states.

    For pure states in dimension d this reduces to (d |<a|b>|^2 - 1) / (d - 1).
    Evaluated in extended precision because |<a|b>|^2 underflows relative to
    1/d long before the fidelity stops changing, and thresholds like 1/(2j)
    are otherwise decided by rounding. Arithmetic on the result (even abs())
    must also run under ``mpmath.workdps`` with at least ``fidelity_dps`` digits.
    """
    dps = dps or fidelity_dps(two_j, a, b)
    with mpmath.workdps(dps):
        cos_theta = sum(x * y for x, y in zip(_unit_mp(a), _unit_mp(b)))
        ov = ((1 + cos_theta) / 2) ** two_j
        d = two_j + 1
        return +((d * ov - 1) / (d - 1))


@dataclass(frozen=True)
class PseudoPureSpec:
    epsilon: float
    psi: np.ndarray

    def __post_init__(self):
        if not 0.0 < self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in (0, 1], got {self.epsilon}")
        norm = np.linalg.norm(self.psi)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"psi must be normalized, |psi| = {norm!r}")


def projector(psi: np.ndarray) -> np.ndarray:
    return np.outer(psi, psi.conj())


def make_pseudo_pure(spec: PseudoPureSpec) -> np.ndarray:
    dim = len(spec.psi)
    return (1 - spec.epsilon) * np.eye(dim) / dim + spec.epsilon * projector(spec.psi)


def deviation(rho: np.ndarray) -> np.ndarray:
    dim = rho.shape[0]
    return rho - (np.trace(rho) / dim) * np.eye(dim)


def purity(rho: np.ndarray) -> float:
    # tr(rho^2) for Hermitian rho without forming the product
    return float(np.real(np.vdot(rho, rho)))


def check_density_matrix(rho: np.ndarray, atol: float = 1e-10, eig_floor: float | None = -1e-10) -> None:
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > atol:
        raise NumericalIntegrityError(f"density matrix not Hermitian (deviation {herm:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1) > atol:
        raise NumericalIntegrityError(f"density matrix trace {tr} differs from 1")
    if eig_floor is None:
        return
    lo = np.linalg.eigvalsh((rho + rho.conj().T) / 2).min()
    if lo < eig_floor:
        raise NumericalIntegrityError(f"density matrix has negative eigenvalue {lo:.3e}")


def check_deviation(dev: np.ndarray, atol: float = 1e-12) -> None:
    if abs(np.trace(dev)) > atol:
        raise NumericalIntegrityError("deviation matrix is not traceless")
    if np.max(np.abs(dev - dev.conj().T)) > atol:
        raise NumericalIntegrityError("deviation matrix is not Hermitian")
