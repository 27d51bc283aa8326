"""Spin-j and collective multi-qubit angular momentum operators.

Spin labels are carried as the integer ``two_j = 2j``. All matrices are dense
complex arrays in the J_z eigenbasis ordered m = j, j-1, ..., -j. For the
multi-qubit representation qubit 0 is the most significant bit and |0> is
spin-up (m = +1/2).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import ResourceCapError

DEFAULT_MAX_QUBITS = 12


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class AngularMomentumOps:
    two_j: int
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray

    @property
    def j(self) -> float:
        return self.two_j / 2

    @property
    def dim(self) -> int:
        return self.jz.shape[0]

    @property
    def m_values(self) -> np.ndarray:
        """Eigenvalues of J_z along the diagonal of the basis."""
        return np.real(np.diag(self.jz))

    def components(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.jx, self.jy, self.jz


@dataclass(frozen=True)
class CollectiveOps(AngularMomentumOps):
    """Collective J_alpha = sum_i I_alpha,i on ``n_qubits`` spin-1/2 sites."""

    n_qubits: int = 0


def max_qubits() -> int:
    env = os.environ.get("QKT_MAX_QUBITS")
    return int(env) if env else DEFAULT_MAX_QUBITS


def check_qubit_cap(n_qubits: int, cap: int | None = None) -> None:
    cap = max_qubits() if cap is None else cap
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be >= 1, got {n_qubits}")
    if n_qubits > cap:
        raise ResourceCapError(
            f"{n_qubits} qubits exceeds the dense-matrix cap of {cap} "
            "(raise QKT_MAX_QUBITS to override)"
        )


@lru_cache(maxsize=64)
def build_spin_ops(two_j: int) -> AngularMomentumOps:
    """Spin-j operators from the ladder construction.

    The raising-operator elements use the integer identity
    4[j(j+1) - m(m+1)] = 2j(2j+2) - 2m(2m+2) so half-integer spins stay exact
    until the final square root.
    """
    two_j = int(two_j)
    if two_j < 0:
        raise ValueError(f"two_j must be non-negative, got {two_j}")
    dim = two_j + 1
    two_m = two_j - 2 * np.arange(dim)
    # J+ |m> = c |m+1>; with descending order |m+1> sits one row above |m>
    lower = two_m[1:]
    c = np.sqrt(two_j * (two_j + 2) - lower * (lower + 2)) / 2
    jp = np.diag(c, 1).astype(complex)
    jm = jp.conj().T
    jx = (jp + jm) / 2
    jy = (jp - jm) / 2j
    jz = np.diag(two_m / 2).astype(complex)
    return AngularMomentumOps(two_j, _frozen(jx), _frozen(jy), _frozen(jz))


def _bits(n_qubits: int) -> np.ndarray:
    """(2^n, n) array of computational-basis bits, qubit 0 most significant."""
    idx = np.arange(2**n_qubits)
    shifts = np.arange(n_qubits - 1, -1, -1)
    return (idx[:, None] >> shifts[None, :]) & 1


def build_collective_ops(n_qubits: int, cap: int | None = None) -> CollectiveOps:
    check_qubit_cap(n_qubits, cap)
    return _collective_ops(n_qubits)


@lru_cache(maxsize=16)
def _collective_ops(n_qubits: int) -> CollectiveOps:
    dim = 2**n_qubits
    idx = np.arange(dim)
    bits = _bits(n_qubits)
    jz = np.diag((n_qubits - 2 * bits.sum(axis=1)) / 2).astype(complex)
    jx = np.zeros((dim, dim), dtype=complex)
    jy = np.zeros((dim, dim), dtype=complex)
    for site in range(n_qubits):
        flip = 1 << (n_qubits - 1 - site)
        partner = idx ^ flip
        down = bits[:, site].astype(bool)
        jx[idx, partner] += 0.5
        # <0|I_y|1> = -i/2, <1|I_y|0> = +i/2
        jy[idx, partner] += np.where(down, 0.5j, -0.5j)
    return CollectiveOps(n_qubits, _frozen(jx), _frozen(jy), _frozen(jz), n_qubits=n_qubits)


_PAULI_HALF = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex) / 2,
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex) / 2,
    "z": np.array([[1, 0], [0, -1]], dtype=complex) / 2,
}


def site_operator(n_qubits: int, site: int, axis: str) -> np.ndarray:
    """Single-qubit spin-1/2 operator I_axis acting on ``site``."""
    left = np.eye(2**site)
    right = np.eye(2 ** (n_qubits - site - 1))
    return np.kron(np.kron(left, _PAULI_HALF[axis]), right)


@lru_cache(maxsize=16)
def symmetric_embedding(n_qubits: int) -> np.ndarray:
    """Isometry (2^n, n+1) whose columns are the Dicke states |n/2, m>.

    Column order follows m = n/2 down to -n/2, so that V^dag J_alpha V equals
    the spin-(n/2) operators with the Condon-Shortley phase convention.
    """
    bits = _bits(n_qubits)
    weight = bits.sum(axis=1)
    v = np.zeros((2**n_qubits, n_qubits + 1))
    for k in range(n_qubits + 1):
        v[weight == k, k] = 1 / np.sqrt(comb(n_qubits, k))
    return _frozen(v.astype(complex))


def casimir_check(ops: AngularMomentumOps) -> float:
    """Max-abs residual of J^2 - j(j+1) I.

    Collective operators are projected onto the symmetric subspace first; on
    the full 2^n space J^2 is not proportional to the identity.
    """
    jsq = ops.jx @ ops.jx + ops.jy @ ops.jy + ops.jz @ ops.jz
    if isinstance(ops, CollectiveOps):
        v = symmetric_embedding(ops.n_qubits)
        jsq = v.conj().T @ jsq @ v
    target = ops.j * (ops.j + 1) * np.eye(jsq.shape[0])
    return float(np.max(np.abs(jsq - target)))
