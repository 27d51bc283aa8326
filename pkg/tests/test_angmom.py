import numpy as np
import pytest

from kicked_top.angmom import (
    build_collective_ops,
    build_spin_ops,
    casimir_check,
    site_operator,
    symmetric_embedding,
)
from kicked_top.errors import ResourceCapError

from conftest import SPINS


def comm(a, b):
    return a @ b - b @ a


def test_spin_half_is_pauli_over_two():
    ops = build_spin_ops(1)
    np.testing.assert_array_equal(ops.jz, np.diag([0.5, -0.5]))
    np.testing.assert_allclose(ops.jx, [[0, 0.5], [0.5, 0]], atol=0)
    np.testing.assert_allclose(ops.jy, [[0, -0.5j], [0.5j, 0]], atol=0)


def test_spin_one_standard_matrices():
    ops = build_spin_ops(2)
    np.testing.assert_array_equal(np.diag(ops.jz).real, [1, 0, -1])
    s = 1 / np.sqrt(2)
    np.testing.assert_allclose(ops.jx, [[0, s, 0], [s, 0, s], [0, s, 0]], atol=1e-15)


@pytest.mark.parametrize("two_j", SPINS)
def test_algebra(two_j):
    ops = build_spin_ops(two_j)
    tol = 1e-10 if two_j >= 200 else 1e-12
    jx, jy, jz = ops.components()
    for a in (jx, jy, jz):
        assert np.max(np.abs(a - a.conj().T)) < 1e-12
    assert np.max(np.abs(comm(jx, jy) - 1j * jz)) < tol
    assert np.max(np.abs(comm(jy, jz) - 1j * jx)) < tol
    assert np.max(np.abs(comm(jz, jx) - 1j * jy)) < tol
    assert casimir_check(ops) < tol


@pytest.mark.parametrize("two_j", SPINS)
def test_spectrum_is_ladder(two_j):
    ops = build_spin_ops(two_j)
    expected = np.arange(-two_j, two_j + 1, 2) / 2
    for a in ops.components():
        np.testing.assert_allclose(np.linalg.eigvalsh(a), expected, atol=1e-10)


def test_spin_20_commutator_direct():
    ops = build_spin_ops(40)
    r = ops.jx @ ops.jy - ops.jy @ ops.jx - 1j * ops.jz
    assert np.abs(r).max() < 1e-12


def test_operators_are_read_only():
    ops = build_spin_ops(2)
    with pytest.raises(ValueError):
        ops.jx[0, 0] = 1


def test_collective_single_qubit_matches_spin_half():
    c, s = build_collective_ops(1), build_spin_ops(1)
    for a, b in zip(c.components(), s.components()):
        np.testing.assert_array_equal(a, b)


def test_collective_two_qubit_jz():
    np.testing.assert_array_equal(np.diag(build_collective_ops(2).jz).real, [1, 0, 0, -1])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_jz_squared_pairwise_expansion(n):
    ops = build_collective_ops(n)
    zz = sum(site_operator(n, i, "z") @ site_operator(n, k, "z") for i in range(n) for k in range(i + 1, n))
    expected = n / 4 * np.eye(2**n) + 2 * zz
    np.testing.assert_allclose(ops.jz @ ops.jz, expected, atol=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_collective_matches_kron_sum(n):
    ops = build_collective_ops(n)
    for axis, a in zip("xyz", ops.components()):
        expected = sum(site_operator(n, i, axis) for i in range(n))
        np.testing.assert_allclose(a, expected, atol=1e-15)
    assert np.max(np.abs(comm(ops.jx, ops.jy) - 1j * ops.jz)) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_symmetric_subspace_equivalence(n):
    v = symmetric_embedding(n)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(n + 1), atol=1e-14)
    c, s = build_collective_ops(n), build_spin_ops(n)
    for a, b in zip(c.components(), s.components()):
        restricted = v.conj().T @ a @ v
        np.testing.assert_allclose(restricted, b, atol=1e-12)
        np.testing.assert_allclose(np.linalg.eigvalsh(restricted), np.linalg.eigvalsh(b), atol=1e-10)


def test_three_qubit_casimir_on_symmetric_subspace():
    ops = build_collective_ops(3)
    jsq = ops.jx @ ops.jx + ops.jy @ ops.jy + ops.jz @ ops.jz
    w, vecs = np.linalg.eigh(jsq)
    # top eigenspace of J^2 on 3 qubits is the 4-dim symmetric (j = 3/2) sector
    np.testing.assert_allclose(w[-4:], 15 / 4, atol=1e-12)
    assert casimir_check(ops) < 1e-12


def test_qubit_cap(monkeypatch):
    with pytest.raises(ResourceCapError):
        build_collective_ops(13)
    monkeypatch.setenv("QKT_MAX_QUBITS", "2")
    with pytest.raises(ResourceCapError):
        build_collective_ops(3)
    assert build_collective_ops(2).dim == 4
