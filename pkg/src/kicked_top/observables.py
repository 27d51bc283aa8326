"""Diagnostics recorded along a kicked-top trajectory."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .angmom import AngularMomentumOps, check_qubit_cap
from .errors import DegenerateInputError, NumericalIntegrityError

IMAG_TOL = 1e-10
APERIODIC_RATIO = 3.0
DEFAULT_PAD = 256


def expectations(rho: np.ndarray, ops: AngularMomentumOps) -> tuple[float, float, float]:
    """(<J_x>, <J_y>, <J_z>) / j."""
    if rho.shape != ops.jz.shape:
        raise ValueError(f"state shape {rho.shape} does not match operators {ops.jz.shape}")
    out = []
    for a in ops.components():
        # tr(rho A) = sum_ij rho_ij A_ji
        val = np.sum(rho * a.T)
        if abs(val.imag) > IMAG_TOL:
            raise NumericalIntegrityError(f"expectation value has imaginary part {val.imag:.3e}")
        out.append(float(val.real) / ops.j)
    return tuple(out)


_HALF_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex) / 2,
    np.array([[0, -1j], [1j, 0]], dtype=complex) / 2,
    np.array([[1, 0], [0, -1]], dtype=complex) / 2,
)


def reduced_density_matrices(rho: np.ndarray) -> list[np.ndarray]:
    """Single-qubit marginals of an n-qubit state, qubit 0 most significant."""
    dim = rho.shape[0]
    n = dim.bit_length() - 1
    if 2**n != dim:
        raise ValueError(f"not a multi-qubit state: dimension {dim}")
    check_qubit_cap(n)
    out = []
    for site in range(n):
        left, right = 2**site, 2 ** (n - site - 1)
        t = rho.reshape(left, 2, right, left, 2, right)
        out.append(np.einsum("aibajb->ij", t))
    return out


def expectations_from_reduced(rho: np.ndarray, normalize: bool = True) -> tuple[float, float, float]:
    """Collective <J_alpha> assembled from per-qubit reduced density matrices.

    Normalized by j = n/2 by default, matching ``expectations``.
    """
    marginals = reduced_density_matrices(rho)
    totals = [sum(np.trace(r @ s).real for r in marginals) for s in _HALF_PAULI]
    scale = len(marginals) / 2 if normalize else 1.0
    return tuple(float(t) / scale for t in totals)


def _hs(a: np.ndarray, b: np.ndarray) -> float:
    # tr(a b) for Hermitian a, b
    return float(np.real(np.vdot(a, b)))


def trace_fidelity(dev_t: np.ndarray, dev_s: np.ndarray) -> float:
    norm = math.sqrt(_hs(dev_t, dev_t) * _hs(dev_s, dev_s))
    if norm < 1e-300:
        raise DegenerateInputError("trace fidelity undefined for a zero deviation matrix")
    return _hs(dev_t, dev_s) / norm


def correlation(
    rho: np.ndarray,
    ref_state: np.ndarray,
    mode: str = "state_overlap",
    ops: AngularMomentumOps | None = None,
) -> float:
    """Localization of ``rho`` on a reference coherent state.

    ``state_overlap`` returns <S|rho|S>. ``vector`` returns the squared cosine
    between the normalized expectation vectors of ``rho`` and |S>, and needs
    ``ops``.
    """
    if mode == "state_overlap":
        return float(np.real(ref_state.conj() @ rho @ ref_state))
    if mode == "vector":
        if ops is None:
            raise ValueError("vector mode needs the angular momentum operators")
        e_rho = np.array(expectations(rho, ops))
        e_ref = np.array(expectations(np.outer(ref_state, ref_state.conj()), ops))
        denom = float(e_rho @ e_rho) * float(e_ref @ e_ref)
        if denom < 1e-24:
            raise DegenerateInputError("vector correlation undefined for a zero expectation vector")
        return float(e_rho @ e_ref) ** 2 / denom
    raise ValueError(f"unknown correlation mode {mode!r}")


@dataclass(frozen=True)
class SpectrumResult:
    frequencies: np.ndarray
    amplitudes: np.ndarray
    peak_frequency: float
    period_kicks: float
    aperiodic: bool
    peak_ratio: float = field(default=math.nan)


def spectrum(
    series,
    pad_to: int = DEFAULT_PAD,
    window: str = "none",
    ratio: float = APERIODIC_RATIO,
) -> SpectrumResult:
    """Mean-subtracted, zero-padded DFT magnitude of a per-kick series.

    Frequencies are in cycles per kick. The series is flagged aperiodic when
    the strongest non-DC bin is below ``ratio`` times the median non-DC bin,
    or when everything is at the numerical floor (constant input).
    """
    x = np.asarray(series, dtype=float)
    if x.ndim != 1 or len(x) < 8:
        raise ValueError(f"spectrum needs a 1-D series of at least 8 samples, got shape {x.shape}")
    x = x - x.mean()
    if window == "hann":
        x = x * np.hanning(len(x))
    elif window != "none":
        raise ValueError(f"unknown window {window!r}")
    n_fft = max(int(pad_to), len(x))
    amps = np.abs(np.fft.rfft(x, n_fft))
    freqs = np.fft.rfftfreq(n_fft)
    i = 1 + int(np.argmax(amps[1:]))
    peak, floor = amps[i], float(np.median(amps[1:]))
    if peak <= 1e-12 * len(x):
        return SpectrumResult(freqs, amps, math.nan, math.nan, True, math.nan)
    peak_ratio = peak / floor if floor > 0 else math.inf
    f = float(freqs[i])
    return SpectrumResult(freqs, amps, f, 1.0 / f, bool(peak_ratio < ratio), float(peak_ratio))


@dataclass
class TrajectoryRecord:
    kick: int
    jx: float
    jy: float
    jz: float
    fid: dict[str, float]
    corr: dict[str, float]
    purity: float

    def component(self, name: str) -> float:
        return getattr(self, "j" + name) if name in "xyz" else getattr(self, name)


def auto_pad(n_samples: int) -> int:
    """Zero-padding length: at least the default, and >= 8x the record."""
    return max(DEFAULT_PAD, 1 << (8 * n_samples - 1).bit_length())


def tunneling_period(
    traj: list[TrajectoryRecord],
    component: str = "z",
    pad_to: int | None = None,
    min_amplitude: float = 0.1,
) -> SpectrumResult:
    """Dominant period (in kicks) of <J_x> or <J_z>.

    Besides the spectral ratio test, a series whose peak-to-peak swing is below
    ``min_amplitude`` (in units of j) is flagged aperiodic: a large spin
    precessing inside its island produces a clean but tiny tone that is not
    tunneling.
    """
    if component not in ("x", "z"):
        raise ValueError("component must be 'x' or 'z'")
    if len(traj) < 8:
        raise ValueError("need at least 8 kicks to extract a period")
    series = np.array([r.component(component) for r in traj])
    res = spectrum(series, pad_to or auto_pad(len(series)))
    if np.ptp(series) < min_amplitude and not res.aperiodic:
        res = SpectrumResult(res.frequencies, res.amplitudes, res.peak_frequency,
                             res.period_kicks, True, res.peak_ratio)
    return res
