"""Classical kicked-top map on the unit sphere and phase-portrait generation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class SphericalCoord:
    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < TWO_PI:
            raise ValueError(f"phi must lie in [0, 2pi), got {self.phi}")

    @classmethod
    def wrapped(cls, theta: float, phi: float) -> "SphericalCoord":
        """Build a coordinate, folding phi into [0, 2pi)."""
        phi = float(phi) % TWO_PI
        if phi >= TWO_PI:
            phi = 0.0
        return cls(float(theta), phi)


@dataclass(frozen=True)
class ClassicalState:
    x: float
    y: float
    z: float

    def __post_init__(self):
        norm = math.sqrt(self.x**2 + self.y**2 + self.z**2)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"classical state must be a unit vector, |v| = {norm!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @classmethod
    def from_array(cls, v) -> "ClassicalState":
        v = np.asarray(v, dtype=float)
        v = v / np.linalg.norm(v)
        return cls(float(v[0]), float(v[1]), float(v[2]))


# Regular-island centres quoted for k = 3. B sits on the outermost invariant
# curve of the A island and C in the connected chaotic sea; both were placed by
# inspecting the k = 3 portrait (see scripts/validate_named_points.py).
NAMED_POINTS: dict[str, SphericalCoord] = {
    "A": SphericalCoord(2.25, 0.63),
    "A'": SphericalCoord(math.pi - 2.25, math.pi - 0.63),
    "B": SphericalCoord(2.40, 0.63),
    "C": SphericalCoord(1.40, 2.20),
    "E": SphericalCoord(2.25, 0.63 + math.pi),
    "E'": SphericalCoord(math.pi - 2.25, TWO_PI - 0.63),
}

_ALIASES = {"Ap": "A'", "Ep": "E'"}


def named_point(label: str) -> SphericalCoord:
    key = _ALIASES.get(label, label)
    try:
        return NAMED_POINTS[key]
    except KeyError:
        raise KeyError(f"unknown named point {label!r}; known: {sorted(NAMED_POINTS)}") from None


def _snap(x: float) -> float:
    # cos(pi/2) evaluates to 6e-17; keep exact fixed points such as (0, 1, 0) exact
    return 0.0 if abs(x) < 1e-15 else x


def to_cartesian(c: SphericalCoord) -> ClassicalState:
    st = math.sin(c.theta)
    return ClassicalState(
        _snap(st * math.cos(c.phi)), _snap(st * math.sin(c.phi)), _snap(math.cos(c.theta))
    )


def to_spherical(s: ClassicalState) -> SphericalCoord:
    theta = math.acos(min(1.0, max(-1.0, s.z)))
    return SphericalCoord.wrapped(theta, math.atan2(s.y, s.x))


def classical_map(v: np.ndarray, k: float) -> np.ndarray:
    """One kick of the classical top, without renormalization.

    ``v`` has shape (..., 3); the map acts on the last axis.
    """
    v = np.asarray(v, dtype=float)
    x, y, z = v[..., 0], v[..., 1], v[..., 2]
    c, s = np.cos(k * x), np.sin(k * x)
    return np.stack([z * c + y * s, -z * s + y * c, -x], axis=-1)


def _renormalize(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def classical_step(s: ClassicalState, k: float) -> ClassicalState:
    return ClassicalState.from_array(classical_map(s.as_array(), k))


def classical_trajectory(c0: SphericalCoord, k: float, n_steps: int) -> list[SphericalCoord]:
    if n_steps < 0:
        raise ValueError("n_steps must be non-negative")
    out = [c0]
    s = to_cartesian(c0)
    for _ in range(n_steps):
        s = classical_step(s, k)
        out.append(to_spherical(s))
    return out


@dataclass(frozen=True)
class PhasePortrait:
    k: float
    traj_id: np.ndarray
    iteration: np.ndarray
    theta: np.ndarray
    phi: np.ndarray

    def __len__(self):
        return len(self.theta)


def _angles(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    theta = np.arccos(np.clip(v[..., 2], -1.0, 1.0))
    phi = np.mod(np.arctan2(v[..., 1], v[..., 0]), TWO_PI)
    phi[phi >= TWO_PI] = 0.0
    return theta, phi


def portrait_seeds(grid: int) -> np.ndarray:
    """grid x grid unit vectors on a midpoint lattice uniform in (cos theta, phi)."""
    u = -1.0 + (2 * np.arange(grid) + 1) / grid
    phi = TWO_PI * (np.arange(grid) + 0.5) / grid
    cz, ph = np.meshgrid(u, phi, indexing="ij")
    st = np.sqrt(1 - cz**2)
    return np.stack([st * np.cos(ph), st * np.sin(ph), cz], axis=-1).reshape(-1, 3)


def generate_portrait(k: float, grid: int, n_iter: int) -> PhasePortrait:
    """Iterate a grid of seeds; every visited point (including iterate 0) is kept."""
    if grid < 2:
        raise ValueError("grid must be >= 2")
    if n_iter < 1:
        raise ValueError("n_iter must be >= 1")
    v = portrait_seeds(grid)
    n_traj = len(v)
    frames = [v]
    for _ in range(n_iter):
        v = _renormalize(classical_map(v, k))
        frames.append(v)
    stack = np.stack(frames, axis=1)  # (n_traj, n_iter+1, 3)
    theta, phi = _angles(stack)
    traj_id = np.repeat(np.arange(n_traj), n_iter + 1)
    iteration = np.tile(np.arange(n_iter + 1), n_traj)
    return PhasePortrait(k, traj_id, iteration, theta.ravel(), phi.ravel())
