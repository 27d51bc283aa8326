"""Finite-time Lyapunov exponents of the named phase-space points at k = 3.

Regular points (A, A', B, E, E') give exponents near zero; C sits in the
chaotic sea. Also scans theta outward from A to locate the island border.
"""

import argparse
import math

import numpy as np

from kicked_top.classical import NAMED_POINTS, SphericalCoord, classical_map, to_cartesian


def ftle(c: SphericalCoord, k: float, n: int = 3000, d0: float = 1e-8) -> float:
    v = to_cartesian(c).as_array()
    w = to_cartesian(SphericalCoord(c.theta + d0, c.phi)).as_array()
    total = 0.0
    for _ in range(n):
        v = classical_map(v, k)
        w = classical_map(w, k)
        v /= np.linalg.norm(v)
        w /= np.linalg.norm(w)
        d = np.linalg.norm(w - v)
        total += math.log(d / d0)
        w = v + (w - v) * d0 / d
    return total / n


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=float, default=3.0)
    ap.add_argument("--steps", type=int, default=3000)
    args = ap.parse_args()

    print("label,theta,phi,ftle")
    for label, c in NAMED_POINTS.items():
        print(f"{label},{c.theta:.4f},{c.phi:.4f},{ftle(c, args.k, args.steps):.4f}")

    a = NAMED_POINTS["A"]
    print("\ntheta,ftle  (phi fixed at A)")
    for theta in np.arange(a.theta, a.theta + 0.26, 0.02):
        print(f"{theta:.2f},{ftle(SphericalCoord(theta, a.phi), args.k, args.steps):.4f}")


if __name__ == "__main__":
    main()
