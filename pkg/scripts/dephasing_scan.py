"""Loss of C_A oscillation amplitude under coherence-order dephasing.

Amplitude is the peak-to-peak swing of C_A over kicks 10 to 25.
"""

import argparse

import numpy as np

from kicked_top.evolution import DephasingSpec
from kicked_top.pipeline import RunConfig, simulate


def amplitude(two_j: int, lam: float, kicks: int) -> tuple[float, float, float]:
    noise = DephasingSpec("coherence_order", lam) if lam else None
    recs = simulate(RunConfig(two_j=two_j, n_kicks=kicks, noise=noise))
    ca = np.array([r.corr["A"] for r in recs[10:]])
    jz = np.array([r.jz for r in recs[10:]])
    return float(np.ptp(ca)), float(np.ptp(jz)), recs[-1].purity


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--strengths", default="0,0.005,0.01,0.02,0.05,0.1,0.2")
    ap.add_argument("--kicks", type=int, default=25)
    args = ap.parse_args()

    lams = [float(v) for v in args.strengths.split(",")]
    print("two_j,strength,ptp_CA,loss_CA,ptp_jz,loss_jz,final_purity")
    for two_j in (2, 3):
        base_ca, base_jz, _ = amplitude(two_j, 0.0, args.kicks)
        for lam in lams:
            ca, jz, pur = amplitude(two_j, lam, args.kicks)
            print(f"{two_j},{lam},{ca:.4f},{1 - ca / base_ca:.4f},{jz:.4f},{1 - jz / base_jz:.4f},{pur:.4f}")


if __name__ == "__main__":
    main()
