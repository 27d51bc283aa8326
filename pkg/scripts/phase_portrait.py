"""Classical phase portrait of the kicked top, written as CSV and optionally plotted."""

import argparse
from pathlib import Path

from kicked_top.classical import NAMED_POINTS, generate_portrait
from kicked_top.io import portrait_csv, write_text


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=float, default=3.0)
    ap.add_argument("--grid", type=int, default=20)
    ap.add_argument("--iters", type=int, default=200)
    ap.add_argument("--out", type=Path, default=Path("portrait.csv"))
    ap.add_argument("--plot", type=Path, help="PNG path; needs matplotlib")
    args = ap.parse_args()

    p = generate_portrait(args.k, args.grid, args.iters)
    write_text(args.out, portrait_csv(p))
    print(f"wrote {len(p.theta)} points to {args.out}")
    if args.plot:
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(7, 4))
        ax.scatter(p.phi, p.theta, s=0.2, c="k")
        for label, c in NAMED_POINTS.items():
            ax.annotate(label, (c.phi, c.theta), color="r")
        ax.set_xlabel("phi")
        ax.set_ylabel("theta")
        fig.savefig(args.plot, dpi=150)


if __name__ == "__main__":
    main()
