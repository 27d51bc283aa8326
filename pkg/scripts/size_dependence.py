"""Tunneling period and peak A' fidelity as the spin grows."""

import argparse

from kicked_top.pipeline import RunConfig, SweepConfig, sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--two-j", default="2,3,4,6,10,20,40,100,200")
    ap.add_argument("--kicks", type=int, default=200)
    ap.add_argument("--parallelism", type=int, default=1)
    args = ap.parse_args()

    values = tuple(int(v) for v in args.two_j.split(","))
    cfg = SweepConfig("two_j", values, RunConfig(n_kicks=args.kicks), args.parallelism)
    _, summary = sweep(cfg)
    print(summary, end="")


if __name__ == "__main__":
    main()
