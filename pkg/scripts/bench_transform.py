#!/usr/bin/env python3
"""Time the fast transform path against the quadratic reference path."""

import argparse

from abelfft import Group
from abelfft.bench import time_transform_paths


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", nargs="+", type=int, default=[4096])
    parser.add_argument("--reps", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    result = time_transform_paths(Group(tuple(args.orders)), reps=args.reps, seed=args.seed)
    print(f"orders:         {result['orders']}")
    print(f"size:           {result['size']}")
    print(f"reps:           {result['reps']}")
    print(f"fft median:     {result['fft_median_s'] * 1e3:.3f} ms")
    if result["naive_median_s"] is None:
        print("naive median:   skipped (size above 4096)")
    else:
        print(f"naive median:   {result['naive_median_s'] * 1e3:.3f} ms")
        print(f"speedup:        {result['speedup']:.1f}x")


if __name__ == "__main__":
    main()
