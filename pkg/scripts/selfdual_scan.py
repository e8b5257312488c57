#!/usr/bin/env python3
"""Scan the ternary self-dual selector family for a given even m.

Every selector vector (j_0, ..., j_{m/2-1}) with j_i in {i, m-1-i} defines a
negacyclic code of length (3^m - 1)/2; each is checked for self-duality by
both the Gram test and the defining-set partition.

Usage: python scripts/selfdual_scan.py --m 4 [--sample K] [--out PATH]
"""

import argparse
import sys

from constacyclic import cli


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, required=True)
    ap.add_argument("--sample", type=int, default=None)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    argv = ["selfdual-scan", "--m", str(args.m)]
    if args.sample is not None:
        argv += ["--sample", str(args.sample)]
    if args.out is not None:
        argv += ["--out", args.out]
    return cli.main(argv)


if __name__ == "__main__":
    sys.exit(main())
