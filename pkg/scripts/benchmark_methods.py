#!/usr/bin/env python3
"""Timing comparison of the three sigma routes as factor order grows.

The counting route only touches the two factor matrices, so its cost is
dominated by the per-factor all-pairs runs; the naive route pays for
v1^2 * v2^2 comparisons; the oracle route builds the explicit product and
runs all-pairs on v1*v2 vertices.
"""

import argparse
import random
import sys
import time

from strongprod.generate import random_strongly_connected
from strongprod.metrics import (
    average_distance_oracle,
    average_distance_product,
)


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=int, nargs="+",
                        default=[20, 40, 60, 80, 100])
    parser.add_argument("--density", type=float, default=0.1)
    parser.add_argument("--oracle-limit", type=int, default=1600,
                        help="skip the oracle above this product order; its "
                             "all-pairs run is cubic in the product size")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'order':>6} {'counting':>10} {'naive':>10} {'oracle':>10}   mu")
    for n in args.orders:
        g1 = random_strongly_connected(rng, n, density=args.density)
        g2 = random_strongly_connected(rng, n, density=args.density)

        counting, t_counting = timed(
            average_distance_product, g1, g2, method="counting"
        )
        naive, t_naive = timed(average_distance_product, g1, g2, method="naive")
        assert naive.sigma == counting.sigma

        if n * n <= args.oracle_limit:
            oracle, t_oracle = timed(average_distance_oracle, g1, g2)
            assert oracle.sigma == counting.sigma
            oracle_cell = f"{t_oracle:9.3f}s"
        else:
            oracle_cell = "   skipped"

        print(f"{n:>6} {t_counting:9.3f}s {t_naive:9.3f}s {oracle_cell}   "
              f"{counting.mu_decimal}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
