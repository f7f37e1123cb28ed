"""Compare the three samplers against the exact measure by TV distance and chi-square.

    python scripts/sampler_agreement.py --samples 100000 --cases 3,3,4 2,4,4 3,4,6
"""

import argparse
import time

from skewhowe.measure import chi_square, draw_counts, measure_rhs, tv_distance


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--cases", nargs="+", default=["3,3,4", "2,4,4", "3,4,6"], help="m,n,p triples")
    args = ap.parse_args()

    print(f"{'case':>10} {'sampler':>7} {'TV':>8} {'chi2 p':>8} {'secs':>6}")
    for case in args.cases:
        m, n, p = map(int, case.split(","))
        exact = measure_rhs(m, n, p)
        for sampler in ("exact", "chain", "syt"):
            start = time.perf_counter()
            emp = draw_counts(sampler, m, n, p, args.samples, args.seed, args.workers)
            elapsed = time.perf_counter() - start
            _, pvalue = chi_square(emp, exact)
            print(f"{case:>10} {sampler:>7} {tv_distance(emp, exact):>8.4f} {pvalue:>8.3f} {elapsed:>6.1f}")


if __name__ == "__main__":
    main()
