"""Empirical limit shapes for a fixed aspect ratio and several fill fractions.

Writes one CSV (mean profile with spread) and one SVG overlay per fill
fraction into the output directory, and prints the concentration metric
and mean step count for each run.

    python scripts/limit_shapes.py --m 10 --n 20 --samples 2000 --out shapes/
"""

import argparse
from fractions import Fraction
from pathlib import Path

from skewhowe.limitshape import mean_profile, profiles_svg, sample_profiles, step_count, summary_csv


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=10)
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--sampler", choices=["chain", "syt"], default="syt")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--fractions", default="1/6,1/3,1/2,2/3,5/6",
                    help="comma-separated values of p/(mn)")
    ap.add_argument("--out", type=Path, default=Path("shapes"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    area = args.m * args.n
    print(f"{'p/mn':>6} {'p':>6} {'concentration':>14} {'mean steps':>11}")
    for i, text in enumerate(args.fractions.split(",")):
        p = round(Fraction(text) * area)
        profiles, diagrams = sample_profiles(args.m, args.n, p, args.samples, args.seed + i,
                                             args.sampler, args.workers)
        summary = mean_profile(profiles)
        stem = args.out / f"shape_m{args.m}_n{args.n}_p{p}"
        stem.with_suffix(".csv").write_text(summary_csv(summary), encoding="utf-8")
        stem.with_suffix(".svg").write_text(profiles_svg(profiles[:10], summary), encoding="utf-8")
        steps = sum(step_count(lam) for lam in diagrams) / len(diagrams)
        print(f"{text:>6} {p:>6} {summary.std.max():>14.4f} {steps:>11.2f}")


if __name__ == "__main__":
    main()
