"""Run every exact check over a grid of rectangles and print one line per family.

    python scripts/verify_all.py --max-side 5
"""

import argparse

from skewhowe.characters import verify_pair_conjugation, verify_restriction
from skewhowe.cli import verify_reports
from skewhowe.errors import ResourceError


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-side", type=int, default=5)
    args = ap.parse_args()

    tally: dict[str, list[int]] = {}

    def record(report):
        ok, total = tally.setdefault(report.name, [0, 0])
        tally[report.name] = [ok + report.ok, total + 1]

    sides = range(1, args.max_side + 1)
    for m in sides:
        for n in sides:
            for p in range(m * n + 1):
                for r in verify_reports(m, n, p):
                    record(r)
                try:
                    record(verify_restriction(m, n, p))
                except ResourceError:
                    pass
                if m <= 3 and n <= 3 and p <= 5:
                    record(verify_pair_conjugation(m, n, p))
    for name, (ok, total) in tally.items():
        print(f"{name:28s} {ok:5d}/{total:<5d} {'ok' if ok == total else 'MISMATCH'}")


if __name__ == "__main__":
    main()
