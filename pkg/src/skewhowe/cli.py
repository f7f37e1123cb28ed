"""Command-line interface.

Exit status: 0 success, 1 an identity failed, 2 a resource cap was hit,
64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import characters as ch
from .dims import dim_external_power, f_dim, gl_dim, verify_rect_content_identity
from .errors import DomainError, ResourceError, TheoremCheckFailure
from .limitshape import (
    mean_profile, profiles_svg, sample_profiles, step_count, summary_csv,
)
from .measure import (
    EXACT_CAP, EmpiricalCounts, chi_square, draw, measure_lhs, measure_rhs, tv_distance,
)
from .partitions import Partition, Rectangle, complement, conjugate, enumerate_partitions
from .reports import CheckReport, exact_str
from .streams import DERIVATION
from .tableaux import SemistandardTableau, complement_ssyt, enumerate_ssyt

EXIT_OK, EXIT_FAILED, EXIT_RESOURCE, EXIT_USAGE = 0, 1, 2, 64
BIJECTION_CAP = 100_000
PAIR_CONJUGATION_P_CAP = 5
JM_FACTORIZATION_P_CAP = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    m: int
    n: int
    p: int | None = None
    p_prime: int | None = None
    samples: int = 1000
    seed: int = 0
    sampler: str = "syt"
    format: str = "json"
    output: str | None = None
    workers: int = 1
    overlay: int = 10
    shape: Partition | None = None
    tableau: list | None = None

    def validate(self) -> None:
        if self.m < 1 or self.n < 1:
            raise UsageError(f"--m and --n must be >= 1 (got m={self.m}, n={self.n})")
        if self.p is not None and not 0 <= self.p <= self.m * self.n:
            raise UsageError(f"--p must lie in 0..{self.m * self.n}")
        if self.p_prime is not None and (self.p is None or not self.p <= self.p_prime <= self.m * self.n):
            raise UsageError("--p-prime needs --p <= --p-prime <= m*n")
        if self.samples < 1:
            raise UsageError("--samples must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise UsageError("--seed must be a 64-bit unsigned integer")


def _json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


def _header(cfg: RunConfig, **extra) -> dict:
    return {"command": cfg.command, "m": cfg.m, "n": cfg.n, "p": cfg.p, **extra}


def _p_values(cfg: RunConfig) -> list[int]:
    return [cfg.p] if cfg.p is not None else list(range(cfg.m * cfg.n + 1))


def verify_reports(m: int, n: int, p: int) -> list[CheckReport]:
    rect = Rectangle(m, n)
    lhs, rhs = measure_lhs(m, n, p), measure_rhs(m, n, p)
    support = lhs.support

    eq = CheckReport("measure_equality", {"m": m, "n": n, "p": p})
    if lhs.support != rhs.support:
        eq.add(len(lhs.support), len(rhs.support), partition="support")
    for lam, w in lhs.atoms:
        eq.add(w, rhs.weight(lam), partition=list(lam))

    norm = CheckReport("normalization", {"m": m, "n": n, "p": p})
    norm.add(sum(gl_dim(lam, m) * gl_dim(conjugate(lam), n) for lam in support),
             dim_external_power(m, n, p), side="sum dim S^lam C^m dim S^lam' C^n = C(mn,p)")
    norm.add(sum(f_dim(lam) * f_dim(complement(lam, rect)) for lam in support),
             f_dim(rect.full), side="sum f^lam f^(rect/lam) = f^rect")

    const = CheckReport("constant_C", {"m": m, "n": n, "p": p})
    expected = Fraction(f_dim(rect.full), dim_external_power(m, n, p))
    for lam in support:
        value = Fraction(f_dim(lam) * f_dim(complement(lam, rect)),
                         gl_dim(lam, m) * gl_dim(conjugate(lam), n))
        const.add(value, expected, partition=list(lam))

    content = CheckReport("rect_content_identity", {"m": m, "n": n})
    content.add(*verify_rect_content_identity(rect), rectangle=[m, n])

    schur = CheckReport("complement_schur_symmetry", {"m": m, "n": n, "p": p})
    for lam in support:
        nu = conjugate(lam)
        schur.add(gl_dim(nu, n), gl_dim(complement(nu, rect.transpose()), n), nu=list(nu), k=n)
        schur.add(gl_dim(lam, m), gl_dim(complement(lam, rect), m), nu=list(lam), k=m)
    return [eq, norm, const, content, schur]


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    if cfg.m * cfg.n > EXACT_CAP:
        raise ResourceError(f"exact verification refused for m*n={cfg.m * cfg.n} > {EXACT_CAP}")
    reports = [r for p in _p_values(cfg) for r in verify_reports(cfg.m, cfg.n, p)]
    ok = all(r.ok for r in reports)
    body = {**_header(cfg), "ok": ok,
            "checks": [{**r.to_dict(), "status": "exact-equal" if r.ok else "MISMATCH"} for r in reports]}
    return (EXIT_OK if ok else EXIT_FAILED), _json(body)


def cmd_table(cfg: RunConfig) -> tuple[int, str]:
    if cfg.p is None:
        raise UsageError("table needs --p")
    measure = measure_rhs(cfg.m, cfg.n, cfg.p)
    if cfg.format == "json":
        return EXIT_OK, _json(measure.to_dict())
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(["partition", "weight_num", "weight_den", "weight_float"])
        for lam, w in measure.atoms:
            writer.writerow([lam.to_json(), w.numerator, w.denominator, repr(float(w))])
        return EXIT_OK, buf.getvalue()
    raise UsageError(f"table does not support format {cfg.format}")


def cmd_sample(cfg: RunConfig) -> tuple[int, str]:
    if cfg.p is None:
        raise UsageError("sample needs --p")
    draws = draw(cfg.sampler, cfg.m, cfg.n, cfg.p, cfg.samples, cfg.seed, cfg.workers)
    emp = EmpiricalCounts.from_draws(draws, cfg.seed)
    summary: dict = {
        "counts": [{"partition": list(lam), "count": c}
                   for lam, c in sorted(emp.counts.items(), reverse=True)],
        "total": emp.total,
        "tv_distance": None,
    }
    if cfg.m * cfg.n <= EXACT_CAP:
        exact = measure_rhs(cfg.m, cfg.n, cfg.p)
        stat, pvalue = chi_square(emp, exact)
        summary.update(tv_distance=tv_distance(emp, exact), chi_square=stat, p_value=pvalue)
    header = _header(cfg, sampler=cfg.sampler, samples=cfg.samples, seed=cfg.seed, seed_derivation=DERIVATION)
    if cfg.format == "json":
        return EXIT_OK, _json({"header": header, "draws": [list(lam) for lam in draws], "summary": summary})
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(["draw", "partition"])
        for i, lam in enumerate(draws):
            writer.writerow([i, lam.to_json()])
        sys.stderr.write(json.dumps({"header": header, "summary": summary}) + "\n")
        return EXIT_OK, buf.getvalue()
    raise UsageError(f"sample does not support format {cfg.format}")


def cmd_shape(cfg: RunConfig) -> tuple[int, str]:
    if cfg.p is None:
        raise UsageError("shape needs --p")
    if cfg.samples < 2:
        raise UsageError("shape needs --samples >= 2 to estimate spread")
    profiles, diagrams = sample_profiles(cfg.m, cfg.n, cfg.p, cfg.samples, cfg.seed, cfg.sampler, cfg.workers)
    summary = mean_profile(profiles)
    if cfg.format == "csv":
        return EXIT_OK, summary_csv(summary)
    if cfg.format == "svg":
        return EXIT_OK, profiles_svg(profiles[: cfg.overlay], summary)
    if cfg.format == "json":
        steps = [step_count(lam) for lam in diagrams]
        body = {
            "header": _header(cfg, sampler=cfg.sampler, samples=cfg.samples, seed=cfg.seed,
                              seed_derivation=DERIVATION),
            "profile": [{"x": float(x), "mean_height": float(h), "std_dev": float(s)}
                        for x, h, s in zip(summary.mean.grid, summary.mean.heights, summary.std)],
            "concentration": float(summary.std.max()),
            "step_count": {"mean": sum(steps) / len(steps), "min": min(steps), "max": max(steps)},
        }
        return EXIT_OK, _json(body)
    raise UsageError(f"shape does not support format {cfg.format}")


def cmd_character(cfg: RunConfig) -> tuple[int, str]:
    if cfg.p is None:
        raise UsageError("character needs --p")
    m, n, p = cfg.m, cfg.n, cfg.p
    reports = [ch.verify_restriction(m, n, p)]
    skipped = []
    if cfg.p_prime is not None:
        reports.append(ch.verify_p_independence(m, n, p, cfg.p_prime))
    if (m * n) ** (p + 1) <= ch.DENSE_DIM_CAP:
        reports.append(ch.verify_jm_partial_trace(m, n, p))
    else:
        skipped.append("jm_partial_trace")
    if p <= JM_FACTORIZATION_P_CAP:
        reports.append(ch.verify_jm_factorization(p))
    else:
        skipped.append("jm_factorization")
    if p <= PAIR_CONJUGATION_P_CAP:
        reports.append(ch.verify_pair_conjugation(m, n, p))
    else:
        skipped.append("pair_conjugation")
    ok = all(r.ok for r in reports)
    body = {**_header(cfg, p_prime=cfg.p_prime), "ok": ok, "skipped": skipped,
            "checks": [r.to_dict() for r in reports]}
    return (EXIT_OK if ok else EXIT_FAILED), _json(body)


def _bijection_for_shape(nu: Partition, rect: Rectangle, pairs: list | None) -> CheckReport:
    expected = gl_dim(nu, rect.rows)
    if expected > BIJECTION_CAP:
        raise ResourceError(f"{expected} tableaux of shape {list(nu)} exceed the cap {BIJECTION_CAP}")
    report = CheckReport("bijection", {"shape": list(nu), "rows": rect.rows, "cols": rect.cols})
    bar = complement(nu, rect)
    images, round_trips, count = set(), True, 0
    for t in enumerate_ssyt(nu, rect.rows):
        image = complement_ssyt(t, rect)
        round_trips &= complement_ssyt(image, rect) == t
        images.add(image)
        count += 1
        if pairs is not None:
            pairs.append({"tableau": [list(r) for r in t.rows], "complement": [list(r) for r in image.rows]})
    report.add(count, sum(1 for _ in enumerate_ssyt(bar, rect.rows)), complement_shape=list(bar), what="counts")
    report.add(len(images), count, what="injective")
    report.add(round_trips, True, what="round trip")
    return report


def cmd_bijection(cfg: RunConfig) -> tuple[int, str]:
    rect = Rectangle(cfg.m, cfg.n)
    body: dict = {"command": "bijection", "rows": cfg.m, "cols": cfg.n}
    reports = []
    try:
        if cfg.tableau is not None:
            t = SemistandardTableau(cfg.tableau)
            image = complement_ssyt(t, rect)
            r = CheckReport("bijection_single", {"shape": list(t.shape)})
            r.add(complement_ssyt(image, rect) == t, True, what="round trip")
            reports.append(r)
            body["pairs"] = [{"tableau": [list(x) for x in t.rows],
                              "complement": [list(x) for x in image.rows],
                              "complement_shape": list(image.shape)}]
        elif cfg.shape is not None:
            pairs: list = []
            reports.append(_bijection_for_shape(cfg.shape, rect, pairs))
            body["pairs"] = pairs
        else:
            for p in range(rect.area + 1):
                for nu in enumerate_partitions(rect, p):
                    reports.append(_bijection_for_shape(nu, rect, None))
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    ok = all(r.ok for r in reports)
    body.update(ok=ok, checks=[r.to_dict() for r in reports])
    return (EXIT_OK if ok else EXIT_FAILED), _json(body)


COMMANDS = {
    "verify": cmd_verify,
    "table": cmd_table,
    "sample": cmd_sample,
    "shape": cmd_shape,
    "character": cmd_character,
    "bijection": cmd_bijection,
}


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"not valid JSON: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewhowe", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--p", type=int)
        sp.add_argument("--p-prime", type=int, dest="p_prime")
        sp.add_argument("--samples", type=int, default=1000)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--sampler", choices=["exact", "chain", "syt"], default="syt")
        sp.add_argument("--format", choices=["json", "csv", "svg"],
                        default="csv" if name == "shape" else "json")
        sp.add_argument("--out", dest="output")
        sp.add_argument("--workers", type=int, default=1)
        if name == "shape":
            sp.add_argument("--overlay", type=int, default=10, help="sampled staircases drawn in the SVG")
        if name == "bijection":
            sp.add_argument("--shape", type=_json_arg, help="JSON partition, e.g. [7,5,4,2]")
            sp.add_argument("--tableau", type=_json_arg, help="JSON rows, e.g. [[1,1,2],[2,3]]")
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    args = build_parser().parse_args(argv)
    fields = vars(args)
    shape = fields.pop("shape", None)
    cfg = RunConfig(**fields)
    if shape is not None:
        try:
            cfg.shape = Partition(shape)
        except (DomainError, TypeError) as exc:
            raise UsageError(str(exc)) from exc
    cfg.validate()
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        status, text = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ResourceError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_RESOURCE
    except TheoremCheckFailure as exc:
        sys.stderr.write(f"identity failed: {exc}\n")
        return EXIT_FAILED
    except DomainError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
