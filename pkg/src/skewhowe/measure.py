"""The law of a random irreducible component of the p-th exterior power of C^m (x) C^n.

A component ``S^lam C^m (x) S^lam' C^n`` is picked with probability
proportional to its dimension.  The same law arises as the shape of the
entries ``<= p`` in a uniformly random standard tableau of the ``m x n``
rectangle, and as the endpoint of a growth chain driven by skew dimensions.
This module builds the law exactly (``Fraction`` weights) and provides all
three samplers.
"""

from __future__ import annotations

import bisect
import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, partial
from typing import Callable, Iterable, Mapping

from .dims import dim_external_power, f_dim, gl_dim, skew_rect_dim
from .errors import DomainError, ResourceError, TheoremCheckFailure
from .partitions import Partition, Rectangle, add_corners, complement, conjugate, enumerate_partitions
from .streams import BLOCK_SIZE, block_rng
from .tableaux import hook_walk_corners

__all__ = [
    "EXACT_CAP", "ProbMeasure", "EmpiricalCounts",
    "measure_lhs", "measure_rhs", "constant_C",
    "sample_exact", "sample_chain", "sample_via_syt", "chain_transitions", "chain_marginal",
    "SAMPLERS", "draw", "draw_counts", "tv_distance", "tv_distance_exact", "chi_square",
]

# largest m*n for which the exact tables are built
EXACT_CAP = 42


def _check_range(m: int, n: int, p: int) -> None:
    if m < 1 or n < 1:
        raise DomainError(f"m, n must be positive, got m={m}, n={n}")
    if not 0 <= p <= m * n:
        raise DomainError(f"p={p} outside 0..{m * n}")


def _check_cap(m: int, n: int) -> None:
    if m * n > EXACT_CAP:
        raise ResourceError(f"exact measure refused for m*n={m * n} > {EXACT_CAP}")


@dataclass(frozen=True)
class ProbMeasure:
    m: int
    n: int
    p: int
    atoms: tuple[tuple[Partition, Fraction], ...]

    def __post_init__(self):
        if any(w <= 0 for _, w in self.atoms):
            raise DomainError("weights must be strictly positive")
        if sum(w for _, w in self.atoms) != 1:
            raise TheoremCheckFailure(f"weights of ({self.m},{self.n},{self.p}) do not sum to 1")

    @property
    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.atoms]

    def weight(self, lam: Partition) -> Fraction:
        return self.as_dict().get(Partition(lam), Fraction(0))

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.atoms)

    @cached_property
    def _cumulative(self) -> tuple[int, list[int]]:
        denom = math.lcm(*(w.denominator for _, w in self.atoms))
        cum, acc = [], 0
        for _, w in self.atoms:
            acc += w.numerator * (denom // w.denominator)
            cum.append(acc)
        assert acc == denom
        return denom, cum

    def to_dict(self) -> dict:
        return {
            "m": self.m, "n": self.n, "p": self.p,
            "atoms": [
                {"partition": list(lam), "weight": str(w), "weight_float": float(w)}
                for lam, w in self.atoms
            ],
        }


def measure_lhs(m: int, n: int, p: int) -> ProbMeasure:
    """Weights dim(S^lam C^m) dim(S^lam' C^n) / C(mn, p)."""
    _check_range(m, n, p)
    _check_cap(m, n)
    total = dim_external_power(m, n, p)
    atoms = tuple(
        (lam, Fraction(gl_dim(lam, m) * gl_dim(conjugate(lam), n), total))
        for lam in enumerate_partitions(Rectangle(m, n), p)
    )
    return ProbMeasure(m, n, p, atoms)


@lru_cache(maxsize=256)
def measure_rhs(m: int, n: int, p: int) -> ProbMeasure:
    """Weights f^lam f^(rect/lam) / f^rect."""
    _check_range(m, n, p)
    _check_cap(m, n)
    rect = Rectangle(m, n)
    f_rect = f_dim(rect.full)
    atoms = tuple(
        (lam, Fraction(f_dim(lam) * skew_rect_dim(lam, rect), f_rect))
        for lam in enumerate_partitions(rect, p)
    )
    return ProbMeasure(m, n, p, atoms)


def constant_C(m: int, n: int, p: int) -> Fraction:
    """The ratio f^lam f^(rect/lam) / (dim S^lam C^m dim S^lam' C^n), common to all lam."""
    _check_range(m, n, p)
    _check_cap(m, n)
    rect = Rectangle(m, n)
    values = {
        lam: Fraction(f_dim(lam) * skew_rect_dim(lam, rect), gl_dim(lam, m) * gl_dim(conjugate(lam), n))
        for lam in enumerate_partitions(rect, p)
    }
    distinct = set(values.values())
    if len(distinct) != 1:
        raise TheoremCheckFailure(f"C_{{{n},{m},{p}}} is not constant: {values}")
    (value,) = distinct
    expected = Fraction(f_dim(rect.full), dim_external_power(m, n, p))
    if value != expected:
        raise TheoremCheckFailure(f"C_{{{n},{m},{p}}} = {value}, expected {expected}")
    return value


def sample_exact(measure: ProbMeasure, rng: random.Random) -> Partition:
    """Inverse-CDF draw on a common denominator; no floating point involved."""
    denom, cum = measure._cumulative
    u = rng.randrange(denom)
    return measure.atoms[bisect.bisect_right(cum, u)][0]


@lru_cache(maxsize=None)
def chain_transitions(lam: Partition, rect: Rectangle) -> tuple[tuple[Partition, int], ...]:
    """Successors of ``lam`` with integer weights f^(rect/mu); they sum to f^(rect/lam)."""
    out = tuple((mu, skew_rect_dim(mu, rect)) for mu in add_corners(lam, rect))
    if sum(w for _, w in out) != skew_rect_dim(lam, rect):
        raise TheoremCheckFailure(f"successor weights of {lam!r} do not sum to f^(rect/lam)")
    return out


def sample_chain(m: int, n: int, p: int, rng: random.Random) -> Partition:
    _check_range(m, n, p)
    rect = Rectangle(m, n)
    lam = Partition()
    for _ in range(p):
        total = skew_rect_dim(lam, rect)
        u = rng.randrange(total)
        for mu, w in chain_transitions(lam, rect):
            if u < w:
                lam = mu
                break
            u -= w
    return lam


def chain_marginal(m: int, n: int, p: int) -> dict[Partition, Fraction]:
    """Exact law of the growth chain after ``p`` steps, by forward propagation."""
    _check_range(m, n, p)
    rect = Rectangle(m, n)
    law = {Partition(): Fraction(1)}
    for _ in range(p):
        nxt: dict[Partition, Fraction] = {}
        for lam, prob in law.items():
            total = skew_rect_dim(lam, rect)
            for mu, w in chain_transitions(lam, rect):
                nxt[mu] = nxt.get(mu, Fraction(0)) + prob * Fraction(w, total)
        law = nxt
    return law


def sample_via_syt(m: int, n: int, p: int, rng: random.Random) -> Partition:
    """Boxes with entries <= p of a uniform random tableau of the m x n rectangle.

    The hook walk places entries from the largest down, so only the first
    ``m*n - p`` walks are run; the stream is consumed exactly as by a full
    ``gnw_sample_syt`` up to that point.
    """
    _check_range(m, n, p)
    rows = [n] * m
    walks = hook_walk_corners(Partition(rows), rng)
    for _ in range(m * n - p):
        i, _j = next(walks)
        rows[i] -= 1
    return Partition(rows)


def _sample_exact_mnp(m: int, n: int, p: int, rng: random.Random) -> Partition:
    return sample_exact(measure_rhs(m, n, p), rng)


SAMPLERS: dict[str, Callable[[int, int, int, random.Random], Partition]] = {
    "exact": _sample_exact_mnp,
    "chain": sample_chain,
    "syt": sample_via_syt,
}


def _draw_block(sampler: str, m: int, n: int, p: int, seed: int, block: int, size: int) -> list[Partition]:
    rng = block_rng(seed, block)
    fn = SAMPLERS[sampler]
    return [fn(m, n, p, rng) for _ in range(size)]


def draw(sampler: str, m: int, n: int, p: int, samples: int, seed: int, workers: int = 1) -> list[Partition]:
    """``samples`` draws in a fixed order; identical for any ``workers``."""
    if sampler not in SAMPLERS:
        raise DomainError(f"unknown sampler {sampler!r}")
    _check_range(m, n, p)
    if sampler == "exact":
        _check_cap(m, n)
    if samples < 1:
        raise DomainError("samples must be >= 1")
    sizes = [min(BLOCK_SIZE, samples - start) for start in range(0, samples, BLOCK_SIZE)]
    job = partial(_draw_block, sampler, m, n, p, seed)
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(job, range(len(sizes)), sizes))
    else:
        blocks = [job(b, size) for b, size in enumerate(sizes)]
    return [lam for block in blocks for lam in block]


@dataclass
class EmpiricalCounts:
    counts: Counter = field(default_factory=Counter)
    total: int = 0
    seed: int | None = None

    @classmethod
    def from_draws(cls, draws: Iterable[Partition], seed: int | None = None) -> "EmpiricalCounts":
        counts = Counter(draws)
        return cls(counts, sum(counts.values()), seed)

    def merge(self, other: "EmpiricalCounts") -> "EmpiricalCounts":
        return EmpiricalCounts(self.counts + other.counts, self.total + other.total, self.seed)


def draw_counts(sampler: str, m: int, n: int, p: int, samples: int, seed: int, workers: int = 1) -> EmpiricalCounts:
    return EmpiricalCounts.from_draws(draw(sampler, m, n, p, samples, seed, workers), seed)


def _weights(exact: ProbMeasure | Mapping[Partition, Fraction]) -> Mapping[Partition, Fraction]:
    return exact.as_dict() if isinstance(exact, ProbMeasure) else exact


def tv_distance_exact(emp: EmpiricalCounts, exact) -> Fraction:
    if emp.total <= 0:
        raise DomainError("empirical counts are empty")
    weights = _weights(exact)
    keys = set(weights) | {k for k, c in emp.counts.items() if c}
    return sum(
        (abs(Fraction(emp.counts.get(k, 0), emp.total) - weights.get(k, 0)) for k in keys),
        Fraction(0),
    ) / 2


def tv_distance(emp: EmpiricalCounts, exact) -> float:
    return float(tv_distance_exact(emp, exact))


def chi_square(emp: EmpiricalCounts, exact) -> tuple[float, float]:
    """Pearson statistic and p-value of the counts against the exact weights."""
    from scipy.stats import chisquare

    weights = _weights(exact)
    stray = [k for k, c in emp.counts.items() if c and k not in weights]
    if stray:
        return math.inf, 0.0
    keys = list(weights)
    observed = [emp.counts.get(k, 0) for k in keys]
    expected = [float(weights[k]) * emp.total for k in keys]
    if len(keys) == 1:
        return 0.0, 1.0
    res = chisquare(observed, expected)
    return float(res.statistic), float(res.pvalue)
