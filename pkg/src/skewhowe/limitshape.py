"""Empirical limit shapes of random diagrams in the m x n rectangle.

A diagram is rescaled into the unit square, French convention: column ``j``
sits over ``x = j/n`` and its height is ``lam'_j / m``.  Profiles are
aggregated through running (count, sum, sum of squares) per grid point,
which merge associatively.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ContainmentError, DomainError
from .measure import draw
from .partitions import Partition, Rectangle, conjugate, fits

__all__ = [
    "Profile", "ProfileStats", "ProfileSummary", "rescale", "resample", "mean_profile",
    "concentration", "step_count", "sample_profiles", "rotated", "symmetry_zscores",
    "summary_csv", "profiles_svg",
]


@dataclass(frozen=True)
class Profile:
    grid: np.ndarray
    heights: np.ndarray
    m: int
    n: int
    p: int

    @property
    def context(self) -> tuple[int, int, int]:
        return self.m, self.n, self.p


def rescale(lam: Partition, m: int, n: int) -> Profile:
    lam = Partition(lam)
    if not fits(lam, Rectangle(m, n)):
        raise ContainmentError(f"{lam!r} does not fit in {m}x{n}")
    conj = list(conjugate(lam)) + [0] * (n - (lam[0] if lam else 0))
    grid = np.arange(1, n + 1) / n
    return Profile(grid, np.asarray(conj, dtype=float) / m, m, n, lam.size)


def resample(profile: Profile, grid: np.ndarray) -> np.ndarray:
    """Left-continuous step interpolation: x in ((j-1)/n, j/n] reads column j."""
    cols = np.ceil(np.round(np.asarray(grid) * profile.n, 9)).astype(int)
    cols = np.clip(cols, 1, profile.n)
    return profile.heights[cols - 1]


class ProfileStats:
    """Running per-grid-point moments of a family of profiles."""

    def __init__(self, grid: np.ndarray, context: tuple[int, int, int]):
        self.grid = np.asarray(grid, dtype=float)
        self.context = context
        self.count = 0
        self.total = np.zeros_like(self.grid)
        self.total_sq = np.zeros_like(self.grid)

    def add(self, profile: Profile) -> None:
        if profile.context != self.context:
            raise DomainError(f"context {profile.context} differs from {self.context}")
        h = resample(profile, self.grid)
        self.count += 1
        self.total += h
        self.total_sq += h * h

    def merge(self, other: "ProfileStats") -> "ProfileStats":
        if other.context != self.context or not np.array_equal(other.grid, self.grid):
            raise DomainError("cannot merge statistics over different grids or contexts")
        out = ProfileStats(self.grid, self.context)
        out.count = self.count + other.count
        out.total = self.total + other.total
        out.total_sq = self.total_sq + other.total_sq
        return out

    def summary(self) -> "ProfileSummary":
        if self.count == 0:
            raise DomainError("no profiles")
        mean = self.total / self.count
        if self.count > 1:
            var = (self.total_sq - self.count * mean * mean) / (self.count - 1)
            std = np.sqrt(np.clip(var, 0.0, None))
        else:
            std = np.zeros_like(mean)
        m, n, p = self.context
        return ProfileSummary(Profile(self.grid, mean, m, n, p), std, self.count)


@dataclass(frozen=True)
class ProfileSummary:
    mean: Profile
    std: np.ndarray
    n_samples: int

    @property
    def stderr(self) -> np.ndarray:
        return self.std / np.sqrt(self.n_samples)


def mean_profile(samples: Sequence[Profile], grid: np.ndarray | None = None) -> ProfileSummary:
    """Pointwise mean and sample standard deviation (zero for a single sample)."""
    if not samples:
        raise DomainError("mean_profile needs at least one sample")
    stats = ProfileStats(samples[0].grid if grid is None else grid, samples[0].context)
    for s in samples:
        stats.add(s)
    return stats.summary()


def concentration(samples: Sequence[Profile], grid: np.ndarray | None = None) -> float:
    """Largest pointwise sample standard deviation."""
    if len(samples) < 2:
        raise DomainError("concentration needs at least two samples")
    return float(np.max(mean_profile(samples, grid).std))


def step_count(lam: Partition) -> int:
    """Number of distinct part sizes (corners of the diagram)."""
    return len(set(lam))


def sample_profiles(m: int, n: int, p: int, samples: int, seed: int,
                    sampler: str = "syt", workers: int = 1) -> tuple[list[Profile], list[Partition]]:
    diagrams = draw(sampler, m, n, p, samples, seed, workers)
    return [rescale(lam, m, n) for lam in diagrams], diagrams


def rotated(summary: ProfileSummary) -> ProfileSummary:
    """Image under the complement map: height(x_j) -> 1 - height(x_{n+1-j})."""
    mean = summary.mean
    m, n, p = mean.context
    flipped = Profile(mean.grid, 1.0 - mean.heights[::-1], m, n, m * n - p)
    return ProfileSummary(flipped, summary.std[::-1].copy(), summary.n_samples)


def symmetry_zscores(low: ProfileSummary, high: ProfileSummary) -> np.ndarray:
    """Pointwise |difference| / pooled standard error between ``low`` and the rotation of ``high``."""
    image = rotated(high)
    pooled = np.sqrt(low.stderr ** 2 + image.stderr ** 2)
    diff = np.abs(low.mean.heights - image.mean.heights)
    with np.errstate(divide="ignore", invalid="ignore"):
        z = np.where(pooled > 0, diff / np.where(pooled > 0, pooled, 1.0), np.where(diff > 0, np.inf, 0.0))
    return z


def summary_csv(summary: ProfileSummary) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(["x", "mean_height", "std_dev", "n_samples"])
    for x, h, s in zip(summary.mean.grid, summary.mean.heights, summary.std):
        writer.writerow([repr(float(x)), repr(float(h)), repr(float(s)), summary.n_samples])
    return buf.getvalue()


def _staircase(grid: np.ndarray, heights: np.ndarray, width: float, height: float) -> str:
    xs = np.concatenate([[0.0], grid])
    parts = [f"M 0 {height * (1 - heights[0]):.3f}"]
    for j, h in enumerate(heights):
        y = height * (1 - h)
        parts.append(f"L {width * xs[j]:.3f} {y:.3f} L {width * xs[j + 1]:.3f} {y:.3f}")
    parts.append(f"L {width:.3f} {height:.3f}")
    return " ".join(parts)


def profiles_svg(profiles: Sequence[Profile], summary: ProfileSummary, width: float = 400.0) -> str:
    """Staircases of ``profiles`` (thin) and the mean profile (thick) in the rectangle."""
    m, n, _ = summary.mean.context
    height = width * m / n
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        f'<rect x="0" y="0" width="{width:.3f}" height="{height:.3f}" fill="none" stroke="black"/>',
    ]
    for prof in profiles:
        d = _staircase(prof.grid, prof.heights, width, height)
        lines.append(f'<path d="{d}" fill="none" stroke="#999999" stroke-width="0.5"/>')
    d = _staircase(summary.mean.grid, summary.mean.heights, width, height)
    lines.append(f'<path d="{d}" fill="none" stroke="#c00000" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
