"""Exact dimension formulas.

Everything here is integer arithmetic: ``f_dim`` is the hook-length formula,
``gl_dim`` the hook-content formula for the principal specialization
``s_nu(1^k)``.  Results are plain Python ints (arbitrary precision).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod

from .errors import DomainError
from .partitions import Partition, Rectangle, complement, contents, hook_lengths

__all__ = [
    "hook_product", "f_dim", "gl_dim", "skew_rect_dim",
    "verify_rect_content_identity", "dim_external_power",
]


@lru_cache(maxsize=None)
def _factorial(k: int) -> int:
    return factorial(k)


@lru_cache(maxsize=None)
def hook_product(nu: Partition) -> int:
    return prod(hook_lengths(nu).values())


@lru_cache(maxsize=None)
def f_dim(nu: Partition) -> int:
    """Number of standard Young tableaux of shape ``nu``."""
    num = _factorial(nu.size)
    den = hook_product(nu)
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def gl_dim(nu: Partition, k: int) -> int:
    """Dimension of the GL_k irreducible with highest weight ``nu``.

    Zero when ``nu`` has more than ``k`` rows.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if len(nu) > k:
        return 0
    num = prod(k + c for c in contents(nu).values())
    den = hook_product(nu)
    assert num % den == 0
    return num // den


def skew_rect_dim(lam: Partition, rect: Rectangle) -> int:
    """f of the skew shape rect/lam, via its 180-degree rotation."""
    return f_dim(complement(lam, rect))


def verify_rect_content_identity(rect: Rectangle) -> tuple[int, int]:
    """Both sides of prod_{box}(rows + content) = H_rect for the full rectangle."""
    full = rect.full
    lhs = prod(rect.rows + c for c in contents(full).values())
    return lhs, hook_product(full)


def dim_external_power(m: int, n: int, p: int) -> int:
    if m < 1 or n < 1:
        raise DomainError(f"m, n must be positive, got m={m}, n={n}")
    if not 0 <= p <= m * n:
        raise DomainError(f"p={p} outside 0..{m * n}")
    return comb(m * n, p)
