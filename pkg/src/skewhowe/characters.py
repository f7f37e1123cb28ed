"""Symmetric-group characters and the character of the exterior power.

Permutations are 0-based one-line tuples and compose right to left:
``compose(a, b)[i] == a[b[i]]``.

The exterior power ``V_p`` of C^m (x) C^n is a module over the centre of
C[S_p] x C[S_p].  Computing the trace of the antisymmetrizer times the
permutation action in the standard basis gives the signed cycle-count sum

    chi(g1, g2) = sum_h sign(h) m^cyc(g1 h) n^cyc(g2 h) / (p! C(mn, p)),

which is what :func:`ext_power_character` and :func:`pair_character`
evaluate.  The checks below compare it with the Murnaghan-Nakayama value of
the rectangle with ``m`` rows and ``n`` columns.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, prod
from typing import Sequence

import numpy as np

from .dims import f_dim
from .errors import DomainError, ResourceError, TheoremCheckFailure
from .partitions import Partition, Rectangle, conjugate, enumerate_partitions
from .reports import CheckReport

__all__ = [
    "CycleType", "compose", "inverse", "cycle_count", "cycle_type", "sign",
    "canonical_permutation", "cycle_types", "class_size", "pad_fixed_points",
    "mn_character", "ext_power_character", "pair_character", "permutation_tensor_trace",
    "dense_permutation_trace", "pair_law", "verify_restriction", "verify_p_independence",
    "verify_jm_partial_trace", "verify_jm_factorization", "verify_pair_conjugation",
    "SIGNED_SUM_CAP", "RESTRICTION_MN_CAP", "DENSE_DIM_CAP",
]

CycleType = Partition

SIGNED_SUM_CAP = 8
RESTRICTION_MN_CAP = 12
DENSE_DIM_CAP = 64
PAIR_LAW_CAP = 6

Perm = tuple[int, ...]


def compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _cycle_lengths(perm: Sequence[int]) -> list[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        lengths.append(length)
    return lengths


def cycle_count(perm: Sequence[int]) -> int:
    return len(_cycle_lengths(perm))


def cycle_type(perm: Sequence[int]) -> CycleType:
    return Partition(sorted(_cycle_lengths(perm), reverse=True))


def sign(perm: Sequence[int]) -> int:
    return -1 if (len(perm) - cycle_count(perm)) % 2 else 1


def canonical_permutation(sigma: CycleType) -> Perm:
    """Consecutive cycles (0 1 .. k-1)(k ..) with the given lengths."""
    out, start = [], 0
    for length in sigma:
        out.extend(range(start + 1, start + length))
        out.append(start)
        start += length
    return tuple(out)


def cycle_types(p: int) -> list[CycleType]:
    if p < 0:
        raise DomainError(f"p must be nonnegative, got {p}")
    if p == 0:
        return [Partition()]
    return list(enumerate_partitions(Rectangle(p, p), p))


def class_size(sigma: CycleType) -> int:
    """Number of permutations of cycle type ``sigma``: p! / z_sigma."""
    mult = Counter(sigma)
    z = prod(k ** c * factorial(c) for k, c in mult.items())
    return factorial(sigma.size) // z


def pad_fixed_points(sigma: CycleType, total: int) -> CycleType:
    if total < sigma.size:
        raise DomainError(f"cannot pad {sigma!r} down to {total}")
    return Partition(list(sigma) + [1] * (total - sigma.size))


@lru_cache(maxsize=None)
def _mn(lam: Partition, cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    ell = len(lam)
    beta = [part + ell - 1 - i for i, part in enumerate(lam)]
    occupied = set(beta)
    total = 0
    for b in beta:
        # a rim hook of length r is a bead sliding from b to b - r
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        moved = sorted((occupied - {b}) | {target}, reverse=True)
        smaller = Partition([x - (ell - 1 - i) for i, x in enumerate(moved)])
        total += (-1) ** height * _mn(smaller, rest)
    return total


def mn_character(lam: Partition, sigma: CycleType) -> int:
    """Irreducible character of S_|lam| at cycle type ``sigma`` (not normalized)."""
    lam, sigma = Partition(lam), Partition(sigma)
    if lam.size != sigma.size:
        raise DomainError(f"|lam|={lam.size} differs from |sigma|={sigma.size}")
    return _mn(lam, tuple(sigma))


@lru_cache(maxsize=None)
def _signed_cycle_polynomial(g1: Perm, g2: Perm) -> dict[tuple[int, int], int]:
    """Coefficients c[a, b] = sum of sign(h) over h with cyc(g1 h) = a, cyc(g2 h) = b."""
    poly: Counter = Counter()
    p = len(g1)
    for h in permutations(range(p)):
        b_h = cycle_count(compose(g2, h))
        a_h = cycle_count(compose(g1, h))
        poly[(a_h, b_h)] += -1 if (p - cycle_count(h)) % 2 else 1
    return dict(poly)


def _check_signed_sum(m: int, n: int, p: int, cap: int) -> None:
    if m < 1 or n < 1:
        raise DomainError(f"m, n must be positive, got m={m}, n={n}")
    if not 0 <= p <= m * n:
        raise DomainError(f"p={p} outside 0..{m * n}")
    if p > cap:
        raise ResourceError(f"signed sum over S_{p} refused beyond p={cap}")


def pair_character(m: int, n: int, g1: Perm, g2: Perm, cap: int = SIGNED_SUM_CAP) -> Fraction:
    """Normalized character of V_p at the pair (g1, g2) of permutations of p letters."""
    g1, g2 = tuple(g1), tuple(g2)
    p = len(g1)
    if len(g2) != p:
        raise DomainError("g1 and g2 must act on the same number of letters")
    _check_signed_sum(m, n, p, cap)
    poly = _signed_cycle_polynomial(g1, g2)
    total = sum(c * m ** a * n ** b for (a, b), c in poly.items())
    return Fraction(total, factorial(p) * comb(m * n, p))


def ext_power_character(m: int, n: int, p: int, sigma: CycleType, cap: int = SIGNED_SUM_CAP) -> Fraction:
    """Normalized character of V_p at (sigma, id)."""
    sigma = Partition(sigma)
    if sigma.size != p:
        raise DomainError(f"cycle type {sigma!r} is not a partition of {p}")
    _check_signed_sum(m, n, p, cap)
    value = pair_character(m, n, canonical_permutation(sigma), tuple(range(p)), cap)
    if abs(value) > 1:
        raise TheoremCheckFailure(f"normalized character {value} exceeds 1 in absolute value")
    return value


def permutation_tensor_trace(d: int, pi: CycleType) -> int:
    """Trace of a permutation of tensor factors on (C^d)^{(x) p}: d^cycles."""
    return d ** len(Partition(pi))


def _factor_permutation_matrix(d: int, perm: Perm) -> np.ndarray:
    """Matrix of e_{k_1} (x) ... (x) e_{k_p} -> factor k_i moved to slot perm[i]."""
    p = len(perm)
    dim = d ** p
    idx = np.arange(dim).reshape([d] * p) if p else np.arange(1)
    # slot perm[i] of the image holds factor i of the source
    moved = np.transpose(idx, inverse(perm)).reshape(-1) if p else idx
    mat = np.zeros((dim, dim), dtype=np.int64)
    mat[moved, np.arange(dim)] = 1
    return mat


def dense_permutation_trace(d: int, perm: Perm) -> int:
    return int(np.trace(_factor_permutation_matrix(d, tuple(perm))))


def _central_idempotent_coeff(lam: Partition, sigma: CycleType) -> Fraction:
    return Fraction(f_dim(lam) * mn_character(lam, sigma), factorial(lam.size))


def pair_law(m: int, n: int, p: int, cap: int = PAIR_LAW_CAP) -> dict[tuple[Partition, Partition], Fraction]:
    """Probability of each pair (lam, mu) of irreducibles of S_p x S_p in V_p.

    Evaluates the character of V_p on products of minimal central
    idempotents.  Only pairs with nonzero probability are returned.
    """
    _check_signed_sum(m, n, p, cap)
    classes = cycle_types(p)
    group = [(h, cycle_type(h)) for h in permutations(range(p))]
    shapes = classes

    def pushed(k: int) -> dict[Partition, dict[Partition, Fraction]]:
        # A[lam][class of h] = sum_g e_lam(g) k^cyc(g h); a class function of h
        table: dict[Partition, dict[Partition, Fraction]] = {lam: {} for lam in shapes}
        for rho in classes:
            h = canonical_permutation(rho)
            acc: dict[Partition, int] = Counter()
            for g, ct in group:
                acc[ct] += k ** cycle_count(compose(g, h))
            for lam in shapes:
                table[lam][rho] = sum(
                    (_central_idempotent_coeff(lam, ct) * v for ct, v in acc.items()), Fraction(0)
                )
        return table

    a_tab, b_tab = pushed(m), pushed(n)
    norm = factorial(p) * comb(m * n, p)
    law = {}
    for lam in shapes:
        for mu in shapes:
            total = sum(
                (class_size(rho) * (-1 if (p - len(rho)) % 2 else 1) * a_tab[lam][rho] * b_tab[mu][rho]
                 for rho in classes),
                Fraction(0),
            )
            if total:
                law[(lam, mu)] = total / norm
    return law


def verify_restriction(m: int, n: int, p: int, cap: int = SIGNED_SUM_CAP,
                       mn_cap: int = RESTRICTION_MN_CAP) -> CheckReport:
    """chi_{V_p}(sigma) against chi^R(sigma + fixed points) / f^R, R = m rows x n columns."""
    if m * n > mn_cap:
        raise ResourceError(f"m*n={m * n} exceeds the character cap {mn_cap}")
    _check_signed_sum(m, n, p, cap)
    rect = Rectangle(m, n).full
    f_rect = f_dim(rect)
    report = CheckReport("restriction", {"m": m, "n": n, "p": p})
    for sigma in cycle_types(p):
        lhs = ext_power_character(m, n, p, sigma, cap)
        rhs = Fraction(mn_character(rect, pad_fixed_points(sigma, m * n)), f_rect)
        report.add(lhs, rhs, cycle_type=list(sigma))
    return report


def verify_p_independence(m: int, n: int, p: int, p_prime: int, sigma: CycleType | None = None,
                          cap: int = SIGNED_SUM_CAP) -> CheckReport:
    if not 0 <= p <= p_prime:
        raise DomainError(f"need 0 <= p <= p', got p={p}, p'={p_prime}")
    _check_signed_sum(m, n, p_prime, cap)
    report = CheckReport("p_independence", {"m": m, "n": n, "p": p, "p_prime": p_prime})
    for s in [Partition(sigma)] if sigma is not None else cycle_types(p):
        lhs = ext_power_character(m, n, p, s, cap)
        rhs = ext_power_character(m, n, p_prime, pad_fixed_points(s, p_prime), cap)
        report.add(lhs, rhs, cycle_type=list(s))
    return report


def verify_jm_partial_trace(m: int, n: int, p: int, max_dim: int = DENSE_DIM_CAP) -> CheckReport:
    """Partial trace over the last factor of 1 - X_{p+1} on (C^{mn})^{(x)(p+1)}.

    The operator is assembled from dense permutation matrices; the result
    must be (mn - p) times the identity, i.e. (mn - p)/(p + 1) after the
    1/(p + 1) normalization.
    """
    d = m * n
    if p < 0:
        raise DomainError(f"p must be nonnegative, got {p}")
    dim = d ** (p + 1)
    if dim > max_dim:
        raise ResourceError(f"dense operator of dimension {dim} exceeds cap {max_dim}")
    op = np.eye(dim, dtype=np.int64)
    for i in range(p):
        swap = list(range(p + 1))
        swap[i], swap[p] = p, i
        op -= _factor_permutation_matrix(d, tuple(swap))
    small = d ** p
    reduced = np.einsum("aibi->ab", op.reshape(small, d, small, d))
    report = CheckReport("jm_partial_trace", {"m": m, "n": n, "p": p})
    scalar = Fraction(d - p, p + 1)
    is_scalar = bool(np.array_equal(reduced, reduced[0, 0] * np.eye(small, dtype=np.int64)))
    observed = Fraction(int(reduced[0, 0]), p + 1) if is_scalar else None
    report.add(observed, scalar, operator_dim=dim)
    return report


def _algebra_mul(x: dict[Perm, Fraction], y: dict[Perm, Fraction]) -> dict[Perm, Fraction]:
    out: dict[Perm, Fraction] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            ab = compose(a, b)
            out[ab] = out.get(ab, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v}


def _antisymmetrizer(p: int, total: int) -> dict[Perm, Fraction]:
    """Pi_p inside C[S_total], acting on the first p letters."""
    scale = Fraction(1, factorial(p))
    return {tuple(h) + tuple(range(p, total)): sign(h) * scale for h in permutations(range(p))}


def verify_jm_factorization(p: int, cap: int = 6) -> CheckReport:
    """Pi_{p+1} = (1/(p+1)) (1 - X_{p+1}) Pi_p in the group algebra of S_{p+1}."""
    if p + 1 > cap:
        raise ResourceError(f"group algebra of S_{p + 1} exceeds cap S_{cap}")
    total = p + 1
    factor: dict[Perm, Fraction] = {tuple(range(total)): Fraction(1, total)}
    for i in range(p):
        t = list(range(total))
        t[i], t[p] = p, i
        factor[tuple(t)] = Fraction(-1, total)
    lhs = _antisymmetrizer(total, total)
    rhs = _algebra_mul(factor, _antisymmetrizer(p, total))
    report = CheckReport("jm_factorization", {"p": p})
    report.rows.append({
        "terms": len(lhs),
        "lhs": f"Pi_{total}",
        "rhs": f"(1 - X_{total}) Pi_{p} / {total}",
        "equal": lhs == rhs,
    })
    return report


def verify_pair_conjugation(m: int, n: int, p: int, cap: int = SIGNED_SUM_CAP) -> CheckReport:
    """chi(g1, g2) = sign(g2) chi(g1 g2^-1, id) for representative pairs of every class pair.

    Each pair of cycle types is checked at two representatives: both
    canonical, and with g2 conjugated by the reversal permutation.  When
    p is small enough the report also checks that the pair law is
    supported on conjugate pairs (lam, lam').
    """
    _check_signed_sum(m, n, p, cap)
    report = CheckReport("pair_conjugation", {"m": m, "n": n, "p": p})
    identity = tuple(range(p))
    rev = tuple(reversed(range(p)))
    for s1 in cycle_types(p):
        for s2 in cycle_types(p):
            g1 = canonical_permutation(s1)
            base = canonical_permutation(s2)
            for g2 in {base, compose(compose(rev, base), rev)}:
                lhs = pair_character(m, n, g1, g2, cap)
                rhs = sign(g2) * pair_character(m, n, compose(g1, inverse(g2)), identity, cap)
                report.add(lhs, rhs, g1=list(g1), g2=list(g2))
    if p <= PAIR_LAW_CAP:
        law = pair_law(m, n, p)
        off = {k: v for k, v in law.items() if k[1] != conjugate(k[0])}
        report.add(len(off), 0, support="pairs (lam, mu) with mu != lam'")
    return report
