"""One test per acceptance criterion, each at its stated tolerance and time budget.

The terminal summary (see conftest) prints a PASS/FAIL line per criterion;
each test also prints its own line when run with ``-s``.
"""

import time
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from oracles import gaussian_binomial_coeffs
from skewhowe.characters import (
    cycle_types, verify_jm_factorization, verify_jm_partial_trace, verify_p_independence,
    verify_pair_conjugation, verify_restriction,
)
from skewhowe.dims import dim_external_power, f_dim, gl_dim, verify_rect_content_identity
from skewhowe.limitshape import concentration, mean_profile, sample_profiles, symmetry_zscores
from skewhowe.measure import constant_C, draw_counts, measure_lhs, measure_rhs, tv_distance
from skewhowe.partitions import Rectangle, complement, conjugate, enumerate_partitions
from skewhowe.tableaux import SemistandardTableau, complement_ssyt, enumerate_ssyt

from test_tableaux import WORKED_INPUT, WORKED_OUTPUT

SIDES = range(1, 6)

# limit-shape runs; seeds are fixed here and never tuned
CONCENTRATION_RUNS = [((10, 20, 100), 1101), ((20, 40, 400), 1102)]
SYMMETRY_PAIR = ((12, 24, 96), 2201), ((12, 24, 192), 2202)
SHAPE_DRAWS = 2000


def report(criterion, ok, detail=""):
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} {detail}")


def _rect_partitions(m, n):
    for p in range(m * n + 1):
        yield p, list(enumerate_partitions(Rectangle(m, n), p))


def test_criterion_01_main_identity():
    start = time.perf_counter()
    checked = 0
    for m in SIDES:
        for n in SIDES:
            for p in range(m * n + 1):
                lhs, rhs = measure_lhs(m, n, p), measure_rhs(m, n, p)
                assert lhs.as_dict() == rhs.as_dict(), (m, n, p)
                checked += 1
    elapsed = time.perf_counter() - start
    report(1, elapsed < 60, f"{checked} (m,n,p) triples in {elapsed:.1f}s")
    assert elapsed < 60


def test_criterion_02_dimension_sum():
    for m in SIDES:
        for n in SIDES:
            for p, parts in _rect_partitions(m, n):
                # the support of the measure is exactly the set of partitions in the box
                assert len(parts) == gaussian_binomial_coeffs(m, n)[p]
                total = sum(gl_dim(lam, m) * gl_dim(conjugate(lam), n) for lam in parts)
                assert total == dim_external_power(m, n, p), (m, n, p)
    report(2, True)


def test_criterion_03_constant_fraction():
    for m in SIDES:
        for n in SIDES:
            rect = Rectangle(m, n)
            for p, parts in _rect_partitions(m, n):
                expected = Fraction(f_dim(rect.full), comb(m * n, p))
                values = {Fraction(f_dim(lam) * f_dim(complement(lam, rect)),
                                   gl_dim(lam, m) * gl_dim(conjugate(lam), n)) for lam in parts}
                assert values == {expected}, (m, n, p)
                assert constant_C(m, n, p) == expected
    report(3, True)


def test_criterion_04_complement_schur_symmetry():
    for rows in range(1, 5):
        for cols in range(1, 5):
            rect = Rectangle(rows, cols)
            for _, parts in _rect_partitions(rows, cols):
                for nu in parts:
                    d = gl_dim(nu, rows)
                    assert d == gl_dim(complement(nu, rect), rows)
                    if rows <= 3 and cols <= 3:
                        assert d == sum(1 for _ in enumerate_ssyt(nu, rows))
                        assert d == sum(1 for _ in enumerate_ssyt(complement(nu, rect), rows))
    report(4, True)


def test_criterion_05_bijection_round_trip():
    rect = Rectangle(3, 3)
    shapes = 0
    for _, parts in _rect_partitions(3, 3):
        for nu in parts:
            images = set()
            count = 0
            for t in enumerate_ssyt(nu, 3):
                image = complement_ssyt(t, rect)
                assert image.shape == complement(nu, rect)
                assert complement_ssyt(image, rect) == t
                images.add(image)
                count += 1
            assert len(images) == count == sum(1 for _ in enumerate_ssyt(complement(nu, rect), 3))
            shapes += 1
    out = complement_ssyt(SemistandardTableau(WORKED_INPUT), Rectangle(4, 8))
    assert [list(r) for r in out.rows] == WORKED_OUTPUT
    report(5, True, f"{shapes} shapes plus the worked example")


def test_criterion_06_rect_content_identity():
    for rows in range(1, 9):
        for cols in range(1, 9):
            lhs, rhs = verify_rect_content_identity(Rectangle(rows, cols))
            assert lhs == rhs, (rows, cols)
    report(6, True)


@pytest.mark.parametrize("sampler", ["chain", "syt"])
def test_criterion_07_sampler_equivalence(sampler):
    start = time.perf_counter()
    tvs = {}
    for i, (m, n, p) in enumerate([(3, 3, 4), (2, 4, 4), (3, 4, 6)]):
        emp = draw_counts(sampler, m, n, p, 100_000, seed=7000 + i)
        tvs[(m, n, p)] = tv_distance(emp, measure_rhs(m, n, p))
    elapsed = time.perf_counter() - start
    ok = all(tv < 0.01 for tv in tvs.values()) and elapsed < 120
    report(7, ok, f"{sampler}: " + ", ".join(f"{k}: TV={v:.4f}" for k, v in tvs.items()) + f" in {elapsed:.1f}s")
    assert all(tv < 0.01 for tv in tvs.values()), tvs
    assert elapsed < 120


def test_criterion_08_character_restriction():
    checked = 0
    for m in range(1, 13):
        for n in range(1, 13 // m + 1):
            if m * n > 12:
                continue
            for p in range(min(6, m * n) + 1):
                r = verify_restriction(m, n, p)
                assert len(r.rows) == len(cycle_types(p))
                assert r.ok, r.failures()
                checked += len(r.rows)
    report(8, True, f"{checked} (m,n,p,class) values")


def test_criterion_09_p_independence_and_jm():
    for p in range(3):
        assert verify_jm_partial_trace(2, 2, p).ok
    for p in range(6):
        assert verify_jm_factorization(p).ok
    for m in range(1, 13):
        for n in range(1, 13 // m + 1):
            for p_prime in range(1, min(6, m * n) + 1):
                for p in range(p_prime):
                    r = verify_p_independence(m, n, p, p_prime)
                    assert r.ok, (m, n, p, p_prime, r.failures())
    report(9, True)


def test_criterion_10_pair_conjugation():
    for m in range(1, 4):
        for n in range(1, 4):
            for p in range(min(5, m * n) + 1):
                r = verify_pair_conjugation(m, n, p)
                assert r.ok, (m, n, p, r.failures())
    report(10, True)


def test_criterion_11_limit_shape():
    start = time.perf_counter()
    conc = []
    for (m, n, p), seed in CONCENTRATION_RUNS:
        profiles, _ = sample_profiles(m, n, p, SHAPE_DRAWS, seed)
        conc.append(concentration(profiles))
    (low_ctx, low_seed), (high_ctx, high_seed) = SYMMETRY_PAIR
    low = mean_profile(sample_profiles(*low_ctx, SHAPE_DRAWS, low_seed)[0])
    high = mean_profile(sample_profiles(*high_ctx, SHAPE_DRAWS, high_seed)[0])
    z = symmetry_zscores(low, high)
    elapsed = time.perf_counter() - start
    ok = conc[1] < conc[0] and float(np.max(z)) <= 3 and elapsed < 180
    report(11, ok, f"concentration {conc[0]:.4f} -> {conc[1]:.4f}, max z {np.max(z):.2f}, {elapsed:.1f}s")
    assert conc[1] < conc[0]
    assert float(np.max(z)) <= 3
    assert elapsed < 180
