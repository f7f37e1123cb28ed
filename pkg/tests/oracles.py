"""Brute-force reference computations.

Nothing here calls into the package's formulas; these are the independent
routes the tests compare against.
"""

from itertools import permutations, product
from math import comb


def brute_partitions(rows, cols, p):
    """All weakly decreasing tuples in [0, cols]^rows summing to p, zeros stripped."""
    out = set()
    for parts in product(range(cols, -1, -1), repeat=rows):
        if sum(parts) == p and all(a >= b for a, b in zip(parts, parts[1:])):
            out.add(tuple(x for x in parts if x))
    return out


def gaussian_binomial_coeffs(a, b):
    """Coefficients of [a+b choose a]_q via the q-Pascal recursion."""
    table = {}

    def g(x, y):
        if x == 0 or y == 0:
            return [1]
        if (x, y) in table:
            return table[(x, y)]
        left = g(x - 1, y)
        right = [0] * x + g(x, y - 1)
        size = max(len(left), len(right))
        res = [(left[i] if i < len(left) else 0) + (right[i] if i < len(right) else 0) for i in range(size)]
        table[(x, y)] = res
        return res

    return g(a, b)


def box_set(parts):
    return {(i, j) for i, part in enumerate(parts, 1) for j in range(1, part + 1)}


def column_counts(parts):
    cells = box_set(parts)
    out = []
    j = 1
    while any((i, j) in cells for i in range(1, len(parts) + 1)):
        out.append(sum(1 for i in range(1, len(parts) + 1) if (i, j) in cells))
        j += 1
    return tuple(out)


def arm_leg_hooks(parts):
    cells = box_set(parts)
    hooks = {}
    for i, j in cells:
        arm = sum(1 for jj in range(j + 1, j + 100) if (i, jj) in cells)
        leg = sum(1 for ii in range(i + 1, i + 100) if (ii, j) in cells)
        hooks[(i, j)] = arm + leg + 1
    return hooks


def brute_syt_count(parts):
    """Count fillings of the shape by 1..N, rows and columns increasing."""
    cells = sorted(box_set(parts))
    count = 0
    for perm in permutations(range(1, len(cells) + 1)):
        fill = dict(zip(cells, perm))
        if all(fill[(i, j)] < fill[(i, j + 1)] for (i, j) in cells if (i, j + 1) in fill) and \
           all(fill[(i, j)] < fill[(i + 1, j)] for (i, j) in cells if (i + 1, j) in fill):
            count += 1
    return count


def brute_ssyt_count(parts, k):
    cells = sorted(box_set(parts))
    count = 0
    for values in product(range(1, k + 1), repeat=len(cells)):
        fill = dict(zip(cells, values))
        if all(fill[(i, j)] <= fill[(i, j + 1)] for (i, j) in cells if (i, j + 1) in fill) and \
           all(fill[(i, j)] < fill[(i + 1, j)] for (i, j) in cells if (i + 1, j) in fill):
            count += 1
    return count


def brute_cycles(perm):
    seen, cycles = set(), 0
    for s in range(len(perm)):
        if s not in seen:
            cycles += 1
            k = s
            while k not in seen:
                seen.add(k)
                k = perm[k]
    return cycles


def brute_tensor_fixed_points(d, perm):
    """Basis tensors e_{k_1..k_p} fixed by permuting factors: the trace of that operator."""
    p = len(perm)
    return sum(1 for ks in product(range(d), repeat=p) if all(ks[perm[i]] == ks[i] for i in range(p)))


def binom(a, b):
    return comb(a, b)
