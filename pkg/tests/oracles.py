"""Independent oracles used by the test suite.

Everything here is deliberately brute force and shares no code with the
library paths it checks: determinant-by-cofactor rank, direct membership
evaluation, exhaustive chain enumeration, and recursive gcd.  Slow is fine;
these run on small inputs only.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def gcd_euclid(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd_euclid(g, v)
    return g


def determinant(matrix) -> Fraction:
    """Cofactor expansion along the first row."""
    n = len(matrix)
    if n == 1:
        return Fraction(matrix[0][0])
    total = Fraction(0)
    for j in range(n):
        entry = Fraction(matrix[0][j])
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        sign = -1 if j % 2 else 1
        total += sign * entry * determinant(minor)
    return total


def minor_rank(matrix) -> int:
    """Rank as the size of the largest nonzero square minor."""
    if not matrix:
        return 0
    rows = [[Fraction(x) for x in row] for row in matrix]
    n_rows, n_cols = len(rows), len(rows[0])
    for size in range(min(n_rows, n_cols), 0, -1):
        for row_idx in combinations(range(n_rows), size):
            for col_idx in combinations(range(n_cols), size):
                sub = [[rows[i][j] for j in col_idx] for i in row_idx]
                if determinant(sub) != 0:
                    return size
    return 0


def point_on_flat(coords, equations, rhs) -> bool:
    """Direct substitution of a point into a linear system."""
    for row, c in zip(equations, rhs):
        total = Fraction(0)
        for a, x in zip(row, coords):
            total += Fraction(a) * Fraction(x)
        if total != Fraction(c):
            return False
    return True


def count_incidences_direct(points, flats) -> int:
    """Pair-by-pair substitution count; independent of the library."""
    total = 0
    for f in flats:
        for p in points:
            if point_on_flat(p.coords, f.equations, f.rhs):
                total += 1
    return total


def collinear_triples_bruteforce(points) -> list[tuple[int, int, int]]:
    """All collinear triples, by a 2x-minor rank test on the differences."""
    out = []
    n = len(points)
    for i, j, k in combinations(range(n), 3):
        a = [x - y for x, y in zip(points[j].coords, points[i].coords)]
        b = [x - y for x, y in zip(points[k].coords, points[i].coords)]
        if minor_rank([a, b]) <= 1:
            out.append((i, j, k))
    return out


def problematic_pairs_bruteforce(k: int, d: int) -> set[tuple[int, int]]:
    """Definition-level enumeration of the dimension pairs whose ratio
    strictly exceeds k/d while staying below 1."""
    out = set()
    for kk in range(1, k + 1):
        for dd in range(2, d + 1):
            if Fraction(k, d) < Fraction(kk, dd) < 1:
                out.add((kk, dd))
    return out


def chains_bruteforce(k: int, d: int, half_ratio_only: bool = False) -> set[tuple]:
    """All valid chains starting at (k, d), by filtering every subset.

    The strict decrease of the second coordinate forces a unique ordering
    on any candidate set of pairs, so subsets are enough.  Only intended
    for small d (the subset count is 2^|pairs|).
    """
    pool = sorted(problematic_pairs_bruteforce(k, d))
    if half_ratio_only:
        pool = [(kk, dd) for kk, dd in pool if Fraction(kk, dd) <= Fraction(1, 2)]
    chains: set[tuple] = set()
    for size in range(len(pool) + 1):
        for subset in combinations(pool, size):
            chain = [(k, d)] + sorted(subset, key=lambda p: -p[1])
            ok = True
            for (k0, d0), (k1, d1) in zip(chain, chain[1:]):
                if not (k0 >= k1 and d0 > d1 and Fraction(k0, d0) < Fraction(k1, d1)):
                    ok = False
                    break
            if ok and all(kk < dd and dd >= 2 and kk >= 1 for kk, dd in chain):
                chains.add(tuple(chain))
    return chains


def int_root_floor(x: int, r: int) -> int:
    """Largest integer whose r-th power is <= x (x >= 0, r >= 1)."""
    if x < 0 or r < 1:
        raise ValueError("domain error")
    if x in (0, 1) or r == 1:
        return x
    low, high = 0, 1
    while high**r <= x:
        high *= 2
    while high - low > 1:
        mid = (low + high) // 2
        if mid**r <= x:
            low = mid
        else:
            high = mid
    return low
