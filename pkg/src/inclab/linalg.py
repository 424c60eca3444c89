"""Exact linear algebra over the rationals.

Matrices are lists of rows, rows are lists of ``fractions.Fraction``.  No
floating point appears anywhere in this module; every rank, solution, and
nullspace is exact.  Inputs are never mutated.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = list[Fraction]
Matrix = list[Row]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def row_echelon(matrix: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of a copy of ``matrix``.

    Returns the RREF and the list of pivot column indices (one per nonzero
    row, in order).
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = ONE / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    _, pivots = row_echelon(matrix)
    return len(pivots)


def solve_affine(
    a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> tuple[Row, Matrix] | None:
    """Solve ``a @ x = b`` exactly.

    Returns ``(particular, nullspace_basis)`` where ``particular`` is one
    solution and ``nullspace_basis`` spans the solution set's directions,
    or ``None`` when the system is inconsistent.
    """
    if not a:
        raise ValueError("empty system has no well-defined column count")
    n_cols = len(a[0])
    augmented = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = row_echelon(augmented)
    if n_cols in pivots:
        return None  # pivot in the constants column: inconsistent
    particular: Row = [ZERO] * n_cols
    for i, c in enumerate(pivots):
        particular[c] = red[i][n_cols]
    basis = nullspace(a)
    return particular, basis


def nullspace(a: Sequence[Sequence[Fraction]]) -> Matrix:
    """Basis of ``{x : a @ x = 0}``, as a list of vectors."""
    if not a:
        raise ValueError("empty system has no well-defined column count")
    n_cols = len(a[0])
    red, pivots = row_echelon(a)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    basis: Matrix = []
    for fc in free_cols:
        vec: Row = [ZERO] * n_cols
        vec[fc] = ONE
        for i, pc in enumerate(pivots):
            vec[pc] = -red[i][fc]
        basis.append(vec)
    return basis


def is_consistent(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> bool:
    if not a:
        return True
    return solve_affine(a, b) is not None


def solve_square(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Row | None:
    """Unique solution of a square system, or ``None`` when singular."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    result = solve_affine(a, b)
    if result is None:
        return None
    particular, basis = result
    if basis:
        return None  # underdetermined counts as singular here
    return particular


def clear_denominators(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row to a primitive integer row.

    The result spans the same hyperplane: entries are multiplied by the lcm
    of denominators and divided by the gcd of the numerators.  Sign is
    canonical: the first nonzero entry is positive.  The zero row maps to
    all zeros.
    """
    lcm = 1
    for x in row:
        d = Fraction(x).denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(Fraction(x) * lcm) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return ints
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def integer_row_and_offset(
    coefficients: Sequence[Fraction], constant: Fraction
) -> tuple[tuple[int, ...], Fraction]:
    """Rescale one equation ``coefficients @ x = constant`` so the left side
    is a primitive, sign-canonical integer vector.  The constant is scaled
    by the same factor and may remain rational."""
    lcm = 1
    for x in coefficients:
        d = Fraction(x).denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(Fraction(x) * lcm) for x in coefficients]
    scaled_constant = Fraction(constant) * lcm
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(ints), scaled_constant
    ints = [v // g for v in ints]
    scaled_constant /= g
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
                scaled_constant = -scaled_constant
            break
    return tuple(ints), scaled_constant
