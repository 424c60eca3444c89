"""Exact incidence counting and forbidden-K_{s,t} detection.

Two interchangeable counting strategies are provided and must always agree:

* ``naive``  -- direct pair-by-pair membership evaluation, O(m n).  This is
  the reference path; it never groups, buckets, or vectorizes per-family.
* ``hashed`` -- hyperplanes are grouped by their primitive integer normal
  and points are bucketed by exact dot product, so each group costs one
  pass over the points.  Integer work is vectorized with numpy when the
  magnitudes provably fit in int64; anything else falls back to exact
  Fraction arithmetic.

All counts are exact; there is no tolerance anywhere in this module.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from . import linalg
from .errors import InvalidInput, ResourceLimit
from .geometry import Flat, RatPoint, contains

DEFAULT_COMPARISON_LIMIT = 10**9
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class IncidenceInstance:
    """A point set, a flat family, and the forbidden-subgraph parameters."""

    points: tuple[RatPoint, ...]
    flats: tuple[Flat, ...]
    s: int
    t: int

    def __init__(self, points: Sequence[RatPoint], flats: Sequence[Flat], s: int, t: int):
        pts = tuple(points)
        fls = tuple(flats)
        dims = {p.dim for p in pts} | {f.ambient_dim for f in fls}
        if len(dims) > 1:
            raise InvalidInput(f"mixed ambient dimensions in instance: {sorted(dims)}")
        if s < 2:
            raise InvalidInput("s must be at least 2")
        if t < 1:
            raise InvalidInput("t must be at least 1")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "flats", fls)
        object.__setattr__(self, "s", int(s))
        object.__setattr__(self, "t", int(t))

    @property
    def ambient_dim(self) -> int:
        if self.points:
            return self.points[0].dim
        if self.flats:
            return self.flats[0].ambient_dim
        raise InvalidInput("empty instance has no ambient dimension")


@dataclass(frozen=True)
class KstWitness:
    """s point indices and t flat indices, pairwise incident."""

    point_indices: tuple[int, ...]
    flat_indices: tuple[int, ...]


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------


def count_incidences(inst: IncidenceInstance, strategy: str = "auto") -> int:
    """Exact number of (point, flat) incidences in the instance."""
    if strategy in ("auto", "hashed"):
        return _count_hashed(inst.points, inst.flats)
    if strategy == "naive":
        return _count_naive(inst.points, inst.flats)
    raise InvalidInput(f"unknown counting strategy {strategy!r}")


def _scaled_rows(flat: Flat) -> list[tuple[tuple[int, ...], Fraction]]:
    return flat.integer_equations()


def _count_naive(points: Sequence[RatPoint], flats: Sequence[Flat]) -> int:
    """Reference count: evaluate every equation of every flat at every point."""
    int_points = [p.int_coords() for p in points]
    total = 0
    for flat in flats:
        rows = _scaled_rows(flat)
        int_rhs = [c.numerator if c.denominator == 1 else None for _, c in rows]
        for p, ip in zip(points, int_points):
            if ip is not None:
                ok = True
                for (row, _), b in zip(rows, int_rhs):
                    if b is None:
                        ok = False  # integer point cannot hit a non-integer offset
                        break
                    acc = 0
                    for a, x in zip(row, ip):
                        acc += a * x
                    if acc != b:
                        ok = False
                        break
                if ok:
                    total += 1
            elif contains(flat, p):
                total += 1
    return total


def _hyperplane_key(flat: Flat) -> tuple[tuple[int, ...], Fraction] | None:
    """Primitive integer normal and scaled offset for a hyperplane flat."""
    if flat.dim != flat.ambient_dim - 1:
        return None
    if len(flat.equations) == 1:
        row, c = flat.equations[0], flat.rhs[0]
    else:
        reduced, pivots = linalg.row_echelon(
            [list(r) + [b] for r, b in zip(flat.equations, flat.rhs)]
        )
        row, c = reduced[0][:-1], reduced[0][-1]
    normal, offset = linalg.integer_row_and_offset(row, c)
    return normal, offset


def _int_point_matrix(
    points: Sequence[RatPoint],
) -> tuple[np.ndarray, list[int], list[int], int]:
    """Split points into an int64-safe matrix plus leftover indices.

    Returns (matrix, matrix_point_indices, leftover_indices, max_abs)."""
    mat_rows: list[tuple[int, ...]] = []
    mat_idx: list[int] = []
    leftover: list[int] = []
    max_abs = 0
    for i, p in enumerate(points):
        ic = p.int_coords()
        if ic is None:
            leftover.append(i)
            continue
        m = max((abs(c) for c in ic), default=0)
        if m > _INT64_SAFE:
            leftover.append(i)
            continue
        max_abs = max(max_abs, m)
        mat_rows.append(ic)
        mat_idx.append(i)
    dim = points[0].dim if points else 0
    if mat_rows:
        matrix = np.array(mat_rows, dtype=np.int64)
    else:
        matrix = np.zeros((0, dim), dtype=np.int64)
    return matrix, mat_idx, leftover, max_abs


def _group_dots(
    normal: tuple[int, ...],
    matrix: np.ndarray,
    max_abs: int,
) -> np.ndarray | None:
    """Dot products of every matrix row with ``normal`` (int64), or ``None``
    when the exact result could overflow int64."""
    if matrix.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    bound = sum(abs(a) for a in normal) * max_abs
    if bound > _INT64_SAFE:
        return None
    return matrix @ np.array(normal, dtype=np.int64)


def _count_hashed(points: Sequence[RatPoint], flats: Sequence[Flat]) -> int:
    groups: dict[tuple[int, ...], Counter] = defaultdict(Counter)
    others: list[Flat] = []
    for flat in flats:
        key = _hyperplane_key(flat)
        if key is None:
            others.append(flat)
        else:
            normal, offset = key
            groups[normal][offset] += 1

    matrix, mat_idx, leftover_idx, max_abs = _int_point_matrix(points)
    total = 0
    for normal, offsets in groups.items():
        dots = _group_dots(normal, matrix, max_abs)
        if dots is None:
            # exact big-integer fallback for the bulk points
            counter: Counter = Counter()
            for row in matrix.tolist():
                counter[sum(a * x for a, x in zip(normal, row))] += 1
        else:
            values, counts = np.unique(dots, return_counts=True)
            counter = dict(zip(values.tolist(), counts.tolist()))
        for offset, multiplicity in offsets.items():
            if offset.denominator == 1:
                total += counter.get(offset.numerator, 0) * multiplicity
        for i in leftover_idx:
            dot = sum(a * x for a, x in zip(normal, points[i].coords))
            total += offsets.get(dot, 0)
    for flat in others:
        total += _count_flat_members(flat, points, matrix, mat_idx, leftover_idx)
    return total


def _count_flat_members(
    flat: Flat,
    points: Sequence[RatPoint],
    matrix: np.ndarray,
    mat_idx: list[int],
    leftover_idx: list[int],
) -> int:
    mask = _flat_member_mask(flat, matrix)
    if mask is None:
        count = sum(1 for i in mat_idx if contains(flat, points[i]))
    else:
        count = int(mask.sum())
    count += sum(1 for i in leftover_idx if contains(flat, points[i]))
    return count


def _flat_member_mask(flat: Flat, matrix: np.ndarray) -> np.ndarray | None:
    """Boolean membership of the int-matrix points in ``flat`` (None when a
    safe vectorized evaluation is not possible)."""
    if matrix.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    max_abs = int(np.abs(matrix).max(initial=0))
    mask = np.ones(matrix.shape[0], dtype=bool)
    for row, offset in flat.integer_equations():
        if offset.denominator != 1:
            return np.zeros(matrix.shape[0], dtype=bool)
        if abs(offset.numerator) > _INT64_SAFE:
            return None
        bound = sum(abs(a) for a in row) * max_abs
        if bound > _INT64_SAFE:
            return None
        dots = matrix @ np.array(row, dtype=np.int64)
        mask &= dots == offset.numerator
    return mask


# ---------------------------------------------------------------------------
# incidence masks and K_{s,t} search
# ---------------------------------------------------------------------------


def incidence_masks(points: Sequence[RatPoint], flats: Sequence[Flat]) -> list[int]:
    """Per-point bitmasks of incident flats (bit j <=> on flats[j])."""
    masks = [0] * len(points)
    by_group: dict[tuple[int, ...], list[tuple[Fraction, int]]] = defaultdict(list)
    others: list[int] = []
    for j, flat in enumerate(flats):
        key = _hyperplane_key(flat)
        if key is None:
            others.append(j)
        else:
            normal, offset = key
            by_group[normal].append((offset, j))

    matrix, mat_idx, leftover_idx, max_abs = _int_point_matrix(points)
    for normal, offset_flats in by_group.items():
        flats_by_offset: dict[Fraction, list[int]] = defaultdict(list)
        for offset, j in offset_flats:
            flats_by_offset[offset].append(j)
        dots = _group_dots(normal, matrix, max_abs)
        if dots is None:
            dot_list = [
                sum(a * x for a, x in zip(normal, row)) for row in matrix.tolist()
            ]
        else:
            dot_list = dots.tolist()
        buckets: dict[int, list[int]] = defaultdict(list)
        for local_i, value in enumerate(dot_list):
            buckets[value].append(mat_idx[local_i])
        for offset, flat_ids in flats_by_offset.items():
            bits = 0
            for j in flat_ids:
                bits |= 1 << j
            if offset.denominator == 1:
                for i in buckets.get(offset.numerator, ()):
                    masks[i] |= bits
            for i in leftover_idx:
                dot = sum(a * x for a, x in zip(normal, points[i].coords))
                if dot == offset:
                    masks[i] |= bits
    for j in others:
        flat = flats[j]
        bit = 1 << j
        member = _flat_member_mask(flat, matrix)
        if member is None:
            for local_i, i in enumerate(mat_idx):
                if contains(flat, points[i]):
                    masks[i] |= bit
        else:
            for local_i in np.nonzero(member)[0].tolist():
                masks[mat_idx[local_i]] |= bit
        for i in leftover_idx:
            if contains(flat, points[i]):
                masks[i] |= bit
    return masks


def _lowest_bits(mask: int, count: int) -> tuple[int, ...]:
    out = []
    while mask and len(out) < count:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def find_kst(
    inst: IncidenceInstance,
    limit: int = DEFAULT_COMPARISON_LIMIT,
) -> KstWitness | None:
    """A K_{s,t} witness (s points on t common flats) or ``None``.

    The search side (point subsets vs flat subsets) is chosen by comparing
    estimated costs.  The first witness in index order is returned, so the
    result is deterministic.  Raises :class:`ResourceLimit` when both sides
    exceed ``limit`` elementary comparisons.
    """
    m, n = len(inst.points), len(inst.flats)
    s, t = inst.s, inst.t
    if m < s or n < t:
        return None
    flat_words = max(1, -(-n // 64))
    point_words = max(1, -(-m // 64))
    cost_points = comb(m, s) * flat_words
    cost_flats = comb(n, t) * point_words
    if min(cost_points, cost_flats) > limit:
        raise ResourceLimit(
            f"K_{{{s},{t}}} search needs ~{min(cost_points, cost_flats):.3g} comparisons,"
            f" over the budget of {limit}",
            limit=limit,
            estimate=min(cost_points, cost_flats),
        )
    if cost_points <= cost_flats:
        witness = _find_kst_points_side(inst)
    else:
        witness = _find_kst_flats_side(inst)
    if witness is not None:
        _check_witness(inst, witness)
    return witness


def _find_kst_points_side(inst: IncidenceInstance) -> KstWitness | None:
    masks = incidence_masks(inst.points, inst.flats)
    m, s, t = len(inst.points), inst.s, inst.t
    if s == 2:
        for i in range(m):
            mi = masks[i]
            if mi.bit_count() < t:
                continue
            for j in range(i + 1, m):
                common = mi & masks[j]
                if common.bit_count() >= t:
                    return KstWitness((i, j), _lowest_bits(common, t))
        return None
    if s == 3:
        for i in range(m):
            mi = masks[i]
            if mi.bit_count() < t:
                continue
            for j in range(i + 1, m):
                pair = mi & masks[j]
                if pair.bit_count() < t:
                    continue
                for k in range(j + 1, m):
                    common = pair & masks[k]
                    if common.bit_count() >= t:
                        return KstWitness((i, j, k), _lowest_bits(common, t))
        return None
    from itertools import combinations

    for subset in combinations(range(m), s):
        common = masks[subset[0]]
        for i in subset[1:]:
            common &= masks[i]
            if common.bit_count() < t:
                break
        else:
            if common.bit_count() >= t:
                return KstWitness(subset, _lowest_bits(common, t))
    return None


def _find_kst_flats_side(inst: IncidenceInstance) -> KstWitness | None:
    from itertools import combinations

    point_masks = incidence_masks(inst.points, inst.flats)
    n, s, t = len(inst.flats), inst.s, inst.t
    flat_masks = [0] * n
    for i, mask in enumerate(point_masks):
        remaining = mask
        while remaining:
            low = remaining & -remaining
            flat_masks[low.bit_length() - 1] |= 1 << i
            remaining ^= low
    for subset in combinations(range(n), t):
        common = flat_masks[subset[0]]
        for j in subset[1:]:
            common &= flat_masks[j]
            if common.bit_count() < s:
                break
        else:
            if common.bit_count() >= s:
                return KstWitness(_lowest_bits(common, s), subset)
    return None


def _check_witness(inst: IncidenceInstance, witness: KstWitness) -> None:
    for i in witness.point_indices:
        for j in witness.flat_indices:
            assert contains(inst.flats[j], inst.points[i]), (
                f"unsound witness: point {i} not on flat {j}"
            )


# ---------------------------------------------------------------------------
# the K_{s,t}-free counting bound, for reporting only
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundValue:
    """Value of m * n^(1-1/s) + n.  ``exact`` tells whether the root was an
    integer; otherwise the value is a correctly rounded high-precision
    approximation converted to a Fraction."""

    value: Fraction
    exact: bool
    digits: int


def kst_bound_value(m: int, n: int, s: int, digits: int = 30) -> BoundValue:
    """Evaluate the K_{s,t}-free bound shape ``m n^{1-1/s} + n``.

    This is a reporting aid, never a certified bound: the constant in front
    is problem dependent and left to the caller.
    """
    if m < 0 or n < 0:
        raise InvalidInput("m and n must be nonnegative")
    if s < 2:
        raise InvalidInput("s must be at least 2")
    if n == 0 or m == 0:
        return BoundValue(Fraction(n), True, digits)
    power = n ** (s - 1)
    root = _int_root_floor(power, s)
    if root**s == power:
        return BoundValue(Fraction(m * root + n), True, digits)
    with localcontext() as ctx:
        ctx.prec = digits + 15
        approx = (
            Decimal(m) * (Decimal(power) ** (Decimal(1) / Decimal(s))) + Decimal(n)
        )
    return BoundValue(Fraction(approx), False, digits)


def _int_root_floor(x: int, r: int) -> int:
    if x < 0:
        raise InvalidInput("negative radicand")
    if x in (0, 1) or r == 1:
        return x
    high = 1
    while high**r <= x:
        high <<= 1
    low = high >> 1
    while high - low > 1:
        mid = (low + high) // 2
        if mid**r <= x:
            low = mid
        else:
            high = mid
    return low
