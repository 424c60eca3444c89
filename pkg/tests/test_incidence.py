"""Counting strategies, K_{s,t} search, and the reporting bound."""

from fractions import Fraction
from random import Random

import pytest

from inclab import (
    Flat,
    IncidenceInstance,
    IntVector,
    InvalidInput,
    RatPoint,
    ResourceLimit,
    contains,
    count_incidences,
    find_kst,
    incidence_masks,
    kst_bound_value,
    make_hyperplane,
)

from oracles import count_incidences_direct, int_root_floor


def P(*coords):
    return RatPoint(coords)


def grid_and_axis_lines():
    points = [P(x, y) for x in range(3) for y in range(3)]
    flats = [make_hyperplane(IntVector((1, 0)), c) for c in range(3)]
    flats += [make_hyperplane(IntVector((0, 1)), c) for c in range(3)]
    return points, flats


class TestCounting:
    def test_single_point_on_single_line(self):
        inst = IncidenceInstance([P(1, 2)], [make_hyperplane(IntVector((1, 1)), 3)], 2, 1)
        assert count_incidences(inst) == 1

    def test_grid_with_axis_lines_counts_18(self):
        points, flats = grid_and_axis_lines()
        inst = IncidenceInstance(points, flats, 2, 1)
        assert count_incidences(inst, "naive") == 18
        assert count_incidences(inst, "hashed") == 18

    def test_empty_family_counts_zero(self):
        inst = IncidenceInstance([P(0, 0)], [], 2, 1)
        assert count_incidences(inst) == 0

    def test_unknown_strategy_rejected(self):
        points, flats = grid_and_axis_lines()
        with pytest.raises(InvalidInput):
            count_incidences(IncidenceInstance(points, flats, 2, 1), "fast")

    def test_rational_points_and_offsets_count_exactly(self):
        points = [P(Fraction(1, 2), Fraction(1, 3)), P(1, 1), P(Fraction(1, 2), 2)]
        flats = [
            Flat(2, [[2, 0]], [1]),             # x = 1/2
            Flat(2, [[Fraction(1, 3), 1]], [Fraction(4, 3)]),  # x/3 + y = 4/3
        ]
        inst = IncidenceInstance(points, flats, 2, 1)
        assert count_incidences(inst, "naive") == count_incidences(inst, "hashed") == 3

    def test_non_hyperplane_flats_are_counted(self):
        axis = Flat(3, [[1, 0, 0], [0, 1, 0]], [0, 0])
        points = [P(0, 0, z) for z in range(4)] + [P(1, 0, 0)]
        inst = IncidenceInstance(points, [axis], 2, 1)
        assert count_incidences(inst, "naive") == 4
        assert count_incidences(inst, "hashed") == 4

    def test_strategy_agreement_on_random_instances(self):
        rng = Random(20240501)
        for trial in range(200):
            d = rng.randint(2, 6)
            points = [
                P(*[Fraction(rng.randint(-6, 6), rng.choice((1, 1, 1, 2, 3)))
                    for _ in range(d)])
                for _ in range(rng.randint(1, 25))
            ]
            flats = []
            for _ in range(rng.randint(1, 15)):
                if rng.random() < 0.75:
                    v = IntVector([rng.randint(-3, 3) for _ in range(d)])
                    if v.is_zero():
                        continue
                    # bias offsets toward achieved dot products
                    if points and rng.random() < 0.7:
                        c = v.dot(rng.choice(points))
                    else:
                        c = rng.randint(-6, 6)
                    flats.append(make_hyperplane(v, c))
                else:
                    n_eq = rng.randint(2, max(2, d - 1))
                    rows, rhs = [], []
                    anchor = rng.choice(points) if points else P(*([0] * d))
                    for _ in range(n_eq):
                        row = [Fraction(rng.randint(-2, 2)) for _ in range(d)]
                        if all(x == 0 for x in row):
                            row[rng.randrange(d)] = Fraction(1)
                        rows.append(row)
                        rhs.append(sum(a * x for a, x in zip(row, anchor.coords)))
                    flats.append(Flat(d, rows, rhs))
            if not flats:
                continue
            inst = IncidenceInstance(points, flats, 2, 1)
            naive = count_incidences(inst, "naive")
            hashed = count_incidences(inst, "hashed")
            assert naive == hashed, f"strategy split on trial {trial}"
            assert naive == count_incidences_direct(points, flats)

    def test_monotone_in_flats(self):
        rng = Random(99)
        points = [P(x, y) for x in range(4) for y in range(4)]
        flats = []
        last = 0
        for _ in range(30):
            v = IntVector([rng.randint(-2, 2), rng.randint(-2, 2)])
            if v.is_zero():
                continue
            flats.append(make_hyperplane(v, rng.randint(-3, 6)))
            now = count_incidences(IncidenceInstance(points, flats, 2, 1))
            assert now >= last
            last = now

    def test_mixed_dimension_instance_rejected(self):
        with pytest.raises(InvalidInput):
            IncidenceInstance([P(0, 0)], [make_hyperplane(IntVector((1, 0, 0)), 0)], 2, 1)


class TestMasks:
    def test_masks_match_contains(self):
        rng = Random(41)
        points = [P(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(12)]
        flats = [
            make_hyperplane(IntVector((rng.randint(-2, 2), rng.randint(1, 2))),
                            rng.randint(0, 4))
            for _ in range(9)
        ]
        masks = incidence_masks(points, flats)
        for i, p in enumerate(points):
            for j, f in enumerate(flats):
                assert bool(masks[i] >> j & 1) == contains(f, p)


class TestFindKst:
    def test_two_points_one_line_witness(self):
        points = [P(0, 0), P(1, 1), P(5, 0)]
        line = make_hyperplane(IntVector((1, -1)), 0)
        inst = IncidenceInstance(points, [line], 2, 1)
        witness = find_kst(inst)
        assert witness is not None
        assert witness.point_indices == (0, 1)
        assert witness.flat_indices == (0,)

    def test_distinct_lines_have_no_k22(self):
        # two points determine at most one line
        rng = Random(13)
        points = [P(x, y) for x in range(5) for y in range(5)]
        seen = set()
        flats = []
        for _ in range(40):
            v = IntVector((rng.randint(-3, 3), rng.randint(-3, 3)))
            if v.is_zero():
                continue
            key = (v.sign_canonical().coords, rng.randint(-4, 8))
            if key in seen:
                continue
            seen.add(key)
            flats.append(make_hyperplane(IntVector(key[0]), key[1]))
        inst = IncidenceInstance(points, flats, 2, 2)
        assert find_kst(inst) is None

    def test_duplicate_flats_force_a_witness(self):
        line = make_hyperplane(IntVector((1, -1)), 0)
        points = [P(0, 0), P(1, 1), P(2, 0)]
        inst = IncidenceInstance(points, [line, line], 2, 2)
        witness = find_kst(inst)
        assert witness is not None
        assert witness.point_indices == (0, 1)
        assert set(witness.flat_indices) == {0, 1}

    def test_s3_path_finds_triple(self):
        points = [P(0, 0), P(1, 1), P(2, 2), P(3, 0)]
        l1 = make_hyperplane(IntVector((1, -1)), 0)
        inst = IncidenceInstance(points, [l1, l1], 3, 2)
        witness = find_kst(inst)
        assert witness is not None
        assert witness.point_indices == (0, 1, 2)

    def test_general_s_exhaustive_path(self):
        points = [P(x, 0) for x in range(6)]
        axis = make_hyperplane(IntVector((0, 1)), 0)
        inst = IncidenceInstance(points, [axis, axis, axis], 4, 3)
        witness = find_kst(inst)
        assert witness is not None
        assert witness.point_indices == (0, 1, 2, 3)
        assert witness.flat_indices == (0, 1, 2)

    def test_flats_side_search(self):
        # many flats, few points: the flat-side subsets are cheaper
        points = [P(0, 0), P(1, 1)]
        flats = [make_hyperplane(IntVector((1, -1)), 0) for _ in range(3)]
        flats += [make_hyperplane(IntVector((1, 0)), 7) for _ in range(2)]
        inst = IncidenceInstance(points, flats, 2, 2)
        witness = find_kst(inst)
        assert witness is not None
        assert witness.point_indices == (0, 1)

    def test_resource_limit_reports_budget(self):
        points = [P(x, y) for x in range(30) for y in range(30)]
        flats = [make_hyperplane(IntVector((1, 0)), c) for c in range(30)]
        inst = IncidenceInstance(points, flats, 5, 2)
        with pytest.raises(ResourceLimit) as err:
            find_kst(inst, limit=1000)
        assert err.value.limit == 1000
        assert err.value.estimate is not None and err.value.estimate > 1000

    def test_witness_soundness_on_random_instances(self):
        rng = Random(707)
        for _ in range(60):
            points = [P(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(8)]
            flats = []
            for _ in range(6):
                v = IntVector((rng.randint(-2, 2), rng.randint(-2, 2)))
                if v.is_zero():
                    continue
                flats.append(make_hyperplane(v, v.dot(rng.choice(points))))
            if not flats:
                continue
            s, t = rng.choice(((2, 1), (2, 2), (3, 1), (3, 2)))
            inst = IncidenceInstance(points, flats, s, t)
            witness = find_kst(inst)
            if witness is not None:
                assert len(witness.point_indices) == s
                assert len(witness.flat_indices) == t
                for i in witness.point_indices:
                    for j in witness.flat_indices:
                        assert contains(flats[j], points[i])


class TestBoundValue:
    def test_perfect_square(self):
        bound = kst_bound_value(100, 100, 2)
        assert bound.exact and bound.value == 1100

    def test_zero_points(self):
        bound = kst_bound_value(0, 37, 2)
        assert bound.exact and bound.value == 37

    def test_cube_root_case(self):
        bound = kst_bound_value(1000, 64, 3)
        assert bound.exact and bound.value == 1000 * 16 + 64

    def test_inexact_case_has_declared_precision(self):
        bound = kst_bound_value(10, 2, 2)
        assert not bound.exact
        # 10*sqrt(2)+2 to 30 significant digits
        expected = 16.142135623730950488
        assert abs(float(bound.value) - expected) < 1e-12
        assert bound.digits == 30

    def test_preconditions(self):
        with pytest.raises(InvalidInput):
            kst_bound_value(-1, 2, 2)
        with pytest.raises(InvalidInput):
            kst_bound_value(1, 2, 1)

    def test_exactness_detection_matches_root_oracle(self):
        rng = Random(2)
        for _ in range(120):
            n = rng.randint(1, 500)
            s = rng.randint(2, 5)
            m = rng.randint(1, 50)
            bound = kst_bound_value(m, n, s)
            root = int_root_floor(n ** (s - 1), s)
            is_exact_power = root**s == n ** (s - 1)
            assert bound.exact == is_exact_power
            if is_exact_power:
                assert bound.value == m * root + n
