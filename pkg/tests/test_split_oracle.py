import itertools

import pytest

from gammacalc import chow
from gammacalc.errors import DefectMismatch, GeneralPositionViolation
from gammacalc.fields import QQ, PrimeField
from gammacalc.relations import (
    LinearForm,
    SplitRelation,
    random_split_relations,
    split_to_tensor,
    is_member,
)
from gammacalc.shapes import AlgebraShape, defect, windows_of
from gammacalc.split_oracle import (
    check_general_position,
    count_choice_functions,
    enumerate_components,
    profile_census,
    realize_points,
)


def form(*coeffs, field=QQ):
    return LinearForm(field, tuple(field.from_int(c) for c in coeffs))


# Independent oracle: enumerate raw choice functions with itertools.product,
# no backtracking, no pruning beyond the profile filter itself.
def brute_census(shape):
    wins = windows_of(shape)
    census = {}
    for choice in itertools.product(*[list(w.covered_slots) for w in wins]):
        profile = [0] * shape.n
        for slot in choice:
            profile[slot - 1] += 1
        if all(c <= shape.r - 1 for c in profile):
            key = tuple(profile)
            census[key] = census.get(key, 0) + 1
    return census


def brute_full_count(shape):
    return brute_census(shape).get(((shape.r - 1),) * shape.n, 0)


# Textbook permanent by permutation expansion, for the r=2 square case.
def permanent(matrix):
    n = len(matrix)
    return sum(
        prod(matrix[i][p[i]] for i in range(n))
        for p in itertools.permutations(range(n))
    )


def prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


class TestGeneralPosition:
    def test_pairwise_non_proportional(self):
        assert check_general_position([form(1, 0), form(0, 1), form(1, 1)], 2)

    def test_proportional_pair(self):
        assert not check_general_position([form(1, 1), form(2, 2)], 2)

    def test_r3_frame(self):
        forms = [form(1, 0, 0), form(0, 1, 0), form(0, 0, 1), form(1, 1, 1)]
        assert check_general_position(forms, 3)

    def test_fewer_forms_than_r(self):
        assert check_general_position([form(1, 0, 0), form(0, 1, 0)], 3)
        assert not check_general_position([form(1, 0, 0), form(2, 0, 0)], 3)


class TestCounts:
    def test_12221(self):
        shape = AlgebraShape(2, (3, 4), 5)
        got = count_choice_functions(shape)
        assert got == brute_full_count(shape) == 17

    def test_14641(self):
        # choose 3 of the 6 windows for slot 1: C(6,3) = 20
        shape = AlgebraShape(4, (2,) * 6, 2)
        assert count_choice_functions(shape) == brute_full_count(shape) == 20

    def test_13431(self):
        # exhaustive over 2*2*2*2*3*3 = 144 raw choice functions
        shape = AlgebraShape(3, (2, 2, 3, 3), 3)
        assert count_choice_functions(shape) == brute_full_count(shape) == 19

    def test_defect_mismatch(self):
        with pytest.raises(DefectMismatch):
            count_choice_functions(AlgebraShape(2, (3, 4), 4))

    def test_permanent_consistency_12221(self):
        shape = AlgebraShape(2, (3, 4), 5)
        wins = windows_of(shape)
        incidence = [
            [1 if m + 1 in w.covered_slots else 0 for m in range(shape.n)]
            for w in wins
        ]
        assert permanent(incidence) == count_choice_functions(shape) == 17

    def test_permanent_consistency_sweep(self):
        # all r=2 shapes with defect = n, windows from degrees in 2..4
        for n in range(2, 6):
            for s in range(1, n + 1):
                for d in itertools.combinations_with_replacement(
                    range(2, min(4, n) + 1), s
                ):
                    shape = AlgebraShape(2, d, n)
                    if defect(shape) != n:
                        continue
                    incidence = [
                        [1 if m + 1 in w.covered_slots else 0
                         for m in range(n)]
                        for w in windows_of(shape)
                    ]
                    assert permanent(incidence) == count_choice_functions(shape)


class TestComponents:
    def test_12221_n4(self):
        comps = enumerate_components(AlgebraShape(2, (3, 4), 4))
        assert len(comps) == 14
        assert all(c.dimension == 1 for c in comps)
        by_omitted = {}
        for c in comps:
            omitted = c.profile.index(0)
            by_omitted[omitted] = by_omitted.get(omitted, 0) + 1
        assert [by_omitted[i] for i in range(4)] == [4, 3, 3, 4]

    def test_12221_n5(self):
        comps = enumerate_components(AlgebraShape(2, (3, 4), 5))
        assert len(comps) == 17
        assert all(c.dimension == 0 for c in comps)

    def test_single_relation(self):
        comps = enumerate_components(AlgebraShape(2, (2,), 2))
        assert len(comps) == 2
        assert {c.profile for c in comps} == {(1, 0), (0, 1)}

    def test_profile_sums_to_defect(self):
        for shape in [AlgebraShape(2, (3, 4), 5), AlgebraShape(3, (2, 2, 3, 3), 3)]:
            df = defect(shape)
            for c in enumerate_components(shape):
                assert sum(c.profile) == df


class TestProfileCensus:
    def test_12221_n4(self):
        census = profile_census(AlgebraShape(2, (3, 4), 4))
        assert census == {
            (1, 1, 1, 0): 4, (1, 1, 0, 1): 3, (1, 0, 1, 1): 3, (0, 1, 1, 1): 4,
        }

    def test_14641(self):
        assert profile_census(AlgebraShape(4, (2,) * 6, 2)) == {(3, 3): 20}

    def test_single_relation(self):
        assert profile_census(AlgebraShape(2, (2,), 2)) == {(1, 0): 1, (0, 1): 1}

    def test_matches_brute_force(self):
        for shape in [
            AlgebraShape(2, (3, 4), 5),
            AlgebraShape(3, (2, 2, 3, 3), 3),
            AlgebraShape(2, (2, 3), 4),
            AlgebraShape(4, (2, 2, 3), 3),
        ]:
            assert profile_census(shape) == brute_census(shape)

    def test_matches_chow_terms(self):
        for shape in [
            AlgebraShape(2, (3, 4), 5),
            AlgebraShape(3, (2, 2, 3, 3), 3),
            AlgebraShape(4, (2,) * 6, 2),
            AlgebraShape(2, (3, 4), 4),
        ]:
            assert profile_census(shape) == chow.gamma_class(shape).terms


class TestRealizePoints:
    @pytest.mark.parametrize(
        "shape,expected",
        [
            (AlgebraShape(2, (3, 4), 5), 17),
            (AlgebraShape(4, (2,) * 6, 2), 20),
            (AlgebraShape(3, (2, 2, 3, 3), 3), 19),
        ],
        ids=["12221", "14641", "13431"],
    )
    def test_counts_and_membership(self, shape, expected):
        splits = random_split_relations(shape, seed=42, field=QQ)
        tuples = realize_points(splits, shape)
        assert len(tuples) == expected
        keys = {tuple(p.coords for p in t) for t in tuples}
        assert len(keys) == expected
        tensors = [split_to_tensor(s) for s in splits]
        for t in tuples:
            assert is_member(tensors, shape.n, t)

    def test_defect_mismatch(self):
        splits = [SplitRelation((form(1, 0), form(0, 1)))]
        with pytest.raises(DefectMismatch):
            realize_points(splits, AlgebraShape(2, (2,), 2))

    def test_general_position_rejected(self):
        bad = [
            SplitRelation((form(1, 1), form(2, 2), form(1, 0))),
            SplitRelation((form(0, 1), form(1, 2), form(1, 3), form(1, 4))),
        ]
        with pytest.raises(GeneralPositionViolation):
            realize_points(bad, AlgebraShape(2, (3, 4), 5))

    def test_prime_field_realization(self):
        shape = AlgebraShape(2, (3, 4), 5)
        splits = random_split_relations(shape, seed=42, field=PrimeField(11))
        assert len(realize_points(splits, shape)) == 17
