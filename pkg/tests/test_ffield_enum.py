import itertools
import os
import random

import pytest

from gammacalc import ffield_enum
from gammacalc.errors import BudgetExceeded
from gammacalc.ffield_enum import (
    compare_with_oracle,
    enumerate_gamma,
    enumerate_projective_space,
)
from gammacalc.fields import PrimeField
from gammacalc.relations import (
    MultilinearRelation,
    is_member,
    random_split_relations,
    relations_to_tensors,
)
from gammacalc.shapes import AlgebraShape


def commutator(p):
    return MultilinearRelation(PrimeField(p), 2, {(1, 2): 1, (2, 1): p - 1})


class TestProjectiveSpace:
    def test_p1_f3(self):
        pts = enumerate_projective_space(2, 3)
        assert [pt.coords for pt in pts] == [(1, 0), (1, 1), (1, 2), (0, 1)]

    def test_fano_count(self):
        assert len(enumerate_projective_space(3, 2)) == 7

    def test_p1_f5(self):
        assert len(enumerate_projective_space(2, 5)) == 6

    def test_points_canonical_and_distinct(self):
        pts = enumerate_projective_space(3, 3)
        assert len(pts) == 13
        assert len({pt.coords for pt in pts}) == 13
        for pt in pts:
            lead = next(c for c in pt.coords if c != 0)
            assert lead == 1


class TestEnumerateGamma:
    def test_commutator_diagonal(self):
        shape = AlgebraShape(2, (2,), 2)
        tuples = enumerate_gamma([commutator(3)], shape, 3)
        assert len(tuples) == 4
        assert all(a.coords == b.coords for a, b in tuples)

    def test_no_relations(self):
        shape = AlgebraShape(2, (1,), 1)
        tuples = enumerate_gamma([], shape, 3)
        assert len(tuples) == 4

    def test_budget(self):
        shape = AlgebraShape(2, (2,), 5)
        with pytest.raises(BudgetExceeded):
            enumerate_gamma([commutator(3)], shape, 3, budget=100)

    def test_soundness_and_completeness(self):
        # every returned tuple is a member; random non-returned tuples are not
        shape = AlgebraShape(2, (2, 3), 3)
        p = 5
        splits = random_split_relations(shape, seed=9, field=PrimeField(p))
        tensors = relations_to_tensors(splits)
        found = enumerate_gamma(list(splits), shape, p)
        keys = {tuple(pt.coords for pt in t) for t in found}
        for t in found:
            assert is_member(tensors, shape.n, t)
        pts = enumerate_projective_space(2, p)
        rng = random.Random(0)
        misses = 0
        while misses < 50:
            t = tuple(rng.choice(pts) for _ in range(shape.n))
            if tuple(pt.coords for pt in t) in keys:
                continue
            assert not is_member(tensors, shape.n, t)
            misses += 1

    def test_lexicographic_order(self):
        shape = AlgebraShape(2, (2,), 2)
        pts = enumerate_projective_space(2, 3)
        order = {pt.coords: i for i, pt in enumerate(pts)}
        tuples = enumerate_gamma([commutator(3)], shape, 3)
        ranks = [tuple(order[pt.coords] for pt in t) for t in tuples]
        assert ranks == sorted(ranks)


class TestKernelPaths:
    def test_numba_and_numpy_agree(self, monkeypatch):
        shape = AlgebraShape(2, (3, 4), 5)
        splits = random_split_relations(shape, seed=42, field=PrimeField(7))
        rels = list(splits)

        monkeypatch.delenv("GAMMACALC_NO_NUMBA", raising=False)
        fast = enumerate_gamma(rels, shape, 7)
        monkeypatch.setenv("GAMMACALC_NO_NUMBA", "1")
        slow = enumerate_gamma(rels, shape, 7)
        key = lambda ts: [tuple(pt.coords for pt in t) for t in ts]
        assert key(fast) == key(slow)

    def test_env_flag_selects_numpy(self, monkeypatch):
        monkeypatch.setenv("GAMMACALC_NO_NUMBA", "1")
        assert not ffield_enum._numba_enabled()
        monkeypatch.delenv("GAMMACALC_NO_NUMBA")
        assert ffield_enum._numba_enabled()


class TestCompareWithOracle:
    def test_12221_f7_match(self):
        shape = AlgebraShape(2, (3, 4), 5)
        splits = random_split_relations(shape, seed=42, field=PrimeField(7))
        report = compare_with_oracle(splits, shape, 7)
        assert report["status"] == "MATCH"
        assert report["count"] == 17

    def test_13431_f5(self):
        shape = AlgebraShape(3, (2, 2, 3, 3), 3)
        try:
            splits = random_split_relations(
                shape, seed=1, field=PrimeField(5), max_attempts=500
            )
        except Exception:
            pytest.skip("no general-position F5 configuration found")
        report = compare_with_oracle(splits, shape, 5)
        assert report["status"] == "MATCH"
        assert report["count"] == 19

    def test_skip_on_bad_position(self):
        # proportional forms over F2 cannot be in general position
        from gammacalc.relations import LinearForm, SplitRelation

        f2 = PrimeField(2)
        f = LinearForm(f2, (1, 0))
        splits = [
            SplitRelation((f, f, f)),
            SplitRelation((f, f, f, f)),
        ]
        report = compare_with_oracle(splits, AlgebraShape(2, (3, 4), 5), 2)
        assert report["status"] == "SKIPPED"
