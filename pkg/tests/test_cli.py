import json

import pytest

from gammacalc.cli import main
from gammacalc.fields import QQ
from gammacalc.relations import random_split_relations, serialize_relations
from gammacalc.shapes import AlgebraShape


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


class TestExpectedDim:
    def test_zero_dim(self, capsys):
        code, obj = run_json(capsys, "expected-dim", "--shape", "r=2 d=3,4 n=5")
        assert code == 0
        assert obj["defect"] == 5
        assert obj["expected_dim"] == 0
        assert obj["stable"] is True

    def test_curve_case(self, capsys):
        code, obj = run_json(capsys, "expected-dim", "--shape", "r=2 d=3,4 n=4")
        assert code == 0
        assert (obj["defect"], obj["expected_dim"]) == (3, 1)

    def test_unstable(self, capsys):
        code, obj = run_json(capsys, "expected-dim", "--shape", "r=2 d=2,3 n=3")
        assert obj["stable"] is True
        code2, out, err = run(capsys, "expected-dim", "--shape", "r=2 d=3,4 n=3")
        assert code2 == 3  # degree 4 exceeds n

    def test_bad_shape_is_usage_error(self, capsys):
        code, out, err = run(capsys, "expected-dim", "--shape", "nonsense")
        assert code == 2


class TestCount:
    @pytest.mark.parametrize(
        "shape,expected",
        [("r=4 d=2,2,2,2,2,2 n=2", 20), ("r=3 d=2,2,3,3 n=3", 19),
         ("r=2 d=3,4 n=5", 17)],
    )
    def test_headline_counts(self, capsys, shape, expected):
        code, obj = run_json(capsys, "count", "--shape", shape)
        assert code == 0
        assert obj["point_count"] == expected

    def test_defect_mismatch_exit_code(self, capsys):
        code, out, err = run(capsys, "count", "--shape", "r=2 d=3,4 n=4")
        assert code == 3
        assert "DefectMismatch" in err


class TestChowClass:
    def test_12221_n4_text(self, capsys):
        code, out, err = run(capsys, "chow-class", "--shape", "r=2 d=3,4 n=4")
        assert code == 0
        assert out.strip() == "4*e1e2e3+3*e1e2e4+3*e1e3e4+4*e2e3e4"

    def test_14641_json(self, capsys):
        code, obj = run_json(capsys, "chow-class", "--shape",
                             "r=4 d=2,2,2,2,2,2 n=2")
        assert obj["class"]["terms"] == [{"exp": [3, 3], "coeff": "20"}]

    def test_single_window(self, capsys):
        code, out, err = run(capsys, "chow-class", "--shape", "r=2 d=2 n=2")
        assert out.strip() == "e1+e2"


class TestMultidegree:
    def test_tuple(self, capsys):
        code, obj = run_json(capsys, "multidegree", "--shape", "r=2 d=3,4 n=4")
        assert obj["multidegree"] == [4, 3, 3, 4]

    def test_zero_dim_table(self, capsys):
        code, obj = run_json(capsys, "multidegree", "--shape", "r=2 d=3,4 n=5")
        assert obj["table"] == [{"exp": [1, 1, 1, 1, 1], "coeff": "17"}]


class TestOracle:
    def test_12221(self, capsys):
        code, obj = run_json(capsys, "oracle", "--shape", "r=2 d=3,4 n=5",
                             "--seed", "42")
        assert code == 0
        assert obj["count"] == 17
        assert obj["chow_match"] is True
        assert len(obj["points"]) == 17

    def test_14641(self, capsys):
        code, obj = run_json(capsys, "oracle", "--shape",
                             "r=4 d=2,2,2,2,2,2 n=2", "--seed", "1")
        assert code == 0 and obj["count"] == 20

    def test_overdetermined_exit(self, capsys):
        code, out, err = run(capsys, "oracle", "--shape", "r=2 d=2,2,2 n=2")
        assert code == 3

    def test_relations_file(self, capsys, tmp_path):
        shape = AlgebraShape(2, (3, 4), 5)
        splits = random_split_relations(shape, seed=5, field=QQ)
        path = tmp_path / "rels.json"
        path.write_text(serialize_relations(2, QQ, splits))
        code, obj = run_json(capsys, "oracle", "--shape", "r=2 d=3,4 n=5",
                             "--relations", str(path))
        assert code == 0 and obj["count"] == 17


class TestFfEnum:
    def test_12221_f7(self, capsys):
        code, obj = run_json(capsys, "ff-enum", "--shape", "r=2 d=3,4 n=5",
                             "--seed", "42", "--p", "7")
        assert code == 0
        assert obj["status"] == "MATCH"
        assert obj["count"] == 17

    def test_f2_skipped(self, capsys):
        code, obj = run_json(capsys, "ff-enum", "--shape", "r=2 d=3,4 n=5",
                             "--seed", "7", "--p", "2")
        assert code == 0
        assert obj["status"] == "SKIPPED"


class TestVerify:
    def test_small_sweep(self, capsys):
        code, out, err = run(capsys, "verify", "--s-max", "2", "--n-max", "3")
        assert code == 0
        assert "12221:17 OK" in out
        assert "13431:19 OK" in out
        assert "14641:20 OK" in out
        assert "12221-n4:(4,3,3,4) OK" in out
        assert "FAIL" not in out
        assert "outside lemma hypothesis" in out

    def test_seed_does_not_change_counts(self, capsys):
        for seed in ("1", "2"):
            code, obj = run_json(capsys, "oracle", "--shape", "r=2 d=3,4 n=5",
                                 "--seed", seed)
            assert obj["count"] == 17


class TestSampleRelations:
    def test_round_trip(self, capsys, tmp_path):
        code, out, err = run(capsys, "sample-relations", "--shape",
                             "r=2 d=3,4 n=5", "--seed", "42")
        assert code == 0
        obj = json.loads(out)
        assert obj["r"] == 2 and len(obj["relations"]) == 2


def test_usage_error_on_missing_shape(capsys):
    assert main(["count"]) == 2
