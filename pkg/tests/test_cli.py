import json

import pytest

from sporbits.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestEnumerate:
    def test_2n4(self, capsys):
        code, blob = run_json(capsys, "enumerate", "--n", "2")
        assert code == EXIT_OK
        assert blob["count"] == 3
        assert sorted(blob["involutions"]) == [
            [2, 1, 4, 3],
            [3, 4, 1, 2],
            [4, 3, 2, 1],
        ]

    def test_deterministic(self, capsys):
        _, first = run(capsys, "enumerate", "--n", "3")
        _, second = run(capsys, "enumerate", "--n", "3")
        assert first == second


class TestPoset:
    def test_json_edges(self, capsys):
        code, blob = run_json(capsys, "poset", "--n", "2")
        assert code == EXIT_OK
        assert [[4, 3, 2, 1], [3, 4, 1, 2]] in blob["edges_lower_to_upper"]

    def test_dot(self, capsys):
        code, out = run(capsys, "poset", "--n", "2", "--format", "dot")
        assert code == EXIT_OK
        assert out.startswith("digraph")


class TestWiringAndBoxes:
    def test_wiring(self, capsys):
        code, out = run(capsys, "wiring", "--iota", "2143")
        assert code == EXIT_OK
        assert "word: 2,1,4,3" in out

    def test_boxes(self, capsys):
        code, blob = run_json(capsys, "boxes", "--iota", "216543")
        assert code == EXIT_OK
        assert blob["symplectic_essential_boxes"] == [[3, 5, 2]]
        assert blob["odd_rank_constraint_holds"] is True

    def test_bad_iota_is_usage_error(self, capsys):
        code = main(["boxes", "--iota", "1234"])
        assert code == EXIT_USAGE


class TestBasicsAndPairperms:
    def test_basics(self, capsys):
        code, blob = run_json(capsys, "basics", "--iota", "351624")
        assert code == EXIT_OK
        assert blob["glb_matches"] is True
        assert blob["glb"] == [3, 5, 1, 6, 2, 4]
        assert len(blob["decomposition"]) == 2

    def test_pairperms(self, capsys):
        code, blob = run_json(capsys, "pairperms", "--iota", "4321")
        assert code == EXIT_OK
        assert blob["length"] == 2
        assert sorted(blob["pair_permutations"]) == [[1, 3, 4, 2], [3, 1, 2, 4]]


class TestGroebner:
    def test_ideal_file(self, capsys, tmp_path):
        blob = {
            "variables": ["x", "y"],
            "generators": ["x^2 - 1", "x*y - 1"],
        }
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps(blob))
        code, blob = run_json(capsys, "groebner", "--ideal", str(path), "--order", "lex")
        assert code == EXIT_OK
        assert sorted(blob["reduced_basis"]) == ["x-y", "y^2-1"]

    def test_budget_exit_code(self, capsys, tmp_path):
        blob = {"variables": ["x", "y"], "generators": ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]}
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps(blob))
        code, blob = run_json(
            capsys, "groebner", "--ideal", str(path), "--max-pairs", "1"
        )
        assert code == EXIT_BUDGET
        assert blob["budget_exhausted"]


class TestOrbitIdealAndClassify:
    def test_orbit_ideal(self, capsys):
        code, blob = run_json(capsys, "orbit-ideal", "--iota", "4321")
        assert code == EXIT_OK
        assert len(blob["generators"]) == 2

    def test_orbit_ideal_not_in_catalog(self, capsys):
        code, blob = run_json(capsys, "orbit-ideal", "--iota", "456123")
        assert code == EXIT_USAGE
        assert "error" in blob

    def test_classify(self, capsys, tmp_path):
        rows = [
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "0", "1", "0"],
            ["0", "0", "0", "1"],
        ]
        path = tmp_path / "m.json"
        path.write_text(json.dumps(rows))
        code, blob = run_json(capsys, "classify", "--matrix", str(path))
        assert code == EXIT_OK
        assert blob["iota"] == [2, 1, 4, 3]


class TestVerifiers:
    def test_verify_km(self, capsys):
        code, blob = run_json(capsys, "verify-km", "--pi", "2143")
        assert code == EXIT_OK
        assert blob["groebner_basis"] is True

    def test_verify_degeneration(self, capsys):
        code, blob = run_json(capsys, "verify-degeneration", "--iota", "4321")
        assert code == EXIT_OK
        assert blob["equal"] is True

    def test_verify_degeneration_budget(self, capsys):
        code, blob = run_json(
            capsys, "verify-degeneration", "--iota", "4321", "--max-pairs", "0"
        )
        assert code == EXIT_BUDGET
        assert blob["equal"] is None

    def test_verify_all_small(self, capsys):
        code, blob = run_json(
            capsys, "verify-all", "--n", "2", "--samples", "3", "--seed", "1"
        )
        assert code == EXIT_OK
        assert blob["failures"] == []
        names = [row[0] for row in blob["checks"]]
        assert "length_formula_2n=4" in names
        assert "degeneration_4321" in names


class TestConfig:
    def test_config_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"n": 2}))
        code, blob = run_json(capsys, "--config", str(cfg), "verify-all", "--samples", "2")
        assert code == EXIT_OK
        assert not any(name.endswith("2n=6") for name, *_ in blob["checks"])

    def test_flags_beat_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"n": 3}))
        code, blob = run_json(
            capsys, "--config", str(cfg), "verify-all", "--n", "2", "--samples", "2"
        )
        assert code == EXIT_OK
        assert not any(name.endswith("2n=6") for name, *_ in blob["checks"])

    def test_bad_config(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{not json")
        with pytest.raises(SystemExit):
            main(["--config", str(cfg), "enumerate", "--n", "2"])
