"""Command-line behavior: exit codes, output formats, embedded examples."""

import json

import pytest

from tgrs import tgrs_spec_to_json
from tgrs.cli import main
from tgrs.golden import GOLDEN_CODES


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def golden_spec_file(tmp_path):
    return write_json(tmp_path / "spec.json", tgrs_spec_to_json(GOLDEN_CODES[1].spec()))


@pytest.fixture
def recipe1_params_file(tmp_path):
    gc = GOLDEN_CODES[1]
    return write_json(tmp_path / "params.json", {
        "q": gc.q, "n": gc.n, "k": gc.k, "h": gc.h, "l": gc.l, "lambda": gc.lam,
        "eta": list(gc.eta), "v_head": list(gc.v[: gc.k - 1]),
        "v_tail_signs": list(gc.v[gc.k - 1:]), "alpha": list(gc.alpha),
    })


@pytest.fixture
def recipe2_params_file(tmp_path):
    gc = GOLDEN_CODES[3]
    return write_json(tmp_path / "params.json", {
        "q": gc.q, "n": gc.n, "h": gc.h, "l": gc.l, "m_gap": gc.m_gap,
        "lambda": gc.lam, "eta": list(gc.eta), "v_head": list(gc.v[: gc.k - 1]),
        "v_tail_signs": list(gc.v[gc.k - 1:]), "alpha": list(gc.alpha),
    })


class TestCheck:
    def test_reports_published_mds_code(self, golden_spec_file, capsys):
        assert main(["check", "--input", golden_spec_file]) == 0
        out = capsys.readouterr().out
        assert "[9,3,7]" in out
        assert "lcd True" in out and "mds True" in out

    def test_json_output_parses(self, golden_spec_file, capsys):
        assert main(["check", "--input", golden_spec_file, "--output", "json"]) == 0
        blob = json.loads(capsys.readouterr().out)
        assert blob["report"]["is_lcd"] is True
        assert blob["report"]["min_distance"] == 7
        assert blob["generator"] == GOLDEN_CODES[1].normalized_generator()

    def test_duplicate_alpha_exits_2(self, tmp_path, capsys):
        obj = tgrs_spec_to_json(GOLDEN_CODES[1].spec())
        obj["alpha"][4] = obj["alpha"][1]
        code = main(["check", "--input", write_json(tmp_path / "bad.json", obj)])
        assert code == 2
        assert "positions 1 and 4" in capsys.readouterr().err

    def test_twist_bound_violation_exits_2(self, tmp_path, capsys):
        obj = tgrs_spec_to_json(GOLDEN_CODES[1].spec())
        obj["l"] = obj["n"] - obj["k"]  # one past the allowed maximum
        obj["eta"] = [1] * (obj["l"] + 1)
        code = main(["check", "--input", write_json(tmp_path / "bad.json", obj)])
        assert code == 2
        assert "n-k-1" in capsys.readouterr().err

    def test_malformed_json_exits_2_with_position(self, tmp_path, capsys):
        bad = tmp_path / "broken.json"
        bad.write_text('{"n": 5,,}')
        assert main(["check", "--input", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "line 1" in err and "column" in err

    def test_missing_file_exits_2(self, tmp_path, capsys):
        assert main(["check", "--input", str(tmp_path / "nope.json")]) == 2

    def test_unsafe_cap_gate(self, golden_spec_file, capsys):
        assert main(["check", "--input", golden_spec_file, "--distance-cap", "30"]) == 2
        assert "--unsafe-cap" in capsys.readouterr().err


class TestBuild:
    def test_emits_both_matrices(self, golden_spec_file, capsys):
        assert main(["build", "--input", golden_spec_file]) == 0
        out = capsys.readouterr().out
        assert "generator matrix" in out and "parity-check matrix" in out

    def test_json_matrices(self, golden_spec_file, capsys):
        assert main(["build", "--input", golden_spec_file, "--output", "json"]) == 0
        blob = json.loads(capsys.readouterr().out)
        assert len(blob["parity_check"]) == 6


class TestConstruct:
    def test_recipe1_applicable(self, recipe1_params_file, capsys):
        assert main(["construct1", "--input", recipe1_params_file]) == 0
        out = capsys.readouterr().out
        assert "applicable" in out

    def test_recipe2_applicable_json(self, recipe2_params_file, capsys):
        assert main(["construct2", "--input", recipe2_params_file, "--output", "json"]) == 0
        blob = json.loads(capsys.readouterr().out)
        assert blob["applicable"] is True
        assert any(c["condition"].startswith("quadratic") for c in blob["record"])

    def test_recipe1_gate_failure_exits_1(self, tmp_path, capsys):
        gc = GOLDEN_CODES[1]
        obj = {
            "q": gc.q, "n": gc.n, "k": gc.k, "h": gc.h, "l": gc.l, "lambda": gc.lam,
            "eta": [0, 20],  # zeroes the gate coefficient
            "v_head": list(gc.v[: gc.k - 1]), "v_tail_signs": list(gc.v[gc.k - 1:]),
            "alpha": list(gc.alpha),
        }
        code = main(["construct1", "--input", write_json(tmp_path / "p.json", obj)])
        assert code == 1
        assert "inapplicable" in capsys.readouterr().out

    def test_bad_params_exit_2(self, tmp_path, capsys):
        obj = {"q": 31, "n": 7, "k": 2, "h": 1, "l": 0, "lambda": 1, "eta": [1],
               "v_head": [2], "v_tail_signs": [1] * 6}
        assert main(["construct1", "--input", write_json(tmp_path / "p.json", obj)]) == 2


class TestSearch:
    def test_finds_published_twist(self, tmp_path, capsys):
        gc = GOLDEN_CODES[1]
        template = {
            "class": 1, "q": gc.q, "n": gc.n, "k": gc.k, "h": gc.h, "l": gc.l,
            "lambda": gc.lam, "v_head": list(gc.v[: gc.k - 1]),
            "v_tail_signs": list(gc.v[gc.k - 1:]), "alpha": list(gc.alpha),
        }
        path = write_json(tmp_path / "tpl.json", template)
        assert main(["search", "--input", path, "--budget", "1369",
                     "--output", "json"]) == 0
        blob = json.loads(capsys.readouterr().out)
        assert [22, 24] in [h["eta"] for h in blob["hits"]]
        assert blob["count"] == len(blob["hits"])

    def test_budget_zero_exits_2(self, tmp_path, capsys):
        path = write_json(tmp_path / "tpl.json", {"class": 1})
        assert main(["search", "--input", path, "--budget", "0"]) == 2

    def test_workers_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("TGRS_WORKERS", "2")
        template = {
            "class": 1, "q": 31, "n": 5, "k": 2, "h": 1, "l": 0, "lambda": 1,
            "v_head": [2], "v_tail_signs": [1, -1, 1, -1],
        }
        path = write_json(tmp_path / "tpl.json", template)
        assert main(["search", "--input", path, "--budget", "31",
                     "--output", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["count"] > 0

    def test_bad_workers_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("TGRS_WORKERS", "lots")
        path = write_json(tmp_path / "tpl.json", {
            "class": 1, "q": 31, "n": 5, "k": 2, "h": 1, "l": 0, "lambda": 1,
            "v_head": [2], "v_tail_signs": [1, -1, 1, -1]})
        assert main(["search", "--input", path, "--budget", "5"]) == 2


class TestPaperExamples:
    def test_all_pass(self, capsys):
        assert main(["paper-examples"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 4
        for shape in ("[15,4]", "[9,3,7]", "[15,6]", "[10,3,8]"):
            assert shape in out

    def test_hermetic_json_output(self, capsys):
        assert main(["paper-examples", "--output", "json"]) == 0
        blob = json.loads(capsys.readouterr().out)
        assert blob["all_pass"] is True
        assert [r["r"] for r in blob["results"]] == [14, 3, 15, 7]

    def test_corrupt_mode_reports_coordinates(self, capsys):
        assert main(["paper-examples", "--corrupt", "3,2,5"]) == 1
        captured = capsys.readouterr()
        assert "example 3" in captured.err
        assert "row 2" in captured.err and "col 5" in captured.err

    def test_corrupt_json_carries_mismatch(self, capsys):
        assert main(["paper-examples", "--corrupt", "1,1,1", "--output", "json"]) == 1
        blob = json.loads(capsys.readouterr().out)
        bad = blob["results"][0]
        assert bad["pass"] is False
        assert bad["mismatch"]["row"] == 1 and bad["mismatch"]["col"] == 1

    def test_bad_corrupt_format_exits_2(self, capsys):
        assert main(["paper-examples", "--corrupt", "xyz"]) == 2

    def test_out_of_range_corrupt_exits_2(self, capsys):
        assert main(["paper-examples", "--corrupt", "9,1,1"]) == 2
        assert main(["paper-examples", "--corrupt", "2,5,1"]) == 2


class TestExtensionFieldInput:
    def test_check_over_gf9(self, tmp_path, capsys):
        obj = {
            "field": {"p": 3, "m": 2, "modulus": [1, 0, 1]},
            "n": 4, "k": 2, "l": 1, "h": 1,
            "alpha": [[1, 0], [2, 0], [0, 1], [0, 2]],  # the 4th roots of unity
            "v": [[1, 0], [1, 1], [1, 0], [2, 0]],
            "eta": [[0, 1], [2, 0]],
        }
        path = write_json(tmp_path / "ext.json", obj)
        assert main(["check", "--input", path, "--output", "json"]) == 0
        blob = json.loads(capsys.readouterr().out)
        assert blob["report"]["n"] == 4
        assert isinstance(blob["generator"][0][0], list)


class TestJsonStability:
    def test_report_emission_round_trips(self, golden_spec_file, capsys):
        main(["check", "--input", golden_spec_file, "--output", "json"])
        first = capsys.readouterr().out
        parsed = json.loads(first)
        again = json.dumps(parsed, sort_keys=True, indent=2) + "\n"
        assert first == again
