"""CLI surface: CSV schema, JSON evaluation, exit codes, determinism."""

import json
import math

import pytest

from qkdbound.cli import (
    CSV_HEADER,
    EXIT_INCONSISTENT,
    EXIT_OK,
    EXIT_UNPHYSICAL,
    main,
)
from qkdbound.keyrate import bb84_reference_rate
from qkdbound.scenarios import SCENARIO_NAMES, depolarizing_statistics


def write_stats(tmp_path, stats, name="stats.json", mutate=None):
    payload = json.loads(stats.to_json())
    if mutate:
        mutate(payload)
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def read_rows(path):
    lines = path.read_text().strip().split("\n")
    assert lines[0] == CSV_HEADER
    return [line.split(",") for line in lines[1:]]


class TestSweep:
    def test_small_grid(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = main(["sweep", "--scenario", "depolarizing", "--alpha-sq", "0.5",
                     "--q-min", "0", "--q-max", "0.15", "--steps", "4",
                     "--out", str(out), "--include-bb84"])
        assert code == EXIT_OK
        rows = read_rows(out)
        assert len(rows) == 4
        assert rows[0][0] == "0" and rows[0][2] == "1" and rows[0][3] == "1"
        for row in rows:
            assert row[5] == "1"
            assert abs(float(row[2]) - float(row[3])) < 1e-6

    def test_rate_column_matches_reference_everywhere(self, tmp_path):
        out = tmp_path / "depol.csv"
        main(["sweep", "--scenario", "depolarizing", "--alpha-sq", "0.3",
              "--q-min", "0", "--q-max", "0.25", "--steps", "26",
              "--out", str(out), "--include-bb84"])
        for row in read_rows(out):
            assert abs(float(row[2]) - bb84_reference_rate(float(row[0]))) < 1e-6

    def test_byte_deterministic(self, tmp_path):
        args = ["sweep", "--scenario", "qa-double", "--alpha-sq", "0.8",
                "--alpha-sq", "0.2", "--q-min", "0", "--q-max", "0.2",
                "--steps", "9", "--out", None, "--include-bb84"]
        outputs = []
        for name in ("a.csv", "b.csv"):
            path = tmp_path / name
            args[-2] = str(path)
            assert main(args) == EXIT_OK
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]

    def test_rows_ordered_by_q_then_alpha(self, tmp_path):
        out = tmp_path / "multi.csv"
        main(["sweep", "--scenario", "depolarizing", "--alpha-sq", "0.8",
              "--alpha-sq", "0.2", "--q-min", "0", "--q-max", "0.1",
              "--steps", "3", "--out", str(out)])
        keys = [(float(r[0]), float(r[1])) for r in read_rows(out)]
        assert keys == sorted(keys)

    def test_infeasible_rows_marked(self, tmp_path):
        # qa-double at alpha^2 = 0.2 leaves the physical range for large Q
        out = tmp_path / "infeasible.csv"
        code = main(["sweep", "--scenario", "qa-double", "--alpha-sq", "0.2",
                     "--q-min", "0.3", "--q-max", "0.5", "--steps", "5",
                     "--out", str(out)])
        assert code == EXIT_OK
        rows = read_rows(out)
        flags = {row[5] for row in rows}
        assert "0" in flags
        for row in rows:
            if row[5] == "0":
                assert row[2] == "" and row[4] == ""

    def test_bb84_column_empty_without_flag(self, tmp_path):
        out = tmp_path / "plain.csv"
        main(["sweep", "--scenario", "depolarizing", "--q-max", "0.1",
              "--steps", "2", "--out", str(out)])
        for row in read_rows(out):
            assert row[3] == ""

    def test_invalid_scenario_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--scenario", "gaussian", "--q-max", "0.1",
                  "--steps", "2", "--out", str(tmp_path / "x.csv")])
        assert exc.value.code == 2

    def test_bad_steps_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--scenario", "depolarizing", "--q-max", "0.1",
                  "--steps", "1", "--out", str(tmp_path / "x.csv")])
        assert exc.value.code == 2


class TestEvaluate:
    def test_identity_channel(self, tmp_path, capsys):
        path = write_stats(tmp_path, depolarizing_statistics(0.0, 0.6))
        assert main(["evaluate", "--stats", path]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["rate"] == 1.0
        assert document["inner_products"]["re03_slope"] == -1.0

    def test_depolarizing_rate(self, tmp_path, capsys):
        path = write_stats(tmp_path, depolarizing_statistics(0.05, 1 / math.sqrt(2)))
        assert main(["evaluate", "--stats", path]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert abs(document["rate"] - bb84_reference_rate(0.05)) < 1e-6

    def test_unphysical_statistics_exit_code(self, tmp_path):
        path = write_stats(tmp_path, depolarizing_statistics(0.05, 0.5),
                           mutate=lambda p: p.update(pa0=1.0))
        assert main(["evaluate", "--stats", path]) == EXIT_UNPHYSICAL

    def test_inconsistent_statistics_exit_code(self, tmp_path):
        path = write_stats(tmp_path, depolarizing_statistics(0.2, math.sqrt(0.2)),
                           mutate=lambda p: p.update(QA=0.0))
        assert main(["evaluate", "--stats", path]) == EXIT_INCONSISTENT

    def test_missing_field_names_it(self, tmp_path, capsys):
        path = write_stats(tmp_path, depolarizing_statistics(0.1, 0.5),
                           mutate=lambda p: p.pop("p1a"))
        assert main(["evaluate", "--stats", path]) == 2
        assert "p1a" in capsys.readouterr().err

    def test_out_of_range_field_is_unphysical(self, tmp_path):
        path = write_stats(tmp_path, depolarizing_statistics(0.1, 0.5),
                           mutate=lambda p: p.update(Q=1.5))
        assert main(["evaluate", "--stats", path]) == EXIT_UNPHYSICAL

    def test_missing_file_is_usage_error(self, tmp_path):
        assert main(["evaluate", "--stats", str(tmp_path / "absent.json")]) == 2

    def test_malformed_json_is_usage_error(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["evaluate", "--stats", str(path)]) == 2


class TestValidate:
    def test_small_run_passes(self, capsys):
        code = main(["validate", "--trials", "10", "--seed", "7"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "violations: 0" in out

    def test_deterministic_output(self, capsys):
        args = ["validate", "--trials", "8", "--q-max", "0.2", "--dim", "3",
                "--seed", "21", "--alpha-sq", "0.2", "--alpha-sq", "0.8"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        second = capsys.readouterr().out
        assert first == second

    def test_zero_trials_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["validate", "--trials", "0"])
        assert exc.value.code == 2

    def test_bad_dim_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["validate", "--trials", "5", "--dim", "7"])
        assert exc.value.code == 2


class TestScenarioList:
    def test_lists_all(self, capsys):
        assert main(["scenario-list"]) == EXIT_OK
        out = capsys.readouterr().out.strip().split("\n")
        assert len(out) == len(SCENARIO_NAMES)
        for name, line in zip(SCENARIO_NAMES, out):
            assert line.startswith(f"{name}:")
