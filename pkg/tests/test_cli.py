import io
import json
import math

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from epscs.cli import CliConfig, cli
from epscs.data_classes import StateLabel
from epscs.export import save_csv
from epscs.states import wavefunction_closed

ROOT_PI = math.sqrt(math.pi)


@pytest.fixture
def runner():
    return CliRunner()


def frame_of(result) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(result.stdout), comment="#", float_precision="round_trip")


class TestEval:
    def test_normalization(self, runner):
        result = runner.invoke(cli, ["eval", "--quantity", "normalization", "--m", "3", "--eps", "0.7"])
        assert result.exit_code == 0, result.output
        frame = frame_of(result)
        assert list(frame.columns) == ["z_re", "z_im", "re", "im", "log_scale"]
        assert frame["re"][0] == pytest.approx(math.exp(-2.1) / math.pi, rel=1e-14)
        assert frame["log_scale"][0] == 0

    def test_normalization_switches_to_log(self, runner):
        args = ["eval", "--quantity", "normalization", "--m", "0", "--eps", "0.1", "--grid-re", "40", "40", "1"]
        result = runner.invoke(cli, args)
        frame = frame_of(result)
        assert frame["log_scale"][0] == 1
        assert frame["re"][0] == pytest.approx(math.exp(-0.1) * 1600 - math.log(math.pi), rel=1e-13)

    def test_overlap_diagonal(self, runner):
        args = ["eval", "--quantity", "kernel-overlap", "--m", "2", "--eps", "0.4",
                "--grid-re", "0.5", "0.5", "1", "--w-re", "0.5"]
        frame = frame_of(runner.invoke(cli, args))
        assert frame["re"][0] == pytest.approx(1.0, abs=1e-13)
        assert frame["im"][0] == pytest.approx(0.0, abs=1e-13)

    def test_wavefunction_matches_library(self, runner):
        args = ["eval", "--quantity", "wavefunction", "--m", "1", "--z-re", "1", "--eps", "0.5",
                "--x-min", "-4", "--x-max", "4", "--x-count", "9"]
        frame = frame_of(runner.invoke(cli, args))
        x = np.linspace(-4.0, 4.0, 9)
        expected = wavefunction_closed(x, StateLabel(1.0, 1, 0.5))
        np.testing.assert_array_equal(frame["x"], x)
        np.testing.assert_array_equal(frame["re"] + 1j * frame["im"], expected)

    def test_phi_grid_order(self, runner):
        args = ["eval", "--quantity", "phi", "--m", "0", "--n", "1",
                "--grid-re", "-1", "1", "2", "--grid-im", "0", "1", "2"]
        frame = frame_of(runner.invoke(cli, args))
        assert list(zip(frame["z_re"], frame["z_im"])) == [(-1.0, 0.0), (-1.0, 1.0), (1.0, 0.0), (1.0, 1.0)]
        assert list(frame["im"]) == [0.0, 1.0, 0.0, 1.0]

    def test_sigma_rows(self, runner):
        frame = frame_of(runner.invoke(cli, ["eval", "--quantity", "sigma", "--m", "2", "--eps", "0", "--trunc", "3"]))
        assert list(frame["n"]) == [0, 1, 2]
        assert frame["re"][1] == pytest.approx(2 * math.pi)

    def test_json_format(self, runner):
        result = runner.invoke(cli, ["eval", "--quantity", "mehler", "--eps", "0.5", "--x-count", "3",
                                     "--format", "json"])
        records = [json.loads(line) for line in result.stdout.splitlines()]
        assert [r["x"] for r in records] == [-4.0, 0.0, 4.0]

    def test_deterministic(self, runner):
        args = ["eval", "--quantity", "kernel-km", "--m", "3", "--w-re", "0.2", "--w-im", "-0.4",
                "--grid-re", "-1", "1", "5", "--grid-im", "-1", "1", "5"]
        first = runner.invoke(cli, args).stdout
        second = runner.invoke(cli, args).stdout
        assert first == second
        assert len(first.splitlines()) == 27

    @pytest.mark.parametrize("args", [
        ["--m", "-1"],
        ["--eps", "0"],
        ["--x-count", "-2"],
        ["--x-min", "1", "--x-max", "0"],
        ["--grid-re", "0", "1", "-1"],
    ])
    def test_bad_flags(self, runner, args):
        result = runner.invoke(cli, ["eval", "--quantity", "wavefunction", *args])
        assert result.exit_code == 2

    def test_unknown_quantity(self, runner):
        assert runner.invoke(cli, ["eval", "--quantity", "energy"]).exit_code == 2


class TestTransform:
    def test_ground_state(self, runner):
        args = ["transform", "--n", "0", "--m", "0", "--eps", "0", "--grid-re", "-1", "1", "3"]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0, result.output
        assert result.stdout.startswith("# quad_order=96\n")
        frame = frame_of(result)
        np.testing.assert_allclose(frame["re"], 1 / ROOT_PI, atol=1e-12)
        np.testing.assert_allclose(frame["im"], 0.0, atol=1e-12)

    def test_first_state_is_conjugate(self, runner):
        args = ["transform", "--n", "1", "--m", "0", "--eps", "0", "--grid-re", "-1", "1", "3",
                "--grid-im", "-1", "1", "3"]
        frame = frame_of(runner.invoke(cli, args))
        z = frame["z_re"] + 1j * frame["z_im"]
        np.testing.assert_allclose(frame["re"] + 1j * frame["im"], np.conj(z) / ROOT_PI, atol=1e-12)

    def test_empty_grid(self, runner):
        result = runner.invoke(cli, ["transform", "--grid-re", "0", "1", "0"])
        assert result.exit_code == 0
        lines = [line for line in result.stdout.splitlines() if not line.startswith("#")]
        assert lines == ["z_re,z_im,re,im"]

    def test_json_carries_order(self, runner):
        result = runner.invoke(cli, ["transform", "--quad-hermite", "64", "--format", "json"])
        assert json.loads(result.stdout)["quad_order"] == 64

    def test_sampled_input(self, runner, tmp_path):
        grid = np.linspace(-10.0, 10.0, 2001)
        path = tmp_path / "phi0.csv"
        values = np.exp(-grid ** 2 / 2) / math.pi ** 0.25
        save_csv(str(path), ["x", "re", "im"], zip(grid, values, np.zeros_like(grid)), ["ground state"])
        args = ["transform", "--input", str(path), "--adequacy-tol", "1e-5", "--grid-re", "0.4", "0.4", "1"]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0, result.output
        assert frame_of(result)["re"][0] == pytest.approx(1 / ROOT_PI, abs=1e-6)

    @pytest.mark.parametrize("tol", ["0", "-1e-3", "nan", "inf"])
    def test_bad_adequacy_tol(self, runner, tol):
        result = runner.invoke(cli, ["transform", "--adequacy-tol", tol])
        assert result.exit_code == 2
        assert "adequacy_tol must be positive" in result.output

    def test_missing_input(self, runner, tmp_path):
        result = runner.invoke(cli, ["transform", "--input", str(tmp_path / "absent.csv")])
        assert result.exit_code == 4

    def test_inadequate_order(self, runner):
        result = runner.invoke(cli, ["transform", "--n", "9", "--quad-hermite", "4", "--grid-re", "0.5", "0.5", "1"])
        assert result.exit_code == 3


class TestVerify:
    def test_no_suites(self, runner):
        result = runner.invoke(cli, ["verify"])
        assert result.exit_code == 0
        assert result.stdout == ""

    def test_identity_matrix(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "identity_matrix"])
        assert result.exit_code == 0, result.output
        record = json.loads(result.stdout)
        assert record["suite"] == "identity_matrix"
        assert record["passed"] is True
        assert record["runtime_ms"] is None

    def test_timings(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "deruyts", "--timings"])
        assert isinstance(json.loads(result.stdout)["runtime_ms"], int)

    def test_records_in_order(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "meixner", "--suite", "deruyts"])
        assert [json.loads(line)["suite"] for line in result.stdout.splitlines()] == ["meixner", "deruyts"]

    def test_rule_too_small(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "identity_matrix", "--quad-radial", "4"])
        assert result.exit_code == 3

    def test_unknown_suite(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "no_such_suite"])
        assert result.exit_code == 2

    def test_output_file(self, runner, tmp_path):
        out = tmp_path / "reports.jsonl"
        result = runner.invoke(cli, ["verify", "--suite", "deruyts", "--out", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["suite"] == "deruyts"


class TestSweep:
    def test_identity_limit(self, runner):
        args = ["sweep", "--quantity", "identity-limit", "--m", "2", "--n", "5", "--eps-list", "0.5,0.2,0.1"]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0, result.output
        frame = frame_of(result)
        assert list(frame["eps"]) == [0.5, 0.2, 0.1]
        assert frame["defect"][0] > frame["defect"][1] > frame["defect"][2]

    def test_overlap_limit(self, runner):
        args = ["sweep", "--quantity", "overlap-limit", "--m", "1", "--z-re", "0.5", "--w-im", "0.6",
                "--eps-list", "0.1,0.01,0.001"]
        frame = frame_of(runner.invoke(cli, args))
        assert frame["defect"][2] <= 0.01

    @pytest.mark.parametrize("eps_list", ["0.1,0.2", "0.1,-0.1", "a,b"])
    def test_bad_eps_list(self, runner, eps_list):
        result = runner.invoke(cli, ["sweep", "--quantity", "overlap-limit", "--eps-list", eps_list])
        assert result.exit_code == 2


class TestConfig:
    def test_z_grid_real_part_slowest(self):
        cfg = CliConfig("eval", grid_re=(0.0, 1.0, 2), grid_im=(0.0, 2.0, 2))
        assert cfg.z_grid() == [0j, 2j, 1 + 0j, 1 + 2j]

    def test_validate_returns_self(self):
        cfg = CliConfig("transform", eps=0.0)
        assert cfg.validate() is cfg
