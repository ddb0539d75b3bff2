#!/bin/false

# Copyright (c) 2026 The gw-interlacements-python developers. All rights reserved.
#
# Redistribution and use in source and binary forms, with or without modification, are permitted provided that the
# following conditions are met:
#  1. Redistributions of source code must retain the above copyright notice, this list of conditions and the following
#     disclaimer.
#  2. Redistributions in binary form must reproduce the above copyright notice, this list of conditions and the
#     following disclaimer in the documentation and/or other materials provided with the distribution.
#  3. Neither the name of the copyright holder nor the names of its contributors may be used to endorse or promote
#     products derived from this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES,
# INCLUDING, BUT NOT LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL,
# SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY,
# WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.


import json
import pytest
from pytest import approx

from gw_interlacements.cli.RunConfig import RunConfig
from gw_interlacements.cli.CliConstants import CliConstants
from gw_interlacements.cli.CommandLineInterface import CommandLineInterface
from gw_interlacements.validation.CheckOutcome import CheckOutcome
from gw_interlacements.validation.ValidationSuite import ValidationSuite
from gw_interlacements.exc.InvalidParameterExc import InvalidParameterExc
from gw_interlacements.exc.InvalidDistributionExc import InvalidDistributionExc


REGULAR = '{"family": "deterministic", "d": 2}'


class TestUGrid:
    def test_stop_is_included(self):
        assert RunConfig.parse_u_grid("0.25:3:0.25") == approx(tuple(0.25 * k for k in range(1, 13)))

    def test_single_point(self):
        assert RunConfig.parse_u_grid("1:1:0.5") == (1.0,)

    @pytest.mark.parametrize("text", ["1:2", "a:2:0.5", "1:2:0", "2:1:0.5", "-1:1:0.5", "0:inf:1"])
    def test_invalid(self, text):
        with pytest.raises(InvalidParameterExc):
            RunConfig.parse_u_grid(text)


class TestRunConfig:
    def test_distribution_from_a_file(self, tmp_path):
        path = tmp_path / "dist.json"
        path.write_text(REGULAR)
        assert RunConfig.load_distribution(f"@{path}").q == 0.0

    def test_missing_distribution_file(self, tmp_path):
        with pytest.raises(InvalidDistributionExc):
            RunConfig.load_distribution(f"@{tmp_path / 'missing.json'}")

    def test_resolved_depth(self):
        dist = RunConfig.load_distribution(REGULAR)
        assert RunConfig(command="survival", dist=dist, n=7).resolved_depth == 37
        assert RunConfig(command="transforms", dist=dist).resolved_depth == 30
        assert RunConfig(command="survival", dist=dist, depth=12).resolved_depth == 12

    def test_levels(self):
        config = RunConfig(command="fixed-point", dist=RunConfig.load_distribution(REGULAR))
        with pytest.raises(InvalidParameterExc):
            config.levels()
        assert len(config.levels(default_grid="0.25:1:0.25")) == 4

    def test_zero_level_needs_permission(self):
        config = RunConfig(command="survival", dist=RunConfig.load_distribution(REGULAR), u_values=(0.0, 1.0))
        with pytest.raises(InvalidParameterExc):
            config.levels()
        assert config.levels(allow_zero=True) == (0.0, 1.0)

    @pytest.mark.parametrize("kwargs", [{"samples": 0}, {"seed": -1}, {"threads": 0}, {"tol": -1.0}, {"n": -1}, {"u_values": (-0.5,)}])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidParameterExc):
            RunConfig(command="critical", dist=RunConfig.load_distribution(REGULAR), **kwargs)


class TestCommands:
    def test_extinction(self, capsys):
        assert CommandLineInterface.main(["extinction"]) == CliConstants.EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["q"] == approx(1.0 / 3.0, abs=1e-8)
        assert document["rho_tilde"] == approx([0.5, 0.5], abs=1e-8)

    def test_extinction_csv(self, capsys):
        assert CommandLineInterface.main(["extinction", "--format", "csv"]) == CliConstants.EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "k,rho,rho_tilde,rho_hat"
        assert len(lines) == 4

    def test_invalid_distribution(self, capsys):
        assert CommandLineInterface.main(["extinction", "--dist", '{"family": "pmf", "p": [0.5, 0.5]}']) == CliConstants.EXIT_INVALID_PARAMETER
        assert capsys.readouterr().out == ""

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as info:
            CommandLineInterface.main(["extinction", "--no-such-flag"])
        assert info.value.code == 2

    @pytest.mark.parametrize("arguments", [["extinction", "--form", "csv"], ["transforms", "--samp", "10"], ["critical", "--repl", "2"]])
    def test_abbreviated_flag(self, arguments):
        with pytest.raises(SystemExit) as info:
            CommandLineInterface.main(arguments)
        assert info.value.code == 2

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "out.json"
        assert CommandLineInterface.main(["extinction", "--dist", REGULAR, "--out", str(path)]) == CliConstants.EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(path.read_text())["q"] == 0.0

    def test_sample_tree(self, capsys):
        assert CommandLineInterface.main(["sample-tree", "--dist", REGULAR, "--depth", "2", "--tree-kind", "backbone"]) == CliConstants.EXIT_OK
        assert capsys.readouterr().out.splitlines()[:2] == ["# truncation_depth 2", "0 -1 0 1"]

    def test_profile_needs_one_level(self):
        assert CommandLineInterface.main(["sample-tree", "--depth", "3", "--tree-format", "profile"]) == CliConstants.EXIT_INVALID_PARAMETER

    def test_transforms(self, capsys, tmp_path):
        path = tmp_path / "samples.bin"
        arguments = ["transforms", "--samples", "50", "--depth", "6", "--u", "0.5", "--u", "1", "--format", "csv"]
        assert CommandLineInterface.main(arguments + ["--save-samples", str(path)]) == CliConstants.EXIT_OK
        first = capsys.readouterr().out
        assert first.splitlines()[0] == "u,L_gamma,L_gamma_se,L_chi,L_chi_se,gap,z"
        assert len(first.splitlines()) == 3

        assert CommandLineInterface.main(["transforms", "--u", "0.5", "--u", "1", "--format", "csv", "--load-samples", str(path)]) == CliConstants.EXIT_OK
        assert capsys.readouterr().out == first

    def test_samples_of_another_distribution(self, tmp_path):
        path = tmp_path / "samples.bin"
        assert CommandLineInterface.main(["transforms", "--samples", "10", "--depth", "4", "--u", "1", "--save-samples", str(path), "--out", str(tmp_path / "out.json")]) == CliConstants.EXIT_OK
        assert CommandLineInterface.main(["transforms", "--dist", REGULAR, "--u", "1", "--load-samples", str(path)]) == CliConstants.EXIT_INVALID_PARAMETER

    def test_critical(self, capsys):
        assert CommandLineInterface.main(["critical", "--dist", REGULAR, "--samples", "1", "--depth", "40", "--replicates", "1", "--tol", "1e-6"]) == CliConstants.EXIT_OK
        assert json.loads(capsys.readouterr().out)["u_star"] == approx(1.386294, abs=1e-3)

    def test_fixed_point(self, capsys):
        assert CommandLineInterface.main(["fixed-point", "--dist", REGULAR, "--samples", "1", "--depth", "40", "--u", "0.6931471805599453", "--tol", "1e-12"]) == CliConstants.EXIT_OK
        document = json.loads(capsys.readouterr().out)[0]
        assert document["r"] == approx(2.0 ** 0.5 - 1.0, abs=1e-7)
        assert document["r_bisection"] == approx(document["r"], abs=1e-7)

    def test_survival(self, capsys, tmp_path):
        dump = tmp_path / "replicas.csv"
        arguments = ["survival", "--u", "0.5", "--n", "3", "--replicas", "200", "--depth", "6", "--format", "csv", "--dump-replicas", str(dump)]
        assert CommandLineInterface.main(arguments) == CliConstants.EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "u,n,r_hat,stderr,N,depth,seed"
        assert len(lines) == 5
        assert len(dump.read_text().splitlines()) == 201

    def test_quenched_survival(self, capsys):
        assert CommandLineInterface.main(["survival", "--u", "0.5", "--n", "2", "--replicas", "100", "--depth", "5", "--quenched"]) == CliConstants.EXIT_OK
        assert len(json.loads(capsys.readouterr().out)) == 1

    def test_survival_depth_too_small(self):
        assert CommandLineInterface.main(["survival", "--u", "0.5", "--n", "5", "--replicas", "10", "--depth", "5"]) == CliConstants.EXIT_INVALID_PARAMETER

    def test_failed_validation(self, capsys, monkeypatch):
        monkeypatch.setattr(ValidationSuite, "run", lambda **kwargs: [CheckOutcome("always_fails", False, "forced")])
        assert CommandLineInterface.main(["validate", "--quick"]) == CliConstants.EXIT_VALIDATION_FAILURE
        assert json.loads(capsys.readouterr().out) == [{"check": "always_fails", "passed": False, "detail": "forced"}]
