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


import pytest

from gw_interlacements.validation.ValidationSuite import ValidationSuite
from gw_interlacements.validation._SuiteContext import _SuiteContext
from gw_interlacements.exc.InvalidParameterExc import InvalidParameterExc
from gw_interlacements.exc.InvariantViolationExc import InvariantViolationExc
from gw_interlacements.exc.NumericalFailureExc import NumericalFailureExc


def _failing_checks(cls):
    return ("always_fails", lambda context: (False, "forced")), ("never_reached", lambda context: (True, ""))


def _raising_checks(cls):
    def check(context):
        raise NumericalFailureExc("no bracket")

    return ("raises", check),


class TestValidationSuite:
    def test_quick_run_passes(self):
        outcomes = ValidationSuite.run(quick=True, seed=0)
        failed = [(outcome.name, outcome.detail) for outcome in outcomes if not outcome.passed]
        assert failed == []
        assert len(outcomes) == 15

    def test_critical_level_does_not_depend_on_the_seed(self):
        passed, detail = ValidationSuite._check_critical_u_seed_independence(_SuiteContext(quick=True, seed=5, threads=1))
        assert passed, detail
        assert detail.endswith("over 8 seeds, rerun identical")

    def test_fail_hard(self, monkeypatch):
        monkeypatch.setattr(ValidationSuite, "_checks", classmethod(_failing_checks))
        with pytest.raises(InvariantViolationExc):
            ValidationSuite.run(fail_hard=True)

    def test_failures_are_collected(self, monkeypatch):
        monkeypatch.setattr(ValidationSuite, "_checks", classmethod(_failing_checks))
        assert [outcome.passed for outcome in ValidationSuite.run()] == [False, True]

    def test_library_errors_count_as_failures(self, monkeypatch):
        monkeypatch.setattr(ValidationSuite, "_checks", classmethod(_raising_checks))
        outcome, = ValidationSuite.run()
        assert not outcome.passed
        assert outcome.detail == "NumericalFailureExc: no bracket"

    @pytest.mark.parametrize("kwargs", [{"seed": -1}, {"threads": 0}])
    def test_invalid_parameters(self, kwargs):
        with pytest.raises(InvalidParameterExc):
            ValidationSuite.run(**kwargs)
