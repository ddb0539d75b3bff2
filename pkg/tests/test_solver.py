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


import math
import pytest
import numpy as np
from pytest import approx

from gw_interlacements.offspring.OffspringDistribution import OffspringDistribution
from gw_interlacements.transforms.TransformKind import TransformKind
from gw_interlacements.transforms.LaplaceTransforms import LaplaceTransforms
from gw_interlacements.solver.CriticalitySolver import CriticalitySolver
from gw_interlacements.solver.McParameters import McParameters
from gw_interlacements.exc.InvalidParameterExc import InvalidParameterExc
from gw_interlacements.exc.NumericalFailureExc import NumericalFailureExc


def _reference():
    return OffspringDistribution.explicit_pmf((0.25, 0.0, 0.75))


def _regular(d):
    dist = OffspringDistribution.deterministic(d)
    return dist, LaplaceTransforms.sample_chi(dist, n=1, depth=40, seed=0)


@pytest.fixture(scope="module")
def reference_samples():
    return LaplaceTransforms.sample_chi(_reference(), n=2000, depth=14, seed=3)


class TestCriticalLevel:
    @pytest.mark.parametrize("d, expected", [(2, 1.386294), (3, 0.823959)])
    def test_regular_trees(self, d, expected):
        result = CriticalitySolver.critical_u(OffspringDistribution.deterministic(d), tol=1e-6, mc_params=McParameters(n=1, depth=40, replicates=1))
        assert result.u_star == approx(expected, abs=1e-3)
        assert result.u_star == approx(CriticalitySolver.regular_tree_critical_u(d), abs=1e-3)
        assert result.bracket[1] - result.bracket[0] <= 1e-6
        assert result.spread == 0.0

    def test_reference_law(self):
        result = CriticalitySolver.critical_u(_reference(), tol=1e-5, mc_params=McParameters(n=400, depth=10, seed=0, replicates=3))
        assert result.seeds == (0, 1, 2)
        assert len(result.replicate_u_stars) == 3
        assert result.spread == max(result.replicate_u_stars) - min(result.replicate_u_stars)
        assert result.bracket[0] <= result.u_star <= result.bracket[1]
        assert result.index_at_u_star == approx(1.0, abs=1e-2)

    def test_independent_seeds_agree(self):
        dist = _reference()
        result = CriticalitySolver.critical_u(dist, tol=1e-5, mc_params=McParameters(n=4000, depth=12, seed=0, replicates=8))
        assert len(result.replicate_u_stars) == 8
        assert result.spread < 0.05
        assert all(abs(u_star - result.u_star) <= 3.0 * result.spread + result.tol for u_star in result.replicate_u_stars)

        # the same seed gives the same sample set and therefore the same root
        rerun = CriticalitySolver.critical_u(dist, tol=1e-5, mc_params=McParameters(n=4000, depth=12, seed=3, replicates=1))
        assert rerun.replicate_u_stars == (result.replicate_u_stars[3],)
        assert rerun.u_star == result.replicate_u_stars[3]

    def test_json(self):
        result = CriticalitySolver.critical_u(OffspringDistribution.deterministic(2), mc_params=McParameters(n=1, depth=20, replicates=2))
        assert set(result.to_json_dict()) == {"u_star", "bracket", "tol", "index_at", "n", "depth", "seeds", "spread"}

    def test_bracket_failures(self):
        with pytest.raises(NumericalFailureExc):
            CriticalitySolver._find_bracket(lambda u: 1.0)
        with pytest.raises(NumericalFailureExc):
            CriticalitySolver._find_bracket(lambda u: -1.0)

    def test_bracket_below_the_start(self):
        assert CriticalitySolver._find_bracket(lambda u: 0.3 - u) == (0.25, 0.5)

    def test_invalid_tolerance(self):
        with pytest.raises(InvalidParameterExc):
            CriticalitySolver.critical_u(OffspringDistribution.deterministic(2), tol=0.0, mc_params=McParameters(n=1, depth=5, replicates=1))


class TestMcParameters:
    @pytest.mark.parametrize("kwargs", [{"n": 0}, {"depth": 0}, {"seed": -1}, {"replicates": 0}, {"threads": 0}, {"seed": 2 ** 64 - 1, "replicates": 2}])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidParameterExc):
            McParameters(**kwargs)

    def test_seeds(self):
        assert McParameters(seed=5, replicates=3).seeds == (5, 6, 7)


class TestCriticalityIndex:
    def test_decreasing_in_u(self, reference_samples):
        indices = CriticalitySolver.index_grid(reference_samples, _reference(), np.linspace(0.05, 4.0, 40))
        assert np.all(np.diff(indices) <= 0.0)

    def test_inverse_form_on_regular_trees(self):
        dist, samples = _regular(2)
        assert CriticalitySolver.inverse_criticality_index(samples, dist, 1.0) == approx(CriticalitySolver.criticality_index(samples, dist, 1.0), abs=1e-9)

    def test_wrong_distribution(self, reference_samples):
        with pytest.raises(InvalidParameterExc):
            CriticalitySolver.criticality_index(reference_samples, OffspringDistribution.deterministic(2), 1.0)

    def test_g_zero_limits(self):
        # f'(1) = 3/2 and f'(q) = 3/2 * 1/3
        assert CriticalitySolver.g_zero_limits(_reference()) == approx((-0.5, 0.5))


class TestFixedPoint:
    def test_binary_tree_supercritical(self):
        dist, samples = _regular(2)
        result = CriticalitySolver.fixed_point_r(samples, dist, math.log(2.0), tol=1e-13)
        assert result.converged
        assert result.r == approx(math.sqrt(2.0) - 1.0, abs=1e-9)
        assert result.criticality_index == approx(math.sqrt(2.0), abs=1e-9)

    def test_default_tolerance(self):
        dist, samples = _regular(2)
        assert CriticalitySolver.fixed_point_r(samples, dist, math.log(2.0)).r == approx(math.sqrt(2.0) - 1.0, abs=1e-6)

    def test_slow_convergence_near_criticality(self):
        # on the binary tree r = 2 exp(-u / 2) - 1 and the iterates contract by 2 (1 - exp(-u / 2)), about 0.96 here
        dist, samples = _regular(2)
        u = 1.3
        result = CriticalitySolver.fixed_point_r(samples, dist, u, tol=1e-6)
        assert result.converged
        assert result.r == approx(2.0 * math.exp(-0.5 * u) - 1.0, abs=1e-5)

    def test_binary_tree_subcritical(self):
        dist, samples = _regular(2)
        result = CriticalitySolver.fixed_point_r(samples, dist, 2.0)
        assert result.r == 0.0
        assert result.iterates == (result.iterates[0],)

    def test_iterates_do_not_increase(self, reference_samples):
        result = CriticalitySolver.fixed_point_r(reference_samples, _reference(), 0.25, tol=1e-12)
        assert all(a >= b for a, b in zip(result.iterates, result.iterates[1:]))
        assert result.r >= 0.0

    def test_json(self):
        dist, samples = _regular(2)
        document = CriticalitySolver.fixed_point_r(samples, dist, 1.0).to_json_dict()
        assert set(document) == {"u", "r", "converged", "iterations", "index"}

    @pytest.mark.parametrize("u", [0.0, -1.0])
    def test_level_must_be_positive(self, u):
        dist, samples = _regular(2)
        with pytest.raises(InvalidParameterExc):
            CriticalitySolver.fixed_point_r(samples, dist, u)

    @pytest.mark.parametrize("d, u", [(2, math.log(2.0)), (2, 1.0), (3, 0.5)])
    def test_bisection_agrees(self, d, u):
        dist, samples = _regular(d)
        r = CriticalitySolver.fixed_point_r(samples, dist, u, tol=1e-13).r
        assert CriticalitySolver.largest_root_bisection(samples, dist, u, tol=1e-13) == approx(r, abs=1e-8)

    def test_bisection_below_criticality(self):
        dist, samples = _regular(3)
        assert CriticalitySolver.largest_root_bisection(samples, dist, 2.0) == 0.0


class TestSurvivalRecursion:
    def test_binary_tree(self):
        dist, samples = _regular(2)
        sequence = CriticalitySolver.survival_recursion(samples, dist, math.log(2.0), 200)
        assert len(sequence) == 201
        assert sequence[0] == approx(0.5, abs=1e-10)
        assert all(a >= b for a, b in zip(sequence, sequence[1:]))
        assert sequence[-1] == approx(math.sqrt(2.0) - 1.0, abs=1e-9)

    def test_zero_steps(self, reference_samples):
        assert len(CriticalitySolver.survival_recursion(reference_samples, _reference(), 1.0, 0)) == 1

    def test_dies_out_below_criticality(self):
        dist, samples = _regular(2)
        assert CriticalitySolver.survival_recursion(samples, dist, 3.0, 2000)[-1] == approx(0.0, abs=1e-9)


class TestPhi:
    def test_identity_at_zero(self):
        dist, samples = _regular(3)
        assert CriticalitySolver.phi(samples, dist, 0.5, 0.0) == approx(0.0, abs=1e-12)

    def test_vanishes_at_the_fixed_point(self):
        dist, samples = _regular(2)
        assert CriticalitySolver.phi(samples, dist, math.log(2.0), math.sqrt(2.0) - 1.0) == approx(0.0, abs=1e-10)

    def test_concave(self, reference_samples):
        dist = _reference()
        l_gamma = float(np.exp(-0.5 * reference_samples.gamma_values).mean())
        rs = np.linspace(0.0, 0.99 * l_gamma, 21)
        values = np.array([CriticalitySolver.phi(reference_samples, dist, 0.5, r) for r in rs])
        assert np.all(np.diff(values, 2) <= 1e-12)

    def test_out_of_range(self):
        dist, samples = _regular(2)
        with pytest.raises(InvalidParameterExc):
            CriticalitySolver.phi(samples, dist, 1.0, 0.99)


class TestGFunction:
    @pytest.mark.parametrize("d", [2, 3])
    def test_identity(self, d):
        dist, samples = _regular(d)
        u = 0.5
        l_gamma = math.exp(-u * float(samples.gamma_values[0]))
        l_chi = math.exp(-u * float(samples.chi_values[0]))
        for x in np.linspace(0.0, 0.999 * l_gamma, 7):
            left = x * CriticalitySolver.g_diagnostic(samples, dist, u, x)
            assert left == approx(x - l_chi + float(dist.backbone_pgf(l_gamma - x)), abs=1e-9)

    def test_root_is_the_survival_probability(self):
        dist, samples = _regular(2)
        assert CriticalitySolver.g_diagnostic(samples, dist, math.log(2.0), math.sqrt(2.0) - 1.0) == approx(0.0, abs=1e-9)

    def test_at_zero(self):
        dist, samples = _regular(2)
        assert CriticalitySolver.g_diagnostic(samples, dist, math.log(2.0), 0.0) == approx(1.0 - math.sqrt(2.0), abs=1e-9)

    def test_at_the_gamma_transform(self):
        dist, samples = _regular(2)
        u = math.log(2.0)
        l_gamma = LaplaceTransforms.laplace(samples, u, TransformKind.GAMMA).mean
        assert CriticalitySolver.g_diagnostic(samples, dist, u, l_gamma) == approx(1.0 - 2.0 ** -0.5, abs=1e-9)
