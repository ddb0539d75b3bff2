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
from gw_interlacements.offspring.OffspringFamily import OffspringFamily
from gw_interlacements.offspring.OffspringConstants import OffspringConstants
from gw_interlacements.exc.InvalidParameterExc import InvalidParameterExc
from gw_interlacements.exc.InvalidDistributionExc import InvalidDistributionExc


def _reference():
    """rho = (1/4, 0, 3/4): q = 1/3, rho~ = (1/2, 1/2)."""
    return OffspringDistribution.explicit_pmf((0.25, 0.0, 0.75))


class TestExtinctionProbability:
    def test_explicit_pmf(self):
        assert _reference().q == approx(1.0 / 3.0, abs=1e-12)

    def test_geometric(self):
        assert OffspringDistribution.geometric(0.25).q == approx(1.0 / 3.0, abs=1e-10)

    def test_deterministic_never_dies_out(self):
        assert OffspringDistribution.deterministic(2).q == 0.0

    def test_binomial_closed_form(self):
        # (1 + s)^3 / 8 = s has the root sqrt(5) - 2 in (0, 1)
        assert OffspringDistribution.binomial(3, 0.5).q == approx(math.sqrt(5.0) - 2.0, abs=1e-12)

    def test_poisson_is_a_fixed_point(self):
        dist = OffspringDistribution.poisson(2.0)
        assert math.exp(2.0 * (dist.q - 1.0)) == approx(dist.q, abs=1e-10)
        assert 0.0 < dist.q < 0.5

    def test_smallest_fixed_point(self):
        dist = _reference()
        assert dist.pgf(dist.q) == approx(dist.q, abs=1e-12)
        assert dist.q < 1.0


class TestInvalidDistributions:
    @pytest.mark.parametrize("pmf", [(0.5, 0.5), (0.0, 1.0), (1.0,)])
    def test_not_supercritical(self, pmf):
        with pytest.raises(InvalidDistributionExc):
            OffspringDistribution.explicit_pmf(pmf)

    def test_negative_entry(self):
        with pytest.raises(InvalidDistributionExc):
            OffspringDistribution.explicit_pmf((-0.25, 0.5, 0.75))

    def test_mass_not_one(self):
        with pytest.raises(InvalidDistributionExc):
            OffspringDistribution.explicit_pmf((0.25, 0.0, 0.5))

    def test_distribution_errors_are_parameter_errors(self):
        with pytest.raises(InvalidParameterExc):
            OffspringDistribution.deterministic(1)

    @pytest.mark.parametrize("text", [
        "not json",
        '{"family": "zipf", "s": 2}',
        '{"family": "deterministic"}',
        '{"family": "deterministic", "d": 2, "p": 0.5}',
        '{"family": "binomial", "n": "three", "p": 0.5}',
        '[0.25, 0, 0.75]',
    ])
    def test_malformed_specs(self, text):
        with pytest.raises(InvalidDistributionExc):
            OffspringDistribution.from_json(text)


class TestSpecs:
    def test_from_json(self):
        dist = OffspringDistribution.from_json('{"family": "pmf", "p": [0.25, 0, 0.75]}')
        assert dist.family is OffspringFamily.EXPLICIT_PMF
        assert dist.pmf == approx((0.25, 0.0, 0.75))

    def test_spec_reproduces_the_distribution(self):
        for dist in (_reference(), OffspringDistribution.geometric(0.25), OffspringDistribution.poisson(1.5), OffspringDistribution.binomial(4, 0.5)):
            assert OffspringDistribution.from_spec(dist.to_spec()) == dist

    def test_fingerprint(self):
        assert _reference().fingerprint() == _reference().fingerprint()
        assert len(_reference().fingerprint()) == 32
        assert _reference().fingerprint() != OffspringDistribution.deterministic(2).fingerprint()

    def test_truncated_tail(self):
        dist = OffspringDistribution.poisson(2.0, tail_eps=1e-9)
        assert dist.discarded_mass <= 1e-9
        assert math.fsum(dist.pmf) == approx(1.0, abs=1e-12)


class TestBackboneGeneratingFunction:
    def test_backbone_pmf(self):
        assert _reference().backbone_pmf() == approx((0.5, 0.5), abs=1e-12)

    def test_endpoints(self):
        dist = OffspringDistribution.geometric(0.25)
        assert dist.backbone_pgf(0.0) == approx(0.0, abs=1e-15)
        assert dist.backbone_pgf(1.0) == approx(1.0, abs=1e-12)

    def test_closed_form(self):
        # rho~ = (1/2, 1/2) on {1, 2}
        s = np.linspace(0.0, 1.0, 11)
        assert _reference().backbone_pgf(s) == approx(0.5 * s + 0.5 * s ** 2, abs=1e-12)

    def test_derivatives(self):
        dist = _reference()
        s = np.linspace(0.05, 0.95, 7)
        assert dist.backbone_pgf(s, order=1) == approx(0.5 + s, abs=1e-12)
        assert dist.backbone_pgf(s, order=2) == approx(np.ones_like(s), abs=1e-12)

    def test_derivative_matches_finite_difference(self):
        dist = OffspringDistribution.poisson(1.7)
        h = 1e-6
        for s in (0.2, 0.5, 0.8):
            slope = (dist.backbone_pgf(s + h) - dist.backbone_pgf(s - h)) / (2.0 * h)
            assert dist.backbone_pgf(s, order=1) == approx(slope, rel=1e-6)

    def test_mean_and_subcritical_bushes(self):
        dist = OffspringDistribution.poisson(2.0)
        assert dist.backbone_pgf(1.0, order=1) == approx(dist.mean)
        assert dist.pgf(dist.q, order=1) < 1.0

    def test_inverse(self):
        dist = OffspringDistribution.geometric(0.25)
        assert dist.backbone_pgf(dist.backbone_pgf_inverse(0.3)) == approx(0.3, abs=1e-12)
        assert dist.backbone_pgf_inverse(0.0) == 0.0
        assert dist.backbone_pgf_inverse(1.0) == 1.0

    @pytest.mark.parametrize("s", [-0.1, 1.5, float("nan")])
    def test_out_of_domain(self, s):
        with pytest.raises(InvalidParameterExc):
            _reference().backbone_pgf(s)

    def test_unsupported_order(self):
        with pytest.raises(InvalidParameterExc):
            _reference().backbone_pgf(0.5, order=3)


class TestHarrisDecomposition:
    def test_joint_law_is_normalized(self):
        backbone = OffspringDistribution.poisson(1.5).backbone_view
        assert math.fsum(backbone.joint.ravel()) == approx(1.0, abs=1e-12)
        assert backbone.rho_tilde[0] == 0.0

    def test_bush_counts_of_the_reference_law(self):
        dist = _reference()
        # one surviving child out of two means exactly one bush
        assert dist.bush_count_distribution(1) == approx((0.0, 1.0), abs=1e-12)
        assert dist.bush_count_distribution(2) == approx((1.0,), abs=1e-12)

    def test_impossible_backbone_count(self):
        with pytest.raises(InvalidParameterExc):
            _reference().bush_count_distribution(3)

    def test_extinct_law(self):
        dist = OffspringDistribution.geometric(0.25)
        backbone = dist.backbone_view
        assert math.fsum(backbone.extinct_pmf) == approx(1.0, abs=1e-12)
        assert backbone.extinct_pmf[1] == approx(dist.pmf[1] / math.fsum(p * dist.q ** (k - 1) for k, p in enumerate(dist.pmf)), rel=1e-9)

    def test_no_bushes_without_extinction(self):
        backbone = OffspringDistribution.deterministic(3).backbone_view
        assert backbone.extinct_pmf.size == 0
        assert backbone.regular_degree == 3

    def test_regular_degree_only_for_degenerate_laws(self):
        assert _reference().backbone_view.regular_degree is None


class TestConstants:
    def test_not_instantiable(self):
        with pytest.raises(RuntimeError):
            OffspringConstants()
