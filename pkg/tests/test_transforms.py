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
import struct
import pytest
import numpy as np
from pytest import approx

from gw_interlacements.offspring.OffspringDistribution import OffspringDistribution
from gw_interlacements.treegen.TreeSampler import TreeSampler
from gw_interlacements.harmonic.HarmonicMeasures import HarmonicMeasures
from gw_interlacements.transforms.ChiSampleSet import ChiSampleSet
from gw_interlacements.transforms.TransformKind import TransformKind
from gw_interlacements.transforms.LaplaceTransforms import LaplaceTransforms
from gw_interlacements.transforms._PairwiseSummation import _PairwiseSummation
from gw_interlacements.etc.StreamPurpose import StreamPurpose
from gw_interlacements.etc.RandomStreams import RandomStreams
from gw_interlacements.exc.InvalidParameterExc import InvalidParameterExc
from gw_interlacements.exc.InvalidSampleSetFileExc import InvalidSampleSetFileExc


def _reference():
    return OffspringDistribution.explicit_pmf((0.25, 0.0, 0.75))


@pytest.fixture(scope="module")
def reference_samples():
    return LaplaceTransforms.sample_chi(_reference(), n=3000, depth=16, seed=0)


class TestSampling:
    def test_sample_i_comes_from_tree_stream_i(self, reference_samples):
        dist = _reference()
        for index in (0, 1, 777, 2999):
            tree = TreeSampler.sample_backbone(dist.backbone_view, 16, RandomStreams.derive(0, StreamPurpose.TREE, index))
            assert reference_samples.chi_values[index] == HarmonicMeasures.gamma_chi(tree).chi

    def test_independent_of_the_thread_count(self):
        single = LaplaceTransforms.sample_chi(_reference(), n=1100, depth=8, seed=5, threads=1)
        pooled = LaplaceTransforms.sample_chi(_reference(), n=1100, depth=8, seed=5, threads=2)
        assert np.array_equal(single.chi_values, pooled.chi_values)

    def test_regular_fast_path(self):
        samples = LaplaceTransforms.sample_chi(OffspringDistribution.deterministic(2), n=4, depth=10, seed=0)
        tree = TreeSampler.sample_backbone(OffspringDistribution.deterministic(2).backbone_view, 10, seed=0)
        assert np.all(samples.chi_values == HarmonicMeasures.gamma_chi(tree).chi)

    @pytest.mark.parametrize("n, depth, seed", [(0, 10, 0), (10, 0, 0), (10, 10, -1)])
    def test_invalid_sizes(self, n, depth, seed):
        with pytest.raises(InvalidParameterExc):
            LaplaceTransforms.sample_chi(_reference(), n=n, depth=depth, seed=seed)


class TestSampleSetFile:
    def test_bytes(self, reference_samples):
        restored = ChiSampleSet.from_bytes(reference_samples.to_bytes())
        assert np.array_equal(restored.chi_values, reference_samples.chi_values)
        assert (restored.depth, restored.master_seed, restored.dist_fingerprint) == (16, 0, _reference().fingerprint())

    def test_file(self, reference_samples, tmp_path):
        path = tmp_path / "samples.bin"
        reference_samples.to_file(path)
        assert np.array_equal(ChiSampleSet.from_file(path).chi_values, reference_samples.chi_values)

    def test_header_layout(self, reference_samples):
        magic, version, n, depth = struct.unpack("<4sHQI", reference_samples.to_bytes()[:18])
        assert (magic, version, n, depth) == (b"GWIS", 1, 3000, 16)

    def test_bad_magic(self, reference_samples):
        with pytest.raises(InvalidSampleSetFileExc):
            ChiSampleSet.from_bytes(b"XXXX" + reference_samples.to_bytes()[4:])

    def test_truncated(self, reference_samples):
        with pytest.raises(InvalidSampleSetFileExc):
            ChiSampleSet.from_bytes(reference_samples.to_bytes()[:-8])

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidSampleSetFileExc):
            ChiSampleSet.from_file(tmp_path / "missing.bin")

    def test_wrong_distribution(self, reference_samples):
        with pytest.raises(InvalidParameterExc):
            LaplaceTransforms.consistency_gap(reference_samples, OffspringDistribution.deterministic(2), 1.0)

    def test_pooled(self, reference_samples):
        other = LaplaceTransforms.sample_chi(_reference(), n=10, depth=16, seed=1)
        pooled = reference_samples.pooled(other)
        assert pooled.n == 3010
        assert np.array_equal(pooled.chi_values[3000:], other.chi_values)

        with pytest.raises(InvalidParameterExc):
            reference_samples.pooled(LaplaceTransforms.sample_chi(_reference(), n=10, depth=15, seed=1))

    def test_rejects_negative_values(self):
        with pytest.raises(InvalidParameterExc):
            ChiSampleSet.from_values([1.0, -0.5], depth=3, master_seed=0, dist_fingerprint=bytes(32))


class TestLaplaceTransforms:
    def test_zero_level(self, reference_samples):
        estimate = LaplaceTransforms.laplace(reference_samples, 0.0, TransformKind.CHI)
        assert (estimate.mean, estimate.stderr) == (1.0, 0.0)

    def test_sample_path_monotone(self, reference_samples):
        us = np.linspace(0.0, 5.0, 21)
        for which in TransformKind:
            means = [estimate.mean for estimate in LaplaceTransforms.laplace_grid(reference_samples, us, which)]
            assert all(a >= b for a, b in zip(means, means[1:]))

    def test_chi_transform_is_below_gamma_transform(self, reference_samples):
        for u in (0.25, 1.0, 4.0):
            assert LaplaceTransforms.laplace(reference_samples, u, TransformKind.CHI).mean <= LaplaceTransforms.laplace(reference_samples, u, TransformKind.GAMMA).mean

    def test_regular_closed_form(self):
        samples = LaplaceTransforms.sample_chi(OffspringDistribution.deterministic(2), n=1, depth=40, seed=0)
        assert LaplaceTransforms.laplace(samples, math.log(2.0), TransformKind.CHI).mean == approx(0.5, abs=1e-9)
        assert LaplaceTransforms.laplace(samples, math.log(2.0), TransformKind.GAMMA).mean == approx(math.sqrt(0.5), abs=1e-9)

    @pytest.mark.parametrize("u", [-0.5, float("nan")])
    def test_invalid_level(self, reference_samples, u):
        with pytest.raises(InvalidParameterExc):
            LaplaceTransforms.laplace(reference_samples, u, TransformKind.GAMMA)

    @pytest.mark.parametrize("u", [0.25, 0.5, 1.0, 2.0])
    def test_laplace_identity(self, reference_samples, u):
        gap = LaplaceTransforms.consistency_gap(reference_samples, _reference(), u)
        assert abs(gap.z_score) <= 4.0

    def test_identity_on_regular_trees(self):
        dist = OffspringDistribution.deterministic(3)
        samples = LaplaceTransforms.sample_chi(dist, n=1, depth=40, seed=0)
        assert abs(LaplaceTransforms.consistency_gap(samples, dist, 1.0).gap) < 1e-12

    def test_depth_doubling(self):
        result = LaplaceTransforms.depth_doubling_gap(_reference(), n=500, depth=10, seed=2, u=1.0, which=TransformKind.GAMMA)
        assert result.deep.depth == 20
        # the deeper trees extend the shallow ones, so chi can only shrink and the transform only grow
        assert result.difference <= 0.0
        assert abs(result.difference) < 0.05

    def test_csv(self, reference_samples):
        lines = LaplaceTransforms.transforms_csv(reference_samples, _reference(), [0.5, 1.0]).splitlines()
        assert lines[0] == "u,L_gamma,L_gamma_se,L_chi,L_chi_se,gap,z"
        assert len(lines) == 3
        assert lines[1].startswith("0.5,")


class TestPairwiseSummation:
    def test_exact_on_integers(self):
        assert _PairwiseSummation.pairwise_sum(np.arange(1001, dtype=np.float64)) == 500500.0

    def test_mean_and_stderr(self):
        mean, stderr = _PairwiseSummation.mean_and_stderr(np.array([1.0, 2.0, 3.0, 4.0]))
        assert mean == 2.5
        assert stderr == approx(math.sqrt(5.0 / 3.0 / 4.0))

    def test_single_value(self):
        assert _PairwiseSummation.mean_and_stderr(np.array([0.3])) == (0.3, math.inf)
