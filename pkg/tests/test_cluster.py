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

from gw_interlacements.offspring.OffspringDistribution import OffspringDistribution
from gw_interlacements.treegen.TreeSampler import TreeSampler
from gw_interlacements.transforms.TransformKind import TransformKind
from gw_interlacements.transforms.LaplaceTransforms import LaplaceTransforms
from gw_interlacements.solver.CriticalitySolver import CriticalitySolver
from gw_interlacements.solver.McParameters import McParameters
from gw_interlacements.cluster.ClusterSimulator import ClusterSimulator
from gw_interlacements.etc.StreamPurpose import StreamPurpose
from gw_interlacements.etc.RandomStreams import RandomStreams
from gw_interlacements.exc.InvalidParameterExc import InvalidParameterExc
from gw_interlacements.exc.InvalidTreeExc import InvalidTreeExc


def _reference():
    return OffspringDistribution.explicit_pmf((0.25, 0.0, 0.75))


def _conditioned(index, depth=8):
    return TreeSampler.sample_conditioned(_reference(), depth, RandomStreams.derive(6, StreamPurpose.TREE, index))


def _within(estimate, expected, replicas):
    return abs(estimate - expected) <= 4.0 * max(math.sqrt(expected * (1.0 - expected) / replicas), 1.0 / replicas)


class TestSingleCluster:
    def test_occupied_root(self):
        tree = _conditioned(0)
        outcomes = [ClusterSimulator.simulate_cluster(tree, 50.0, seed) for seed in range(20)]
        assert all(outcome.depth_reached == -1 and outcome.cluster_size == 0 for outcome in outcomes if not outcome.root_vacant)
        assert not all(outcome.root_vacant for outcome in outcomes)

    def test_cluster_never_reaches_the_frontier(self):
        tree = _conditioned(1)
        for seed in range(30):
            outcome = ClusterSimulator.simulate_cluster(tree, 0.05, seed)
            assert outcome.depth_reached < tree.truncation_depth

    def test_same_seed_same_cluster(self):
        tree = _conditioned(2)
        assert ClusterSimulator.simulate_cluster(tree, 0.5, 4) == ClusterSimulator.simulate_cluster(tree, 0.5, 4)

    def test_bushes_only_add_to_the_size(self):
        for index in range(5):
            tree = _conditioned(index)
            for seed in range(10):
                full = ClusterSimulator.simulate_cluster(tree, 0.3, seed)
                backbone_only = ClusterSimulator.simulate_cluster(tree.backbone_restriction(), 0.3, seed)
                assert full.depth_reached == backbone_only.depth_reached
                assert full.backbone_cluster_size == backbone_only.backbone_cluster_size == backbone_only.cluster_size
                assert full.cluster_size >= full.backbone_cluster_size

    def test_monotone_in_the_level(self):
        tree = _conditioned(3)
        for seed in range(20):
            reached = [ClusterSimulator.simulate_cluster(tree, u, seed).depth_reached for u in (0.1, 0.5, 1.0, 3.0)]
            assert all(a >= b for a, b in zip(reached, reached[1:]))

    def test_needs_backbone_flags(self):
        tree = TreeSampler.sample_unconditioned(OffspringDistribution.deterministic(2), 3, seed=0)
        with pytest.raises(InvalidTreeExc):
            ClusterSimulator.simulate_cluster(tree, 1.0, 0)

    @pytest.mark.parametrize("u", [0.0, -1.0])
    def test_level_must_be_positive(self, u):
        with pytest.raises(InvalidParameterExc):
            ClusterSimulator.simulate_cluster(_conditioned(0), u, 0)


class TestAnnealedSurvival:
    def test_independent_of_the_thread_count(self):
        single = ClusterSimulator.annealed_replicas(_reference(), 0.5, 600, 6, seed=1, threads=1)
        pooled = ClusterSimulator.annealed_replicas(_reference(), 0.5, 600, 6, seed=1, threads=2)
        assert single == pooled

    def test_root_vacancy_matches_the_chi_transform(self):
        # replica i lives on the same tree as chi sample i, so r^_0 estimates L^_chi(u) of those trees
        dist, u, replicas = _reference(), 0.5, 3000
        estimate = ClusterSimulator.annealed_survival(dist, u, 0, replicas, 10, seed=2)
        l_chi = LaplaceTransforms.laplace(LaplaceTransforms.sample_chi(dist, replicas, 10, seed=2), u, TransformKind.CHI).mean
        assert _within(estimate.r_hat, l_chi, replicas)

    def test_profile_does_not_increase(self):
        profile = ClusterSimulator.annealed_survival_profile(_reference(), 0.25, 6, 1000, 10, seed=3)
        assert [estimate.n for estimate in profile] == list(range(7))
        assert all(a.r_hat >= b.r_hat for a, b in zip(profile, profile[1:]))

    @pytest.mark.parametrize("d, u", [(2, math.log(2.0)), (3, 0.5)])
    def test_regular_trees_follow_the_recursion(self, d, u):
        dist = OffspringDistribution.deterministic(d)
        n, replicas = 5, 20_000
        expected = CriticalitySolver.survival_recursion(LaplaceTransforms.sample_chi(dist, 1, 40, seed=0), dist, u, n)[n]
        estimate = ClusterSimulator.annealed_survival(dist, u, n, replicas, 40, seed=4)
        assert _within(estimate.r_hat, expected, replicas)

    @pytest.mark.parametrize("u", [0.25, 1.0])
    def test_reference_law_follows_the_recursion(self, u):
        dist, replicas, depth = _reference(), 4000, 12
        expected = CriticalitySolver.survival_recursion(LaplaceTransforms.sample_chi(dist, replicas, depth, seed=8), dist, u, 3)
        profile = ClusterSimulator.annealed_survival_profile(dist, u, 3, replicas, depth, seed=8)
        for estimate, r in zip(profile, expected):
            assert abs(estimate.r_hat - r) <= 4.0 * math.sqrt(2.0) * max(estimate.stderr, 1.0 / replicas)

    def test_regular_replicas_have_no_bushes(self):
        outcomes = ClusterSimulator.annealed_replicas(OffspringDistribution.deterministic(2), 0.5, 200, 12, seed=0)
        assert all(outcome.cluster_size == outcome.backbone_cluster_size for outcome in outcomes)
        assert all((outcome.depth_reached >= 0) == outcome.root_vacant for outcome in outcomes)

    def test_trees_must_be_deeper_than_n(self):
        with pytest.raises(InvalidParameterExc):
            ClusterSimulator.annealed_survival(_reference(), 0.5, 5, 10, 5, seed=0)

    @pytest.mark.parametrize("kwargs", [{"n_replicas": 0}, {"u": 0.0}, {"seed": -1}, {"threads": 0}])
    def test_invalid_parameters(self, kwargs):
        arguments = {"dist": _reference(), "u": 0.5, "n_replicas": 10, "depth": 4, "seed": 0, "threads": 1}
        arguments.update(kwargs)
        with pytest.raises(InvalidParameterExc):
            ClusterSimulator.annealed_replicas(**arguments)


class TestQuenchedSurvival:
    def test_complete_tree_matches_the_annealed_estimate(self):
        # the complete binary tree is the only backbone tree of a deterministic law
        dist, u, n, replicas = OffspringDistribution.deterministic(2), math.log(2.0), 3, 4000
        tree = TreeSampler.sample_backbone(dist.backbone_view, 10, seed=0)
        quenched = ClusterSimulator.quenched_survival(tree, u, n, replicas, seed=5)
        annealed = ClusterSimulator.annealed_survival(dist, u, n, replicas, 10, seed=6)
        assert abs(quenched.r_hat - annealed.r_hat) <= 4.0 * math.hypot(quenched.stderr, annealed.stderr) + 1e-9

    def test_estimate_fields(self):
        tree = _conditioned(4)
        estimate = ClusterSimulator.quenched_survival(tree, 0.5, 2, 500, seed=7)
        assert (estimate.u, estimate.n, estimate.replicas, estimate.depth, estimate.seed) == (0.5, 2, 500, 8, 7)
        assert 0.0 <= estimate.r_hat <= 1.0
        assert estimate.stderr == math.sqrt(estimate.r_hat * (1.0 - estimate.r_hat) / 500)

    def test_tree_must_be_deeper_than_n(self):
        with pytest.raises(InvalidParameterExc):
            ClusterSimulator.quenched_survival(_conditioned(0, depth=3), 0.5, 3, 10, seed=0)


class TestCsv:
    def test_survival_csv(self):
        profile = ClusterSimulator.annealed_survival_profile(_reference(), 0.5, 2, 100, 4, seed=0)
        lines = ClusterSimulator.survival_csv(list(profile)).splitlines()
        assert lines[0] == "u,n,r_hat,stderr,N,depth,seed"
        assert len(lines) == 4
        assert lines[1].startswith("0.5,0,")

    def test_replica_csv(self):
        outcomes = ClusterSimulator.annealed_replicas(_reference(), 0.5, 5, 4, seed=0)
        lines = ClusterSimulator.replica_csv(outcomes).splitlines()
        assert lines[0] == "replica,root_vacant,depth_reached,size"
        assert [line.split(",")[0] for line in lines[1:]] == ["0", "1", "2", "3", "4"]
        assert all(line.split(",")[1] in ("0", "1") for line in lines[1:])


@pytest.fixture(scope="module")
def reference_critical_u():
    return CriticalitySolver.critical_u(_reference(), tol=1e-4, mc_params=McParameters(n=2000, depth=12, seed=0, replicates=1)).u_star


class TestPhases:
    @pytest.mark.parametrize("d", [2, 3])
    def test_regular_tree_dies_out_above_the_critical_level(self, d):
        dist = OffspringDistribution.deterministic(d)
        u = 1.5 * CriticalitySolver.critical_u(dist, tol=1e-6, mc_params=McParameters(n=1, depth=40, replicates=1)).u_star
        n, depth, replicas = 30, 60, 20_000

        estimate = ClusterSimulator.annealed_survival(dist, u, n, replicas, depth, seed=10)
        assert estimate.r_hat * replicas <= 3
        assert CriticalitySolver.survival_recursion(LaplaceTransforms.sample_chi(dist, 1, depth, seed=0), dist, u, n)[n] < 1e-4

    @pytest.mark.parametrize("d", [2, 3])
    def test_regular_tree_percolates_below_the_critical_level(self, d):
        dist = OffspringDistribution.deterministic(d)
        u = 0.5 * CriticalitySolver.critical_u(dist, tol=1e-6, mc_params=McParameters(n=1, depth=40, replicates=1)).u_star
        # deep trees keep the site probabilities of the first n levels free of truncation effects
        n, depth, replicas = 20, 50, 20_000

        estimate = ClusterSimulator.annealed_survival(dist, u, n, replicas, depth, seed=11)
        expected = CriticalitySolver.survival_recursion(LaplaceTransforms.sample_chi(dist, 1, depth, seed=0), dist, u, n)[n]
        assert estimate.r_hat > 3.0 * estimate.stderr
        assert _within(estimate.r_hat, expected, replicas)

    def test_reference_law_on_both_sides(self, reference_critical_u):
        dist, n, replicas, depth = _reference(), 3, 4000, 12
        samples = LaplaceTransforms.sample_chi(dist, replicas, depth, seed=12)

        below = ClusterSimulator.annealed_survival(dist, 0.5 * reference_critical_u, n, replicas, depth, seed=12)
        above = ClusterSimulator.annealed_survival(dist, 1.5 * reference_critical_u, n, replicas, depth, seed=12)
        assert below.r_hat > 3.0 * below.stderr
        # the replicas share their trees and uniforms, so raising u can only close vertices
        assert above.r_hat < below.r_hat

        for estimate in (below, above):
            expected = CriticalitySolver.survival_recursion(samples, dist, estimate.u, n)[n]
            assert abs(estimate.r_hat - expected) <= 4.0 * math.sqrt(2.0) * max(estimate.stderr, 1.0 / replicas)

        assert CriticalitySolver.fixed_point_r(samples, dist, 0.5 * reference_critical_u).r > 0.0
        assert CriticalitySolver.fixed_point_r(samples, dist, 1.5 * reference_critical_u).r == 0.0

    def test_quenched_persistence_below_the_critical_level(self, reference_critical_u):
        for index in range(3):
            tree = _conditioned(index, depth=10)
            below = ClusterSimulator.quenched_survival(tree, 0.5 * reference_critical_u, 6, 4000, seed=13)
            above = ClusterSimulator.quenched_survival(tree, 1.5 * reference_critical_u, 6, 4000, seed=13)
            assert below.r_hat > 3.0 * below.stderr
            assert above.r_hat <= below.r_hat
