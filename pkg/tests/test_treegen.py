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
import scipy.stats
from pytest import approx

from gw_interlacements.offspring.OffspringDistribution import OffspringDistribution
from gw_interlacements.treegen.Tree import Tree
from gw_interlacements.treegen.TreeSampler import TreeSampler
from gw_interlacements.treegen.TreeExport import TreeExport
from gw_interlacements.etc.StreamPurpose import StreamPurpose
from gw_interlacements.etc.RandomStreams import RandomStreams
from gw_interlacements.exc.InvalidTreeExc import InvalidTreeExc
from gw_interlacements.exc.ResourceLimitExc import ResourceLimitExc


def _reference():
    return OffspringDistribution.explicit_pmf((0.25, 0.0, 0.75))


def _chi_square_p_value(counts, probabilities):
    # bins expecting fewer than 5 observations are merged into one
    probabilities = np.asarray(probabilities, dtype=np.float64)
    counts = np.asarray(counts, dtype=np.int64)

    observed = np.bincount(counts, minlength=probabilities.size).astype(np.float64)
    expected = np.zeros(observed.size)
    expected[:probabilities.size] = probabilities / probabilities.sum() * counts.size

    large = expected >= 5.0
    observed = np.append(observed[large], observed[~large].sum())
    expected = np.append(expected[large], expected[~large].sum())
    if expected[-1] == 0.0:
        assert observed[-1] == 0.0
        observed, expected = observed[:-1], expected[:-1]

    return scipy.stats.chisquare(observed, expected * observed.sum() / expected.sum()).pvalue


def _small_conditioned_tree():
    """
    0 (backbone) -> 1 (backbone), 2 (bush); 1 -> 3 (backbone frontier); 2 -> 4 (bush)
    """
    return Tree.from_parent_array(
        parent=[-1, 0, 0, 1, 2],
        is_backbone=[True, True, False, True, False],
        is_frontier=[False, False, False, True, False],
        truncation_depth=2
    )


class TestTreeStructure:
    def test_small_tree(self):
        tree = _small_conditioned_tree()
        assert tree.n_nodes == 5
        assert tree.children(0) == (1, 2)
        assert tree.node(3).is_frontier
        assert tree.node(0).is_root
        assert tree.n_backbone == 3
        assert [level.tolist() for level in tree.levels] == [[0], [1, 2], [3, 4]]
        assert tree.backbone_rank.tolist() == [0, 1, -1, 2, -1]

    def test_children_of_keeps_order(self):
        tree = _small_conditioned_tree()
        assert tree.children_of(np.array([1, 0])).tolist() == [3, 1, 2]

    def test_backbone_restriction(self):
        backbone = _small_conditioned_tree().backbone_restriction()
        assert backbone.parent.tolist() == [-1, 0, 1]
        assert backbone.is_frontier.tolist() == [False, False, True]

    def test_planted_subtree(self):
        planted = _small_conditioned_tree().planted_subtree(1)
        assert planted.parent.tolist() == [-1, 0, 1]
        assert planted.truncation_depth == 2
        assert planted.children(0) == (1,)

    def test_subtree_nodes(self):
        assert _small_conditioned_tree().subtree_nodes(2).tolist() == [2, 4]

    def test_frontier_must_lie_at_the_truncation_depth(self):
        with pytest.raises(InvalidTreeExc):
            Tree.from_parent_array([-1, 0], [True, True], [False, True], truncation_depth=3)

    def test_backbone_must_reach_the_frontier(self):
        with pytest.raises(InvalidTreeExc):
            Tree.from_parent_array([-1, 0, 0], [True, False, False], [False, False, False], truncation_depth=1)

    def test_parents_must_precede_children(self):
        with pytest.raises(InvalidTreeExc):
            Tree.from_parent_array([-1, 2, 0], [False] * 3, [False, True, False], truncation_depth=1)

    def test_restriction_must_be_connected(self):
        tree = _small_conditioned_tree()
        with pytest.raises(InvalidTreeExc):
            tree.restricted_to(np.array([False, True, True, False, False]))

    def test_unknown_node(self):
        with pytest.raises(InvalidTreeExc):
            _small_conditioned_tree().children(5)

    def test_shuffled_children(self):
        tree = TreeSampler.sample_conditioned(_reference(), 5, seed=3)
        shuffled = tree.with_shuffled_children(np.random.default_rng(0))
        assert np.array_equal(shuffled.parent, tree.parent)
        for node_id in range(tree.n_nodes):
            assert sorted(shuffled.children(node_id)) == sorted(tree.children(node_id))


class TestSampling:
    def test_regular_backbone(self):
        tree = TreeSampler.sample_backbone(OffspringDistribution.deterministic(2).backbone_view, 6, seed=0)
        assert tree.n_nodes == 2 ** 7 - 1
        assert int(tree.is_frontier.sum()) == 2 ** 6
        assert np.all(tree.is_backbone)

    def test_same_seed_same_tree(self):
        first = TreeSampler.sample_conditioned(_reference(), 6, seed=11)
        second = TreeSampler.sample_conditioned(_reference(), 6, seed=11)
        assert np.array_equal(first.parent, second.parent)
        assert np.array_equal(first.is_backbone, second.is_backbone)

    def test_every_backbone_node_above_the_frontier_has_a_backbone_child(self):
        for index in range(10):
            tree = TreeSampler.sample_conditioned(OffspringDistribution.geometric(0.25), 6, RandomStreams.derive(5, StreamPurpose.TREE, index))
            inner = np.flatnonzero(tree.is_backbone & ~tree.is_frontier)
            assert all(any(tree.is_backbone[child] for child in tree.children(int(node_id))) for node_id in inner)
            assert np.all(tree.depth[tree.is_frontier] == 6)

    def test_backbone_offspring_law(self):
        backbone = _reference().backbone_view
        counts = []
        for index in range(400):
            tree = TreeSampler.sample_backbone(backbone, 1, RandomStreams.derive(0, StreamPurpose.TREE, index))
            counts.append(len(tree.children(0)))

        observed = np.bincount(counts, minlength=3)[1:]
        _, p_value = scipy.stats.chisquare(observed, 400 * np.array([0.5, 0.5]))
        assert p_value > 1e-4

    def test_conditioned_root_counts(self):
        # the root of the reference law has either (1 backbone, 1 bush) or (2 backbone, 0 bush) children
        for index in range(20):
            tree = TreeSampler.sample_conditioned(_reference(), 3, RandomStreams.derive(1, StreamPurpose.TREE, index))
            root_children = tree.children(0)
            assert len(root_children) == 2
            assert tree.is_backbone[root_children[0]]

    @pytest.mark.parametrize("dist", [OffspringDistribution.geometric(0.25), OffspringDistribution.poisson(2.0)], ids=["geometric", "poisson"])
    def test_harris_decomposition(self, dist):
        pmf, q = dist.pmf_array, dist.q
        litter = np.arange(pmf.size)

        trees = [TreeSampler.sample_conditioned(dist, 1, RandomStreams.derive(9, StreamPurpose.TREE, index)) for index in range(3000)]
        root_counts = [len(tree.children(0)) for tree in trees]
        root_backbone_counts = [int(tree.is_backbone[list(tree.children(0))].sum()) for tree in trees]
        bush_counts = np.concatenate([tree.child_counts[~tree.is_backbone] for tree in trees])

        # a surviving root has j children with probability rho_j (1 - q^j) / (1 - q)
        assert _chi_square_p_value(root_counts, pmf * (1.0 - q ** litter) / (1.0 - q)) > 1e-4

        # k of them survive with probability sum_j rho_j C(j, k) (1 - q)^k q^(j - k) / (1 - q), k >= 1
        thinned = np.array([math.fsum(pmf * scipy.stats.binom.pmf(k, litter, 1.0 - q)) for k in litter]) / (1.0 - q)
        thinned[0] = 0.0
        assert _chi_square_p_value(root_backbone_counts, thinned) > 1e-4

        # bush vertices reproduce with the extinction-conditioned law rho_k q^(k - 1)
        assert bush_counts.size > 500
        assert _chi_square_p_value(bush_counts, pmf * q ** (litter - 1.0)) > 1e-4

    def test_survival_frequency_of_unconditioned_trees(self):
        dist = _reference()
        depth = 8
        survived = sum(
            TreeSampler.survivor_restriction(TreeSampler.sample_unconditioned(dist, depth, RandomStreams.derive(2, StreamPurpose.TREE, index))) is not None
            for index in range(1000)
        )
        # at depth 8 the survival probability is already close to 1 - q = 2/3
        assert survived / 1000 == approx(2.0 / 3.0, abs=0.06)

    def test_survivor_restriction_is_a_backbone(self):
        tree = TreeSampler.sample_unconditioned(OffspringDistribution.deterministic(2), 3, seed=0)
        restricted = TreeSampler.survivor_restriction(tree)
        assert restricted.n_nodes == tree.n_nodes
        assert np.all(restricted.is_backbone)

    def test_survivors_of_unconditioned_trees_follow_the_backbone_law(self):
        depth = 12
        root_counts = []
        for index in range(3000):
            restricted = TreeSampler.survivor_restriction(TreeSampler.sample_unconditioned(_reference(), depth, RandomStreams.derive(4, StreamPurpose.TREE, index)))
            if restricted is None:
                continue

            assert np.all(restricted.is_backbone)
            assert np.all(restricted.depth[restricted.is_frontier] == depth)
            root_counts.append(len(restricted.children(0)))

        # rho~ of the reference law is 1/2 on one and two surviving children
        survivors = len(root_counts)
        assert survivors > 1500
        assert set(root_counts) <= {1, 2}
        two_children = root_counts.count(2) / survivors
        assert abs(two_children - 0.5) <= 3.0 * math.sqrt(0.25 / survivors)

    def test_node_cap(self):
        with pytest.raises(ResourceLimitExc):
            TreeSampler.sample_backbone(OffspringDistribution.deterministic(3).backbone_view, 10, seed=0, node_cap=1000)

    def test_bush_node_cap(self):
        # geometric bushes with many nodes exceed a cap of 1 node almost surely within a few trees
        with pytest.raises(ResourceLimitExc):
            for index in range(50):
                TreeSampler.sample_conditioned(OffspringDistribution.poisson(1.2), 4, RandomStreams.derive(0, StreamPurpose.TREE, index), bush_node_cap=1)


class TestExport:
    def test_compact_lines(self):
        lines = TreeExport.to_compact_lines(_small_conditioned_tree()).splitlines()
        assert lines[0] == "# truncation_depth 2"
        assert lines[1] == "0 -1 0 1"
        assert lines[3] == "2 0 1 0"

    def test_compact_lines_are_parsed_back(self):
        tree = TreeSampler.sample_conditioned(_reference(), 5, seed=7)
        parsed = TreeExport.from_compact_lines(TreeExport.to_compact_lines(tree), truncation_depth=5)
        assert np.array_equal(parsed.parent, tree.parent)
        assert np.array_equal(parsed.is_frontier, tree.is_frontier)

    def test_extinct_tree_keeps_its_truncation_depth(self):
        extinct = next(
            tree for tree in (TreeSampler.sample_unconditioned(_reference(), 6, RandomStreams.derive(3, StreamPurpose.TREE, index)) for index in range(200))
            if TreeSampler.survivor_restriction(tree) is None
        )
        parsed = TreeExport.from_compact_lines(TreeExport.to_compact_lines(extinct))
        assert parsed.truncation_depth == 6
        assert not parsed.is_frontier.any()
        assert np.array_equal(parsed.parent, extinct.parent)

    def test_root_only_tree(self):
        tree = Tree.from_parent_array([-1], [False], [False], truncation_depth=6)
        parsed = TreeExport.from_compact_lines(TreeExport.to_compact_lines(tree))
        assert (parsed.n_nodes, parsed.truncation_depth, int(parsed.is_frontier.sum())) == (1, 6, 0)

    def test_text_without_a_header(self):
        parsed = TreeExport.from_compact_lines("0 -1 0 1\n1 0 1 1\n2 0 1 0\n")
        assert parsed.truncation_depth == 1
        assert parsed.is_frontier.tolist() == [False, True, False]

    def test_conflicting_truncation_depth(self):
        text = TreeExport.to_compact_lines(_small_conditioned_tree())
        with pytest.raises(InvalidTreeExc):
            TreeExport.from_compact_lines(text, truncation_depth=3)

    @pytest.mark.parametrize("text", ["", "0 -1 0", "1 -1 0 1", "0 -1 0 1\n1 0 2 1", "0 -1 0 x", "# truncation_depth x\n0 -1 0 1", "# depth 3\n0 -1 0 1",
                                      "# truncation_depth 0\n# truncation_depth 0\n0 -1 0 1", "# truncation_depth -1\n0 -1 0 1"])
    def test_malformed_compact_lines(self, text):
        with pytest.raises(InvalidTreeExc):
            TreeExport.from_compact_lines(text)

    def test_dot(self):
        text = TreeExport.to_dot(_small_conditioned_tree(), graph_name="small")
        assert text.startswith("digraph small {")
        assert "n1 -> n3 [penwidth=2];" in text
        assert "n2 -> n4;" in text
