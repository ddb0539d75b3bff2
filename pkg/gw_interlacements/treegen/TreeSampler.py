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


from typing import Optional, Union
import numpy as np
from .Tree import Tree
from .TreegenConstants import TreegenConstants
from ..etc.RandomStreams import RandomStreams
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..etc._ValidationHelpers import _ValidationHelpers
from ..offspring.BackboneView import BackboneView
from ..offspring.OffspringDistribution import OffspringDistribution
from ._LevelBuilder import _LevelBuilder
from ..exc.ResourceLimitExc import ResourceLimitExc


__all__ = "TreeSampler",


# Trees are grown one level at a time: the nodes of a level get consecutive ids and the children of a node come right
#  after the children of the node before it, so ids end up in breadth-first order and 'child_ids' is simply 1..n-1.
class TreeSampler(UninstantiableClassMixin):
    @classmethod
    def sample_backbone(cls, backbone: BackboneView, depth: int, seed: Union[int, np.random.Generator], node_cap: int = TreegenConstants.DEFAULT_NODE_CAP) -> Tree:
        """
        A Galton-Watson tree with the backbone offspring law rho~ down to 'depth'; all nodes are backbone nodes and the
        ones at 'depth' form the frontier.

        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        _ValidationHelpers.validate_count(depth, "depth", minimum=0)
        rng = RandomStreams.as_generator(seed)

        builder = _LevelBuilder(node_cap)
        level_size = 1
        for _ in range(depth):
            if backbone.regular_degree is not None:
                counts = np.full(level_size, backbone.regular_degree, dtype=np.int64)
            else:
                counts = cls._draw_from_cdf(backbone.rho_tilde_cdf, rng, level_size)

            builder.add_level(counts, np.ones(level_size, dtype=bool), np.zeros(level_size, dtype=bool))
            level_size = int(counts.sum())

        builder.add_level(np.zeros(level_size, dtype=np.int64), np.ones(level_size, dtype=bool), np.ones(level_size, dtype=bool))

        return builder.build(truncation_depth=depth)

    @classmethod
    def sample_conditioned(cls, dist: OffspringDistribution, depth: int, seed: Union[int, np.random.Generator], node_cap: int = TreegenConstants.DEFAULT_NODE_CAP, bush_node_cap: int = TreegenConstants.DEFAULT_BUSH_NODE_CAP) -> Tree:
        """
        A Galton-Watson tree conditioned on non-extinction, built from its Harris decomposition: backbone nodes draw
        their (backbone, bush) child counts jointly, backbone children come first in every children list, and every
        bush is grown with the extinction-conditioned law until it dies out, also below 'depth'. Backbone nodes at
        'depth' get their bushes but no backbone children.

        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        _ValidationHelpers.validate_count(depth, "depth", minimum=0)
        _ValidationHelpers.validate_count(bush_node_cap, "bush_node_cap")
        rng = RandomStreams.as_generator(seed)

        backbone = dist.backbone_view
        pair_backbone_counts, pair_bush_counts, pair_cdf = backbone.joint_pairs

        builder = _LevelBuilder(node_cap)
        level_backbone = np.ones(1, dtype=bool)
        level_bush_labels = np.full(1, -1, dtype=np.int64)  # -1 for backbone nodes
        bush_sizes = np.zeros(0, dtype=np.int64)

        level_depth = 0
        while level_backbone.size:
            at_frontier = (level_depth == depth)
            n_backbone = int(level_backbone.sum())
            n_bush = level_backbone.size - n_backbone

            backbone_children = np.zeros(level_backbone.size, dtype=np.int64)
            bush_children = np.zeros(level_backbone.size, dtype=np.int64)

            if n_backbone:
                pair_indices = cls._draw_from_cdf(pair_cdf, rng, n_backbone)
                backbone_children[level_backbone] = 0 if at_frontier else pair_backbone_counts[pair_indices]
                bush_children[level_backbone] = pair_bush_counts[pair_indices]
            if n_bush:
                bush_children[~level_backbone] = cls._draw_from_cdf(backbone.extinct_cdf, rng, n_bush)

            counts = backbone_children + bush_children
            builder.add_level(counts, level_backbone, level_backbone & at_frontier)

            # children lists hold the backbone children first, then the bush children
            positions = np.arange(int(counts.sum())) - np.repeat(np.cumsum(counts) - counts, counts)
            next_backbone = positions < np.repeat(backbone_children, counts)

            next_labels = np.repeat(level_bush_labels, counts)
            new_bush_roots = (~next_backbone) & (next_labels < 0)
            next_labels[new_bush_roots] = np.arange(bush_sizes.size, bush_sizes.size + int(new_bush_roots.sum()))
            next_labels[next_backbone] = -1

            bush_sizes = np.concatenate((bush_sizes, np.ones(int(new_bush_roots.sum()), dtype=np.int64)))
            grown = next_labels[(~next_backbone) & ~new_bush_roots]
            if grown.size:
                bush_sizes += np.bincount(grown, minlength=bush_sizes.size)
                if bush_sizes.max() > bush_node_cap:
                    raise ResourceLimitExc(f"A bush of the conditioned tree exceeded the cap of {bush_node_cap} nodes!")

            level_backbone = next_backbone
            level_bush_labels = next_labels
            level_depth += 1

        return builder.build(truncation_depth=depth)

    @classmethod
    def sample_unconditioned(cls, dist: OffspringDistribution, depth: int, seed: Union[int, np.random.Generator], node_cap: int = TreegenConstants.DEFAULT_NODE_CAP) -> Tree:
        """
        A plain Galton-Watson tree down to 'depth' (it may die out earlier); the nodes at 'depth' form the frontier and
        no node carries a backbone flag.

        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        _ValidationHelpers.validate_count(depth, "depth", minimum=0)
        rng = RandomStreams.as_generator(seed)

        pmf_cdf = np.cumsum(dist.pmf_array)
        pmf_cdf[-1] = 1.0

        builder = _LevelBuilder(node_cap)
        level_size = 1
        for _ in range(depth):
            counts = cls._draw_from_cdf(pmf_cdf, rng, level_size)
            builder.add_level(counts, np.zeros(level_size, dtype=bool), np.zeros(level_size, dtype=bool))
            level_size = int(counts.sum())

        builder.add_level(np.zeros(level_size, dtype=np.int64), np.zeros(level_size, dtype=bool), np.ones(level_size, dtype=bool))

        return builder.build(truncation_depth=depth)

    @staticmethod
    def survivor_restriction(tree: Tree) -> Optional[Tree]:
        """
        The nodes of 'tree' that have a frontier descendant (or are frontier nodes themselves), flagged as backbone
        nodes; None when the root has none, i.e. the tree died out before its truncation depth.
        """

        survives = tree.is_frontier.copy()
        for level in reversed(tree.levels[1:]):
            np.logical_or.at(survives, tree.parent[level], survives[level])

        if not survives[0]:
            return None

        restricted = tree.restricted_to(survives)
        return Tree.from_arrays(
            parent=restricted.parent,
            depth=restricted.depth,
            is_backbone=np.ones(restricted.n_nodes, dtype=bool),
            is_frontier=restricted.is_frontier,
            child_offsets=restricted.child_offsets,
            child_ids=restricted.child_ids,
            truncation_depth=restricted.truncation_depth
        )

    @staticmethod
    def _draw_from_cdf(cdf: np.ndarray, rng: np.random.Generator, size: int) -> np.ndarray:
        if size == 0:
            return np.zeros(0, dtype=np.int64)

        indices = np.searchsorted(cdf, rng.random(size), side="right")
        return np.minimum(indices, cdf.size - 1).astype(np.int64)

