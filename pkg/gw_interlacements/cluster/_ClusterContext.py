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


from __future__ import annotations
from dataclasses import dataclass
import math
import numpy as np
from ..treegen.Tree import Tree
from ..harmonic.HarmonicMeasures import HarmonicMeasures
from ..exc.InvalidTreeExc import InvalidTreeExc


# Everything a cluster simulation on one tree at one level needs, computed once and shared by all replicas.
@dataclass(frozen=True, eq=False)
class _ClusterContext:
    tree: Tree
    root_vacancy_probability: float
    open_probability: np.ndarray
    bush_weight: np.ndarray

    @classmethod
    def prepare(cls, tree: Tree, u: float) -> _ClusterContext:
        """
        :raises InvalidParameterExc
        :raises InvalidTreeExc
        """

        if not tree.has_backbone_flags:
            raise InvalidTreeExc("Cluster simulations need a tree with backbone flags!")

        table = HarmonicMeasures.beta_table(tree)
        chi = HarmonicMeasures.gamma_chi(tree, table).chi
        profile = HarmonicMeasures.h_profile(tree, u, table)

        subtree_sizes = np.ones(tree.n_nodes, dtype=np.int64)
        for level in reversed(tree.levels[1:]):
            np.add.at(subtree_sizes, tree.parent[level], subtree_sizes[level])

        bush_roots = np.flatnonzero(~tree.is_backbone & tree.is_backbone[np.maximum(tree.parent, 0)])
        bush_weight = np.zeros(tree.n_nodes, dtype=np.int64)
        np.add.at(bush_weight, tree.parent[bush_roots], subtree_sizes[bush_roots])

        return cls(tree=tree, root_vacancy_probability=math.exp(-profile.u * chi), open_probability=profile.p, bush_weight=bush_weight)

    def backbone_children_of(self, node_ids: np.ndarray) -> np.ndarray:
        children = self.tree.children_of(node_ids)
        return children[self.tree.is_backbone[children]]
