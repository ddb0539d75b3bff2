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


import logging
import numpy as np
from .Tree import Tree
from ..etc._ValidationHelpers import _ValidationHelpers
from ..exc.ResourceLimitExc import ResourceLimitExc


logger = logging.getLogger(__name__)


# Accumulates the levels of a breadth-first grown tree; a level is described by the child counts of its nodes.
class _LevelBuilder:
    def __init__(self, node_cap: int):
        """
        :raises InvalidParameterExc
        """

        _ValidationHelpers.validate_count(node_cap, "node_cap")

        self._node_cap: int = node_cap
        self._n_nodes: int = 0
        self._counts: list[np.ndarray] = []
        self._backbone: list[np.ndarray] = []
        self._frontier: list[np.ndarray] = []

    def add_level(self, counts: np.ndarray, is_backbone: np.ndarray, is_frontier: np.ndarray) -> None:
        """
        :raises ResourceLimitExc
        """

        self._n_nodes += counts.size
        if self._n_nodes + int(counts.sum()) > self._node_cap:
            raise ResourceLimitExc(f"The tree exceeded the cap of {self._node_cap} nodes!")

        self._counts.append(counts.astype(np.int64))
        self._backbone.append(is_backbone)
        self._frontier.append(is_frontier)

    def build(self, truncation_depth: int) -> Tree:
        counts = np.concatenate(self._counts)
        n = counts.size

        depth = np.repeat(np.arange(len(self._counts), dtype=np.int64), [level.size for level in self._counts])
        parent = np.concatenate(([-1], np.repeat(np.arange(n, dtype=np.int64), counts)))

        logger.debug("Sampled a tree with %d nodes and %d levels", n, len(self._counts))

        return Tree.from_arrays(
            parent=parent,
            depth=depth,
            is_backbone=np.concatenate(self._backbone),
            is_frontier=np.concatenate(self._frontier),
            child_offsets=np.concatenate(([0], np.cumsum(counts))).astype(np.int64),
            child_ids=np.arange(1, n, dtype=np.int64),
            truncation_depth=truncation_depth
        )
