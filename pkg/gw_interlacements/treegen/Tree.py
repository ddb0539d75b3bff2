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
from typing import Sequence
from dataclasses import dataclass
from functools import cached_property
import numpy as np
from .TreeNode import TreeNode
from .TreegenConstants import TreegenConstants
from ..exc.InvalidTreeExc import InvalidTreeExc


__all__ = "Tree",


@dataclass(frozen=True, eq=False)
class Tree:
    """
    A finite truncation of a rooted tree, stored as a node arena: node 'i' has the parent 'parent[i]' (-1 for the root,
    which always has the id 0) and the ordered children 'child_ids[child_offsets[i]:child_offsets[i + 1]]'.

    'is_frontier' marks the vertices whose (backbone) children were not sampled because they lie at the truncation
    depth; a frontier vertex of a conditioned tree still carries its complete finite bushes. In trees with backbone
    flags, every frontier vertex is a backbone vertex and every non-frontier backbone vertex has a backbone child.
    """

    parent: np.ndarray
    depth: np.ndarray
    is_backbone: np.ndarray
    is_frontier: np.ndarray
    child_offsets: np.ndarray
    child_ids: np.ndarray
    truncation_depth: int

    def __post_init__(self):
        """
        :raises InvalidTreeExc
        """

        n = self.parent.size
        if n == 0:
            raise InvalidTreeExc("A tree must have at least one node!")

        if any(array.size != n for array in (self.depth, self.is_backbone, self.is_frontier)):
            raise InvalidTreeExc("The per-node arrays of a tree must all have the same length!")

        if (self.child_offsets.size != n + 1) or (self.child_offsets[0] != 0) or (self.child_offsets[-1] != n - 1) or (self.child_ids.size != n - 1):
            raise InvalidTreeExc("The child offsets of the tree do not describe n - 1 parent-child links!")

        if np.any(np.diff(self.child_offsets) < 0):
            raise InvalidTreeExc("The child offsets of the tree must be non-decreasing!")

        if (self.parent[0] != TreegenConstants.NO_PARENT) or np.any(self.parent[1:] < 0) or np.any(self.parent >= n):
            raise InvalidTreeExc("The node 0 must be the only root of the tree and all parent ids must be valid!")

        if not np.array_equal(np.sort(self.child_ids), np.arange(1, n)):
            raise InvalidTreeExc("Every non-root node must be listed as a child exactly once!")

        owners = np.repeat(np.arange(n), np.diff(self.child_offsets))
        if not np.array_equal(self.parent[self.child_ids], owners):
            raise InvalidTreeExc("The parent and children links of the tree are inconsistent!")

        # depth(child) = depth(parent) + 1 with depth(root) = 0 also rules out cycles
        if (self.depth[0] != 0) or (not np.array_equal(self.depth[self.child_ids], self.depth[owners] + 1)):
            raise InvalidTreeExc("Node depths must increase by exactly one from parent to child, starting at 0 in the root!")

        if (self.truncation_depth < 0) or np.any(self.depth[self.is_frontier] != self.truncation_depth):
            raise InvalidTreeExc(f"Frontier nodes must lie at the truncation depth {self.truncation_depth}!")

        if self.has_backbone_flags:
            self._validate_backbone(owners)
        elif np.any(self.child_counts[self.is_frontier] > 0):
            raise InvalidTreeExc("In a tree without backbone flags, frontier nodes must be leaves!")

    def _validate_backbone(self, owners: np.ndarray) -> None:
        """
        :raises InvalidTreeExc
        """

        if not self.is_backbone[0]:
            raise InvalidTreeExc("The root must belong to the backbone!")

        if np.any(self.is_frontier & ~self.is_backbone):
            raise InvalidTreeExc("Only backbone nodes can be frontier nodes; bushes are never truncated!")

        if np.any(self.is_backbone[self.child_ids] & ~self.is_backbone[owners]):
            raise InvalidTreeExc("The backbone must be a connected subtree containing the root!")

        backbone_child_counts = np.bincount(owners[self.is_backbone[self.child_ids]], minlength=self.n_nodes)
        if np.any(backbone_child_counts[self.is_frontier] > 0):
            raise InvalidTreeExc("Frontier nodes must not have backbone children!")
        if np.any(backbone_child_counts[self.is_backbone & ~self.is_frontier] == 0):
            raise InvalidTreeExc("Every backbone node above the truncation depth must have at least one backbone child!")

    @classmethod
    def from_parent_array(cls, parent: Sequence[int], is_backbone: Sequence[bool], is_frontier: Sequence[bool], truncation_depth: int) -> Tree:  # DP: Factory
        """
        Builds a tree whose node ids are topologically numbered (every parent id is smaller than its child's id);
        children lists are in ascending id order.

        :raises InvalidTreeExc
        """

        parent = np.asarray(parent, dtype=np.int64)
        n = parent.size
        if n == 0:
            raise InvalidTreeExc("A tree must have at least one node!")
        if (parent[0] != TreegenConstants.NO_PARENT) or np.any(parent[1:] < 0) or np.any(parent[1:] >= np.arange(1, n)):
            raise InvalidTreeExc("Node 0 must be the root and every other node's parent must have a smaller id!")

        depth = np.zeros(n, dtype=np.int64)
        for node_id in range(1, n):
            depth[node_id] = depth[parent[node_id]] + 1

        child_ids = np.argsort(parent[1:], kind="stable") + 1
        child_offsets = np.concatenate(([0], np.cumsum(np.bincount(parent[1:], minlength=n)))).astype(np.int64)

        return cls.from_arrays(
            parent=parent,
            depth=depth,
            is_backbone=np.asarray(is_backbone, dtype=bool),
            is_frontier=np.asarray(is_frontier, dtype=bool),
            child_offsets=child_offsets,
            child_ids=child_ids.astype(np.int64),
            truncation_depth=int(truncation_depth)
        )

    @classmethod
    def from_arrays(cls, **arrays) -> Tree:  # DP: Factory
        for value in arrays.values():
            if isinstance(value, np.ndarray):
                value.setflags(write=False)

        return cls(**arrays)

    @property
    def root(self) -> int:
        return 0

    @property
    def n_nodes(self) -> int:
        return self.parent.size

    @property
    def has_backbone_flags(self) -> bool:
        return bool(self.is_backbone.any())

    @cached_property
    def child_counts(self) -> np.ndarray:
        counts = np.diff(self.child_offsets)
        counts.setflags(write=False)
        return counts

    @property
    def max_depth(self) -> int:
        return int(self.depth.max())

    def children(self, node_id: int) -> tuple[int, ...]:
        self._validate_node_id(node_id)
        return tuple(int(child) for child in self.child_ids[self.child_offsets[node_id]:self.child_offsets[node_id + 1]])

    def children_of(self, node_ids: np.ndarray) -> np.ndarray:
        """
        The children of all the given nodes, concatenated in the order of 'node_ids' and of each children list.
        """

        node_ids = np.asarray(node_ids, dtype=np.int64)
        starts = self.child_offsets[node_ids]
        counts = self.child_offsets[node_ids + 1] - starts
        total = int(counts.sum())
        if total == 0:
            return np.zeros(0, dtype=np.int64)

        block_starts = np.cumsum(counts) - counts
        positions = np.arange(total) - np.repeat(block_starts, counts) + np.repeat(starts, counts)
        return self.child_ids[positions]

    def node(self, node_id: int) -> TreeNode:
        self._validate_node_id(node_id)
        parent = int(self.parent[node_id])

        return TreeNode(
            node_id=int(node_id),
            parent=(None if parent == TreegenConstants.NO_PARENT else parent),
            children=self.children(node_id),
            depth=int(self.depth[node_id]),
            is_backbone=bool(self.is_backbone[node_id]),
            is_frontier=bool(self.is_frontier[node_id])
        )

    @cached_property
    def levels(self) -> tuple[np.ndarray, ...]:
        """
        The node ids of every depth 0, 1, ..., max_depth, each level in ascending id order.
        """

        order = np.argsort(self.depth, kind="stable")
        level_sizes = np.bincount(self.depth)
        levels = tuple(np.split(order, np.cumsum(level_sizes)[:-1]))
        for level in levels:
            level.setflags(write=False)

        return levels

    @cached_property
    def backbone_rank(self) -> np.ndarray:
        """
        The position of every backbone node in (depth, id) order, -1 for bush nodes; the root has rank 0.
        """

        rank = np.full(self.n_nodes, -1, dtype=np.int64)
        backbone_order = np.concatenate([level[self.is_backbone[level]] for level in self.levels])
        rank[backbone_order] = np.arange(backbone_order.size)
        rank.setflags(write=False)
        return rank

    @property
    def n_backbone(self) -> int:
        return int(self.is_backbone.sum())

    def subtree_nodes(self, node_id: int) -> np.ndarray:
        """
        The ids of 'node_id' and all its descendants, ascending.
        """

        self._validate_node_id(node_id)

        in_subtree = np.zeros(self.n_nodes, dtype=bool)
        in_subtree[node_id] = True
        for level in self.levels[self.depth[node_id] + 1:]:
            in_subtree[level] = in_subtree[self.parent[level]]

        return np.flatnonzero(in_subtree)

    def backbone_restriction(self) -> Tree:
        """
        The subtree made of the backbone nodes only, with their relative order (ids and children lists) preserved.

        :raises InvalidTreeExc
        """

        if not self.has_backbone_flags:
            raise InvalidTreeExc("The tree carries no backbone flags to restrict to!")

        return self.restricted_to(self.is_backbone)

    def planted_subtree(self, node_id: int) -> Tree:
        """
        The subtree of 'node_id' with one extra vertex planted above it as the new root, so that the new root's only
        child is 'node_id' (id 1 in the returned tree).

        :raises InvalidTreeExc
        """

        in_subtree = np.zeros(self.n_nodes, dtype=bool)
        in_subtree[self.subtree_nodes(node_id)] = True
        subtree = self.restricted_to(in_subtree)

        return Tree.from_arrays(
            parent=np.concatenate(([TreegenConstants.NO_PARENT], np.where(subtree.parent < 0, 0, subtree.parent + 1))),
            depth=np.concatenate(([0], subtree.depth + 1)),
            is_backbone=np.concatenate(([bool(self.is_backbone[node_id])], subtree.is_backbone)),
            is_frontier=np.concatenate(([False], subtree.is_frontier)),
            child_offsets=np.concatenate(([0], subtree.child_offsets + 1)),
            child_ids=np.concatenate(([1], subtree.child_ids + 1)),
            truncation_depth=subtree.truncation_depth + 1
        )

    def restricted_to(self, keep: np.ndarray) -> Tree:
        """
        The tree induced by the nodes in the boolean mask 'keep', which must be closed under taking parents except for
        exactly one topmost node; that node becomes the root and depths are shifted accordingly.

        :raises InvalidTreeExc
        """

        keep = np.asarray(keep, dtype=bool)
        kept_ids = np.flatnonzero(keep)
        if kept_ids.size == 0:
            raise InvalidTreeExc("Cannot restrict a tree to an empty node set!")

        parent_kept = np.zeros(self.n_nodes, dtype=bool)
        parent_kept[1:] = keep[self.parent[1:]]
        tops = np.flatnonzero(keep & ~parent_kept)
        if tops.size != 1:
            raise InvalidTreeExc("The node set to restrict to must be a connected subtree!")

        old_to_new = np.full(self.n_nodes, -1, dtype=np.int64)
        old_to_new[kept_ids] = np.arange(kept_ids.size)

        owners = np.repeat(np.arange(self.n_nodes), self.child_counts)
        kept_links = keep[self.child_ids]
        new_child_ids = old_to_new[self.child_ids[kept_links]]
        new_owners = old_to_new[owners[kept_links]]
        new_child_offsets = np.concatenate(([0], np.cumsum(np.bincount(new_owners, minlength=kept_ids.size))))

        new_parent = np.where(parent_kept[kept_ids], old_to_new[np.maximum(self.parent[kept_ids], 0)], TreegenConstants.NO_PARENT)
        shift = int(self.depth[tops[0]])

        return Tree.from_arrays(
            parent=new_parent.astype(np.int64),
            depth=(self.depth[kept_ids] - shift).astype(np.int64),
            is_backbone=self.is_backbone[kept_ids].copy(),
            is_frontier=self.is_frontier[kept_ids].copy(),
            child_offsets=new_child_offsets.astype(np.int64),
            child_ids=new_child_ids.astype(np.int64),
            truncation_depth=self.truncation_depth - shift
        )

    def with_shuffled_children(self, rng: np.random.Generator) -> Tree:
        """
        The same tree with every children list randomly permuted; node ids do not change.
        """

        owners = np.repeat(np.arange(self.n_nodes), self.child_counts)
        order = np.lexsort((rng.random(self.child_ids.size), owners))

        return Tree.from_arrays(
            parent=self.parent,
            depth=self.depth,
            is_backbone=self.is_backbone,
            is_frontier=self.is_frontier,
            child_offsets=self.child_offsets,
            child_ids=self.child_ids[order],
            truncation_depth=self.truncation_depth
        )

    def breadth_first_order(self) -> np.ndarray:
        """
        Node ids in the order of a breadth-first traversal that follows the children lists.
        """

        chunks = [np.zeros(1, dtype=np.int64)]
        while chunks[-1].size:
            chunks.append(self.children_of(chunks[-1]))

        return np.concatenate(chunks)

    def _validate_node_id(self, node_id: int) -> None:
        """
        :raises InvalidTreeExc
        """

        if isinstance(node_id, bool) or not isinstance(node_id, (int, np.integer)) or not (0 <= node_id < self.n_nodes):
            raise InvalidTreeExc(f"The tree has no node with the id {node_id!r}")

