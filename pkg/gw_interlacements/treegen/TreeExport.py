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


from typing import Optional
import numpy as np
from .Tree import Tree
from .TreegenConstants import TreegenConstants
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..exc.InvalidTreeExc import InvalidTreeExc


__all__ = "TreeExport",


# This is not really a class as per OOP definition, but rather a collection of semi-independent functions.
class TreeExport(UninstantiableClassMixin):
    @staticmethod
    def to_dot(tree: Tree, graph_name: str = "gw_tree") -> str:
        lines = [f"digraph {graph_name} {{", "    node [shape=circle, label=\"\"];"]

        for node_id in range(tree.n_nodes):
            if tree.is_frontier[node_id]:
                style = "style=filled, fillcolor=\"#1f77b4\", shape=doublecircle"
            elif tree.is_backbone[node_id]:
                style = "style=filled, fillcolor=\"#1f77b4\""
            else:
                style = "color=\"#999999\""
            lines.append(f"    n{node_id} [{style}];")

        for node_id in range(tree.n_nodes):
            for child in tree.children(node_id):
                edge_style = " [penwidth=2]" if tree.is_backbone[child] else ""
                lines.append(f"    n{node_id} -> n{child}{edge_style};")

        lines.append("}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def to_compact_lines(tree: Tree) -> str:
        """
        A "# truncation_depth D" header line, then one node per line, "id parent_id depth backbone_flag", with ids
        renumbered in breadth-first order and the root's parent written as -1.
        """

        order = tree.breadth_first_order()
        old_to_new = np.empty(tree.n_nodes, dtype=np.int64)
        old_to_new[order] = np.arange(tree.n_nodes)

        lines = [f"{TreegenConstants.COMPACT_DEPTH_HEADER} {tree.truncation_depth}"]
        for new_id, old_id in enumerate(order):
            parent = int(tree.parent[old_id])
            new_parent = TreegenConstants.NO_PARENT if parent == TreegenConstants.NO_PARENT else int(old_to_new[parent])
            lines.append(f"{new_id} {new_parent} {int(tree.depth[old_id])} {int(tree.is_backbone[old_id])}")

        return "\n".join(lines) + "\n"

    @staticmethod
    def from_compact_lines(text: str, truncation_depth: Optional[int] = None) -> Tree:
        """
        Parses the output of to_compact_lines(). The format carries no frontier flags: the backbone nodes (or all nodes
        of a tree without backbone flags) at the truncation depth are marked as the frontier. The truncation depth is
        read from the header line; 'truncation_depth' must agree with it when both are present. Text without a header
        and without 'truncation_depth' gets the deepest backbone depth (or the deepest depth of a tree without backbone
        flags).

        :raises InvalidTreeExc
        """

        header_depth = None
        rows = []
        for line_number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue

            if line.startswith("#"):
                header_depth = TreeExport._parse_depth_header(line, line_number, header_depth)
                continue

            fields = line.split()
            if len(fields) != 4:
                raise InvalidTreeExc(f"Line {line_number} must have 4 fields (id parent_id depth backbone_flag), got {line!r}")
            try:
                row = tuple(int(field) for field in fields)
            except ValueError:
                raise InvalidTreeExc(f"Line {line_number} must consist of integers, got {line!r}")
            if row[0] != len(rows):
                raise InvalidTreeExc(f"Node ids must be consecutive starting at 0; line {line_number} has the id {row[0]}")
            if row[3] not in (0, 1):
                raise InvalidTreeExc(f"The backbone flag on line {line_number} must be 0 or 1, got {row[3]}")
            rows.append(row)

        if not rows:
            raise InvalidTreeExc("The compact tree text contains no nodes!")

        table = np.array(rows, dtype=np.int64)
        parent, depth, is_backbone = table[:, 1], table[:, 2], table[:, 3].astype(bool)

        if (truncation_depth is not None) and (header_depth is not None) and (truncation_depth != header_depth):
            raise InvalidTreeExc(f"The requested truncation depth {truncation_depth} differs from the one in the header ({header_depth})!")

        if truncation_depth is None:
            truncation_depth = header_depth
        if truncation_depth is None:
            truncation_depth = int(depth[is_backbone].max()) if is_backbone.any() else int(depth.max())
        is_frontier = (depth == truncation_depth) & (is_backbone if is_backbone.any() else True)

        tree = Tree.from_parent_array(parent, is_backbone, is_frontier, truncation_depth)
        if not np.array_equal(tree.depth, depth):
            raise InvalidTreeExc("The depths listed in the compact tree text do not match its parent links!")

        return tree

    @staticmethod
    def _parse_depth_header(line: str, line_number: int, previous: Optional[int]) -> int:
        """
        :raises InvalidTreeExc
        """

        prefix = TreegenConstants.COMPACT_DEPTH_HEADER
        if not line.startswith(prefix + " "):
            raise InvalidTreeExc(f"Line {line_number} is not a valid header (expected {prefix!r} followed by a depth), got {line!r}")
        if previous is not None:
            raise InvalidTreeExc(f"Line {line_number} repeats the truncation depth header!")

        try:
            header_depth = int(line[len(prefix):])
        except ValueError:
            raise InvalidTreeExc(f"The truncation depth on line {line_number} must be an integer, got {line!r}")
        if header_depth < 0:
            raise InvalidTreeExc(f"The truncation depth on line {line_number} must not be negative, got {header_depth}")

        return header_depth
