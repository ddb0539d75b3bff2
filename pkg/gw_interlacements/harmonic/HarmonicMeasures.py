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


from typing import Iterable, Optional, Union
import math
import logging
import numpy as np
from .EscapeTable import EscapeTable
from .GammaChi import GammaChi
from .SiteProfile import SiteProfile
from .CapacityResult import CapacityResult
from .EscapeEstimate import EscapeEstimate
from .HarmonicConstants import HarmonicConstants
from ..treegen.Tree import Tree
from ..etc.StreamPurpose import StreamPurpose
from ..etc.RandomStreams import RandomStreams
from ..etc.OutputFormatting import OutputFormatting
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..etc._ValidationHelpers import _ValidationHelpers
from ..exc.InvalidTreeExc import InvalidTreeExc


__all__ = "HarmonicMeasures",


logger = logging.getLogger(__name__)


# On a tree with unit conductances, the escape probability of a vertex towards its subtree obeys the series-parallel
#  rule beta = S / (1 + S), S being the sum of the children's escape probabilities. Every quantity here is derived from
#  that one bottom-up pass.
class HarmonicMeasures(UninstantiableClassMixin):
    @staticmethod
    def beta_table(tree: Tree) -> EscapeTable:
        beta = np.zeros(tree.n_nodes, dtype=np.float64)
        s = np.zeros(tree.n_nodes, dtype=np.float64)
        reaches_frontier = tree.is_frontier.copy()

        beta[tree.is_frontier] = 1.0
        s[tree.is_frontier] = np.inf

        # np.add.at accumulates in index order, so every S is summed over the children in ascending id order; this
        #  makes the table bit-identical on the backbone restriction and under shuffled children lists
        for level_depth in range(len(tree.levels) - 1, -1, -1):
            level = tree.levels[level_depth]
            inner = level[~tree.is_frontier[level]]
            beta[inner] = s[inner] / (1.0 + s[inner])

            if level_depth > 0:
                np.add.at(s, tree.parent[level], beta[level])
                np.logical_or.at(reaches_frontier, tree.parent[level], reaches_frontier[level])

        for array in (beta, s, reaches_frontier):
            array.setflags(write=False)

        exact = ~reaches_frontier
        exact.setflags(write=False)

        return EscapeTable(beta=beta, s=s, exact=exact, depth_used=tree.truncation_depth)

    @classmethod
    def gamma_chi(cls, tree: Tree, table: Optional[EscapeTable] = None) -> GammaChi:
        """
        chi = S(root), the capacity of the root, and gamma = chi / (1 + chi), the escape probability of the root once
        an extra vertex is attached above it. Both are upper bounds that decrease with the truncation depth.

        :raises InvalidTreeExc
        """

        if tree.is_frontier[tree.root]:
            raise InvalidTreeExc("gamma and chi need a tree of truncation depth at least 1 (the root is a frontier node)!")

        table = table if table is not None else cls.beta_table(tree)
        chi = float(table.s[tree.root])

        return GammaChi(gamma=chi / (1.0 + chi), chi=chi)

    @classmethod
    def h_profile(cls, tree: Tree, u: float, table: Optional[EscapeTable] = None) -> SiteProfile:
        """
        h(z) = S(z) * beta(z) = S(z)^2 / (1 + S(z)) and p_u(z) = exp(-u h(z)); bush vertices get h = 0 (p = 1),
        frontier vertices h = inf (p = 0) and the root h = 0.

        :raises InvalidParameterExc
        """

        u = _ValidationHelpers.validate_level(u, allow_zero=False)
        table = table if table is not None else cls.beta_table(tree)

        h = table.s * table.beta
        h[tree.root] = 0.0
        p = np.exp(-u * h)

        h.setflags(write=False)
        p.setflags(write=False)

        return SiteProfile(u=u, h=h, p=p)

    @classmethod
    def capacity(cls, tree: Tree, vertex_set: Iterable[int], table: Optional[EscapeTable] = None) -> CapacityResult:
        """
        The capacity of a connected vertex set K: every outer neighbour y of K below K contributes beta(y); when K does
        not contain the root, the neighbour above K contributes A / (1 + A), A being the escape weight from that
        neighbour to infinity through the rest of the tree (obtained along the ancestor chain by the same series-parallel
        rule). Sums are exactly rounded, so they do not depend on summation order.

        :raises InvalidTreeExc
        """

        members = np.unique(np.fromiter((int(node_id) for node_id in vertex_set), dtype=np.int64))
        if members.size == 0:
            raise InvalidTreeExc("The capacity of an empty set is not defined here!")
        if (members[0] < 0) or (members[-1] >= tree.n_nodes):
            raise InvalidTreeExc(f"The vertex set contains ids that are not in the tree: {members.tolist()}")
        if np.any(tree.is_frontier[members]):
            raise InvalidTreeExc("The vertex set must not contain frontier vertices!")

        in_set = np.zeros(tree.n_nodes, dtype=bool)
        in_set[members] = True

        tops = [int(node_id) for node_id in members if (tree.parent[node_id] < 0) or (not in_set[tree.parent[node_id]])]
        if len(tops) != 1:
            raise InvalidTreeExc(f"The vertex set must be connected, it has {len(tops)} topmost vertices")
        top = tops[0]

        table = table if table is not None else cls.beta_table(tree)

        equilibrium_terms: dict[int, list[float]] = {int(node_id): [] for node_id in members}
        boundary_terms: dict[int, float] = {}

        for node_id in members:
            for child in tree.children(int(node_id)):
                if not in_set[child]:
                    boundary_terms[child] = float(table.beta[child])
                    equilibrium_terms[int(node_id)].append(boundary_terms[child])

        if top != tree.root:
            upward_parent = int(tree.parent[top])
            boundary_terms[upward_parent] = cls._upward_escape(tree, table, top)
            equilibrium_terms[top].append(boundary_terms[upward_parent])

        equilibrium = {node_id: math.fsum(terms) for node_id, terms in equilibrium_terms.items()}

        return CapacityResult(
            value=math.fsum(boundary_terms.values()),
            equilibrium=equilibrium,
            boundary_terms=dict(sorted(boundary_terms.items()))
        )

    @staticmethod
    def _upward_escape(tree: Tree, table: EscapeTable, node_id: int) -> float:
        """
        The probability that a walk started at the parent of 'node_id' never hits 'node_id'.
        """

        chain = []
        current = node_id
        while tree.parent[current] >= 0:
            chain.append(current)
            current = int(tree.parent[current])

        escape_from_above = 0.0
        for below in reversed(chain):
            above = int(tree.parent[below])
            siblings = [float(table.beta[sibling]) for sibling in tree.children(above) if sibling != below]
            a = math.fsum(siblings + [escape_from_above])
            escape_from_above = a / (1.0 + a)

        return escape_from_above

    @staticmethod
    def escape_mc(tree: Tree, node_id: int, max_steps: int = HarmonicConstants.DEFAULT_WALK_MAX_STEPS, n_walks: int = HarmonicConstants.DEFAULT_WALK_COUNT, seed: Union[int, np.random.Generator] = 0) -> EscapeEstimate:
        """
        Brute-force estimate of beta(node_id): simple random walks start at the node, a step to the node's parent (or
        to a virtual vertex above the root) ends the walk as a failure and reaching a frontier vertex ends it as an
        escape.

        :raises InvalidParameterExc
        :raises InvalidTreeExc
        """

        _ValidationHelpers.validate_count(max_steps, "max_steps")
        _ValidationHelpers.validate_count(n_walks, "n_walks")
        if isinstance(node_id, bool) or not isinstance(node_id, (int, np.integer)) or not (0 <= node_id < tree.n_nodes):
            raise InvalidTreeExc(f"The tree has no node with the id {node_id!r}")

        rng = seed if isinstance(seed, np.random.Generator) else RandomStreams.derive(seed, StreamPurpose.WALK, int(node_id))

        position = np.full(n_walks, node_id, dtype=np.int64)
        running = np.ones(n_walks, dtype=bool)
        escaped = np.zeros(n_walks, dtype=bool)
        if tree.is_frontier[node_id]:
            escaped[:] = True
            running[:] = False

        steps = 0
        while running.any() and steps < max_steps:
            walkers = np.flatnonzero(running)
            here = position[walkers]

            degree = tree.child_counts[here] + 1
            choice = np.minimum((rng.random(walkers.size) * degree).astype(np.int64), degree - 1)
            going_up = (choice == degree - 1)

            absorbed = going_up & (here == node_id)
            running[walkers[absorbed]] = False

            climbing = going_up & ~absorbed
            position[walkers[climbing]] = tree.parent[here[climbing]]

            descending = ~going_up
            children = tree.child_ids[tree.child_offsets[here[descending]] + choice[descending]]
            position[walkers[descending]] = children

            hit = walkers[descending][tree.is_frontier[children]]
            escaped[hit] = True
            running[hit] = False

            steps += 1

        hits = int(escaped.sum())
        unresolved = int(running.sum())
        if unresolved:
            logger.warning("%d of %d walks from node %d were still running after %d steps", unresolved, n_walks, node_id, max_steps)

        estimate = (hits + 0.5 * unresolved) / n_walks

        return EscapeEstimate(
            estimate=estimate,
            lower=hits / n_walks,
            upper=(hits + unresolved) / n_walks,
            stderr=math.sqrt(estimate * (1.0 - estimate) / n_walks),
            hits=hits,
            unresolved=unresolved,
            n_walks=n_walks
        )

    @staticmethod
    def regular_escape_sequence(d: int, depth: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
        """
        beta and S of a vertex at distance k = 0..depth above the frontier of the complete d-ary tree. The operations
        are the ones beta_table() performs (S accumulated child by child from 0.0), so the values are bit-identical to
        a materialized tree.

        :raises InvalidParameterExc
        """

        _ValidationHelpers.validate_count(d, "d")
        _ValidationHelpers.validate_count(depth, "depth", minimum=0)

        betas = [1.0]
        sums = [math.inf]
        for _ in range(depth):
            s = 0.0
            for _ in range(d):
                s += betas[-1]
            sums.append(s)
            betas.append(s / (1.0 + s))

        return tuple(betas), tuple(sums)

    @classmethod
    def regular_beta_sequence(cls, d: int, depth: int) -> tuple[float, ...]:
        """
        :raises InvalidParameterExc
        """

        return cls.regular_escape_sequence(d, depth)[0]

    @classmethod
    def regular_gamma_chi(cls, d: int, depth: int) -> GammaChi:
        """
        :raises InvalidParameterExc
        """

        _ValidationHelpers.validate_count(depth, "depth")
        chi = cls.regular_escape_sequence(d, depth)[1][depth]

        return GammaChi(gamma=chi / (1.0 + chi), chi=chi)

    @classmethod
    def regular_site_probabilities(cls, d: int, depth: int, u: float) -> np.ndarray:
        """
        p_u of the vertices at depth 0..depth of the complete d-ary tree truncated at 'depth' (1 at the root, 0 at the
        frontier).

        :raises InvalidParameterExc
        """

        u = _ValidationHelpers.validate_level(u, allow_zero=False)
        betas, sums = cls.regular_escape_sequence(d, depth)

        # depth l is at distance depth - l above the frontier
        h = np.array([sums[depth - level] * betas[depth - level] for level in range(depth + 1)], dtype=np.float64)
        h[0] = 0.0

        return np.exp(-u * h)

    @classmethod
    def profile_csv(cls, tree: Tree, u: float) -> str:
        """
        :raises InvalidParameterExc
        """

        table = cls.beta_table(tree)
        profile = cls.h_profile(tree, u, table)

        rows = (
            (node_id, int(tree.depth[node_id]), bool(tree.is_backbone[node_id]), float(table.beta[node_id]), float(table.s[node_id]), float(profile.h[node_id]), float(profile.p[node_id]))
            for node_id in range(tree.n_nodes)
        )

        return OutputFormatting.to_csv(HarmonicConstants.PROFILE_CSV_HEADER, rows)
