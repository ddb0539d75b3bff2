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


from typing import Union
import math
import logging
import numpy as np
from joblib import Parallel, delayed
from .ClusterOutcome import ClusterOutcome
from .SurvivalEstimate import SurvivalEstimate
from .ClusterConstants import ClusterConstants
from ._ClusterContext import _ClusterContext
from ..offspring.OffspringDistribution import OffspringDistribution
from ..treegen.Tree import Tree
from ..treegen.TreeSampler import TreeSampler
from ..harmonic.HarmonicMeasures import HarmonicMeasures
from ..etc.StreamPurpose import StreamPurpose
from ..etc.RandomStreams import RandomStreams
from ..etc.OutputFormatting import OutputFormatting
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..etc._ValidationHelpers import _ValidationHelpers
from ..exc.InvalidParameterExc import InvalidParameterExc


__all__ = "ClusterSimulator",


logger = logging.getLogger(__name__)


# The vacant cluster of the root is an inhomogeneous site percolation: the root is vacant with probability
#  exp(-u * chi), and below an open vertex every backbone child z opens independently with probability p_u(z). Bushes
#  never stop the cluster, so only backbone vertices are explored, and only below open ones.
class ClusterSimulator(UninstantiableClassMixin):
    @classmethod
    def simulate_cluster(cls, tree: Tree, u: float, seed: Union[int, np.random.Generator]) -> ClusterOutcome:
        """
        One uniform is drawn per backbone vertex, in (depth, id) order with the root first, and a vertex is open iff its
        uniform is below its opening probability; the same seed therefore couples simulations across levels u and
        between a conditioned tree and its backbone restriction.

        :raises InvalidParameterExc
        :raises InvalidTreeExc
        """

        return cls._simulate_prepared(_ClusterContext.prepare(tree, u), RandomStreams.as_generator(seed))

    @staticmethod
    def _simulate_prepared(context: _ClusterContext, rng: np.random.Generator) -> ClusterOutcome:
        tree = context.tree
        uniforms = rng.random(tree.n_backbone)

        if uniforms[0] >= context.root_vacancy_probability:
            return ClusterOutcome(root_vacant=False, depth_reached=-1, backbone_cluster_size=0, cluster_size=0)

        open_level = np.zeros(1, dtype=np.int64)
        depth_reached = 0
        backbone_size = 1
        size = 1 + int(context.bush_weight[0])

        while True:
            children = context.backbone_children_of(open_level)
            if children.size == 0:
                break

            open_level = children[uniforms[tree.backbone_rank[children]] < context.open_probability[children]]
            if open_level.size == 0:
                break

            depth_reached += 1
            backbone_size += open_level.size
            size += open_level.size + int(context.bush_weight[open_level].sum())

        return ClusterOutcome(root_vacant=True, depth_reached=depth_reached, backbone_cluster_size=backbone_size, cluster_size=size)

    @classmethod
    def annealed_replicas(cls, dist: OffspringDistribution, u: float, n_replicas: int, depth: int, seed: int, threads: int = 1) -> list[ClusterOutcome]:
        """
        One backbone tree (stream (seed, tree, i)) and one cluster on it (stream (seed, cluster, i)) per replica i.
        For a degenerate backbone law the tree is the complete d-ary tree and the open vertices of every level are
        drawn as binomial counts from a single stream (seed, cluster, 0), which has the same law.

        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        u = _ValidationHelpers.validate_level(u, allow_zero=False)
        _ValidationHelpers.validate_count(n_replicas, "n_replicas")
        _ValidationHelpers.validate_count(depth, "depth")
        _ValidationHelpers.validate_seed(seed)
        _ValidationHelpers.validate_count(threads, "threads")

        regular_degree = dist.backbone_view.regular_degree
        if regular_degree is not None:
            outcomes = cls._regular_replicas(regular_degree, u, n_replicas, depth, seed)
        else:
            block_size = ClusterConstants.REPLICA_BLOCK_SIZE
            blocks = Parallel(n_jobs=threads)(
                delayed(cls._replica_block)(dist, u, depth, seed, start, min(start + block_size, n_replicas))
                for start in range(0, n_replicas, block_size)
            )
            outcomes = [outcome for block in blocks for outcome in block]

        logger.info("Simulated %d vacant clusters at u=%g on depth-%d trees", n_replicas, u, depth)
        return outcomes

    @classmethod
    def _replica_block(cls, dist: OffspringDistribution, u: float, depth: int, seed: int, start: int, stop: int) -> list[ClusterOutcome]:
        outcomes = []
        for index in range(start, stop):
            tree = TreeSampler.sample_backbone(dist.backbone_view, depth, RandomStreams.derive(seed, StreamPurpose.TREE, index))
            outcomes.append(cls._simulate_prepared(_ClusterContext.prepare(tree, u), RandomStreams.derive(seed, StreamPurpose.CLUSTER, index)))

        return outcomes

    @staticmethod
    def _regular_replicas(d: int, u: float, n_replicas: int, depth: int, seed: int) -> list[ClusterOutcome]:
        rng = RandomStreams.derive(seed, StreamPurpose.CLUSTER, 0)

        chi = HarmonicMeasures.regular_gamma_chi(d, depth).chi
        open_probability = HarmonicMeasures.regular_site_probabilities(d, depth, u)

        open_counts = (rng.random(n_replicas) < math.exp(-u * chi)).astype(np.int64)
        root_vacant = open_counts > 0
        depth_reached = np.where(root_vacant, 0, -1)
        sizes = open_counts.copy()

        for level in range(1, depth + 1):
            open_counts = rng.binomial(d * open_counts, open_probability[level])
            depth_reached[open_counts > 0] = level
            sizes += open_counts

        return [
            ClusterOutcome(root_vacant=bool(vacant), depth_reached=int(reached), backbone_cluster_size=int(size), cluster_size=int(size))
            for vacant, reached, size in zip(root_vacant, depth_reached, sizes)
        ]

    @classmethod
    def annealed_survival_profile(cls, dist: OffspringDistribution, u: float, n: int, n_replicas: int, depth: int, seed: int, threads: int = 1) -> tuple[SurvivalEstimate, ...]:
        """
        r^_k for k = 0..n, all from the same replicas, hence exactly non-increasing in k. Frontier vertices are never
        open, so the trees must be deeper than 'n'.

        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        _ValidationHelpers.validate_count(n, "n", minimum=0)
        if depth <= n:
            raise InvalidParameterExc(f"Survival to depth {n} needs trees of depth at least {n + 1}, got {depth}")

        outcomes = cls.annealed_replicas(dist, u, n_replicas, depth, seed, threads)
        depth_reached = np.fromiter((outcome.depth_reached for outcome in outcomes), dtype=np.int64, count=n_replicas)

        return tuple(cls._binomial_estimate(depth_reached >= k, float(u), k, depth, seed) for k in range(n + 1))

    @classmethod
    def annealed_survival(cls, dist: OffspringDistribution, u: float, n: int, n_replicas: int, depth: int, seed: int, threads: int = 1) -> SurvivalEstimate:
        """
        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        return cls.annealed_survival_profile(dist, u, n, n_replicas, depth, seed, threads)[n]

    @classmethod
    def quenched_survival(cls, tree: Tree, u: float, n: int, n_replicas: int, seed: int) -> SurvivalEstimate:
        """
        The frequency of {depth_reached >= n} over independent clusters on the same tree (stream (seed, cluster, i)
        for replica i).

        :raises InvalidParameterExc
        :raises InvalidTreeExc
        """

        _ValidationHelpers.validate_count(n, "n", minimum=0)
        _ValidationHelpers.validate_count(n_replicas, "n_replicas")
        _ValidationHelpers.validate_seed(seed)
        if tree.truncation_depth <= n:
            raise InvalidParameterExc(f"Survival to depth {n} needs a tree of depth at least {n + 1}, got {tree.truncation_depth}")

        context = _ClusterContext.prepare(tree, u)
        survived = np.fromiter(
            (cls._simulate_prepared(context, RandomStreams.derive(seed, StreamPurpose.CLUSTER, index)).depth_reached >= n for index in range(n_replicas)),
            dtype=bool,
            count=n_replicas
        )

        return cls._binomial_estimate(survived, float(u), n, tree.truncation_depth, seed)

    @staticmethod
    def _binomial_estimate(events: np.ndarray, u: float, n: int, depth: int, seed: int) -> SurvivalEstimate:
        replicas = events.size
        r_hat = int(events.sum()) / replicas

        return SurvivalEstimate(u=u, n=n, r_hat=r_hat, stderr=math.sqrt(r_hat * (1.0 - r_hat) / replicas), replicas=replicas, depth=depth, seed=seed)

    @staticmethod
    def survival_csv(estimates: list[SurvivalEstimate]) -> str:
        return OutputFormatting.to_csv(ClusterConstants.SURVIVAL_CSV_HEADER, (estimate.csv_row() for estimate in estimates))

    @staticmethod
    def replica_csv(outcomes: list[ClusterOutcome]) -> str:
        rows = ((index, outcome.root_vacant, outcome.depth_reached, outcome.cluster_size) for index, outcome in enumerate(outcomes))
        return OutputFormatting.to_csv(ClusterConstants.REPLICA_CSV_HEADER, rows)
