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


from typing import Iterable, Optional
import math
import logging
import numpy as np
from joblib import Parallel, delayed
from .ChiSampleSet import ChiSampleSet
from .MCEstimate import MCEstimate
from .TransformKind import TransformKind
from .ConsistencyGap import ConsistencyGap
from .DepthDoublingGap import DepthDoublingGap
from .TransformsConstants import TransformsConstants
from ._PairwiseSummation import _PairwiseSummation
from ..offspring.OffspringDistribution import OffspringDistribution
from ..treegen.TreeSampler import TreeSampler
from ..treegen.TreegenConstants import TreegenConstants
from ..harmonic.HarmonicMeasures import HarmonicMeasures
from ..etc.StreamPurpose import StreamPurpose
from ..etc.RandomStreams import RandomStreams
from ..etc.OutputFormatting import OutputFormatting
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..etc._ValidationHelpers import _ValidationHelpers


__all__ = "LaplaceTransforms",


logger = logging.getLogger(__name__)


class LaplaceTransforms(UninstantiableClassMixin):
    @classmethod
    def sample_chi(cls, dist: OffspringDistribution, n: int, depth: int, seed: int, threads: int = 1, node_cap: int = TreegenConstants.DEFAULT_NODE_CAP) -> ChiSampleSet:
        """
        The i-th value is chi of a backbone tree grown from the stream (seed, tree, i), so the set does not depend on
        'threads'. Degenerate backbone laws skip the sampling: their tree is the complete d-ary tree, whose chi is
        computed by the scalar recursion with exactly the same floating-point operations.

        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        _ValidationHelpers.validate_count(n, "n")
        _ValidationHelpers.validate_count(depth, "depth")
        _ValidationHelpers.validate_seed(seed)
        _ValidationHelpers.validate_count(threads, "threads")

        regular_degree = dist.backbone_view.regular_degree
        if regular_degree is not None:
            chi_values = np.full(n, HarmonicMeasures.regular_gamma_chi(regular_degree, depth).chi, dtype=np.float64)
        else:
            block_size = TransformsConstants.SAMPLE_BLOCK_SIZE
            blocks = Parallel(n_jobs=threads)(
                delayed(cls._sample_chi_block)(dist, depth, seed, start, min(start + block_size, n), node_cap)
                for start in range(0, n, block_size)
            )
            chi_values = np.concatenate(blocks)

        logger.info("Sampled %d chi values at depth %d (seed %d)", n, depth, seed)

        return ChiSampleSet.from_values(chi_values, depth=depth, master_seed=seed, dist_fingerprint=dist.fingerprint())

    @staticmethod
    def _sample_chi_block(dist: OffspringDistribution, depth: int, seed: int, start: int, stop: int, node_cap: int) -> np.ndarray:
        backbone = dist.backbone_view
        values = np.empty(stop - start, dtype=np.float64)

        for offset, index in enumerate(range(start, stop)):
            tree = TreeSampler.sample_backbone(backbone, depth, RandomStreams.derive(seed, StreamPurpose.TREE, index), node_cap=node_cap)
            values[offset] = HarmonicMeasures.gamma_chi(tree).chi

        return values

    @staticmethod
    def laplace(samples: ChiSampleSet, u: float, which: TransformKind) -> MCEstimate:
        """
        The sample mean of exp(-u * chi) or exp(-u * gamma); at u = 0 it is exactly 1 with zero standard error.

        :raises InvalidParameterExc
        """

        u = _ValidationHelpers.validate_level(u, allow_zero=True)

        values = samples.gamma_values if which is TransformKind.GAMMA else samples.chi_values
        mean, stderr = _PairwiseSummation.mean_and_stderr(np.exp(-u * values))
        if u == 0.0:
            stderr = 0.0

        return MCEstimate(mean=mean, stderr=stderr, n=samples.n, depth=samples.depth)

    @classmethod
    def laplace_grid(cls, samples: ChiSampleSet, us: Iterable[float], which: TransformKind) -> list[MCEstimate]:
        """
        :raises InvalidParameterExc
        """

        return [cls.laplace(samples, u, which) for u in us]

    @staticmethod
    def consistency_gap(samples: ChiSampleSet, dist: OffspringDistribution, u: float) -> ConsistencyGap:
        """
        gap = L^_chi(u) - f~(L^_gamma(u)); its standard error is the one of the per-sample quantity
        exp(-u chi) - f~'(L^_gamma) exp(-u gamma) (delta method).

        :raises InvalidParameterExc
        """

        samples.check_distribution(dist)
        u = _ValidationHelpers.validate_level(u, allow_zero=True)

        chi_terms = np.exp(-u * samples.chi_values)
        gamma_terms = np.exp(-u * samples.gamma_values)

        l_chi = _PairwiseSummation.pairwise_sum(chi_terms) / samples.n
        l_gamma = _PairwiseSummation.pairwise_sum(gamma_terms) / samples.n

        gap = l_chi - dist.backbone_pgf(l_gamma)
        slope = dist.backbone_pgf(l_gamma, order=1)
        _, stderr = _PairwiseSummation.mean_and_stderr(chi_terms - slope * gamma_terms)

        if stderr == 0.0:
            z_score = 0.0 if gap == 0.0 else math.copysign(math.inf, gap)
        else:
            z_score = gap / stderr  # 0 for a single sample, whose stderr is inf

        return ConsistencyGap(u=u, gap=gap, stderr=stderr, z_score=z_score)

    @classmethod
    def depth_doubling_gap(cls, dist: OffspringDistribution, n: int, depth: int, seed: int, u: float, which: TransformKind, threads: int = 1) -> DepthDoublingGap:
        """
        Compares the estimate at 'depth' with the one at twice the depth on the same tree streams; a difference well
        within the combined standard error means the truncation bias is negligible.

        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        shallow = cls.laplace(cls.sample_chi(dist, n, depth, seed, threads), u, which)
        deep = cls.laplace(cls.sample_chi(dist, n, 2 * depth, seed, threads), u, which)
        result = DepthDoublingGap(shallow=shallow, deep=deep, combined_stderr=math.hypot(shallow.stderr, deep.stderr))

        if not result.is_stable():
            logger.warning("Depth doubling %d -> %d moved the estimate at u=%g by %g (combined stderr %g)", depth, 2 * depth, u, result.difference, result.combined_stderr)

        return result

    @classmethod
    def transforms_csv(cls, samples: ChiSampleSet, dist: Optional[OffspringDistribution], us: Iterable[float]) -> str:
        """
        :raises InvalidParameterExc
        """

        rows = []
        for u in us:
            l_gamma = cls.laplace(samples, u, TransformKind.GAMMA)
            l_chi = cls.laplace(samples, u, TransformKind.CHI)
            gap = cls.consistency_gap(samples, dist, u) if dist is not None else None

            rows.append((
                float(u), l_gamma.mean, l_gamma.stderr, l_chi.mean, l_chi.stderr,
                gap.gap if gap is not None else float("nan"),
                gap.z_score if gap is not None else float("nan")
            ))

        return OutputFormatting.to_csv(TransformsConstants.TRANSFORMS_CSV_HEADER, rows)
