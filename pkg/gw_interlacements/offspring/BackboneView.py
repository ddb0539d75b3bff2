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
from typing import Optional
from dataclasses import dataclass
from functools import cached_property
import math
import numpy as np
import scipy.stats
from ..exc.InvalidParameterExc import InvalidParameterExc


__all__ = "BackboneView",


@dataclass(frozen=True, eq=False)
class BackboneView:
    """
    Harris decomposition of a supercritical offspring law: the surviving (backbone) vertices form a Galton-Watson tree
    with pmf rho~, every backbone vertex with k backbone children additionally carries m finite "bush" children, and
    every bush is a Galton-Watson tree with the extinction-conditioned pmf rho^_k = rho_k q^(k-1).

    'rho_tilde' is indexed by the backbone child count k (entry 0 is always zero); 'joint[k, m]' is the probability of
    k backbone and m bush children; 'extinct_pmf' is empty when q = 0.
    """

    rho_tilde: np.ndarray
    joint: np.ndarray
    extinct_pmf: np.ndarray
    q: float

    @classmethod
    def from_offspring_pmf(cls, pmf: np.ndarray, q: float) -> BackboneView:  # DP: Factory
        pmf = np.asarray(pmf, dtype=np.float64)
        max_offspring = pmf.size - 1
        litter = np.arange(max_offspring + 1)

        # thinning[j, k] = C(j, k) (1 - q)^k q^(j - k): k survivors out of a litter of j
        thinning = scipy.stats.binom.pmf(litter[np.newaxis, :], litter[:, np.newaxis], 1.0 - q)

        joint = np.zeros((max_offspring + 1, max_offspring + 1), dtype=np.float64)
        litter_grid, survivor_grid = np.meshgrid(litter, litter, indexing="ij")
        mask = (survivor_grid >= 1) & (survivor_grid <= litter_grid)
        joint[survivor_grid[mask], (litter_grid - survivor_grid)[mask]] = pmf[litter_grid[mask]] * thinning[mask] / (1.0 - q)

        total = math.fsum(joint.ravel())
        joint /= total
        rho_tilde = joint.sum(axis=1)
        rho_tilde[0] = 0.0

        if q > 0.0:
            extinct_pmf = pmf * np.power(q, litter - 1.0)
            extinct_pmf /= math.fsum(extinct_pmf)
        else:
            extinct_pmf = np.zeros(0, dtype=np.float64)

        for array in (rho_tilde, joint, extinct_pmf):
            array.setflags(write=False)

        return cls(rho_tilde=rho_tilde, joint=joint, extinct_pmf=extinct_pmf, q=float(q))

    @property
    def max_offspring(self) -> int:
        return self.rho_tilde.size - 1

    @cached_property
    def mean(self) -> float:
        return math.fsum(k * p for k, p in enumerate(self.rho_tilde))

    @cached_property
    def regular_degree(self) -> Optional[int]:
        """
        The common backbone child count when rho~ is concentrated on a single value (the backbone is then a
        deterministic regular tree), None otherwise.
        """

        support = np.flatnonzero(self.rho_tilde > 0.0)
        if (support.size == 1) and (self.rho_tilde[support[0]] == 1.0):
            return int(support[0])

        return None

    @cached_property
    def rho_tilde_cdf(self) -> np.ndarray:
        return self._cdf(self.rho_tilde)

    @cached_property
    def joint_pairs(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        The (k, m) pairs with positive probability in row-major order, together with their cumulative probabilities.
        """

        backbone_counts, bush_counts = np.nonzero(self.joint > 0.0)
        cdf = self._cdf(self.joint[backbone_counts, bush_counts])
        return backbone_counts.astype(np.int64), bush_counts.astype(np.int64), cdf

    @cached_property
    def extinct_cdf(self) -> np.ndarray:
        return self._cdf(self.extinct_pmf)

    def bush_count_distribution(self, k: int) -> np.ndarray:
        """
        P(m | k) for m = 0..K-k, i.e. the number of finite children of a backbone vertex with k backbone children.

        :raises InvalidParameterExc
        """

        if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
            raise InvalidParameterExc(f"The backbone child count must be an integer, got {k!r}")
        if (k < 1) or (k > self.max_offspring) or (self.rho_tilde[k] == 0.0):
            raise InvalidParameterExc(f"A backbone vertex cannot have {k} backbone children under this offspring law!")

        row = self.joint[k, :self.max_offspring - k + 1]
        return row / math.fsum(row)

    @staticmethod
    def _cdf(pmf: np.ndarray) -> np.ndarray:
        cdf = np.cumsum(pmf)
        if cdf.size:
            cdf[-1] = 1.0
        cdf.setflags(write=False)
        return cdf
