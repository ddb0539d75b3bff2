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


from typing import Sequence
import math
import numpy as np
import scipy.stats
from .OffspringConstants import OffspringConstants
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..exc.InvalidDistributionExc import InvalidDistributionExc


# This is not really a class as per OOP definition, but rather a collection of independent functions.
# Each builder returns the raw (not yet renormalized) pmf rho_0..rho_K of one offspring family.
class _PmfBuilders(UninstantiableClassMixin):
    @staticmethod
    def deterministic(d: int) -> np.ndarray:
        """
        :raises InvalidDistributionExc
        """

        if isinstance(d, bool) or not isinstance(d, (int, np.integer)) or d < 0:
            raise InvalidDistributionExc(f"A deterministic offspring count must be a non-negative integer, got {d!r}")

        pmf = np.zeros(int(d) + 1, dtype=np.float64)
        pmf[-1] = 1.0
        return pmf

    @staticmethod
    def explicit(probabilities: Sequence[float]) -> np.ndarray:
        """
        :raises InvalidDistributionExc
        """

        try:
            pmf = np.asarray([float(p) for p in probabilities], dtype=np.float64)
        except (TypeError, ValueError):
            raise InvalidDistributionExc(f"An explicit pmf must be a sequence of numbers, got {probabilities!r}")

        if pmf.size == 0:
            raise InvalidDistributionExc("An explicit pmf must have at least one entry!")
        if (not np.all(np.isfinite(pmf))) or np.any(pmf < 0.0):
            raise InvalidDistributionExc(f"An explicit pmf must consist of finite non-negative probabilities, got {probabilities!r}")

        total = math.fsum(pmf)
        if abs(total - 1.0) > OffspringConstants.PMF_SUM_TOLERANCE:
            raise InvalidDistributionExc(f"An explicit pmf must sum to 1 (within {OffspringConstants.PMF_SUM_TOLERANCE}), got {total}")

        return pmf

    @staticmethod
    def binomial(n: int, p: float) -> np.ndarray:
        """
        :raises InvalidDistributionExc
        """

        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
            raise InvalidDistributionExc(f"The binomial 'n' must be a positive integer, got {n!r}")
        if not (0.0 <= float(p) <= 1.0):
            raise InvalidDistributionExc(f"The binomial 'p' must lie in [0, 1], got {p!r}")

        return scipy.stats.binom.pmf(np.arange(n + 1), n, float(p))

    @classmethod
    def geometric(cls, p: float, tail_eps: float) -> np.ndarray:
        """
        :raises InvalidDistributionExc
        """

        if not (0.0 < float(p) <= 1.0):
            raise InvalidDistributionExc(f"The geometric 'p' must lie in (0, 1], got {p!r}")

        # P(k) = p (1 - p)^k on k >= 0, i.e. a negative binomial with a single success
        return cls._truncate_unbounded(scipy.stats.nbinom(1, float(p)), tail_eps)

    @classmethod
    def poisson(cls, lam: float, tail_eps: float) -> np.ndarray:
        """
        :raises InvalidDistributionExc
        """

        if (not math.isfinite(float(lam))) or float(lam) <= 0.0:
            raise InvalidDistributionExc(f"The Poisson 'lambda' must be positive and finite, got {lam!r}")

        return cls._truncate_unbounded(scipy.stats.poisson(float(lam)), tail_eps)

    @staticmethod
    def _truncate_unbounded(frozen_distribution, tail_eps: float) -> np.ndarray:
        """
        :raises InvalidDistributionExc
        """

        if not (0.0 < tail_eps < 1.0):
            raise InvalidDistributionExc(f"'tail_eps' must lie in (0, 1), got {tail_eps!r}")

        support_max = max(int(frozen_distribution.isf(tail_eps)), 0)
        while frozen_distribution.sf(support_max) > tail_eps:
            support_max += 1
            if support_max >= OffspringConstants.MAX_SUPPORT_SIZE:
                raise InvalidDistributionExc(f"Truncating the offspring law at tail mass {tail_eps} needs more than {OffspringConstants.MAX_SUPPORT_SIZE} support points!")

        return frozen_distribution.pmf(np.arange(support_max + 1))
