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


import numpy as np
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin


# The reduction tree depends on the number of values only, never on how they were produced.
class _PairwiseSummation(UninstantiableClassMixin):
    @staticmethod
    def pairwise_sum(values: np.ndarray) -> float:
        partial = np.asarray(values, dtype=np.float64)
        if partial.size == 0:
            return 0.0

        while partial.size > 1:
            if partial.size % 2:
                partial = np.append(partial, 0.0)
            partial = partial[0::2] + partial[1::2]

        return float(partial[0])

    @classmethod
    def mean_and_stderr(cls, values: np.ndarray) -> tuple[float, float]:
        values = np.asarray(values, dtype=np.float64)
        n = values.size

        mean = cls.pairwise_sum(values) / n
        if n == 1:
            return mean, float("inf")

        variance = cls.pairwise_sum((values - mean) ** 2) / (n - 1)
        return mean, float(np.sqrt(variance / n))
