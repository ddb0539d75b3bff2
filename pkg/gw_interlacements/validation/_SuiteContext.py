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
from functools import cached_property
from .ValidationConstants import ValidationConstants
from ..offspring.OffspringDistribution import OffspringDistribution
from ..transforms.ChiSampleSet import ChiSampleSet
from ..transforms.LaplaceTransforms import LaplaceTransforms


# Shared by the checks of one suite run, so the reference sample set is generated once.
@dataclass(frozen=True, eq=False)
class _SuiteContext:
    quick: bool
    seed: int
    threads: int

    def size(self, quick_and_full: tuple[int, int]) -> int:
        return quick_and_full[0] if self.quick else quick_and_full[1]

    @cached_property
    def reference_distribution(self) -> OffspringDistribution:
        return OffspringDistribution.explicit_pmf((0.25, 0.0, 0.75))

    @cached_property
    def reference_samples(self) -> ChiSampleSet:
        return LaplaceTransforms.sample_chi(
            self.reference_distribution,
            n=self.size(ValidationConstants.SAMPLES),
            depth=self.size(ValidationConstants.DEPTH),
            seed=self.seed,
            threads=self.threads
        )
