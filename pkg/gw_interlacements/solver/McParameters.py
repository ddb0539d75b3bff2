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


from dataclasses import dataclass
from .SolverConstants import SolverConstants
from ..transforms.TransformsConstants import TransformsConstants
from ..etc._ValidationHelpers import _ValidationHelpers


__all__ = "McParameters",


@dataclass(frozen=True)
class McParameters:
    n: int = TransformsConstants.DEFAULT_SAMPLES
    depth: int = TransformsConstants.DEFAULT_DEPTH
    seed: int = 0
    replicates: int = SolverConstants.DEFAULT_REPLICATES
    threads: int = 1

    def __post_init__(self):
        """
        :raises InvalidParameterExc
        """

        _ValidationHelpers.validate_count(self.n, "n")
        _ValidationHelpers.validate_count(self.depth, "depth")
        _ValidationHelpers.validate_seed(self.seed)
        _ValidationHelpers.validate_count(self.replicates, "replicates")
        _ValidationHelpers.validate_seed(self.seed + self.replicates - 1)
        _ValidationHelpers.validate_count(self.threads, "threads")

    @property
    def seeds(self) -> tuple[int, ...]:
        return tuple(self.seed + replicate for replicate in range(self.replicates))
