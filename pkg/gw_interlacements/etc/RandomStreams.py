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
import numpy as np
from .StreamPurpose import StreamPurpose
from ._ValidationHelpers import _ValidationHelpers
from .UninstantiableClassMixin import UninstantiableClassMixin


__all__ = "RandomStreams",


# Every random quantity is drawn from a counter-based Philox stream keyed by (master seed, purpose, index), so the
#  i-th tree (or cluster replica, or walk batch) is the same no matter which worker produced it.
class RandomStreams(UninstantiableClassMixin):
    @staticmethod
    def derive(master_seed: int, purpose: StreamPurpose, index: int) -> np.random.Generator:
        """
        :raises InvalidParameterExc
        """

        _ValidationHelpers.validate_seed(master_seed)
        _ValidationHelpers.validate_count(index, "index", minimum=0)

        seed_sequence = np.random.SeedSequence(entropy=master_seed, spawn_key=(int(purpose), index))
        return np.random.Generator(np.random.Philox(seed_sequence))

    @staticmethod
    def as_generator(seed: Union[int, np.random.Generator]) -> np.random.Generator:
        """
        :raises InvalidParameterExc
        """

        if isinstance(seed, np.random.Generator):
            return seed

        _ValidationHelpers.validate_seed(seed)
        return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy=seed)))
