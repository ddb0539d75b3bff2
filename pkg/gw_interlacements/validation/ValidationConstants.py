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


from typing import final, Final
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin


__all__ = "ValidationConstants",


@final
class ValidationConstants(UninstantiableClassMixin):
    # (quick, full) sizes
    SAMPLES: Final[tuple[int, int]] = (2_000, 100_000)
    DEPTH: Final[tuple[int, int]] = (16, 30)
    REPLICAS: Final[tuple[int, int]] = (4_000, 100_000)
    WALKS: Final[tuple[int, int]] = (20_000, 100_000)
    WALK_TREE_DEPTH: Final[tuple[int, int]] = (10, 20)
    PROPERTY_TREES: Final[tuple[int, int]] = (5, 20)
    SEED_CHECK_SAMPLES: Final[tuple[int, int]] = (4_000, 20_000)
    SEED_CHECK_DEPTH: Final[tuple[int, int]] = (12, 16)

    PROPERTY_TREE_DEPTH: Final[int] = 8
    REGULAR_IDENTITY_DEPTH: Final[int] = 40
    MAX_Z_SCORE: Final[float] = 4.0
    REGULAR_CRITICAL_U_TOLERANCE: Final[float] = 1e-3
    CLOSED_FORM_TOLERANCE: Final[float] = 1e-6
    G_IDENTITY_TOLERANCE: Final[float] = 1e-9
    CONCAVITY_TOLERANCE: Final[float] = 1e-12
    LAPLACE_GRID: Final[tuple[float, ...]] = (0.25, 0.5, 1.0, 2.0)
    SURVIVAL_CHECK_DEPTHS: Final[tuple[int, ...]] = (0, 5, 10, 30)
    SEED_CHECK_REPLICATES: Final[int] = 8
    SEED_CHECK_TOL: Final[float] = 1e-5
    MAX_SEED_SPREAD: Final[float] = 0.05
