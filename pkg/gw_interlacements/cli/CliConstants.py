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


__all__ = "CliConstants",


@final
class CliConstants(UninstantiableClassMixin):
    PROGRAM_NAME: Final[str] = "gw-interlacements"

    DEFAULT_DIST_SPEC: Final[str] = '{"family": "pmf", "p": [0.25, 0, 0.75]}'
    DEFAULT_U_GRID: Final[str] = "0.25:3:0.25"
    DEFAULT_SURVIVAL_LEVEL: Final[int] = 30
    DEFAULT_REPLICAS: Final[int] = 100_000
    # survival to level n is simulated on trees n + this deep unless --depth says otherwise
    SURVIVAL_DEPTH_MARGIN: Final[int] = 30

    EXIT_OK: Final[int] = 0
    EXIT_INVALID_PARAMETER: Final[int] = 2
    EXIT_NUMERICAL_FAILURE: Final[int] = 3
    EXIT_VALIDATION_FAILURE: Final[int] = 4

    LOG_FORMAT: Final[str] = "%(asctime)s %(levelname)s %(name)s: %(message)s"
