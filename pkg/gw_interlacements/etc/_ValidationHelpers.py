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
import numpy as np
from .UninstantiableClassMixin import UninstantiableClassMixin
from ..exc.InvalidParameterExc import InvalidParameterExc


# This is not really a class as per OOP definition, but rather a collection of independent functions.
class _ValidationHelpers(UninstantiableClassMixin):
    @staticmethod
    def validate_seed(seed: int) -> None:
        """
        :raises InvalidParameterExc
        """

        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
            raise InvalidParameterExc(f"'seed' must be an integer, got {seed!r}")

        if (seed < 0) or (seed > 18_446_744_073_709_551_615):  # 'seed' is uint64_t
            raise InvalidParameterExc(f"'seed' is out of range (0 - 18_446_744_073_709_551_615): {seed}")

    @staticmethod
    def validate_count(value: int, name: str, minimum: int = 1) -> None:
        """
        :raises InvalidParameterExc
        """

        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise InvalidParameterExc(f"'{name}' must be an integer, got {value!r}")

        if value < minimum:
            raise InvalidParameterExc(f"'{name}' must be at least {minimum}, got {value}")

    @staticmethod
    def validate_level(u: float, allow_zero: bool) -> float:
        """
        :raises InvalidParameterExc
        """

        u = float(u)
        if not math.isfinite(u):
            raise InvalidParameterExc(f"The level 'u' must be finite, got {u}")

        if allow_zero and u < 0.0:
            raise InvalidParameterExc(f"The level 'u' must be non-negative, got {u}")
        if (not allow_zero) and u <= 0.0:
            raise InvalidParameterExc(f"The level 'u' must be positive, got {u}")

        return u

    @staticmethod
    def validate_tolerance(tol: float) -> float:
        """
        :raises InvalidParameterExc
        """

        tol = float(tol)
        if (not math.isfinite(tol)) or tol <= 0.0:
            raise InvalidParameterExc(f"The tolerance must be positive and finite, got {tol}")

        return tol

    @staticmethod
    def validate_unit_interval(s: Union[float, np.ndarray], name: str) -> Union[float, np.ndarray]:
        """
        :raises InvalidParameterExc
        """

        s_array = np.asarray(s, dtype=np.float64)
        if s_array.size and ((not np.all(s_array >= 0.0)) or (not np.all(s_array <= 1.0))):
            raise InvalidParameterExc(f"'{name}' must lie in [0, 1], got {s!r}")

        return s_array
