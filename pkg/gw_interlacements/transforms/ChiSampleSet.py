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
from typing import Iterable, Union
from dataclasses import dataclass
from functools import cached_property
import os
import struct
import numpy as np
from ..GwInterlacementsConstants import GwInterlacementsConstants
from ..offspring.OffspringDistribution import OffspringDistribution
from ..etc._ValidationHelpers import _ValidationHelpers
from ..exc.InvalidParameterExc import InvalidParameterExc
from ..exc.InvalidSampleSetFileExc import InvalidSampleSetFileExc


__all__ = "ChiSampleSet",


@dataclass(frozen=True, eq=False)
class ChiSampleSet:
    """
    Per-tree chi samples (capacities of the root of independent backbone trees truncated at 'depth'), the common random
    numbers every Laplace transform estimate is computed from.

    The flat binary form is a little-endian header (magic, format version, n, depth, master seed, 32-byte distribution
    digest) followed by the n chi values as 64-bit floats.
    """

    _HEADER_FORMAT = "<4sHQIQ32s"

    chi_values: np.ndarray
    depth: int
    master_seed: int
    dist_fingerprint: bytes

    def __post_init__(self):
        """
        :raises InvalidParameterExc
        """

        if self.chi_values.ndim != 1 or self.chi_values.size == 0:
            raise InvalidParameterExc("A sample set must hold at least one chi value!")
        if (not np.all(np.isfinite(self.chi_values))) or np.any(self.chi_values < 0.0):
            raise InvalidParameterExc("Chi values must be finite and non-negative!")

        _ValidationHelpers.validate_count(self.depth, "depth")
        _ValidationHelpers.validate_seed(self.master_seed)

        if len(self.dist_fingerprint) != 32:
            raise InvalidParameterExc(f"The distribution fingerprint must be 32 bytes long, got {len(self.dist_fingerprint)}")

    @classmethod
    def from_values(cls, chi_values: Iterable[float], depth: int, master_seed: int, dist_fingerprint: bytes) -> ChiSampleSet:  # DP: Factory
        """
        :raises InvalidParameterExc
        """

        values = np.array(list(chi_values) if not isinstance(chi_values, np.ndarray) else chi_values, dtype=np.float64)
        values.setflags(write=False)

        return cls(chi_values=values, depth=depth, master_seed=master_seed, dist_fingerprint=bytes(dist_fingerprint))

    @property
    def n(self) -> int:
        return self.chi_values.size

    @cached_property
    def gamma_values(self) -> np.ndarray:
        gamma = self.chi_values / (1.0 + self.chi_values)
        gamma.setflags(write=False)
        return gamma

    def check_distribution(self, dist: OffspringDistribution) -> None:
        """
        :raises InvalidParameterExc
        """

        if self.dist_fingerprint != dist.fingerprint():
            raise InvalidParameterExc(f"The sample set was not generated from the distribution {dist.to_spec()!r}")

    def pooled(self, *others: ChiSampleSet) -> ChiSampleSet:
        """
        All the samples of this set followed by the samples of 'others', in order; the sets must come from the same
        distribution and depth. The pooled set keeps this set's master seed.

        :raises InvalidParameterExc
        """

        for other in others:
            if (other.depth != self.depth) or (other.dist_fingerprint != self.dist_fingerprint):
                raise InvalidParameterExc("Only sample sets of the same distribution and depth can be pooled!")

        return ChiSampleSet.from_values(
            np.concatenate([self.chi_values] + [other.chi_values for other in others]),
            depth=self.depth,
            master_seed=self.master_seed,
            dist_fingerprint=self.dist_fingerprint
        )

    @classmethod
    def from_bytes(cls, data: bytes) -> ChiSampleSet:  # DP: Factory
        """
        :raises InvalidSampleSetFileExc
        """

        header_size = struct.calcsize(cls._HEADER_FORMAT)
        if len(data) < header_size:
            raise InvalidSampleSetFileExc(f"A sample set file must be at least {header_size} bytes long, got {len(data)}")

        magic, version, n, depth, master_seed, fingerprint = struct.unpack(cls._HEADER_FORMAT, data[:header_size])

        if magic != GwInterlacementsConstants.SAMPLE_SET_MAGIC:
            raise InvalidSampleSetFileExc(f"The sample set magic must be {GwInterlacementsConstants.SAMPLE_SET_MAGIC!r}, got {magic!r}!")
        if version != GwInterlacementsConstants.SAMPLE_SET_FORMAT_VERSION:
            raise InvalidSampleSetFileExc(f"Unsupported sample set format version {version} (expected {GwInterlacementsConstants.SAMPLE_SET_FORMAT_VERSION})!")

        expected_size = header_size + 8 * n
        if len(data) != expected_size:
            raise InvalidSampleSetFileExc(f"A sample set of {n} values must be {expected_size} bytes long, got {len(data)}")

        try:
            return cls.from_values(np.frombuffer(data, dtype="<f8", count=n, offset=header_size).astype(np.float64), depth=depth, master_seed=master_seed, dist_fingerprint=fingerprint)
        except InvalidParameterExc as e:
            raise InvalidSampleSetFileExc(f"The sample set file holds invalid data: {e}")

    def to_bytes(self) -> bytes:
        header = struct.pack(
            self._HEADER_FORMAT,
            GwInterlacementsConstants.SAMPLE_SET_MAGIC,
            GwInterlacementsConstants.SAMPLE_SET_FORMAT_VERSION,
            self.n,
            self.depth,
            self.master_seed,
            self.dist_fingerprint
        )

        return header + self.chi_values.astype("<f8").tobytes()

    @classmethod
    def from_file(cls, path: Union[str, os.PathLike]) -> ChiSampleSet:  # DP: Factory
        """
        :raises InvalidSampleSetFileExc
        """

        try:
            with open(path, "rb") as file:
                return cls.from_bytes(file.read())
        except OSError as e:
            raise InvalidSampleSetFileExc(f"Cannot read the sample set file {os.fspath(path)!r}: {e}")

    def to_file(self, path: Union[str, os.PathLike]) -> None:
        with open(path, "wb") as file:
            file.write(self.to_bytes())
