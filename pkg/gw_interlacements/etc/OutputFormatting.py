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


from typing import Any, Iterable, Sequence
import io
import csv
import json
import math
from .UninstantiableClassMixin import UninstantiableClassMixin
from ..GwInterlacementsConstants import GwInterlacementsConstants


__all__ = "OutputFormatting",


# This is not really a class as per OOP definition, but rather a collection of independent functions.
class OutputFormatting(UninstantiableClassMixin):
    @staticmethod
    def format_float(value: float) -> str:
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"

        return f"{value:.{GwInterlacementsConstants.OUTPUT_SIGNIFICANT_DIGITS}g}"

    @classmethod
    def format_cell(cls, value: Any) -> str:
        if isinstance(value, bool):
            return str(int(value))
        if isinstance(value, int):
            return str(value)
        if isinstance(value, float):
            return cls.format_float(value)

        return str(value)

    @classmethod
    def to_csv(cls, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([cls.format_cell(value) for value in row])

        return buffer.getvalue()

    @classmethod
    def to_json(cls, document: Any) -> str:
        """
        Floats are rounded to the same number of significant digits as in CSV output; non-finite ones are written as
        NaN/Infinity.
        """

        return json.dumps(cls._rounded(document), indent=2) + "\n"

    @classmethod
    def _rounded(cls, value: Any) -> Any:
        if isinstance(value, bool):
            return value
        if isinstance(value, float):
            return float(cls.format_float(value))
        if isinstance(value, dict):
            return {key: cls._rounded(item) for key, item in value.items()}
        if isinstance(value, (list, tuple)):
            return [cls._rounded(item) for item in value]

        return value
