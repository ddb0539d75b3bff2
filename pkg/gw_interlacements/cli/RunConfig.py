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
from typing import Optional
from dataclasses import dataclass
import argparse
import math
from .CliConstants import CliConstants
from .OutputFormat import OutputFormat
from .TreeFormat import TreeFormat
from .TreeKind import TreeKind
from ..offspring.OffspringDistribution import OffspringDistribution
from ..transforms.TransformsConstants import TransformsConstants
from ..solver.SolverConstants import SolverConstants
from ..etc._ValidationHelpers import _ValidationHelpers
from ..exc.InvalidParameterExc import InvalidParameterExc
from ..exc.InvalidDistributionExc import InvalidDistributionExc


__all__ = "RunConfig",


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command depends on; a command run twice with equal configurations produces identical output.
    'depth' is None when it was not given on the command line (see resolved_depth).
    """

    command: str
    dist: OffspringDistribution
    depth: Optional[int] = None
    samples: int = TransformsConstants.DEFAULT_SAMPLES
    seed: int = 0
    threads: int = 1
    tol: float = SolverConstants.DEFAULT_TOL
    u_values: tuple[float, ...] = ()
    n: int = CliConstants.DEFAULT_SURVIVAL_LEVEL
    replicates: int = SolverConstants.DEFAULT_REPLICATES
    replicas: int = CliConstants.DEFAULT_REPLICAS
    quenched: bool = False
    output_path: Optional[str] = None
    output_format: OutputFormat = OutputFormat.JSON
    tree_kind: TreeKind = TreeKind.CONDITIONED
    tree_format: TreeFormat = TreeFormat.COMPACT
    quick: bool = False
    save_samples: Optional[str] = None
    load_samples: Optional[str] = None
    dump_replicas: Optional[str] = None

    def __post_init__(self):
        """
        :raises InvalidParameterExc
        """

        if self.depth is not None:
            _ValidationHelpers.validate_count(self.depth, "depth")

        _ValidationHelpers.validate_count(self.samples, "samples")
        _ValidationHelpers.validate_seed(self.seed)
        _ValidationHelpers.validate_count(self.threads, "threads")
        _ValidationHelpers.validate_tolerance(self.tol)
        _ValidationHelpers.validate_count(self.n, "n", minimum=0)
        _ValidationHelpers.validate_count(self.replicates, "replicates")
        _ValidationHelpers.validate_count(self.replicas, "replicas")

        for u in self.u_values:
            _ValidationHelpers.validate_level(u, allow_zero=True)

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> RunConfig:  # DP: Factory
        """
        :raises InvalidParameterExc
        """

        u_values: tuple[float, ...] = ()
        if getattr(namespace, "u", None):
            u_values = tuple(float(u) for u in namespace.u)
        elif getattr(namespace, "u_grid", None):
            u_values = cls.parse_u_grid(namespace.u_grid)

        return cls(
            command=namespace.command,
            dist=cls.load_distribution(namespace.dist),
            depth=namespace.depth,
            samples=namespace.samples,
            seed=namespace.seed,
            threads=namespace.threads,
            tol=getattr(namespace, "tol", SolverConstants.DEFAULT_TOL),
            u_values=u_values,
            n=getattr(namespace, "n", CliConstants.DEFAULT_SURVIVAL_LEVEL),
            replicates=getattr(namespace, "replicates", SolverConstants.DEFAULT_REPLICATES),
            replicas=getattr(namespace, "replicas", CliConstants.DEFAULT_REPLICAS),
            quenched=getattr(namespace, "quenched", False),
            output_path=namespace.out,
            output_format=OutputFormat(namespace.format),
            tree_kind=TreeKind(getattr(namespace, "tree_kind", TreeKind.CONDITIONED.value)),
            tree_format=TreeFormat(getattr(namespace, "tree_format", TreeFormat.COMPACT.value)),
            quick=getattr(namespace, "quick", False),
            save_samples=getattr(namespace, "save_samples", None),
            load_samples=getattr(namespace, "load_samples", None),
            dump_replicas=getattr(namespace, "dump_replicas", None)
        )

    @staticmethod
    def load_distribution(text: str) -> OffspringDistribution:
        """
        'text' is either a JSON distribution spec or '@' followed by the path of a file holding one.

        :raises InvalidDistributionExc
        """

        if text.startswith("@"):
            try:
                with open(text[1:], "r", encoding="utf-8") as file:
                    text = file.read()
            except OSError as e:
                raise InvalidDistributionExc(f"Cannot read the distribution spec file {text[1:]!r}: {e}")

        return OffspringDistribution.from_json(text)

    @staticmethod
    def parse_u_grid(text: str) -> tuple[float, ...]:
        """
        "start:stop:step" stands for start, start + step, ... up to (and excluding) stop + step / 2, so a stop that lies
        on the grid is included despite rounding.

        :raises InvalidParameterExc
        """

        parts = text.split(":")
        if len(parts) != 3:
            raise InvalidParameterExc(f"A u-grid must have the form 'start:stop:step', got {text!r}")

        try:
            start, stop, step = (float(part) for part in parts)
        except ValueError:
            raise InvalidParameterExc(f"The bounds and step of a u-grid must be numbers, got {text!r}")

        if not all(math.isfinite(value) for value in (start, stop, step)):
            raise InvalidParameterExc(f"The bounds and step of a u-grid must be finite, got {text!r}")
        if (start < 0.0) or (stop < start) or (step <= 0.0):
            raise InvalidParameterExc(f"A u-grid needs 0 <= start <= stop and step > 0, got {text!r}")

        grid = []
        while start + len(grid) * step < stop + 0.5 * step:
            grid.append(start + len(grid) * step)

        return tuple(grid)

    @property
    def resolved_depth(self) -> int:
        if self.depth is not None:
            return self.depth
        if self.command == "survival":
            return self.n + CliConstants.SURVIVAL_DEPTH_MARGIN

        return TransformsConstants.DEFAULT_DEPTH

    def levels(self, default_grid: Optional[str] = None, allow_zero: bool = False) -> tuple[float, ...]:
        """
        :raises InvalidParameterExc
        """

        u_values = self.u_values
        if (not u_values) and (default_grid is not None):
            u_values = self.parse_u_grid(default_grid)

        if not u_values:
            raise InvalidParameterExc(f"The '{self.command}' command needs at least one level (--u or --u-grid)!")
        if (not allow_zero) and any(u == 0.0 for u in u_values):
            raise InvalidParameterExc(f"The '{self.command}' command needs positive levels, got {list(u_values)}")

        return u_values
