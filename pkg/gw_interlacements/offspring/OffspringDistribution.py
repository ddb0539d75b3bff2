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
from typing import Any, Mapping, Sequence, Union
from dataclasses import dataclass, field
from functools import cached_property
import math
import json
import hashlib
import numpy as np
import scipy.optimize
from numpy.polynomial import Polynomial
from .OffspringFamily import OffspringFamily
from .OffspringConstants import OffspringConstants
from .BackboneView import BackboneView
from ._PmfBuilders import _PmfBuilders
from ..etc._ValidationHelpers import _ValidationHelpers
from ..exc.InvalidParameterExc import InvalidParameterExc
from ..exc.InvalidDistributionExc import InvalidDistributionExc
from ..exc.NumericalFailureExc import NumericalFailureExc


__all__ = "OffspringDistribution",


@dataclass(frozen=True)
class OffspringDistribution:
    """
    Offspring law of a supercritical Galton-Watson process, kept as a finite pmf rho_0..rho_K (unbounded families are
    truncated once the discarded tail mass drops below 'tail_eps' and then renormalized).

    Instances are immutable, so they can be shared between workers without any synchronization.
    """

    family: OffspringFamily
    parameters: tuple[tuple[str, Any], ...]
    pmf: tuple[float, ...]
    tail_eps: float = OffspringConstants.DEFAULT_TAIL_EPS
    discarded_mass: float = field(default=0.0, compare=False)

    def __post_init__(self):
        """
        :raises InvalidDistributionExc
        """

        if len(self.pmf) == 0:
            raise InvalidDistributionExc("The offspring pmf must have at least one entry!")

        if any((not math.isfinite(p)) or (p < 0.0) for p in self.pmf):
            raise InvalidDistributionExc(f"The offspring pmf must consist of finite non-negative probabilities, got {self.pmf!r}")

        total = math.fsum(self.pmf)
        if abs(total - 1.0) > OffspringConstants.PMF_SUM_TOLERANCE:
            raise InvalidDistributionExc(f"The offspring pmf must be normalized, its mass is {total}")

        if not (0.0 <= self.discarded_mass <= self.tail_eps + OffspringConstants.PMF_SUM_TOLERANCE):
            raise InvalidDistributionExc(f"The discarded tail mass {self.discarded_mass} exceeds 'tail_eps' ({self.tail_eps})")

        if self.mean <= 1.0:
            raise InvalidDistributionExc(f"The offspring law must be supercritical (mean > 1), got mean {self.mean}")

    @classmethod
    def deterministic(cls, d: int) -> OffspringDistribution:  # DP: Factory
        """
        :raises InvalidDistributionExc
        """

        raw_pmf = _PmfBuilders.deterministic(d)
        return cls._from_raw_pmf(OffspringFamily.DETERMINISTIC, (("d", int(d)),), raw_pmf, OffspringConstants.DEFAULT_TAIL_EPS)

    @classmethod
    def explicit_pmf(cls, probabilities: Sequence[float]) -> OffspringDistribution:  # DP: Factory
        """
        :raises InvalidDistributionExc
        """

        raw_pmf = _PmfBuilders.explicit(probabilities)
        return cls._from_raw_pmf(OffspringFamily.EXPLICIT_PMF, (("p", tuple(float(p) for p in raw_pmf)),), raw_pmf, OffspringConstants.DEFAULT_TAIL_EPS)

    @classmethod
    def binomial(cls, n: int, p: float) -> OffspringDistribution:  # DP: Factory
        """
        :raises InvalidDistributionExc
        """

        raw_pmf = _PmfBuilders.binomial(n, p)
        return cls._from_raw_pmf(OffspringFamily.BINOMIAL, (("n", int(n)), ("p", float(p))), raw_pmf, OffspringConstants.DEFAULT_TAIL_EPS)

    @classmethod
    def geometric(cls, p: float, tail_eps: float = OffspringConstants.DEFAULT_TAIL_EPS) -> OffspringDistribution:  # DP: Factory
        """
        :raises InvalidDistributionExc
        """

        return cls._from_raw_pmf(OffspringFamily.GEOMETRIC, (("p", float(p)), ("tail_eps", float(tail_eps))), _PmfBuilders.geometric(p, tail_eps), tail_eps)

    @classmethod
    def poisson(cls, lam: float, tail_eps: float = OffspringConstants.DEFAULT_TAIL_EPS) -> OffspringDistribution:  # DP: Factory
        """
        :raises InvalidDistributionExc
        """

        return cls._from_raw_pmf(OffspringFamily.POISSON, (("lambda", float(lam)), ("tail_eps", float(tail_eps))), _PmfBuilders.poisson(lam, tail_eps), tail_eps)

    @classmethod
    def from_spec(cls, spec: Mapping[str, Any]) -> OffspringDistribution:  # DP: Factory
        """
        Builds a distribution from its structured-text form, e.g. {"family": "geometric", "p": 0.25}.

        :raises InvalidDistributionExc
        """

        if not isinstance(spec, Mapping):
            raise InvalidDistributionExc(f"A distribution spec must be a JSON object, got {spec!r}")

        try:
            family = OffspringFamily(spec.get("family"))
        except ValueError:
            raise InvalidDistributionExc(f"'family' must be one of these values: {repr(tuple(member.value for member in OffspringFamily))}, got {spec.get('family')!r}")

        expected_keys = {
            OffspringFamily.DETERMINISTIC: ({"d"}, set()),
            OffspringFamily.EXPLICIT_PMF: ({"p"}, set()),
            OffspringFamily.BINOMIAL: ({"n", "p"}, set()),
            OffspringFamily.GEOMETRIC: ({"p"}, {"tail_eps"}),
            OffspringFamily.POISSON: ({"lambda"}, {"tail_eps"}),
        }[family]
        given_keys = set(spec.keys()) - {"family"}
        required_keys, optional_keys = expected_keys
        if (not required_keys <= given_keys) or (given_keys - required_keys - optional_keys):
            raise InvalidDistributionExc(f"The '{family.value}' family takes the keys {sorted(required_keys)} (optionally {sorted(optional_keys)}), got {sorted(given_keys)}")

        try:
            tail_eps = float(spec.get("tail_eps", OffspringConstants.DEFAULT_TAIL_EPS))
            if family is OffspringFamily.DETERMINISTIC:
                return cls.deterministic(spec["d"])
            if family is OffspringFamily.EXPLICIT_PMF:
                return cls.explicit_pmf(spec["p"])
            if family is OffspringFamily.BINOMIAL:
                return cls.binomial(spec["n"], spec["p"])
            if family is OffspringFamily.GEOMETRIC:
                return cls.geometric(spec["p"], tail_eps)
            return cls.poisson(spec["lambda"], tail_eps)
        except (TypeError, ValueError) as e:
            raise InvalidDistributionExc(f"Malformed '{family.value}' distribution spec {dict(spec)!r}: {e}")

    @classmethod
    def from_json(cls, text: str) -> OffspringDistribution:  # DP: Factory
        """
        :raises InvalidDistributionExc
        """

        try:
            spec = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidDistributionExc(f"The distribution spec is not valid JSON: {e}")

        return cls.from_spec(spec)

    @classmethod
    def _from_raw_pmf(cls, family: OffspringFamily, parameters: tuple[tuple[str, Any], ...], raw_pmf: np.ndarray, tail_eps: float) -> OffspringDistribution:
        """
        :raises InvalidDistributionExc
        """

        raw_pmf = np.trim_zeros(np.asarray(raw_pmf, dtype=np.float64), "b")
        if raw_pmf.size == 0:
            raise InvalidDistributionExc("The offspring pmf has no mass at all!")

        retained_mass = math.fsum(raw_pmf)
        pmf = raw_pmf / retained_mass

        return cls(
            family=family,
            parameters=parameters,
            pmf=tuple(float(p) for p in pmf),
            tail_eps=float(tail_eps),
            discarded_mass=max(0.0, 1.0 - retained_mass)
        )

    def to_spec(self) -> dict[str, Any]:
        spec: dict[str, Any] = {"family": self.family.value}
        for key, value in self.parameters:
            spec[key] = list(value) if isinstance(value, tuple) else value

        return spec

    def fingerprint(self) -> bytes:
        canonical_text = json.dumps(self.to_spec(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical_text.encode("utf-8")).digest()

    @property
    def max_offspring(self) -> int:
        return len(self.pmf) - 1

    @cached_property
    def pmf_array(self) -> np.ndarray:
        array = np.asarray(self.pmf, dtype=np.float64)
        array.setflags(write=False)
        return array

    @cached_property
    def mean(self) -> float:
        return math.fsum(k * p for k, p in enumerate(self.pmf))

    @cached_property
    def _pgf_polynomials(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        polynomial = Polynomial(self.pmf_array)
        return polynomial, polynomial.deriv(1), polynomial.deriv(2)

    def pgf(self, s: Union[float, np.ndarray], order: int = 0) -> Union[float, np.ndarray]:
        """
        Evaluates f(s) = sum_k rho_k s^k (order 0) or its first/second derivative.

        :raises InvalidParameterExc
        """

        s_array = _ValidationHelpers.validate_unit_interval(s, "s")
        value = self._pgf_polynomial_of_order(order)(s_array)

        return float(value) if np.ndim(value) == 0 else value

    def _pgf_polynomial_of_order(self, order: int) -> Polynomial:
        """
        :raises InvalidParameterExc
        """

        if order not in (0, 1, 2):
            raise InvalidParameterExc(f"Only generating-function derivatives of order 0, 1 and 2 are available, got {order!r}")

        return self._pgf_polynomials[order]

    @cached_property
    def q(self) -> float:
        return self.extinction_probability()

    def extinction_probability(self) -> float:
        """
        The smallest fixed point of f on [0, 1]. f(s) - s is convex, non-negative at 0 and negative just below 1 for a
        supercritical law, so bisection on [0, 1 - delta] brackets exactly that root.

        :raises NumericalFailureExc
        """

        if self.pmf[0] == 0.0:
            return 0.0

        polynomial = self._pgf_polynomials[0]

        def excess(s: float) -> float:
            return float(polynomial(s)) - s

        upper = 1.0 - OffspringConstants.EXTINCTION_BRACKET_DELTA
        if excess(upper) >= 0.0:
            raise NumericalFailureExc(f"The offspring law (mean {self.mean}) is too close to critical to bracket its extinction probability below {upper}")

        q = float(scipy.optimize.bisect(excess, 0.0, upper, xtol=OffspringConstants.EXTINCTION_BISECTION_XTOL, maxiter=200))

        if abs(excess(q)) > OffspringConstants.EXTINCTION_RESIDUAL_TOLERANCE:
            raise NumericalFailureExc(f"The extinction probability {q} leaves a residual |f(q) - q| = {abs(excess(q))}")

        return q

    def backbone_pgf(self, s: Union[float, np.ndarray], order: int = 0) -> Union[float, np.ndarray]:
        """
        The generating function of the surviving-vertex (backbone) tree, f~(s) = (f(q + (1 - q) s) - q) / (1 - q), so that
        f~(0) = 0 and f~(1) = 1; order 1 gives f'(q + (1 - q) s) and order 2 gives (1 - q) f''(q + (1 - q) s).

        :raises InvalidParameterExc
        """

        s_array = _ValidationHelpers.validate_unit_interval(s, "s")
        polynomial = self._pgf_polynomial_of_order(order)

        q = self.q
        argument = np.minimum(q + (1.0 - q) * s_array, 1.0)
        if order == 0:
            value = (polynomial(argument) - q) / (1.0 - q)
        elif order == 1:
            value = polynomial(argument)
        else:
            value = (1.0 - q) * polynomial(argument)

        return float(value) if np.ndim(value) == 0 else value

    def backbone_pgf_inverse(self, y: float) -> float:
        """
        :raises InvalidParameterExc
        """

        y = float(_ValidationHelpers.validate_unit_interval(y, "y"))
        if y in (0.0, 1.0):
            return y

        return float(scipy.optimize.brentq(lambda s: self.backbone_pgf(s) - y, 0.0, 1.0, xtol=1e-15, rtol=4.5e-16))

    @cached_property
    def backbone_view(self) -> BackboneView:
        return BackboneView.from_offspring_pmf(self.pmf_array, self.q)

    def backbone_pmf(self) -> tuple[float, ...]:
        """
        Returns rho~_1..rho~_K (rho~_0 is always zero and therefore left out).
        """

        return tuple(float(p) for p in self.backbone_view.rho_tilde[1:])

    def bush_count_distribution(self, k: int) -> tuple[float, ...]:
        """
        :raises InvalidParameterExc
        """

        return tuple(float(p) for p in self.backbone_view.bush_count_distribution(k))
