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


from typing import Callable
import math
import logging
import numpy as np
import scipy.integrate
import scipy.optimize
from .McParameters import McParameters
from .SolverResult import SolverResult
from .FixedPointResult import FixedPointResult
from .SolverConstants import SolverConstants
from ..offspring.OffspringDistribution import OffspringDistribution
from ..transforms.ChiSampleSet import ChiSampleSet
from ..transforms.TransformKind import TransformKind
from ..transforms.LaplaceTransforms import LaplaceTransforms
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..etc._ValidationHelpers import _ValidationHelpers
from ..exc.InvalidParameterExc import InvalidParameterExc
from ..exc.NumericalFailureExc import NumericalFailureExc


__all__ = "CriticalitySolver",


logger = logging.getLogger(__name__)


# Everything is evaluated on one fixed sample set, on which u -> L^_gamma(u) is exactly monotone; the critical level is
#  where f~'(L^_gamma(u)) crosses 1 and the annealed survival probability is the largest root of
#  phi(r) = L^_chi - r - f~(L^_gamma - r).
class CriticalitySolver(UninstantiableClassMixin):
    @staticmethod
    def _transforms(samples: ChiSampleSet, dist: OffspringDistribution, u: float) -> tuple[float, float]:
        """
        :raises InvalidParameterExc
        """

        samples.check_distribution(dist)
        l_gamma = LaplaceTransforms.laplace(samples, u, TransformKind.GAMMA).mean
        l_chi = LaplaceTransforms.laplace(samples, u, TransformKind.CHI).mean

        return l_gamma, l_chi

    @classmethod
    def criticality_index(cls, samples: ChiSampleSet, dist: OffspringDistribution, u: float) -> float:
        """
        f~'(L^_gamma(u)); the vacant cluster of the root percolates iff it exceeds 1.

        :raises InvalidParameterExc
        """

        l_gamma, _ = cls._transforms(samples, dist, u)
        return float(dist.backbone_pgf(l_gamma, order=1))

    @classmethod
    def inverse_criticality_index(cls, samples: ChiSampleSet, dist: OffspringDistribution, u: float) -> float:
        """
        1 / (f~^-1)'(L^_chi(u)) = f~'(f~^-1(L^_chi(u))); equal to criticality_index() up to the identity
        L_chi = f~(L_gamma), i.e. up to Monte Carlo noise.

        :raises InvalidParameterExc
        """

        _, l_chi = cls._transforms(samples, dist, u)
        return float(dist.backbone_pgf(dist.backbone_pgf_inverse(l_chi), order=1))

    @classmethod
    def critical_u(cls, dist: OffspringDistribution, tol: float = SolverConstants.DEFAULT_TOL, mc_params: McParameters = McParameters()) -> SolverResult:
        """
        Solves f~'(L^_gamma(u)) = 1 by bisection on every replicate sample set (seeds seed, seed + 1, ...) and on their
        pooled union; the pooled solve gives 'u_star' and 'bracket', the replicate solves give 'spread'.

        :raises InvalidParameterExc
        :raises NumericalFailureExc
        :raises ResourceLimitExc
        """

        tol = _ValidationHelpers.validate_tolerance(tol)

        sample_sets = [LaplaceTransforms.sample_chi(dist, mc_params.n, mc_params.depth, seed, mc_params.threads) for seed in mc_params.seeds]
        pooled = sample_sets[0].pooled(*sample_sets[1:])

        replicate_u_stars = tuple(cls._solve_critical_u(samples, dist, tol)[0] for samples in sample_sets)
        u_star, bracket, index_at_u_star = cls._solve_critical_u(pooled, dist, tol)
        spread = max(replicate_u_stars) - min(replicate_u_stars)

        logger.info("Critical level u* = %.9g (bracket [%.9g, %.9g], replicate spread %.3g)", u_star, bracket[0], bracket[1], spread)

        return SolverResult(
            u_star=u_star,
            bracket=bracket,
            tol=tol,
            index_at_u_star=index_at_u_star,
            n=mc_params.n,
            depth=mc_params.depth,
            seeds=mc_params.seeds,
            replicate_u_stars=replicate_u_stars,
            spread=spread
        )

    @classmethod
    def _solve_critical_u(cls, samples: ChiSampleSet, dist: OffspringDistribution, tol: float) -> tuple[float, tuple[float, float], float]:
        """
        :raises NumericalFailureExc
        """

        def excess(u: float) -> float:
            return cls.criticality_index(samples, dist, u) - 1.0

        u_lo, u_hi = cls._find_bracket(excess)
        logger.info("Bracketed the critical level in [%.9g, %.9g]", u_lo, u_hi)

        step = 0
        while u_hi - u_lo > tol:
            u_mid = 0.5 * (u_lo + u_hi)
            if excess(u_mid) > 0.0:
                u_lo = u_mid
            else:
                u_hi = u_mid

            step += 1
            logger.debug("Bisection step %d: [%.12g, %.12g]", step, u_lo, u_hi)

        u_star = 0.5 * (u_lo + u_hi)
        return u_star, (u_lo, u_hi), cls.criticality_index(samples, dist, u_star)

    @staticmethod
    def _find_bracket(excess: Callable[[float], float]) -> tuple[float, float]:
        """
        Doubles (or halves) u starting from 1 until excess(u_lo) > 0 >= excess(u_hi).

        :raises NumericalFailureExc
        """

        u = SolverConstants.BRACKET_START
        if excess(u) > 0.0:
            while excess(2.0 * u) > 0.0:
                u *= 2.0
                if 2.0 * u > SolverConstants.BRACKET_MAX:
                    raise NumericalFailureExc(f"The criticality index stays above 1 up to u = {SolverConstants.BRACKET_MAX:g}; no critical level was bracketed")
            return u, 2.0 * u

        while excess(0.5 * u) <= 0.0:
            u *= 0.5
            if 0.5 * u < SolverConstants.BRACKET_MIN:
                raise NumericalFailureExc(f"The criticality index stays at or below 1 down to u = {SolverConstants.BRACKET_MIN:g}; no critical level was bracketed")
        return 0.5 * u, u

    @classmethod
    def fixed_point_r(cls, samples: ChiSampleSet, dist: OffspringDistribution, u: float, tol: float = SolverConstants.FIXED_POINT_DEFAULT_TOL, max_iterations: int = SolverConstants.FIXED_POINT_MAX_ITERATIONS) -> FixedPointResult:
        """
        Iterates r_{k+1} = L^_chi - f~(L^_gamma - r_k) from r_0 = L^_chi. The iterates decrease to the largest root of
        phi, geometrically with the ratio c = f~'(L^_gamma - r) of consecutive steps, so a step of size s leaves about
        s c / (1 - c) to go. The iteration stops once both the step (that is |phi(r)|) and this remaining distance are
        below 'tol', or r drops below 'tol'. When the criticality index is at most 1 the only root is 0 and no
        iteration is done.

        :raises InvalidParameterExc
        """

        u = _ValidationHelpers.validate_level(u, allow_zero=False)
        tol = _ValidationHelpers.validate_tolerance(tol)
        _ValidationHelpers.validate_count(max_iterations, "max_iterations")

        l_gamma, l_chi = cls._transforms(samples, dist, u)
        index = float(dist.backbone_pgf(l_gamma, order=1))

        if index <= 1.0:
            return FixedPointResult(u=u, r=0.0, iterates=(l_chi,), converged=True, criticality_index=index)

        iterates = [l_chi]
        converged = False
        last_step = math.inf
        for _ in range(max_iterations):
            previous = iterates[-1]
            current = min(previous, max(0.0, l_chi - float(dist.backbone_pgf(l_gamma - previous))))
            iterates.append(current)

            step = previous - current
            if (step == 0.0) or (current <= tol):
                converged = True
                break

            if (step < tol) and (step < last_step < math.inf):
                ratio = step / last_step
                if step * ratio / (1.0 - ratio) < tol:
                    converged = True
                    break

            last_step = step

        if not converged:
            logger.warning("The fixed-point iteration at u=%g did not converge within %d iterations (last step %g)", u, max_iterations, iterates[-2] - iterates[-1])

        logger.debug("Fixed point at u=%g: r=%.12g after %d iterations", u, iterates[-1], len(iterates) - 1)

        return FixedPointResult(u=u, r=iterates[-1], iterates=tuple(iterates), converged=converged, criticality_index=index)

    @classmethod
    def survival_recursion(cls, samples: ChiSampleSet, dist: OffspringDistribution, u: float, n_max: int) -> tuple[float, ...]:
        """
        r_0 = L^_chi, r_{k+1} = max(0, L^_chi - f~(L^_gamma - r_k)) for k < n_max; r_k estimates the annealed
        probability that the vacant cluster of the root reaches depth k.

        :raises InvalidParameterExc
        """

        u = _ValidationHelpers.validate_level(u, allow_zero=False)
        _ValidationHelpers.validate_count(n_max, "n_max", minimum=0)

        l_gamma, l_chi = cls._transforms(samples, dist, u)

        sequence = [l_chi]
        for _ in range(n_max):
            sequence.append(min(sequence[-1], max(0.0, l_chi - float(dist.backbone_pgf(l_gamma - sequence[-1])))))

        return tuple(sequence)

    @classmethod
    def phi(cls, samples: ChiSampleSet, dist: OffspringDistribution, u: float, r: float) -> float:
        """
        :raises InvalidParameterExc
        """

        l_gamma, l_chi = cls._transforms(samples, dist, u)
        if not (0.0 <= r <= l_gamma):
            raise InvalidParameterExc(f"'r' must lie in [0, L_gamma(u)] = [0, {l_gamma}], got {r}")

        return l_chi - r - float(dist.backbone_pgf(l_gamma - r))

    @classmethod
    def largest_root_bisection(cls, samples: ChiSampleSet, dist: OffspringDistribution, u: float, tol: float = SolverConstants.FIXED_POINT_DEFAULT_TOL) -> float:
        """
        The largest root of the concave function phi found by bracketing: phi is maximal where f~'(L^_gamma - r) = 1 and
        non-positive at r = L^_chi. Returns 0 when the criticality index is at most 1.

        :raises InvalidParameterExc
        :raises NumericalFailureExc
        """

        tol = _ValidationHelpers.validate_tolerance(tol)
        l_gamma, l_chi = cls._transforms(samples, dist, u)

        if float(dist.backbone_pgf(l_gamma, order=1)) <= 1.0:
            return 0.0

        # f~' is increasing, f~'(0) = f'(q) < 1 and f~'(L^_gamma) > 1
        s_at_maximum = scipy.optimize.brentq(lambda s: float(dist.backbone_pgf(s, order=1)) - 1.0, 0.0, l_gamma, xtol=1e-15)
        r_at_maximum = min(l_gamma - s_at_maximum, l_chi)

        def phi_at(r: float) -> float:
            return l_chi - r - float(dist.backbone_pgf(l_gamma - r))

        if phi_at(r_at_maximum) <= 0.0:
            raise NumericalFailureExc(f"phi has no positive maximum at u={u} (phi({r_at_maximum}) = {phi_at(r_at_maximum)}); its largest root cannot be bracketed")
        if phi_at(l_chi) >= 0.0:
            return l_chi

        return float(scipy.optimize.bisect(phi_at, r_at_maximum, l_chi, xtol=tol))

    @classmethod
    def g_diagnostic(cls, samples: ChiSampleSet, dist: OffspringDistribution, u: float, x: float) -> float:
        """
        g_u(x) = 1 - f~'(L^_gamma) + x * int_0^1 (1 - t) f~''(L^_gamma - t x) dt, the function for which
        x g_u(x) = x - L^_chi + f~(L^_gamma - x) whenever L^_chi = f~(L^_gamma) (Taylor expansion of f~ around L^_gamma
        with integral remainder); its root on (0, L^_gamma] is the annealed survival probability.

        :raises InvalidParameterExc
        """

        l_gamma, _ = cls._transforms(samples, dist, u)
        x = float(x)
        if not (0.0 <= x <= l_gamma):
            raise InvalidParameterExc(f"'x' must lie in [0, L_gamma(u)] = [0, {l_gamma}], got {x}")

        g_at_zero = 1.0 - float(dist.backbone_pgf(l_gamma, order=1))
        if x == 0.0:
            return g_at_zero

        remainder, _ = scipy.integrate.quad(
            lambda t: (1.0 - t) * float(dist.backbone_pgf(max(l_gamma - t * x, 0.0), order=2)),
            0.0, 1.0,
            epsabs=SolverConstants.QUADRATURE_ABSOLUTE_TOLERANCE,
            epsrel=SolverConstants.QUADRATURE_ABSOLUTE_TOLERANCE
        )

        return g_at_zero + x * remainder

    @staticmethod
    def g_zero_limits(dist: OffspringDistribution) -> tuple[float, float]:
        """
        The limits of g_u(0) = 1 - f~'(L_gamma(u)) as u -> 0 and as u -> inf: (1 - f'(1), 1 - f'(q)).
        """

        return 1.0 - float(dist.pgf(1.0, order=1)), 1.0 - float(dist.pgf(dist.q, order=1))

    @staticmethod
    def regular_tree_critical_u(d: int) -> float:
        """
        d ln d / (d - 1)^2, the critical level of the complete d-ary tree.

        :raises InvalidParameterExc
        """

        _ValidationHelpers.validate_count(d, "d", minimum=2)
        return d * math.log(d) / (d - 1) ** 2

    @classmethod
    def index_grid(cls, samples: ChiSampleSet, dist: OffspringDistribution, us: np.ndarray) -> np.ndarray:
        """
        :raises InvalidParameterExc
        """

        return np.array([cls.criticality_index(samples, dist, u) for u in us], dtype=np.float64)
