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
from .CheckOutcome import CheckOutcome
from .ValidationConstants import ValidationConstants
from ._SuiteContext import _SuiteContext
from ..offspring.OffspringDistribution import OffspringDistribution
from ..treegen.TreeSampler import TreeSampler
from ..harmonic.HarmonicMeasures import HarmonicMeasures
from ..transforms.TransformKind import TransformKind
from ..transforms.LaplaceTransforms import LaplaceTransforms
from ..solver.McParameters import McParameters
from ..solver.CriticalitySolver import CriticalitySolver
from ..cluster.ClusterSimulator import ClusterSimulator
from ..etc.StreamPurpose import StreamPurpose
from ..etc.RandomStreams import RandomStreams
from ..etc.OutputFormatting import OutputFormatting
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..etc._ValidationHelpers import _ValidationHelpers
from ..exc.GwInterlacementsBaseExc import GwInterlacementsBaseExc
from ..exc.InvariantViolationExc import InvariantViolationExc


__all__ = "ValidationSuite",


logger = logging.getLogger(__name__)


class ValidationSuite(UninstantiableClassMixin):
    @classmethod
    def run(cls, quick: bool = True, seed: int = 0, threads: int = 1, fail_hard: bool = False) -> list[CheckOutcome]:
        """
        Runs every closed-form and property check; 'quick' shrinks the Monte Carlo sizes to a desk run. A check that
        raises one of the library's exceptions counts as failed.

        :raises InvalidParameterExc
        :raises InvariantViolationExc: Only when 'fail_hard' is set, on the first failed check.
        """

        _ValidationHelpers.validate_seed(seed)
        _ValidationHelpers.validate_count(threads, "threads")
        context = _SuiteContext(quick=bool(quick), seed=seed, threads=threads)

        outcomes = []
        for name, check in cls._checks():
            try:
                passed, detail = check(context)
            except GwInterlacementsBaseExc as e:
                passed, detail = False, f"{e.__class__.__name__}: {e}"

            outcome = CheckOutcome(name=name, passed=bool(passed), detail=detail)
            outcomes.append(outcome)
            logger.log(logging.INFO if outcome.passed else logging.ERROR, "%s %s: %s", "PASS" if outcome.passed else "FAIL", name, detail)

            if fail_hard and not outcome.passed:
                raise InvariantViolationExc(f"The check {name!r} failed: {detail}")

        return outcomes

    @classmethod
    def _checks(cls) -> tuple[tuple[str, Callable[[_SuiteContext], tuple[bool, str]]], ...]:
        return (
            ("extinction_closed_forms", cls._check_extinction_closed_forms),
            ("regular_critical_u", cls._check_regular_critical_u),
            ("critical_u_seed_independence", cls._check_critical_u_seed_independence),
            ("fixed_point_closed_form", cls._check_fixed_point_closed_form),
            ("beta_monotone_in_depth", cls._check_beta_monotone_in_depth),
            ("bush_invariance", cls._check_bush_invariance),
            ("gamma_identity", cls._check_gamma_identity),
            ("order_independence", cls._check_order_independence),
            ("laplace_monotone", cls._check_laplace_monotone),
            ("criticality_index_decreasing", cls._check_criticality_index_decreasing),
            ("phi_concave", cls._check_phi_concave),
            ("g_identity", cls._check_g_identity),
            ("laplace_identity", cls._check_laplace_identity),
            ("escape_walk_oracle", cls._check_escape_walk_oracle),
            ("survival_recursion", cls._check_survival_recursion),
        )

    @staticmethod
    def _check_extinction_closed_forms(context: _SuiteContext) -> tuple[bool, str]:
        explicit = context.reference_distribution
        geometric = OffspringDistribution.geometric(0.25)

        conditions = (
            abs(explicit.q - 1.0 / 3.0) <= 1e-12,
            (len(explicit.backbone_pmf()) == 2) and all(abs(p - 0.5) <= 1e-12 for p in explicit.backbone_pmf()),
            abs(geometric.q - 1.0 / 3.0) <= 1e-10,
            OffspringDistribution.deterministic(2).q == 0.0
        )

        return all(conditions), f"q(pmf)={explicit.q!r} rho~={explicit.backbone_pmf()!r} q(geometric)={geometric.q!r}"

    @staticmethod
    def _check_regular_critical_u(context: _SuiteContext) -> tuple[bool, str]:
        mc_params = McParameters(n=1, depth=ValidationConstants.REGULAR_IDENTITY_DEPTH, seed=context.seed, replicates=1, threads=context.threads)

        details = []
        passed = True
        for d in (2, 3):
            solved = CriticalitySolver.critical_u(OffspringDistribution.deterministic(d), tol=1e-6, mc_params=mc_params).u_star
            exact = CriticalitySolver.regular_tree_critical_u(d)
            passed &= abs(solved - exact) <= ValidationConstants.REGULAR_CRITICAL_U_TOLERANCE
            details.append(f"d={d}: {OutputFormatting.format_float(solved)} vs {OutputFormatting.format_float(exact)}")

        return passed, ", ".join(details)

    @staticmethod
    def _check_critical_u_seed_independence(context: _SuiteContext) -> tuple[bool, str]:
        dist = context.reference_distribution
        n, depth = context.size(ValidationConstants.SEED_CHECK_SAMPLES), context.size(ValidationConstants.SEED_CHECK_DEPTH)

        result = CriticalitySolver.critical_u(dist, ValidationConstants.SEED_CHECK_TOL, McParameters(n=n, depth=depth, seed=context.seed, replicates=ValidationConstants.SEED_CHECK_REPLICATES, threads=context.threads))
        rerun = CriticalitySolver.critical_u(dist, ValidationConstants.SEED_CHECK_TOL, McParameters(n=n, depth=depth, seed=context.seed, replicates=1, threads=context.threads))

        within = all(abs(u_star - result.u_star) <= 3.0 * result.spread + result.tol for u_star in result.replicate_u_stars)
        reproducible = rerun.replicate_u_stars == result.replicate_u_stars[:1]
        passed = (result.spread < ValidationConstants.MAX_SEED_SPREAD) and within and reproducible

        return passed, f"u*={OutputFormatting.format_float(result.u_star)} spread={OutputFormatting.format_float(result.spread)} over {len(result.seeds)} seeds, rerun {'identical' if reproducible else 'differs'}"

    @staticmethod
    def _check_fixed_point_closed_form(context: _SuiteContext) -> tuple[bool, str]:
        dist = OffspringDistribution.deterministic(2)
        samples = LaplaceTransforms.sample_chi(dist, 1, ValidationConstants.REGULAR_IDENTITY_DEPTH, context.seed)

        supercritical = CriticalitySolver.fixed_point_r(samples, dist, math.log(2.0), tol=1e-13).r
        subcritical = CriticalitySolver.fixed_point_r(samples, dist, 2.0, tol=1e-13).r

        passed = (abs(supercritical - (math.sqrt(2.0) - 1.0)) <= ValidationConstants.CLOSED_FORM_TOLERANCE) and (abs(subcritical) <= ValidationConstants.CLOSED_FORM_TOLERANCE)
        return passed, f"r(ln 2)={supercritical!r} r(2)={subcritical!r}"

    @staticmethod
    def _check_beta_monotone_in_depth(context: _SuiteContext) -> tuple[bool, str]:
        # the root escape probability at distance k above the frontier decreases with k
        betas = np.array(HarmonicMeasures.regular_beta_sequence(2, ValidationConstants.REGULAR_IDENTITY_DEPTH))
        passed = bool(np.all(np.diff(betas) <= 0.0))

        # the same seed grows the same first levels, so deeper trees only extend shallower ones
        backbone = context.reference_distribution.backbone_view
        for index in range(context.size(ValidationConstants.PROPERTY_TREES)):
            chis = np.array([
                HarmonicMeasures.gamma_chi(TreeSampler.sample_backbone(backbone, depth, RandomStreams.derive(context.seed, StreamPurpose.TREE, index))).chi
                for depth in range(1, ValidationConstants.PROPERTY_TREE_DEPTH + 1)
            ])
            passed &= bool(np.all(np.diff(chis) <= 1e-12 * chis[:-1]))

        return passed, f"regular beta at k=0..3: {betas[:4].tolist()}"

    @staticmethod
    def _check_bush_invariance(context: _SuiteContext) -> tuple[bool, str]:
        dist = context.reference_distribution
        mismatches = 0
        n_trees = context.size(ValidationConstants.PROPERTY_TREES)

        for index in range(n_trees):
            tree = TreeSampler.sample_conditioned(dist, ValidationConstants.PROPERTY_TREE_DEPTH, RandomStreams.derive(context.seed, StreamPurpose.TREE, index))
            backbone = tree.backbone_restriction()

            same_beta = np.array_equal(HarmonicMeasures.beta_table(tree).beta[tree.is_backbone], HarmonicMeasures.beta_table(backbone).beta)
            same_depth = all(
                ClusterSimulator.simulate_cluster(tree, u, RandomStreams.derive(context.seed, StreamPurpose.CLUSTER, index)).depth_reached
                == ClusterSimulator.simulate_cluster(backbone, u, RandomStreams.derive(context.seed, StreamPurpose.CLUSTER, index)).depth_reached
                for u in (0.25, 0.5, 1.0)
            )
            mismatches += int(not (same_beta and same_depth))

        return mismatches == 0, f"{mismatches} of {n_trees} conditioned trees differ from their backbone"

    @staticmethod
    def _check_gamma_identity(context: _SuiteContext) -> tuple[bool, str]:
        samples = context.reference_samples
        passed = bool(np.array_equal(samples.gamma_values, samples.chi_values / (1.0 + samples.chi_values)))

        # the capacity of the root of a planted subtree is the escape probability of the planted vertex
        tree = TreeSampler.sample_conditioned(context.reference_distribution, ValidationConstants.PROPERTY_TREE_DEPTH, RandomStreams.derive(context.seed, StreamPurpose.TREE, 0))
        table = HarmonicMeasures.beta_table(tree)
        backbone_children = [child for child in tree.children(tree.root) if tree.is_backbone[child]]
        for child in backbone_children:
            passed &= HarmonicMeasures.capacity(tree.planted_subtree(child), [0]).value == float(table.beta[child])

        return passed, f"checked {samples.n} samples and {len(backbone_children)} planted subtrees"

    @staticmethod
    def _check_order_independence(context: _SuiteContext) -> tuple[bool, str]:
        n_trees = context.size(ValidationConstants.PROPERTY_TREES)
        mismatches = 0

        for index in range(n_trees):
            tree = TreeSampler.sample_conditioned(context.reference_distribution, ValidationConstants.PROPERTY_TREE_DEPTH, RandomStreams.derive(context.seed, StreamPurpose.TREE, index))
            shuffled = tree.with_shuffled_children(RandomStreams.derive(context.seed, StreamPurpose.WALK, index))

            same_table = np.array_equal(HarmonicMeasures.beta_table(tree).s, HarmonicMeasures.beta_table(shuffled).s)
            backbone_ids = np.flatnonzero(tree.is_backbone & ~tree.is_frontier)
            same_capacity = all(
                HarmonicMeasures.capacity(tree, vertex_set).value == HarmonicMeasures.capacity(shuffled, vertex_set).value
                for vertex_set in (backbone_ids[:3], backbone_ids[1:2])
            )
            mismatches += int(not (same_table and same_capacity))

        return mismatches == 0, f"{mismatches} of {n_trees} trees changed under shuffled children lists"

    @staticmethod
    def _check_laplace_monotone(context: _SuiteContext) -> tuple[bool, str]:
        samples = context.reference_samples
        us = np.linspace(0.0, 4.0, 17)

        l_gamma = np.array([estimate.mean for estimate in LaplaceTransforms.laplace_grid(samples, us, TransformKind.GAMMA)])
        l_chi = np.array([estimate.mean for estimate in LaplaceTransforms.laplace_grid(samples, us, TransformKind.CHI)])

        passed = bool(np.all(np.diff(l_gamma) <= 0.0) and np.all(np.diff(l_chi) <= 0.0) and np.all(l_chi <= l_gamma))
        return passed, f"L_gamma(4)={l_gamma[-1]!r} L_chi(4)={l_chi[-1]!r}"

    @staticmethod
    def _check_criticality_index_decreasing(context: _SuiteContext) -> tuple[bool, str]:
        indices = CriticalitySolver.index_grid(context.reference_samples, context.reference_distribution, np.arange(0.25, 4.01, 0.25))

        return bool(np.all(np.diff(indices) < 0.0)), f"index from {indices[0]!r} down to {indices[-1]!r}"

    @staticmethod
    def _check_phi_concave(context: _SuiteContext) -> tuple[bool, str]:
        samples, dist = context.reference_samples, context.reference_distribution

        worst = -math.inf
        for u in (0.25, 0.5, 1.0):
            l_gamma = LaplaceTransforms.laplace(samples, u, TransformKind.GAMMA).mean
            values = np.array([CriticalitySolver.phi(samples, dist, u, r) for r in np.linspace(0.0, l_gamma, 41)])
            worst = max(worst, float(np.max(np.diff(values, n=2))))

        return worst <= ValidationConstants.CONCAVITY_TOLERANCE, f"largest second difference {worst!r}"

    @staticmethod
    def _check_g_identity(context: _SuiteContext) -> tuple[bool, str]:
        worst = 0.0
        for d in (2, 3):
            dist = OffspringDistribution.deterministic(d)
            samples = LaplaceTransforms.sample_chi(dist, 1, ValidationConstants.REGULAR_IDENTITY_DEPTH, context.seed)

            for u in ValidationConstants.LAPLACE_GRID:
                l_gamma = LaplaceTransforms.laplace(samples, u, TransformKind.GAMMA).mean
                l_chi = LaplaceTransforms.laplace(samples, u, TransformKind.CHI).mean

                for x in np.linspace(0.0, l_gamma, 9):
                    expected = x - l_chi + float(dist.backbone_pgf(l_gamma - x))
                    worst = max(worst, abs(x * CriticalitySolver.g_diagnostic(samples, dist, u, x) - expected))

        return worst <= ValidationConstants.G_IDENTITY_TOLERANCE, f"largest deviation {worst!r}"

    @staticmethod
    def _check_laplace_identity(context: _SuiteContext) -> tuple[bool, str]:
        gaps = [LaplaceTransforms.consistency_gap(context.reference_samples, context.reference_distribution, u) for u in ValidationConstants.LAPLACE_GRID]
        worst = max(abs(gap.z_score) for gap in gaps)

        return worst <= ValidationConstants.MAX_Z_SCORE, "z-scores " + ", ".join(OutputFormatting.format_float(gap.z_score) for gap in gaps)

    @staticmethod
    def _check_escape_walk_oracle(context: _SuiteContext) -> tuple[bool, str]:
        binary = OffspringDistribution.deterministic(2).backbone_view
        tree = TreeSampler.sample_backbone(binary, context.size(ValidationConstants.WALK_TREE_DEPTH), context.seed)

        beta = float(HarmonicMeasures.beta_table(tree).beta[tree.root])
        estimate = HarmonicMeasures.escape_mc(tree, tree.root, n_walks=context.size(ValidationConstants.WALKS), seed=context.seed)

        passed = estimate.contains(beta, ValidationConstants.MAX_Z_SCORE) and (estimate.upper - estimate.lower < 0.02)
        return passed, f"beta={beta!r} walk estimate {estimate.estimate!r} [{estimate.lower!r}, {estimate.upper!r}]"

    @staticmethod
    def _check_survival_recursion(context: _SuiteContext) -> tuple[bool, str]:
        dist = OffspringDistribution.deterministic(2)
        u = math.log(2.0)
        n_max = max(ValidationConstants.SURVIVAL_CHECK_DEPTHS)
        depth = n_max + context.size(ValidationConstants.DEPTH)
        replicas = context.size(ValidationConstants.REPLICAS)

        profile = ClusterSimulator.annealed_survival_profile(dist, u, n_max, replicas, depth, context.seed, context.threads)
        recursion = CriticalitySolver.survival_recursion(LaplaceTransforms.sample_chi(dist, 1, depth, context.seed), dist, u, n_max)

        worst = 0.0
        for n in ValidationConstants.SURVIVAL_CHECK_DEPTHS:
            worst = max(worst, abs(profile[n].r_hat - recursion[n]) / max(profile[n].stderr, 1.0 / replicas))

        return worst <= ValidationConstants.MAX_Z_SCORE, f"largest deviation {OutputFormatting.format_float(worst)} standard errors"
