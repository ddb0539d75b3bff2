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


from typing import Callable, Optional, Sequence
import sys
import logging
import argparse
from .RunConfig import RunConfig
from .CliConstants import CliConstants
from .CommandResult import CommandResult
from .OutputFormat import OutputFormat
from .TreeFormat import TreeFormat
from .TreeKind import TreeKind
from ..GwInterlacementsConstants import GwInterlacementsConstants
from ..treegen.Tree import Tree
from ..treegen.TreeSampler import TreeSampler
from ..treegen.TreeExport import TreeExport
from ..harmonic.HarmonicMeasures import HarmonicMeasures
from ..transforms.ChiSampleSet import ChiSampleSet
from ..transforms.TransformKind import TransformKind
from ..transforms.LaplaceTransforms import LaplaceTransforms
from ..transforms.TransformsConstants import TransformsConstants
from ..solver.McParameters import McParameters
from ..solver.SolverConstants import SolverConstants
from ..solver.CriticalitySolver import CriticalitySolver
from ..cluster.ClusterSimulator import ClusterSimulator
from ..validation.ValidationSuite import ValidationSuite
from ..etc.StreamPurpose import StreamPurpose
from ..etc.RandomStreams import RandomStreams
from ..etc.OutputFormatting import OutputFormatting
from ..etc.UninstantiableClassMixin import UninstantiableClassMixin
from ..exc.InvalidParameterExc import InvalidParameterExc
from ..exc.NumericalFailureExc import NumericalFailureExc
from ..exc.ResourceLimitExc import ResourceLimitExc


__all__ = "CommandLineInterface",


logger = logging.getLogger(__name__)


class CommandLineInterface(UninstantiableClassMixin):
    @classmethod
    def main(cls, argv: Optional[Sequence[str]] = None) -> int:
        # argparse itself exits with status 2 on usage errors (unknown flags included)
        namespace = cls.build_parser().parse_args(argv)
        logging.basicConfig(level=namespace.log_level, stream=sys.stderr, format=CliConstants.LOG_FORMAT)

        try:
            config = RunConfig.from_namespace(namespace)
            result = cls.run(config)
            cls._emit(result.text, config)
        except InvalidParameterExc as e:
            logger.error("%s", e)
            return CliConstants.EXIT_INVALID_PARAMETER
        except (NumericalFailureExc, ResourceLimitExc) as e:
            logger.error("%s", e)
            return CliConstants.EXIT_NUMERICAL_FAILURE

        return result.exit_code

    @classmethod
    def run(cls, config: RunConfig) -> CommandResult:
        """
        :raises InvalidParameterExc
        :raises NumericalFailureExc
        :raises ResourceLimitExc
        """

        commands: dict[str, Callable[[RunConfig], CommandResult]] = {
            "extinction": cls.cmd_extinction,
            "sample-tree": cls.cmd_sample_tree,
            "transforms": cls.cmd_transforms,
            "critical": cls.cmd_critical,
            "fixed-point": cls.cmd_fixed_point,
            "survival": cls.cmd_survival,
            "validate": cls.cmd_validate,
        }

        return commands[config.command](config)

    @classmethod
    def build_parser(cls) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
        common.add_argument("--dist", default=CliConstants.DEFAULT_DIST_SPEC, help="offspring distribution as JSON, or @path to a JSON file (default: %(default)s)")
        common.add_argument("--seed", type=int, default=0, help="master seed of all random streams (default: %(default)s)")
        common.add_argument("--depth", type=int, default=None, help=f"truncation depth (default: {TransformsConstants.DEFAULT_DEPTH}; n + {CliConstants.SURVIVAL_DEPTH_MARGIN} for survival)")
        common.add_argument("--samples", type=int, default=TransformsConstants.DEFAULT_SAMPLES, help="number of sampled trees per sample set (default: %(default)s)")
        common.add_argument("--threads", type=int, default=1, help="worker count; results do not depend on it (default: %(default)s)")
        common.add_argument("--out", default=None, help="write the result to this file instead of stdout")
        common.add_argument("--format", choices=[member.value for member in OutputFormat], default=OutputFormat.JSON.value, help="result format (default: %(default)s)")
        common.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"), default="INFO", help="log level of the stderr log (default: %(default)s)")

        levels = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
        level_group = levels.add_mutually_exclusive_group()
        level_group.add_argument("--u", type=float, action="append", help="level u (repeatable)")
        level_group.add_argument("--u-grid", help="levels as start:stop:step, stop included when on the grid")

        tolerance = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
        tolerance.add_argument("--tol", type=float, default=SolverConstants.DEFAULT_TOL, help="solver tolerance (default: %(default)s)")

        sample_files = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
        sample_files.add_argument("--save-samples", default=None, help="store the chi sample set in this file")
        sample_files.add_argument("--load-samples", default=None, help="reuse a stored chi sample set instead of sampling")

        parser = argparse.ArgumentParser(prog=CliConstants.PROGRAM_NAME, allow_abbrev=False, description="Random-interlacements percolation on Galton-Watson trees.")
        parser.add_argument("--version", action="version", version=f"%(prog)s {GwInterlacementsConstants.LIBRARY_VERSION}")
        subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

        subparsers.add_parser("extinction", allow_abbrev=False, parents=[common], help="extinction probability and backbone offspring law")

        sample_tree = subparsers.add_parser("sample-tree", allow_abbrev=False, parents=[common, levels], help="sample one tree")
        sample_tree.add_argument("--tree-kind", choices=[member.value for member in TreeKind], default=TreeKind.CONDITIONED.value)
        sample_tree.add_argument("--tree-format", choices=[member.value for member in TreeFormat], default=TreeFormat.COMPACT.value, help="'profile' needs one --u")

        subparsers.add_parser("transforms", allow_abbrev=False, parents=[common, levels, sample_files], help=f"Laplace transforms of gamma and chi (default grid {CliConstants.DEFAULT_U_GRID})")

        critical = subparsers.add_parser("critical", allow_abbrev=False, parents=[common, tolerance], help="critical level u*")
        critical.add_argument("--replicates", type=int, default=SolverConstants.DEFAULT_REPLICATES, help="independent sample sets (default: %(default)s)")

        subparsers.add_parser("fixed-point", allow_abbrev=False, parents=[common, levels, tolerance, sample_files], help="annealed survival probability r(u)")

        survival = subparsers.add_parser("survival", allow_abbrev=False, parents=[common, levels], help="simulated survival of the vacant cluster of the root")
        survival.add_argument("--n", type=int, default=CliConstants.DEFAULT_SURVIVAL_LEVEL, help="target depth (default: %(default)s)")
        survival.add_argument("--replicas", type=int, default=CliConstants.DEFAULT_REPLICAS, help="number of simulated clusters N (default: %(default)s)")
        survival.add_argument("--quenched", action="store_true", help="simulate all clusters on one sampled conditioned tree")
        survival.add_argument("--dump-replicas", default=None, help="write the per-replica outcomes of the annealed run as CSV to this file")

        validate = subparsers.add_parser("validate", allow_abbrev=False, parents=[common], help="run the invariant suite")
        validate.add_argument("--quick", action="store_true", help="small Monte Carlo sizes")

        return parser

    @staticmethod
    def _emit(text: str, config: RunConfig) -> None:
        """
        :raises InvalidParameterExc
        """

        if config.output_path is None:
            sys.stdout.write(text)
            return

        try:
            with open(config.output_path, "w", encoding="utf-8") as file:
                file.write(text)
        except OSError as e:
            raise InvalidParameterExc(f"Cannot write the output file {config.output_path!r}: {e}")

    @staticmethod
    def _samples(config: RunConfig) -> ChiSampleSet:
        """
        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        if config.load_samples is not None:
            samples = ChiSampleSet.from_file(config.load_samples)
            samples.check_distribution(config.dist)
        else:
            samples = LaplaceTransforms.sample_chi(config.dist, config.samples, config.resolved_depth, config.seed, config.threads)

        if config.save_samples is not None:
            try:
                samples.to_file(config.save_samples)
            except OSError as e:
                raise InvalidParameterExc(f"Cannot write the sample set file {config.save_samples!r}: {e}")

        return samples

    @staticmethod
    def cmd_extinction(config: RunConfig) -> CommandResult:
        """
        :raises NumericalFailureExc
        """

        dist = config.dist
        backbone = dist.backbone_view

        if config.output_format is OutputFormat.CSV:
            rows = (
                (k, dist.pmf[k], float(backbone.rho_tilde[k]), float(backbone.extinct_pmf[k]) if backbone.extinct_pmf.size else 0.0)
                for k in range(dist.max_offspring + 1)
            )
            return CommandResult(OutputFormatting.to_csv(("k", "rho", "rho_tilde", "rho_hat"), rows))

        return CommandResult(OutputFormatting.to_json({
            "dist": dist.to_spec(),
            "q": dist.q,
            "mean": dist.mean,
            "rho_tilde": list(dist.backbone_pmf()),
            "backbone_mean": backbone.mean,
            "rho_hat": [float(p) for p in backbone.extinct_pmf]
        }))

    @staticmethod
    def cmd_sample_tree(config: RunConfig) -> CommandResult:
        """
        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        depth = config.resolved_depth
        rng = RandomStreams.derive(config.seed, StreamPurpose.TREE, 0)

        tree: Tree
        if config.tree_kind is TreeKind.CONDITIONED:
            tree = TreeSampler.sample_conditioned(config.dist, depth, rng)
        elif config.tree_kind is TreeKind.BACKBONE:
            tree = TreeSampler.sample_backbone(config.dist.backbone_view, depth, rng)
        else:
            tree = TreeSampler.sample_unconditioned(config.dist, depth, rng)

        logger.info("Sampled a %s tree of depth %d with %d nodes", config.tree_kind.value, depth, tree.n_nodes)

        if config.tree_format is TreeFormat.DOT:
            return CommandResult(TreeExport.to_dot(tree))
        if config.tree_format is TreeFormat.COMPACT:
            return CommandResult(TreeExport.to_compact_lines(tree))

        u_values = config.levels()
        if len(u_values) != 1:
            raise InvalidParameterExc(f"The profile of a tree is computed at exactly one level, got {list(u_values)}")

        return CommandResult(HarmonicMeasures.profile_csv(tree, u_values[0]))

    @classmethod
    def cmd_transforms(cls, config: RunConfig) -> CommandResult:
        """
        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        u_values = config.levels(default_grid=CliConstants.DEFAULT_U_GRID, allow_zero=True)
        samples = cls._samples(config)

        if config.output_format is OutputFormat.CSV:
            return CommandResult(LaplaceTransforms.transforms_csv(samples, config.dist, u_values))

        rows = []
        for u in u_values:
            l_gamma = LaplaceTransforms.laplace(samples, u, TransformKind.GAMMA)
            l_chi = LaplaceTransforms.laplace(samples, u, TransformKind.CHI)
            gap = LaplaceTransforms.consistency_gap(samples, config.dist, u)

            rows.append({
                "u": u,
                "L_gamma": l_gamma.mean,
                "L_gamma_se": l_gamma.stderr,
                "L_chi": l_chi.mean,
                "L_chi_se": l_chi.stderr,
                "gap": gap.gap,
                "z": gap.z_score
            })

        return CommandResult(OutputFormatting.to_json({"n": samples.n, "depth": samples.depth, "seed": samples.master_seed, "transforms": rows}))

    @staticmethod
    def cmd_critical(config: RunConfig) -> CommandResult:
        """
        :raises InvalidParameterExc
        :raises NumericalFailureExc
        :raises ResourceLimitExc
        """

        mc_params = McParameters(n=config.samples, depth=config.resolved_depth, seed=config.seed, replicates=config.replicates, threads=config.threads)
        result = CriticalitySolver.critical_u(config.dist, config.tol, mc_params)

        if config.output_format is OutputFormat.CSV:
            header = ("u_star", "bracket_lo", "bracket_hi", "tol", "index_at", "n", "depth", "replicates", "spread")
            row = (result.u_star, result.bracket[0], result.bracket[1], result.tol, result.index_at_u_star, result.n, result.depth, len(result.seeds), result.spread)
            return CommandResult(OutputFormatting.to_csv(header, [row]))

        return CommandResult(OutputFormatting.to_json(result.to_json_dict()))

    @classmethod
    def cmd_fixed_point(cls, config: RunConfig) -> CommandResult:
        """
        :raises InvalidParameterExc
        :raises NumericalFailureExc
        :raises ResourceLimitExc
        """

        u_values = config.levels()
        samples = cls._samples(config)

        documents = []
        for u in u_values:
            document = CriticalitySolver.fixed_point_r(samples, config.dist, u, config.tol).to_json_dict()
            document["inverse_index"] = CriticalitySolver.inverse_criticality_index(samples, config.dist, u)
            if document["index"] > SolverConstants.BISECTION_CROSS_CHECK_INDEX:
                document["r_bisection"] = CriticalitySolver.largest_root_bisection(samples, config.dist, u, config.tol)
            documents.append(document)

        if config.output_format is OutputFormat.CSV:
            header = ("u", "r", "converged", "iterations", "index", "inverse_index", "r_bisection")
            rows = ((document["u"], document["r"], document["converged"], document["iterations"], document["index"], document["inverse_index"], document.get("r_bisection", float("nan"))) for document in documents)
            return CommandResult(OutputFormatting.to_csv(header, rows))

        return CommandResult(OutputFormatting.to_json(documents))

    @staticmethod
    def cmd_survival(config: RunConfig) -> CommandResult:
        """
        :raises InvalidParameterExc
        :raises ResourceLimitExc
        """

        u_values = config.levels()
        depth = config.resolved_depth

        estimates = []
        if config.quenched:
            tree = TreeSampler.sample_conditioned(config.dist, depth, RandomStreams.derive(config.seed, StreamPurpose.TREE, 0))
            for u in u_values:
                estimates.append(ClusterSimulator.quenched_survival(tree, u, config.n, config.replicas, config.seed))
        else:
            for u in u_values:
                estimates.extend(ClusterSimulator.annealed_survival_profile(config.dist, u, config.n, config.replicas, depth, config.seed, config.threads))

        if config.dump_replicas is not None:
            outcomes = [
                outcome
                for u in u_values
                for outcome in ClusterSimulator.annealed_replicas(config.dist, u, config.replicas, depth, config.seed, config.threads)
            ]
            try:
                with open(config.dump_replicas, "w", encoding="utf-8") as file:
                    file.write(ClusterSimulator.replica_csv(outcomes))
            except OSError as e:
                raise InvalidParameterExc(f"Cannot write the replica dump {config.dump_replicas!r}: {e}")

        if config.output_format is OutputFormat.CSV:
            return CommandResult(ClusterSimulator.survival_csv(estimates))

        return CommandResult(OutputFormatting.to_json([
            {"u": estimate.u, "n": estimate.n, "r_hat": estimate.r_hat, "stderr": estimate.stderr, "N": estimate.replicas, "depth": estimate.depth, "seed": estimate.seed}
            for estimate in estimates
        ]))

    @staticmethod
    def cmd_validate(config: RunConfig) -> CommandResult:
        """
        :raises InvalidParameterExc
        """

        outcomes = ValidationSuite.run(quick=config.quick, seed=config.seed, threads=config.threads)
        exit_code = CliConstants.EXIT_OK if all(outcome.passed for outcome in outcomes) else CliConstants.EXIT_VALIDATION_FAILURE

        if config.output_format is OutputFormat.CSV:
            text = OutputFormatting.to_csv(("check", "passed", "detail"), (outcome.csv_row() for outcome in outcomes))
        else:
            text = OutputFormatting.to_json([{"check": outcome.name, "passed": outcome.passed, "detail": outcome.detail} for outcome in outcomes])

        return CommandResult(text, exit_code)


def main() -> int:
    return CommandLineInterface.main()
