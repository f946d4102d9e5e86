# Copyright 2026 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""The premetric-cobweb CLI checks premetric spaces, measures distances in the
graph, cobweb and tower constructions, and runs the verification suites.

The tool can be called either using:
    premetric-cobweb -h
    python -m premetric_cobweb -h

ex.
Step 1) Check a finite premetric space
premetric-cobweb validate --spec space.json

Step 2) Measure a distance in one of the constructions
premetric-cobweb dist --spec space.json --construction cobweb v:p e:q,p,1/2
premetric-cobweb dist --spec space.json --construction omega "v:p" "e:p,q,1/2;v(e:p,q,1/2)"
premetric-cobweb dist --spec arens --construction eres "v:spine@0" "v:row-1@0"

Step 3) Run the verification suites, or a census
premetric-cobweb verify --suite s3,s7 --seed 7 --json
premetric-cobweb census cantor:8
premetric-cobweb census eres:arens --sample 50 --seed 1

Step 4) Store the suite options in YAML and run them
premetric-cobweb configs run -c suites.yaml

command:
premetric-cobweb
"""

import argparse
import sys
from argparse import Namespace

from premetric_cobweb import consts


def get_parsed_args() -> Namespace:
    """Return ArgParser with configured CLI arguments."""
    parser = configure_arg_parser()
    args = ["--help"] if len(sys.argv) == 1 else None
    return parser.parse_args(args)


def configure_arg_parser():
    """Extract Args for Run."""
    parser = argparse.ArgumentParser(
        usage=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Verbose logging")
    parser.add_argument(
        "--log-level",
        "-ll",
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Log Level to be assigned. This will print logs with level same or above",
    )

    subparsers = parser.add_subparsers(dest="command")
    _configure_validate_parser(subparsers)
    _configure_dist_parser(subparsers)
    _configure_verify_parser(subparsers)
    _configure_census_parser(subparsers)
    _configure_config_parser(subparsers)
    return parser


def _add_output_arguments(parser):
    parser.add_argument(
        "--json",
        action="store_true",
        help="Write the JSON report to stdout.",
    )
    parser.add_argument(
        "--format",
        "-fmt",
        choices=consts.FORMAT_TYPES,
        help="Format of the verdict summary on stderr. Defaults to table",
    )
    parser.add_argument(
        "--filter-status",
        "-fs",
        type=get_arg_list,
        help="Comma separated list of statuses to show in the summary: pass,fail",
    )


def _configure_validate_parser(subparsers):
    """Configure arguments to check a space spec."""
    validate_parser = subparsers.add_parser(
        "validate", help="Check the premetric axioms of a space and classify it"
    )
    validate_parser.add_argument(
        "--spec",
        "-s",
        required=True,
        help="Space spec file, or a built-in space: arens, double-interval, "
        "harmonic, cantor:k",
    )
    validate_parser.add_argument(
        "--seed", type=int, help="Seed for sampling presented spaces"
    )
    validate_parser.add_argument(
        "--sample",
        type=_check_positive,
        help="Number of points sampled from a presented space",
    )
    _add_output_arguments(validate_parser)


def _configure_dist_parser(subparsers):
    """Configure arguments to compute one exact distance."""
    dist_parser = subparsers.add_parser(
        "dist", help="Print the exact distance between two points of a construction"
    )
    dist_parser.add_argument(
        "--spec",
        "-s",
        required=True,
        help="Space spec file or built-in name; a presentation for eres",
    )
    dist_parser.add_argument(
        "--construction",
        "-con",
        default=consts.CONSTRUCTION_GAMMA,
        help="One of gamma, cobweb, tower:n, omega, eres. Defaults to gamma",
    )
    dist_parser.add_argument("point_a", help="First point, e.g. v:p or e:p,q,1/3")
    dist_parser.add_argument("point_b", help="Second point")
    dist_parser.add_argument(
        "--json", action="store_true", help="Write the JSON report to stdout."
    )


def _configure_verify_parser(subparsers):
    """Configure arguments to run verification suites."""
    verify_parser = subparsers.add_parser(
        "verify", help="Run verification suites and report every property"
    )
    _add_suite_arguments(verify_parser)
    _add_output_arguments(verify_parser)


def _add_suite_arguments(parser):
    parser.add_argument(
        "--suite",
        "-su",
        help="Comma separated suites: s3, s5, s7, s8, s9, s10 or all. Defaults to all",
    )
    parser.add_argument(
        "--grid", type=_check_positive, help="Number of points of the s3 table grid"
    )
    parser.add_argument(
        "--seed", type=int, help=f"PRNG seed, else ${consts.ENV_SEED_VAR}"
    )
    parser.add_argument(
        "--sample", type=_check_positive, help="Random bases and sampled points"
    )
    parser.add_argument(
        "--stem-pairs", type=_check_positive, help="Stem pairs for the tower suite"
    )
    parser.add_argument(
        "--max-stem-length", type=_check_positive, help="Longest sampled stem"
    )
    parser.add_argument(
        "--ii-max-denominator",
        type=_check_positive,
        help="Denominator bound of the double interval",
    )
    parser.add_argument(
        "--ii-ball-samples",
        type=_check_positive,
        help="Ball samples per extremality check",
    )
    parser.add_argument(
        "--ii-members", type=_check_positive, help="Sampled members of the cobweb"
    )
    parser.add_argument(
        "--cantor-bits", type=_check_positive, help="Bit length of the Cantor cube"
    )
    parser.add_argument(
        "--arens-bound", type=_check_positive, help="Listing bound of Arens' space"
    )


def _configure_census_parser(subparsers):
    """Configure arguments for distance value censuses."""
    census_parser = subparsers.add_parser(
        "census", help="Count the distance values realized on a sample"
    )
    census_parser.add_argument("target", help="cantor:k or eres:<presentation>")
    census_parser.add_argument(
        "--sample", type=_check_positive, help="Number of sampled points"
    )
    census_parser.add_argument("--seed", type=int, help="PRNG seed")
    census_parser.add_argument(
        "--max-stem-length", type=_check_positive, help="Longest sampled stem"
    )
    _add_output_arguments(census_parser)


def _configure_config_parser(subparsers):
    """Configure arguments to run suites stored in a YAML config file."""
    config_parser = subparsers.add_parser(
        "configs", help="Run verification suites stored in a YAML config file"
    )
    configs_subparsers = config_parser.add_subparsers(dest="config_cmd")
    run_parser = configs_subparsers.add_parser(
        "run", help="Run the suites of a YAML config"
    )
    run_parser.add_argument(
        "--config-file",
        "-c",
        help="YAML Config File path with the suite options.",
    )
    _add_output_arguments(run_parser)

    get_parser = configs_subparsers.add_parser(
        "get", help="Print the effective options of a YAML config"
    )
    get_parser.add_argument(
        "--config-file",
        "-c",
        help="YAML Config File path with the suite options.",
    )


def get_suite_overrides(args: Namespace) -> dict:
    """Suite options given on the command line, keyed like the YAML config."""
    return {
        consts.CONFIG_SUITE: getattr(args, "suite", None),
        consts.CONFIG_GRID: getattr(args, "grid", None),
        consts.CONFIG_SEED: getattr(args, "seed", None),
        consts.CONFIG_SAMPLE: getattr(args, "sample", None),
        consts.CONFIG_STEM_PAIRS: getattr(args, "stem_pairs", None),
        consts.CONFIG_MAX_STEM_LENGTH: getattr(args, "max_stem_length", None),
        consts.CONFIG_II_MAX_DENOMINATOR: getattr(args, "ii_max_denominator", None),
        consts.CONFIG_II_BALL_SAMPLES: getattr(args, "ii_ball_samples", None),
        consts.CONFIG_II_MEMBERS: getattr(args, "ii_members", None),
        consts.CONFIG_CANTOR_BITS: getattr(args, "cantor_bits", None),
        consts.CONFIG_ARENS_BOUND: getattr(args, "arens_bound", None),
        consts.CONFIG_FORMAT: getattr(args, "format", None),
        consts.CONFIG_FILTER_STATUS: getattr(args, "filter_status", None),
    }


def get_arg_list(arg_value, default_value=None):
    """Returns list of values from a comma separated argument.

    arg_value (str): Argument supplied
    default_value (Any): A default value to supply when arg_value is empty.
    """
    if not arg_value:
        return default_value
    return [v.strip() for v in arg_value.split(",") if v.strip()]


def _check_positive(value: int) -> int:
    ivalue = int(value)
    if ivalue <= 0:
        raise argparse.ArgumentTypeError("%s is an invalid positive int value" % value)
    return ivalue
