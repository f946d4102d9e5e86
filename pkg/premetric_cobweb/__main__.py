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

import json
import logging
import random
import sys

from yaml import Dumper, dump

from premetric_cobweb import (
    census,
    cli_tools,
    consts,
    exceptions,
    jellyfish_distance,
    metadata,
    point_parser,
    rationals,
    spec_io,
    verification,
)
from premetric_cobweb.cobweb import CobwebSpace
from premetric_cobweb.config_manager import ConfigManager
from premetric_cobweb.eres import EResolution
from premetric_cobweb.graph_gamma import GammaSpace
from premetric_cobweb.premetric import (
    classify,
    is_1_separating,
    is_2_separating,
    validate_premetric,
)
from premetric_cobweb.result_handlers.text import TextResultHandler
from premetric_cobweb.topology import is_basic, is_seq_hausdorff_finite
from premetric_cobweb.tower import OmegaSpace, TowerSpace
from premetric_cobweb.verification import Verifier

# by default yaml dumps lists as pointers. This disables that feature
Dumper.ignore_aliases = lambda *args: True

# Log level mappings for the input argument of log level string
LOG_LEVEL_MAP = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def _get_arg_config_file(args):
    """Return String YAML config file path."""
    if not args.config_file:
        raise exceptions.ParseError("YAML Config File was not supplied.", "config")
    elif not args.config_file.endswith(".yaml"):
        raise exceptions.ParseError(
            f"Invalid YAML config name: {args.config_file}. "
            "Provide YAML file extension.",
            "config",
        )
    return args.config_file


def emit_report(
    args, run_metadata: metadata.RunMetadata, format=None, status_list=None
) -> int:
    """Print the verdict summary to stderr and, with --json, the report to
    stdout. Returns the exit code of the run."""
    result_df = verification.results_frame(run_metadata.results)
    if not result_df.empty:
        TextResultHandler(
            format or getattr(args, "format", None) or "table",
            status_list or getattr(args, "filter_status", None),
        ).execute(result_df)
    if getattr(args, "json", False):
        print(json.dumps(run_metadata.report(), indent=2, sort_keys=True))
    if run_metadata.status == consts.STATUS_PASS:
        return consts.EXIT_PASS
    return consts.EXIT_PROPERTY_FAILURE


def run_validate(args) -> int:
    """Check the premetric axioms of a spec and record its classification."""
    space, digest = spec_io.resolve_space(args.spec)
    options = ConfigManager(overrides={consts.CONFIG_SEED: args.seed})
    rng = random.Random(f"{options.seed}:validate")
    sample = args.sample
    run_metadata = metadata.RunMetadata(
        command="validate", seed=options.seed, inputs_digest=digest
    )
    run_metadata.results = [
        verification.run_case(
            "validate",
            "premetric",
            "d(x, x) = 0 and d >= 0",
            lambda: validate_premetric(space, rng, sample),
        )
    ]
    if run_metadata.status == consts.STATUS_PASS:
        flags = classify(space, rng, sample)
        details = {
            "space": space.name,
            "certified": flags.certified,
            "flags": flags.as_flags(),
            "witnesses": spec_io.to_jsonable(flags.witnesses),
            "is_1_separating": bool(is_1_separating(space, rng, sample)),
            "is_2_separating": bool(is_2_separating(space, rng, sample)),
        }
        if space.is_finite and hasattr(space, "table"):
            details["is_basic"] = bool(is_basic(space))
            details["is_seq_hausdorff"] = bool(is_seq_hausdorff_finite(space))
        run_metadata.details = details
        logging.info("Classification of %s: %s", space.name, details["flags"])
    run_metadata.finish()
    return emit_report(args, run_metadata)


def get_construction(args):
    """Return the space of the requested construction and its point parser."""
    construction = args.construction.strip()
    name, _, level = construction.partition(":")
    if name == consts.CONSTRUCTION_ERES:
        presentation, digest = spec_io.resolve_presentation(args.spec)
        resolution = EResolution(presentation)
        space = OmegaSpace(resolution.dspace)
        return space, space.parse_point, digest

    base, digest = spec_io.resolve_space(args.spec)
    if name == consts.CONSTRUCTION_GAMMA and not level:
        space = GammaSpace(base)

        def parse(text):
            point = point_parser.parse_gamma_point(text, base.parse_point)
            return space.check_point(point)

        return space, parse, digest
    if name == consts.CONSTRUCTION_COBWEB and not level:
        space = CobwebSpace(base)
        return space, space.parse_point, digest
    if name == consts.CONSTRUCTION_TOWER:
        if not level.isdigit() or int(level) < 1:
            raise exceptions.ParseError(
                f"Tower levels are written tower:n with n >= 1, got '{construction}'",
                "construction",
            )
        space = TowerSpace(base).level(int(level))
        return space, space.parse_point, digest
    if name == consts.CONSTRUCTION_OMEGA and not level:
        space = OmegaSpace(base)
        return space, space.parse_point, digest
    raise exceptions.ParseError(
        jellyfish_distance.unknown_name_message(
            "construction", construction, consts.CONSTRUCTIONS + ["tower:n"]
        ),
        "construction",
    )


def run_dist(args) -> int:
    space, parse, digest = get_construction(args)
    a, b = parse(args.point_a), parse(args.point_b)
    distance = rationals.format_rational(space.distance(a, b))
    run_metadata = metadata.RunMetadata(command="dist", inputs_digest=digest)
    run_metadata.details = {
        "construction": args.construction,
        "a": space.format_point(a),
        "b": space.format_point(b),
        "distance": distance,
    }
    run_metadata.finish()
    if args.json:
        print(json.dumps(run_metadata.report(), indent=2, sort_keys=True))
    else:
        print(distance)
    return consts.EXIT_PASS


def run_verify(args, config_manager: ConfigManager) -> int:
    verifier = Verifier(config_manager)
    verifier.execute()
    return emit_report(
        args,
        verifier.run_metadata,
        config_manager.format,
        config_manager.filter_status,
    )


def run_census(args) -> int:
    options = ConfigManager(
        overrides={
            consts.CONFIG_SEED: args.seed,
            consts.CONFIG_SAMPLE: args.sample,
            consts.CONFIG_MAX_STEM_LENGTH: args.max_stem_length,
        }
    )
    run_metadata = census.cmd_census(
        args.target, options.sample, options.seed, options.max_stem_length
    )
    logging.info("Census details: %s", json.dumps(run_metadata.details, sort_keys=True))
    return emit_report(args, run_metadata)


def run_configs(args) -> int:
    """Run commands related to suite config YAMLs."""
    if args.config_cmd == "run":
        config_manager = ConfigManager.from_yaml(
            _get_arg_config_file(args), cli_tools.get_suite_overrides(args)
        )
        return run_verify(args, config_manager)
    elif args.config_cmd == "get":
        # Get and print the effective yaml config.
        config_manager = ConfigManager.from_yaml(_get_arg_config_file(args))
        dump(config_manager.as_dict(), sys.stdout)
        return consts.EXIT_PASS
    else:
        raise ValueError(f"Configs argument '{args.config_cmd}' is not supported")


def run(args) -> int:
    if args.command == "validate":
        return run_validate(args)
    elif args.command == "dist":
        return run_dist(args)
    elif args.command == "verify":
        config_manager = ConfigManager(overrides=cli_tools.get_suite_overrides(args))
        return run_verify(args, config_manager)
    elif args.command == "census":
        return run_census(args)
    elif args.command == "configs":
        return run_configs(args)
    else:
        raise ValueError(f"Positional Argument '{args.command}' is not supported")


def main():
    # Create Parser and Get Deployment Info
    args = cli_tools.get_parsed_args()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else LOG_LEVEL_MAP[args.log_level],
        format="%(asctime)s-%(levelname)s: %(message)s",
        datefmt="%m/%d/%Y %I:%M:%S %p",
    )
    try:
        exit_code = run(args)
    except exceptions.InputException as e:
        logging.error("%s: %s", type(e).__name__, e)
        exit_code = consts.EXIT_INPUT_ERROR
    except exceptions.PremetricException as e:
        logging.error("%s: %s", type(e).__name__, e)
        exit_code = consts.EXIT_PROPERTY_FAILURE
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
