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
"""Distance value censuses of truncated Cantor cubes and resolution samples.

Targets are written "cantor:<k>" or "eres:<presentation>", where the
presentation is a built-in name or a presentation spec file.
"""

import logging
import random

from premetric_cobweb import (
    consts,
    exceptions,
    file_helper,
    jellyfish_distance,
    metadata,
    named_spaces,
    spec_io,
    verification,
)
from premetric_cobweb.eres import EResolution, resolution_census, sample_epoints
from premetric_cobweb.premetric import Verdict, isoceles_check

CENSUS_SUITE = "census"
TARGET_CANTOR = "cantor"
TARGET_ERES = "eres"
TARGET_FORMS = [f"{TARGET_CANTOR}:k", f"{TARGET_ERES}:<presentation>"]


def split_target(target: str):
    kind, sep, arg = target.strip().partition(":")
    if not sep or not arg or kind not in (TARGET_CANTOR, TARGET_ERES):
        raise exceptions.ParseError(
            jellyfish_distance.unknown_name_message(
                "census target", target, TARGET_FORMS
            ),
            "target",
        )
    return kind, arg


def cantor_bits(arg: str) -> int:
    if not arg.isdigit():
        raise exceptions.ParseError(f"Invalid Cantor bit length '{arg}'", "target")
    bits = int(arg)
    if not 1 <= bits <= consts.MAX_CANTOR_BITS:
        raise exceptions.OutOfBounds(
            f"Cantor bit length must be in 1..{consts.MAX_CANTOR_BITS}, got {bits}"
        )
    return bits


def _cantor_census(run_metadata: metadata.RunMetadata, bits: int):
    census = named_spaces.cantor_census(bits)
    run_metadata.details = census
    run_metadata.results = [
        verification.run_case(
            CENSUS_SUITE,
            "value-count",
            "{0,1}^k realizes exactly k + 1 distance values",
            lambda: Verdict(
                census["value_count"] == bits + 1,
                {"value_count": census["value_count"], "expected": bits + 1},
                True,
                census["pairs"],
            ),
        ),
        verification.run_case(
            CENSUS_SUITE,
            "isoceles",
            "the two largest sides of every triangle are equal",
            lambda: isoceles_check(named_spaces.CantorSpace(bits)),
        ),
    ]


def _eres_census(
    run_metadata: metadata.RunMetadata,
    arg: str,
    sample: int,
    max_length: int,
    seed: int,
):
    presentation, digest = spec_io.resolve_presentation(arg)
    run_metadata.inputs_digest = digest
    resolution = EResolution(presentation)
    rng = random.Random(f"{seed}:{CENSUS_SUITE}")
    points = sample_epoints(resolution, rng, sample, max_length)
    logging.info("Census over %s sampled points of %s", len(points), resolution.name)

    def max_attained():
        report = resolution_census(resolution, points)
        run_metadata.details = report.as_dict()
        return Verdict(True, None, False, report.census.pairs)

    def counting_bound():
        if not run_metadata.details:
            return Verdict(False, "census did not complete", False)
        holds = run_metadata.details["bound_holds"]
        return Verdict(
            holds,
            None
            if holds
            else {
                "value_count": run_metadata.details["value_count"],
                "bound": run_metadata.details["bound"],
            },
            False,
            run_metadata.details["pairs"],
        )

    run_metadata.results = [
        verification.run_case(
            CENSUS_SUITE,
            "max-attained",
            "every tower distance is a level term",
            max_attained,
        ),
        verification.run_case(
            CENSUS_SUITE,
            "counting-bound",
            "|values| <= 1 + sum_n |pi_n(A)|^2",
            counting_bound,
        ),
    ]


def cmd_census(
    target: str,
    sample: int = consts.DEFAULT_SAMPLE_SIZE,
    seed: int = consts.DEFAULT_SEED,
    max_length: int = consts.DEFAULT_MAX_STEM_LENGTH,
) -> metadata.RunMetadata:
    """Run a census and return its report metadata.

    Raises:
        ParseError: the target is not of a known form.
        OutOfBounds: the Cantor bit length is outside 1..12.
    """
    kind, arg = split_target(target)
    run_metadata = metadata.RunMetadata(
        command=f"census {target}",
        seed=seed,
        inputs_digest=file_helper.content_digest(target),
    )
    if kind == TARGET_CANTOR:
        _cantor_census(run_metadata, cantor_bits(arg))
    else:
        _eres_census(run_metadata, arg, sample, max_length, seed)
    run_metadata.finish()
    return run_metadata
