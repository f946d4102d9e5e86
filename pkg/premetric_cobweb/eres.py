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
"""The economical resolution E X: the tower over D X and the map to X
given by compressing a stem and evaluating the resulting sequence."""

import collections
import dataclasses
import logging
import random
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from premetric_cobweb import consts, rationals
from premetric_cobweb.graph_gamma import Vertex
from premetric_cobweb.premetric import Verdict
from premetric_cobweb.seqdec import DPoint, DSpace, SeqPresentation, d_map, evaluate
from premetric_cobweb.sequences import LIMIT
from premetric_cobweb.tower import (
    CensusResult,
    TowerPoint,
    TowerSpace,
    economy_census,
    omega_compression,
    omega_distance,
    omega_map,
    sample_stems,
    validate_stem,
)


class EResolution(object):
    def __init__(self, presentation: SeqPresentation):
        """Initialize the resolution of a presented sequential space.

        Args:
            presentation (SeqPresentation): Registry of convergent sequences;
                its D X is the base of the tower.
        """
        self.presentation = presentation
        self.dspace = DSpace(presentation)
        self.tower = TowerSpace(self.dspace)
        self.name = f"E({presentation.space.name})"


def resolve(resolution: EResolution, a: TowerPoint):
    """xi_X = c_X after the tower compression."""
    return evaluate(resolution.presentation, omega_compression(resolution.tower, a))


def lift_base_point(resolution: EResolution, x) -> TowerPoint:
    """The stem [v((const_x, 0))], a section of resolve over listed points."""
    seq_id = resolution.presentation.constant_sequence_id(x)
    return validate_stem(resolution.tower, [Vertex(DPoint(seq_id, LIMIT))])


@dataclasses.dataclass(frozen=True)
class NeighborhoodWitness(object):
    """A ball whose image under resolve lies in one convergent sequence.

    Exactly one of seq_id and point is set; point means a singleton image.
    """

    radius: Fraction
    seq_id: Optional[str] = None
    point: object = None

    def covers(self, resolution: EResolution, x) -> bool:
        if self.seq_id is not None:
            return resolution.presentation.sequence(self.seq_id).has_value(x)
        return x == self.point


def convergent_sequence_neighborhood(
    resolution: EResolution, a: TowerPoint
) -> NeighborhoodWitness:
    first = a.stem[0]
    if isinstance(first, Vertex):
        return NeighborhoodWitness(rationals.ONE, seq_id=first.point.seq_id)
    return NeighborhoodWitness(min(first.t, 1 - first.t), point=resolve(resolution, a))


def verify_neighborhood(
    resolution: EResolution, a: TowerPoint, sample: Sequence[TowerPoint]
) -> Verdict:
    """Sampled points of the witness ball resolve into the witness image."""
    witness = convergent_sequence_neighborhood(resolution, a)
    checked = 0
    for b in sample:
        if omega_distance(resolution.tower, a, b) >= witness.radius:
            continue
        checked += 1
        if not witness.covers(resolution, resolve(resolution, b)):
            return Verdict(False, (a, b), False, checked)
    return Verdict(True, None, False, checked)


@dataclasses.dataclass
class ResolutionCensus(object):
    census: CensusResult
    fibers: dict

    def as_dict(self) -> dict:
        result = self.census.as_dict()
        result["fiber_count"] = len(self.fibers)
        result["fibers"] = self.fibers
        return result


def resolution_census(
    resolution: EResolution, sample: Sequence[TowerPoint]
) -> ResolutionCensus:
    """Economy census of the sample and its partition into fibers of resolve."""
    census = economy_census(resolution.tower, sample)
    space = resolution.presentation.space
    fibers = collections.Counter(
        space.format_point(resolve(resolution, a)) for a in dict.fromkeys(sample)
    )
    logging.info(
        "Resolution census of %s: %s values over %s fibers",
        resolution.name,
        census.value_count,
        len(fibers),
    )
    return ResolutionCensus(census, dict(sorted(fibers.items())))


def sample_epoints(
    resolution: EResolution,
    rng: random.Random,
    count: int,
    max_length: int = consts.DEFAULT_MAX_STEM_LENGTH,
    base_size: int = 24,
) -> List[TowerPoint]:
    base_points = resolution.dspace.sample_points(rng, base_size)
    return sample_stems(resolution.tower, rng, count, max_length, base_points)


def eres_map(
    mapping: Callable, source: EResolution, target: EResolution, a: TowerPoint
) -> TowerPoint:
    """E g on a stem, for target presented as the relabeling of source by g."""
    def lift(p):
        return d_map(mapping, p, target.presentation)

    return omega_map(lift, source.tower, target.tower, a)
