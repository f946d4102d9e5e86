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
"""The sequence decomposition D X of a presented sequential space.

D X consists of pairs (f, s) of a registered convergent sequence f and a
parameter s of S_0 = {0} u {1/n}. Two pairs are at distance 0 when they
evaluate to the same point, |t - s| when they share the sequence, and 1
otherwise. Every verdict computed here is relative to the registry.
"""

import dataclasses
import logging
import random
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence

from premetric_cobweb import consts, exceptions, jellyfish_distance, rationals
from premetric_cobweb.premetric import PremetricSpace, Verdict, as_callable
from premetric_cobweb.sequences import (
    LIMIT,
    ConstantTail,
    PointSet,
    S0Param,
    SequenceSpec,
    constant_sequence,
)


class SeqPresentation(object):
    def __init__(
        self,
        space: PremetricSpace,
        points: Iterable = None,
        sequences: Iterable[SequenceSpec] = (),
    ):
        """Initialize a presentation and register its sequences.

        Args:
            space (PremetricSpace): Point universe the sequences live in.
            points (Iterable): Listed points; each gets a constant sequence.
                Defaults to the space's own listing.
            sequences (Iterable[SequenceSpec]): Explicit convergent sequences.
        """
        self.space = space
        self.points = tuple(space.listed_points() if points is None else points)
        for x in self.points:
            space.check_point(x)
        self._sequences: Dict[str, SequenceSpec] = {}
        self._keys: Dict[tuple, str] = {}
        self._constant_ids: Dict[object, str] = {}
        self.aliases: Dict[str, str] = {}
        for seq in sequences:
            self.register(seq)
        for x in self.points:
            self.ensure_constant(x)

    @property
    def sequence_ids(self) -> List[str]:
        return list(self._sequences)

    @property
    def sequences(self) -> List[SequenceSpec]:
        return list(self._sequences.values())

    def sequence(self, seq_id: str) -> SequenceSpec:
        try:
            return self._sequences[self.aliases.get(seq_id, seq_id)]
        except KeyError:
            raise exceptions.UnknownSequence(
                jellyfish_distance.unknown_name_message(
                    "sequence", seq_id, self._sequences
                )
            )

    def register(self, seq: SequenceSpec) -> SequenceSpec:
        """Validate and add a sequence.

        Raises:
            DuplicateSequence: the id is taken or the same function is
                already registered under another id.
            InvalidSequence: the tail does not converge to the limit.
        """
        if seq.id in self._sequences:
            raise exceptions.DuplicateSequence(f"Sequence id '{seq.id}' is taken")
        self.space.check_point(seq.limit)
        for point in seq.prefix:
            self.space.check_point(point)
        self._check_convergent(seq)

        key = seq.extensional_key()
        if key in self._keys:
            raise exceptions.DuplicateSequence(
                f"Sequence '{seq.id}' is the same function as '{self._keys[key]}'"
            )
        self._sequences[seq.id] = seq
        self._keys[key] = seq.id
        return seq

    def _check_convergent(self, seq: SequenceSpec):
        if isinstance(seq.tail, ConstantTail):
            self.space.check_point(seq.tail.point)
            if seq.tail.declared or seq.tail.point == seq.limit:
                return
            if self.space.distance(seq.limit, seq.tail.point) == 0:
                return
            raise exceptions.InvalidSequence(
                f"Constant tail of '{seq.id}' is not its limit; "
                f"set \"{consts.SPEC_TAIL_DECLARED}\": true to accept it"
            )
        tail = seq.tail.family.distance_tail(self.space, seq.limit)
        if tail is None:
            logging.debug(
                "Cannot confirm convergence of '%s'; accepted as declared", seq.id
            )
            return
        if tail.limit != 0:
            raise exceptions.InvalidSequence(
                f"Terms of '{seq.id}' stay at distance "
                f"{rationals.format_rational(tail.limit)} from its limit"
            )

    def ensure_constant(self, x) -> str:
        """Register the constant sequence at x unless an identical one exists."""
        if x in self._constant_ids:
            return self._constant_ids[x]
        seq = constant_sequence(
            consts.CONSTANT_SEQUENCE_PREFIX + self.space.format_point(x), x
        )
        key = seq.extensional_key()
        if key in self._keys:
            seq_id = self._keys[key]
        else:
            seq_id = self.register(seq).id
        self._constant_ids[x] = seq_id
        return seq_id

    def constant_sequence_id(self, x) -> str:
        try:
            return self._constant_ids[x]
        except KeyError:
            raise exceptions.UnknownPoint(
                f"{self.space.format_point(x)} is not a listed point"
            )


@dataclasses.dataclass(frozen=True)
class DPoint(object):
    seq_id: str
    param: S0Param = LIMIT

    def __repr__(self):
        return f"{self.seq_id}@{self.param}"


def evaluate(presentation: SeqPresentation, a: DPoint):
    """The calculation map c_X: (f, s) -> f(s)."""
    return presentation.sequence(a.seq_id).value_at(a.param)


def d_premetric(presentation: SeqPresentation, a: DPoint, b: DPoint) -> Fraction:
    if evaluate(presentation, a) == evaluate(presentation, b):
        return rationals.ZERO
    if a.seq_id == b.seq_id:
        return abs(a.param.value - b.param.value)
    return rationals.ONE


class DSpace(PremetricSpace):
    """D X over the registered sequences of a presentation."""

    def __init__(self, presentation: SeqPresentation, terms: int = 3):
        self.presentation = presentation
        self.terms = terms
        self.name = f"D({presentation.space.name})"

    def distance(self, a: DPoint, b: DPoint) -> Fraction:
        return d_premetric(self.presentation, a, b)

    def has_point(self, a) -> bool:
        return isinstance(a, DPoint) and a.seq_id in self.presentation.sequence_ids

    def grid_points(self) -> List[DPoint]:
        """The limit and the first few terms of every registered sequence."""
        return [
            DPoint(seq_id, param)
            for seq_id in self.presentation.sequence_ids
            for param in [LIMIT] + [S0Param.term(n) for n in range(1, self.terms + 1)]
        ]

    def sample_points(self, rng: random.Random, size: int = None) -> List[DPoint]:
        points = self.grid_points()
        if size is None or size >= len(points):
            return points
        return rng.sample(points, size)

    def parse_point(self, text: str) -> DPoint:
        seq_id, sep, param = text.strip().rpartition("@")
        if not sep or not param.isdigit():
            raise exceptions.ParseError(
                f"D X points are written <sequence>@<n>, got '{text}'", "point"
            )
        self.presentation.sequence(seq_id)
        return DPoint(seq_id, S0Param(int(param)))

    def format_point(self, a: DPoint) -> str:
        return f"{a.seq_id}@{a.param}"


def is_seq_open(presentation: SeqPresentation, subset: PointSet) -> Verdict:
    """Every registered sequence with limit in the set is eventually in it.

    The witness of a failure is the offending sequence id.
    """
    checked = 0
    for seq in presentation.sequences:
        if seq.limit not in subset:
            continue
        checked += 1
        eventual, _ = subset.settles(seq)
        if not eventual:
            return Verdict(False, seq.id, True, checked)
    return Verdict(True, None, True, checked)


def lemma41_ball_witness(
    presentation: SeqPresentation, a: DPoint, subset: PointSet
) -> int:
    """Return the least m with f(1/n) in the set for every n >= m.

    The ball of radius 1/m around (f, 0) then holds only zero distance
    aliases of f(0) and terms f(1/n) with n > m, all of which lie in the set.

    Raises:
        NotInV: f(0) is not in the set.
        NotSeqOpen: the set is not sequentially open.
    """
    if not a.param.is_limit:
        raise exceptions.OutOfRange(f"{a!r} must carry the limit parameter")
    x = evaluate(presentation, a)
    if x not in subset:
        raise exceptions.NotInV(
            f"{presentation.space.format_point(x)} is not in the given set"
        )
    verdict = is_seq_open(presentation, subset)
    if not verdict:
        raise exceptions.NotSeqOpen(
            f"Sequence '{verdict.witness}' converges into the set but is "
            "not eventually inside it"
        )

    seq = presentation.sequence(a.seq_id)
    _, settled = subset.settles(seq)
    m = settled
    while m > 1 and seq.term(m - 1) in subset:
        m -= 1
    for n in range(m + 1, settled + 2):
        if seq.term(n) not in subset:
            raise exceptions.NotSeqOpen(f"Term {n} of '{seq.id}' escapes the set")
    return m


def relabel(
    presentation: SeqPresentation, mapping: Callable, target: PremetricSpace
) -> SeqPresentation:
    """Presentation of the image of X under a map into target.

    Sequence ids are kept, so (f, s) corresponds to (g o f, s). When g
    identifies two registered sequences, the later id becomes an alias of
    the earlier one.
    """
    mapping = as_callable(mapping)
    image = SeqPresentation(target, [])
    for seq in presentation.sequences:
        relabeled = seq.relabel(mapping)
        existing = image._keys.get(relabeled.extensional_key())
        if existing is not None:
            image.aliases[seq.id] = existing
        else:
            image.register(relabeled)
    for x in presentation.points:
        image.points += (mapping(x),)
        image.ensure_constant(mapping(x))
    image.points = tuple(dict.fromkeys(image.points))
    return image


def d_map(mapping: Callable, a: DPoint, target: SeqPresentation = None) -> DPoint:
    """D g: (f, s) -> (g o f, s) in the relabeled presentation."""
    seq_id = a.seq_id if target is None else target.aliases.get(a.seq_id, a.seq_id)
    return DPoint(seq_id, a.param)


def zero_distance_aliases(
    presentation: SeqPresentation, a: DPoint, candidates: Sequence[DPoint]
) -> List[DPoint]:
    """Candidates evaluating to the same point as a."""
    x = evaluate(presentation, a)
    return [b for b in candidates if evaluate(presentation, b) == x]
