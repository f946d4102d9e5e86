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
"""Convergent sequences given by a finite prefix and a decidable tail, and
point sets whose membership along such a tail is eventually constant."""

import dataclasses
from fractions import Fraction
from typing import Callable, Optional, Tuple

from premetric_cobweb import exceptions

TREND_CONSTANT = "constant"
TREND_DECREASING = "decreasing"
TREND_INCREASING = "increasing"


@dataclasses.dataclass(frozen=True, order=True)
class S0Param(object):
    """A point of S_0 = {0} u {1/n}: n = 0 is the limit 0, n >= 1 is 1/n."""

    n: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise exceptions.ParseError(f"Invalid S0 index {self.n}", "param")

    @classmethod
    def term(cls, n: int) -> "S0Param":
        if n < 1:
            raise exceptions.ParseError(f"Term index must be >= 1, got {n}", "param")
        return cls(n)

    @property
    def is_limit(self) -> bool:
        return self.n == 0

    @property
    def value(self) -> Fraction:
        return Fraction(0) if self.is_limit else Fraction(1, self.n)

    def __str__(self):
        return str(self.n)


LIMIT = S0Param(0)


def s0_value(param: S0Param) -> Fraction:
    return param.value


@dataclasses.dataclass(frozen=True)
class DistanceTail(object):
    """Eventual behaviour of k -> d(center, term(k)) from index start on.

    constant: equal to limit; decreasing: above limit and non-increasing;
    increasing: below limit and non-decreasing.
    """

    limit: Fraction
    start: int
    trend: str


class IndexedFamily(object):
    """An injective computable family of terms indexed from 1."""

    name = "family"
    start = 1

    @property
    def limit(self):
        raise NotImplementedError

    def term(self, k: int):
        raise NotImplementedError

    def index_of(self, point) -> Optional[int]:
        raise NotImplementedError

    def distance_tail(self, space, center) -> Optional[DistanceTail]:
        return None

    def __eq__(self, other):
        return isinstance(other, IndexedFamily) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"IndexedFamily({self.name})"


class RelabeledFamily(IndexedFamily):
    """Image of a family under a carrier map; only evaluation is known."""

    def __init__(self, base: IndexedFamily, mapping: Callable):
        self.base = base
        self.mapping = mapping
        self.name = f"relabel({base.name})"

    @property
    def limit(self):
        return self.mapping(self.base.limit)

    def term(self, k):
        return self.mapping(self.base.term(k))

    def index_of(self, point):
        raise exceptions.UndecidableTail(f"Cannot invert terms of {self.name}")


@dataclasses.dataclass(frozen=True)
class ConstantTail(object):
    point: object
    declared: bool = False


@dataclasses.dataclass(frozen=True)
class IndexedTail(object):
    family: IndexedFamily


@dataclasses.dataclass(frozen=True)
class SequenceSpec(object):
    id: str
    limit: object
    prefix: Tuple = ()
    tail: object = None

    def term(self, n: int):
        if n < 1:
            raise exceptions.ParseError(f"Term index must be >= 1, got {n}", "param")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        if isinstance(self.tail, ConstantTail):
            return self.tail.point
        return self.tail.family.term(n)

    def value_at(self, param: S0Param):
        return self.limit if param.is_limit else self.term(param.n)

    @property
    def is_eventually_constant(self) -> bool:
        return isinstance(self.tail, ConstantTail)

    def has_value(self, point) -> bool:
        """Whether the point is f(s) for some s in S_0."""
        if point == self.limit or point in self.prefix:
            return True
        if isinstance(self.tail, ConstantTail):
            return point == self.tail.point
        index = self.tail.family.index_of(point)
        return index is not None and index > len(self.prefix)

    def canonical(self) -> "SequenceSpec":
        """Drop trailing prefix entries that repeat the constant tail."""
        prefix = list(self.prefix)
        if isinstance(self.tail, ConstantTail):
            while prefix and prefix[-1] == self.tail.point:
                prefix.pop()
        return dataclasses.replace(self, prefix=tuple(prefix))

    def extensional_key(self):
        canonical = self.canonical()
        if isinstance(canonical.tail, ConstantTail):
            tail_key = ("constant", canonical.tail.point)
        else:
            tail_key = ("indexed", canonical.tail.family.name)
        return (canonical.limit, canonical.prefix, tail_key)

    def relabel(self, mapping: Callable) -> "SequenceSpec":
        if isinstance(self.tail, ConstantTail):
            tail = ConstantTail(mapping(self.tail.point), self.tail.declared)
        else:
            tail = IndexedTail(RelabeledFamily(self.tail.family, mapping))
        return SequenceSpec(
            self.id,
            mapping(self.limit),
            tuple(mapping(p) for p in self.prefix),
            tail,
        )


def constant_sequence(seq_id: str, point) -> SequenceSpec:
    return SequenceSpec(seq_id, point, (), ConstantTail(point))


def converges_by_premetric(space, seq: SequenceSpec, x) -> bool:
    """lim d(x, x_n) = 0, decided from the tail rule."""
    space.check_point(x)
    if isinstance(seq.tail, ConstantTail):
        return space.distance(x, seq.tail.point) == 0
    tail = seq.tail.family.distance_tail(space, x)
    if tail is None:
        raise exceptions.UndecidableTail(
            f"{seq.tail.family.name} does not determine distances from {x!r}"
        )
    return tail.limit == 0


class PointSet(object):
    """A decidable set whose membership along an injective tail settles."""

    def __contains__(self, point) -> bool:
        raise NotImplementedError

    def _settles_family(self, family: IndexedFamily) -> Tuple[bool, int]:
        raise NotImplementedError

    def settles(self, seq: SequenceSpec) -> Tuple[bool, int]:
        """Return (eventual membership, K) with membership constant for n >= K."""
        offset = len(seq.prefix) + 1
        if isinstance(seq.tail, ConstantTail):
            return seq.tail.point in self, offset
        eventual, start = self._settles_family(seq.tail.family)
        return eventual, max(start, offset)

    def __or__(self, other):
        return UnionSet(self, other)

    def __and__(self, other):
        return IntersectionSet(self, other)

    def __invert__(self):
        return ComplementSet(self)


class Universe(PointSet):
    def __contains__(self, point):
        return True

    def _settles_family(self, family):
        return True, family.start

    def __repr__(self):
        return "Universe()"


class FinitePointSet(PointSet):
    def __init__(self, points, complement: bool = False):
        self.points = tuple(dict.fromkeys(points))
        self.complement = complement

    def __contains__(self, point):
        return (point in self.points) != self.complement

    def _settles_family(self, family):
        indices = [family.index_of(p) for p in self.points]
        indices = [i for i in indices if i is not None]
        start = max(indices) + 1 if indices else family.start
        return self.complement, start

    def __repr__(self):
        kind = "cofinite" if self.complement else "finite"
        return f"FinitePointSet({kind}, {len(self.points)} points)"


class BallPointSet(PointSet):
    def __init__(self, space, center, radius: Fraction):
        if radius <= 0:
            raise exceptions.ZeroRadius(f"Radius must be positive, got {radius}")
        self.space = space
        self.center = space.check_point(center)
        self.radius = Fraction(radius)

    def __contains__(self, point):
        return self.space.distance(self.center, point) < self.radius

    def _settles_family(self, family):
        tail = family.distance_tail(self.space, self.center)
        if tail is None:
            raise exceptions.UndecidableTail(
                f"{family.name} does not determine distances from {self.center!r}"
            )

        def distance(k):
            return self.space.distance(self.center, family.term(k))

        if tail.trend == TREND_CONSTANT:
            return tail.limit < self.radius, tail.start
        if tail.trend == TREND_DECREASING:
            if tail.limit >= self.radius:
                return False, tail.start
            k = tail.start
            while distance(k) >= self.radius:
                k += 1
            return True, k
        if tail.limit <= self.radius:
            return True, tail.start
        k = tail.start
        while distance(k) < self.radius:
            k += 1
        return False, k

    def __repr__(self):
        return f"BallPointSet({self.center!r}, {self.radius})"


class UnionSet(PointSet):
    def __init__(self, *parts: PointSet):
        self.parts = parts

    def __contains__(self, point):
        return any(point in part for part in self.parts)

    def _settles_family(self, family):
        results = [part._settles_family(family) for part in self.parts]
        return any(r[0] for r in results), max(r[1] for r in results)


class IntersectionSet(PointSet):
    def __init__(self, *parts: PointSet):
        self.parts = parts

    def __contains__(self, point):
        return all(point in part for part in self.parts)

    def _settles_family(self, family):
        results = [part._settles_family(family) for part in self.parts]
        return all(r[0] for r in results), max(r[1] for r in results)


class ComplementSet(PointSet):
    def __init__(self, part: PointSet):
        self.part = part

    def __contains__(self, point):
        return point not in self.part

    def _settles_family(self, family):
        eventual, start = self.part._settles_family(family)
        return not eventual, start
