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
"""Premetric spaces and their metric-level predicates.

A premetric is any map d: X x X -> [0, inf) with d(x, x) = 0. Finite spaces
carry a total distance table and get certified answers; rule-presented spaces
compute distances on demand and are classified on seeded samples only.
"""

import dataclasses
import itertools
import logging
import random
from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy

from premetric_cobweb import exceptions, jellyfish_distance, rationals

Point = Hashable


@dataclasses.dataclass
class Verdict(object):
    """Outcome of a checked property with an optional counterexample."""

    holds: bool
    witness: Optional[Any] = None
    certified: bool = True
    checked: int = 0

    def __bool__(self):
        return bool(self.holds)


@dataclasses.dataclass
class Classification(object):
    is_symmetric: bool
    is_pseudometric: bool
    is_metric: bool
    is_ultrametric: bool
    witnesses: Dict[str, tuple] = dataclasses.field(default_factory=dict)
    certified: bool = True
    checked: int = 0

    def as_flags(self) -> Dict[str, bool]:
        return {
            "is_symmetric": self.is_symmetric,
            "is_pseudometric": self.is_pseudometric,
            "is_metric": self.is_metric,
            "is_ultrametric": self.is_ultrametric,
        }


class PremetricSpace(object):
    """Base class of every space the constructions are built over."""

    name = "premetric"
    is_finite = False

    def distance(self, x: Point, y: Point) -> Fraction:
        raise NotImplementedError

    def has_point(self, x: Point) -> bool:
        raise NotImplementedError

    def check_point(self, x: Point) -> Point:
        if not self.has_point(x):
            raise exceptions.UnknownPoint(
                f"{self.format_point(x)} is not a point of {self.name}"
            )
        return x

    def truncated_distance(self, x: Point, y: Point) -> Fraction:
        return rationals.truncate_one(self.distance(x, y))

    def listed_points(self) -> List[Point]:
        """Return the explicitly listed points, if the space has any."""
        raise NotImplementedError(f"{self.name} has no listed points")

    def sample_points(self, rng: random.Random, size: int) -> List[Point]:
        raise NotImplementedError

    def parse_point(self, text: str) -> Point:
        raise NotImplementedError

    def format_point(self, x: Point) -> str:
        return str(x)


class FinitePremetricSpace(PremetricSpace):
    is_finite = True

    def __init__(
        self,
        points: Sequence[Point],
        table: Dict[Tuple[Point, Point], Fraction],
        name: str = "finite",
    ):
        """Initialize a finite premetric space from a total distance table.

        Args:
            points (Sequence): Ordered, duplicate free point ids.
            table (Dict): Maps every ordered pair (x, y) to d(x, y).
            name (str): Display name used in reports.
        """
        self._points = tuple(points)
        if len(set(self._points)) != len(self._points):
            raise exceptions.ParseError("Duplicate point ids", "points")
        self._index = {p: i for i, p in enumerate(self._points)}
        self._table = {}
        for x in self._points:
            for y in self._points:
                if (x, y) not in table:
                    raise exceptions.ParseError(
                        f"Missing distance for pair ({x}, {y})", "dist"
                    )
                self._table[(x, y)] = Fraction(table[(x, y)])
        self.name = name
        self._scaled = None

    @classmethod
    def from_function(
        cls, points: Sequence[Point], dist: Callable, name: str = "finite"
    ) -> "FinitePremetricSpace":
        points = tuple(points)
        table = {(x, y): dist(x, y) for x in points for y in points}
        return cls(points, table, name=name)

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._points

    @property
    def table(self) -> Dict[Tuple[Point, Point], Fraction]:
        return dict(self._table)

    def __len__(self):
        return len(self._points)

    def __eq__(self, other):
        return (
            isinstance(other, FinitePremetricSpace)
            and self._points == other._points
            and self._table == other._table
        )

    def __hash__(self):
        return hash(self._points)

    def __repr__(self):
        return f"FinitePremetricSpace({self.name!r}, {len(self._points)} points)"

    def distance(self, x: Point, y: Point) -> Fraction:
        try:
            return self._table[(x, y)]
        except KeyError:
            missing = x if x not in self._index else y
            raise exceptions.UnknownPoint(self._unknown_message(missing))

    def has_point(self, x: Point) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def listed_points(self) -> List[Point]:
        return list(self._points)

    def sample_points(self, rng: random.Random, size: int = None) -> List[Point]:
        if size is None or size >= len(self._points):
            return list(self._points)
        return rng.sample(list(self._points), size)

    def parse_point(self, text: str) -> Point:
        if text in self._index:
            return text
        raise exceptions.UnknownPoint(self._unknown_message(text))

    def index(self, x: Point) -> int:
        return self._index[x]

    def values(self) -> List[Fraction]:
        """Return the sorted distinct realized distance values."""
        return sorted(set(self._table.values()))

    def scaled_matrix(self) -> Tuple[numpy.ndarray, int]:
        """Return the distance table as an integer matrix and its scale."""
        if self._scaled is None:
            self._scaled = _scaled_matrix(self, self._points)
        return self._scaled

    def _unknown_message(self, point) -> str:
        return jellyfish_distance.unknown_name_message(
            f"point in {self.name}", str(point), [str(p) for p in self._points]
        )


class TruncatedSpace(PremetricSpace):
    """The space with distance min{1, d} over a presented base."""

    def __init__(self, base: PremetricSpace):
        self.base = base
        self.name = f"truncate({base.name})"

    def distance(self, x, y):
        return self.base.truncated_distance(x, y)

    def has_point(self, x):
        return self.base.has_point(x)

    def listed_points(self):
        return self.base.listed_points()

    def sample_points(self, rng, size):
        return self.base.sample_points(rng, size)

    def parse_point(self, text):
        return self.base.parse_point(text)

    def format_point(self, x):
        return self.base.format_point(x)


def as_callable(f) -> Callable:
    """Accept either a mapping or a callable as a map between carriers."""
    if isinstance(f, dict):
        return f.__getitem__
    return f


def _points_for(space: PremetricSpace, rng=None, sample_size=None) -> List[Point]:
    if space.is_finite:
        return space.listed_points()
    rng = rng or random.Random(0)
    points = space.sample_points(rng, sample_size)
    logging.debug("Sampled %s points of %s", len(points), space.name)
    return points


def _scaled_matrix(space: PremetricSpace, points: Sequence[Point]):
    values = [[space.distance(x, y) for y in points] for x in points]
    scale = rationals.common_scale(v for row in values for v in row)
    scaled = [[int(v * scale) for v in row] for row in values]
    largest = max((max(row) for row in scaled), default=0)
    dtype = numpy.int64 if largest < 2**60 else object
    return numpy.array(scaled, dtype=dtype).reshape(len(points), len(points)), scale


def _matrix_for(space, points):
    if space.is_finite and list(points) == space.listed_points():
        return space.scaled_matrix()
    return _scaled_matrix(space, points)


def _first(mask: numpy.ndarray):
    hits = numpy.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def validate_premetric(space: PremetricSpace, rng=None, sample_size=None) -> Verdict:
    """Check d(x, x) = 0 and non-negativity.

    Raises:
        Violation: the first point or pair breaking the axioms.
    """
    points = _points_for(space, rng, sample_size)
    for x in points:
        if space.distance(x, x) != 0:
            raise exceptions.Violation(
                x, f"d({space.format_point(x)}, {space.format_point(x)}) != 0"
            )
    for x, y in itertools.product(points, repeat=2):
        if space.distance(x, y) < 0:
            raise exceptions.Violation((x, y), f"Negative distance at {(x, y)!r}")
    return Verdict(True, certified=space.is_finite, checked=len(points))


def classify(space: PremetricSpace, rng=None, sample_size=None) -> Classification:
    """Compute the symmetric, pseudometric, metric and ultrametric flags.

    Triples are checked exhaustively on finite spaces and on a seeded sample
    of a presented space. Each failed axiom records a witness; a triangle
    witness (x, y, z) means d(x, z) > d(x, y) + d(y, z).
    """
    points = _points_for(space, rng, sample_size)
    n = len(points)
    matrix, _ = _matrix_for(space, points)
    witnesses = {}

    hit = _first(matrix != matrix.T)
    if hit is not None:
        witnesses["symmetry"] = (points[hit[0]], points[hit[1]])

    off_diagonal = ~numpy.eye(n, dtype=bool)
    hit = _first((matrix == 0) & off_diagonal)
    if hit is not None:
        witnesses["positivity"] = (points[hit[0]], points[hit[1]])

    for j in range(n):
        through = matrix[:, [j]] + matrix[[j], :]
        hit = _first(matrix > through)
        if hit is not None:
            witnesses["triangle"] = (points[hit[0]], points[j], points[hit[1]])
            break

    for j in range(n):
        through = numpy.maximum(matrix[:, [j]], matrix[[j], :])
        hit = _first(matrix > through)
        if hit is not None:
            witnesses["strong_triangle"] = (points[hit[0]], points[j], points[hit[1]])
            break

    is_symmetric = "symmetry" not in witnesses
    is_pseudometric = is_symmetric and "triangle" not in witnesses
    is_metric = is_pseudometric and "positivity" not in witnesses
    is_ultrametric = is_metric and "strong_triangle" not in witnesses
    if not space.is_finite:
        logging.info(
            "Classification of %s is sampled over %s points, not certified",
            space.name,
            n,
        )
    return Classification(
        is_symmetric,
        is_pseudometric,
        is_metric,
        is_ultrametric,
        witnesses=witnesses,
        certified=space.is_finite,
        checked=n**3,
    )


def truncate(space: PremetricSpace) -> PremetricSpace:
    """Return the space with d' = min{1, d}; idempotent."""
    if space.is_finite:
        return FinitePremetricSpace(
            space.points,
            {k: rationals.truncate_one(v) for k, v in space.table.items()},
            name=space.name,
        )
    if isinstance(space, TruncatedSpace):
        return space
    return TruncatedSpace(space)


def ball(
    space: PremetricSpace, x: Point, r: Fraction, sample: Sequence[Point] = None
) -> List[Point]:
    """Return the strict ball {y : d(x, y) < r} in listing order.

    Presented spaces filter the provided sample.
    """
    if r <= 0:
        raise exceptions.ZeroRadius(f"Radius must be positive, got {r}")
    space.check_point(x)
    candidates = space.listed_points() if sample is None else sample
    return [y for y in candidates if space.distance(x, y) < r]


def subspace(space: PremetricSpace, points: Sequence[Point]) -> FinitePremetricSpace:
    """Return (A, d|A x A) for a finite subset A."""
    for x in points:
        space.check_point(x)
    return FinitePremetricSpace.from_function(
        list(dict.fromkeys(points)), space.distance, name=f"{space.name}|A"
    )


def distance_values(space: PremetricSpace, points: Sequence[Point] = None) -> list:
    points = space.listed_points() if points is None else points
    return sorted({space.distance(x, y) for x in points for y in points})


def is_non_expanding(
    f, source: PremetricSpace, target: PremetricSpace, points: Sequence[Point] = None
) -> Verdict:
    """Check d_Y(f x, f y) <= d_X(x, y) on every pair of the given points."""
    f = as_callable(f)
    points = source.listed_points() if points is None else list(points)
    checked = 0
    for x, y in itertools.product(points, repeat=2):
        checked += 1
        if target.distance(f(x), f(y)) > source.distance(x, y):
            return Verdict(False, (x, y), source.is_finite, checked)
    return Verdict(True, None, source.is_finite, checked)


def isoceles_check(space: PremetricSpace, rng=None, sample_size=None) -> Verdict:
    """Check that in every triple the two largest distances are equal.

    Raises:
        NotUltrametric: if the space is not ultrametric.
    """
    flags = classify(space, rng, sample_size)
    if not flags.is_ultrametric:
        witness = None
        for key in ("symmetry", "positivity", "strong_triangle", "triangle"):
            if key in flags.witnesses:
                witness = flags.witnesses[key]
                break
        raise exceptions.NotUltrametric(witness)

    points = _points_for(space, rng, sample_size)
    matrix, _ = _matrix_for(space, points)
    for i in range(len(points)):
        left = matrix[i, :][:, None]
        right = matrix[i, :][None, :]
        largest = numpy.maximum(numpy.maximum(left, right), matrix)
        count = (
            (left == largest).astype(numpy.int64)
            + (right == largest).astype(numpy.int64)
            + (matrix == largest).astype(numpy.int64)
        )
        hit = _first(count < 2)
        if hit is not None:
            witness = (points[i], points[hit[0]], points[hit[1]])
            return Verdict(False, witness, flags.certified, len(points) ** 3)
    return Verdict(True, None, flags.certified, len(points) ** 3)


def is_1_separating(space: PremetricSpace, rng=None, sample_size=None) -> Verdict:
    """x != y implies some ball around x misses y, i.e. d(x, y) > 0."""
    points = _points_for(space, rng, sample_size)
    for x, y in itertools.permutations(points, 2):
        if space.distance(x, y) == 0:
            return Verdict(False, (x, y), space.is_finite)
    return Verdict(True, None, space.is_finite, len(points) ** 2)


def separating_radius(space: PremetricSpace, points: Sequence[Point]) -> Fraction:
    """Half the smallest positive distance; smaller radii give the same balls."""
    positive = [
        space.distance(x, y)
        for x, y in itertools.permutations(points, 2)
        if space.distance(x, y) > 0
    ]
    return min(positive) / 2 if positive else rationals.ONE


def is_2_separating(space: PremetricSpace, rng=None, sample_size=None) -> Verdict:
    """Distinct points have disjoint balls of a common radius.

    Balls only shrink as the radius decreases and stabilise below the smallest
    positive distance, so that radius decides the property.
    """
    points = _points_for(space, rng, sample_size)
    radius = separating_radius(space, points)
    balls = {x: set(ball(space, x, radius, points)) for x in points}
    for x, y in itertools.combinations(points, 2):
        common = balls[x] & balls[y]
        if common:
            return Verdict(False, (x, y, radius), space.is_finite)
    return Verdict(True, None, space.is_finite, len(points) ** 2)
