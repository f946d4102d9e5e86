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
"""Iterated cobwebs and the stems representing points of their limit.

Level n is the cobweb of level n - 1, with level 1 the cobweb of the base.
A stem (x_1, ..., x_N) is coherent when compressing x_{k+1} gives x_k; it
stands for the sequence continued by vertex lifts x_{n+1} = v(x_n). The
limit metric is max_n d_n(x_n, y_n) / n, and past the stem length every
term is 1 / n times 0 or 1, which gives an exact closed form.
"""

import dataclasses
import itertools
import random
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from premetric_cobweb import exceptions, point_parser, rationals
from premetric_cobweb.cobweb import CobwebSpace
from premetric_cobweb.graph_gamma import Edge, GammaPoint, Vertex, gamma_map, normalize
from premetric_cobweb.premetric import PremetricSpace, as_callable


@dataclasses.dataclass(frozen=True)
class TowerPoint(object):
    stem: Tuple[GammaPoint, ...]

    def __len__(self):
        return len(self.stem)


def lift(point, times: int):
    for _ in range(times):
        point = Vertex(point)
    return point


class TowerSpace(object):
    def __init__(self, base: PremetricSpace):
        self.base = base
        self._levels: Dict[int, CobwebSpace] = {}

    def level(self, n: int) -> CobwebSpace:
        if n < 1:
            raise exceptions.OutOfRange(f"Tower levels start at 1, got {n}")
        if n not in self._levels:
            below = self.base if n == 1 else self.level(n - 1)
            self._levels[n] = CobwebSpace(below)
        return self._levels[n]

    def level_distance(self, n: int, a: GammaPoint, b: GammaPoint) -> Fraction:
        space = self.level(n)
        for point in (a, b):
            if not space.contains(point):
                raise exceptions.NotMember(point, n)
        return space.distance(a, b)


def canonical_stem(stem: Sequence[GammaPoint]) -> Tuple[GammaPoint, ...]:
    """Trim trailing vertex lifts."""
    stem = list(stem)
    while len(stem) > 1 and stem[-1] == Vertex(stem[-2]):
        stem.pop()
    return tuple(stem)


def validate_stem(tower: TowerSpace, stem: Sequence[GammaPoint]) -> TowerPoint:
    """Check level membership and coherence, return the canonical point.

    Raises:
        NotMemberAt: x_k is not a point of level k.
        IncoherentAt: compressing x_{k+1} does not give x_k.
    """
    stem = tuple(stem)
    if not stem:
        raise exceptions.ParseError("A stem needs at least one point", "stem")
    for k, point in enumerate(stem, start=1):
        if not tower.level(k).contains(point):
            raise exceptions.NotMemberAt(point, k)
    for k in range(1, len(stem)):
        if tower.level(k + 1).compression(stem[k]) != stem[k - 1]:
            raise exceptions.IncoherentAt(k)
    return TowerPoint(canonical_stem(stem))


def limit_projection(a: TowerPoint, n: int) -> GammaPoint:
    if n < 1:
        raise exceptions.OutOfRange(f"Projection index must be >= 1, got {n}")
    if n <= len(a.stem):
        return a.stem[n - 1]
    return lift(a.stem[-1], n - len(a.stem))


def _level_terms(tower: TowerSpace, a: TowerPoint, b: TowerPoint, last: int):
    for n in range(1, last + 1):
        distance = tower.level_distance(
            n, limit_projection(a, n), limit_projection(b, n)
        )
        yield n, distance / n


def omega_distance(tower: TowerSpace, a: TowerPoint, b: TowerPoint) -> Fraction:
    """max(max_{n <= N} d_n / n, delta / (N + 1)) for the common length N."""
    common = max(len(a), len(b))
    best = max(term for _, term in _level_terms(tower, a, b, common))
    if limit_projection(a, common) != limit_projection(b, common):
        best = max(best, Fraction(1, common + 1))
    return best


def omega_distance_brute_force(
    tower: TowerSpace, a: TowerPoint, b: TowerPoint, extra_levels: int = 8
) -> Fraction:
    """Explicit maximum over the first N + extra_levels levels."""
    last = max(len(a), len(b)) + extra_levels
    return max(term for _, term in _level_terms(tower, a, b, last))


def omega_compression(tower: TowerSpace, a: TowerPoint):
    return tower.level(1).compression(a.stem[0])


def level_map(f: Callable, n: int) -> Callable:
    """The map induced by f on level n of the tower."""
    f = as_callable(f)
    for _ in range(n):
        f = _induced(f)
    return f


def _induced(f):
    def induced(a):
        return gamma_map(f, a)

    return induced


def omega_map(
    f, source: TowerSpace, target: TowerSpace, a: TowerPoint
) -> TowerPoint:
    """Apply the induced level maps coordinate-wise to a stem."""
    image = [level_map(f, k)(x) for k, x in enumerate(a.stem, start=1)]
    return validate_stem(target, image)


@dataclasses.dataclass
class CensusResult(object):
    distance_values: List[Fraction]
    pairs: int
    per_level_images: Dict[int, int]
    bound: int

    @property
    def value_count(self) -> int:
        return len(self.distance_values)

    @property
    def bound_holds(self) -> bool:
        return self.value_count <= self.bound

    def as_dict(self) -> dict:
        return {
            "distance_values": [
                rationals.format_rational(v) for v in self.distance_values
            ],
            "value_count": self.value_count,
            "pairs": self.pairs,
            "per_level_images": {str(k): v for k, v in self.per_level_images.items()},
            "bound": self.bound,
            "bound_holds": self.bound_holds,
        }


def economy_census(tower: TowerSpace, sample: Sequence[TowerPoint]) -> CensusResult:
    """Count the distance values realized on a finite sample.

    Every distance must equal d_n / n for some n <= N + 1; the count is then
    bounded by 1 + sum over those n of |pi_n(sample)|^2.

    Raises:
        MaxNotAttained: a distance not realized by any level term.
    """
    sample = list(dict.fromkeys(sample))
    values = set()
    pairs = 0
    for a, b in itertools.combinations_with_replacement(sample, 2):
        pairs += 1
        distance = omega_distance(tower, a, b)
        common = max(len(a), len(b))
        terms = {term for _, term in _level_terms(tower, a, b, common + 1)}
        if distance not in terms:
            raise exceptions.MaxNotAttained(
                f"Distance {distance} between {a!r} and {b!r} is not a level term"
            )
        values.add(distance)
    longest = max((len(a) for a in sample), default=0)
    per_level = {
        n: len(dict.fromkeys(limit_projection(a, n) for a in sample))
        for n in range(1, longest + 2)
    }
    bound = 1 + sum(count**2 for count in per_level.values())
    return CensusResult(sorted(values), pairs, per_level, bound)


def neighbors(
    tower: TowerSpace, k: int, x: GammaPoint, base_points: Sequence
) -> List[GammaPoint]:
    """Some level-k points other than x at distance below 1 from x."""
    space = tower.level(k)
    found = []
    if isinstance(x, Edge):
        c = space.cutoff(x.source, x.target)
        found.extend([Vertex(x.source), Vertex(x.target)])
        found.append(normalize(x.source, x.target, x.t / 2))
        if c > x.t:
            found.append(normalize(x.source, x.target, (x.t + c) / 2))
    else:
        u = x.point
        others = (
            [q for q in base_points if q != u]
            if k == 1
            else neighbors(tower, k - 1, u, base_points)
        )
        for w in others:
            c = space.cutoff(u, w)
            if c > 0:
                found.append(normalize(u, w, c / 2))
            back = space.cutoff(w, u)
            if 0 < back < 1:
                found.append(normalize(w, u, back))
    return [
        y
        for y in dict.fromkeys(found)
        if y != x and space.contains(y) and space.distance(x, y) < 1
    ]


def children(
    tower: TowerSpace, k: int, x: GammaPoint, base_points: Sequence
) -> List[GammaPoint]:
    """Level-(k+1) points compressing to the level-k point x."""
    upper = tower.level(k + 1)
    found = [Vertex(x)]
    for y in neighbors(tower, k, x, base_points):
        c = upper.cutoff(x, y)
        for t in (c / 2, c):
            if t > 0:
                found.append(normalize(x, y, t))
    return [
        p
        for p in dict.fromkeys(found)
        if upper.contains(p) and upper.compression(p) == x
    ]


def sample_stems(
    tower: TowerSpace,
    rng: random.Random,
    count: int,
    max_length: int = 3,
    base_points: Sequence = None,
) -> List[TowerPoint]:
    """Draw random coherent stems from witness grids and child points."""
    first = tower.level(1)
    if base_points is None:
        base_points = tower.base.sample_points(rng, None)
    grid = first.witness_grid(base_points)
    stems = []
    for _ in range(count):
        stem = [rng.choice(grid)]
        for k in range(1, rng.randint(1, max_length)):
            stem.append(rng.choice(children(tower, k, stem[-1], base_points)))
        stems.append(validate_stem(tower, stem))
    return stems


class OmegaSpace(PremetricSpace):
    """The tower limit as a space of canonical stems."""

    def __init__(self, base: PremetricSpace):
        self.tower = TowerSpace(base)
        self.name = f"omega({base.name})"

    def distance(self, a: TowerPoint, b: TowerPoint) -> Fraction:
        return omega_distance(self.tower, a, b)

    def has_point(self, a) -> bool:
        if not isinstance(a, TowerPoint):
            return False
        try:
            return validate_stem(self.tower, a.stem) == a
        except exceptions.PremetricException:
            return False

    def sample_points(self, rng, size):
        return sample_stems(self.tower, rng, size or 1)

    def parse_point(self, text: str) -> TowerPoint:
        stem = point_parser.parse_stem(text, self.tower.base.parse_point)
        return validate_stem(self.tower, stem)

    def format_point(self, a: TowerPoint) -> str:
        return ";".join(
            self.tower.level(k).format_point(x) for k, x in enumerate(a.stem, start=1)
        )
