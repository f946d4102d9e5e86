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
"""The cobweb of a premetric space and its compression map.

The cobweb keeps, on every arc [x, y] of the complete oriented graph, the
initial segment of parameters t <= 1 - min{1, d(y, x)}. It carries the
subspace metric of the graph, and the compression map sends every kept arc
point to the initial vertex of its arc.
"""

import dataclasses
import itertools
import random
from fractions import Fraction
from typing import Callable, List, Sequence

from premetric_cobweb import exceptions, point_parser, rationals
from premetric_cobweb.graph_gamma import (
    Edge,
    GammaPoint,
    Vertex,
    gamma_distance,
    gamma_map,
    normalize,
)
from premetric_cobweb.premetric import (
    PremetricSpace,
    Verdict,
    as_callable,
    ball,
    classify,
    is_non_expanding,
    truncate,
)


class CobwebSpace(PremetricSpace):
    def __init__(self, base: PremetricSpace):
        """Initialize the cobweb over a base premetric space.

        Args:
            base (PremetricSpace): Finite or presented base, or a lower cobweb
                when building towers.
        """
        self.base = base
        self.level = base.level + 1 if isinstance(base, CobwebSpace) else 1
        self.name = f"cobweb({base.name})"
        self.is_finite = False

    def cutoff(self, x, y) -> Fraction:
        if x == y:
            raise exceptions.SamePoint(f"Cutoff needs distinct points, got {x!r}")
        return 1 - self.base.truncated_distance(y, x)

    def contains(self, a: GammaPoint) -> bool:
        if isinstance(a, Vertex):
            return self.base.has_point(a.point)
        if not isinstance(a, Edge):
            return False
        if a.source == a.target or not 0 < a.t < 1:
            return False
        if not (self.base.has_point(a.source) and self.base.has_point(a.target)):
            return False
        return a.t <= self.cutoff(a.source, a.target)

    def has_point(self, a) -> bool:
        return self.contains(a)

    def check_member(self, a: GammaPoint) -> GammaPoint:
        if not self.contains(a):
            raise exceptions.NotMember(a, self.level)
        return a

    def x_sub_y(self, x, y) -> GammaPoint:
        """The end x_y of the kept subarc of [x, y]."""
        return normalize(x, y, self.cutoff(x, y))

    def distance(self, a: GammaPoint, b: GammaPoint) -> Fraction:
        self.check_member(a)
        self.check_member(b)
        return gamma_distance(a, b)

    def compression(self, a: GammaPoint):
        self.check_member(a)
        if isinstance(a, Vertex):
            return a.point
        return a.source

    def in_spider(self, a: GammaPoint, x) -> bool:
        """Whether a lies in the spider S_x, the fiber of compression over x."""
        return self.compression(a) == x

    def listed_points(self):
        raise NotImplementedError("A cobweb has no finite listing")

    def witness_grid(self, points: Sequence = None) -> List[GammaPoint]:
        """Arc points at which the piecewise linear inequalities are checked.

        Ordered so that x_y points and the points just below a full arc come
        first, then the vertices, then the quarter and half points of every
        kept subarc.
        """
        points = self.base.listed_points() if points is None else list(points)
        delta = self._grid_delta(points)
        leading, inner = [], []
        for x, y in itertools.permutations(points, 2):
            c = self.cutoff(x, y)
            if c == 0:
                continue
            leading.append(normalize(x, y, c))
            if c == 1:
                leading.append(normalize(x, y, 1 - delta))
            inner.extend(normalize(x, y, c * k / 4) for k in (1, 2, 3))
        grid = leading + [Vertex(p) for p in points] + inner
        return list(dict.fromkeys(grid))

    def _grid_delta(self, points: Sequence) -> Fraction:
        """A quarter of the smallest positive value or positive gap u - v - w."""
        values = {
            self.base.truncated_distance(x, y)
            for x, y in itertools.product(points, repeat=2)
        }
        gaps = {u - v - w for u in values for v in values for w in values}
        positive = [g for g in gaps | values if g > 0]
        return min(positive) / 4 if positive else Fraction(1, 4)

    def sample_points(self, rng: random.Random, size: int = None, base_size=None):
        base_points = self.base.sample_points(rng, base_size)
        grid = self.witness_grid(base_points)
        if size is None or size >= len(grid):
            return grid
        return rng.sample(grid, size)

    def parse_point(self, text: str) -> GammaPoint:
        point = point_parser.parse_gamma_point(text, self.innermost().parse_point)
        return self.check_member(point)

    def innermost(self) -> PremetricSpace:
        space = self.base
        while isinstance(space, CobwebSpace):
            space = space.base
        return space

    def format_point(self, a) -> str:
        nested = isinstance(self.base, CobwebSpace)
        if isinstance(a, Vertex):
            inner = self.base.format_point(a.point)
            return f"v({inner})" if nested else f"v:{inner}"
        source = self.base.format_point(a.source)
        target = self.base.format_point(a.target)
        t = rationals.format_rational(a.t)
        if nested:
            return f"e({source},{target},{t})"
        return f"e:{source},{target},{t}"


# Module level forms of the cobweb operations.


def cutoff(space: CobwebSpace, x, y) -> Fraction:
    return space.cutoff(x, y)


def contains(space: CobwebSpace, a: GammaPoint) -> bool:
    return space.contains(a)


def x_sub_y(space: CobwebSpace, x, y) -> GammaPoint:
    return space.x_sub_y(x, y)


def cobweb_distance(space: CobwebSpace, a: GammaPoint, b: GammaPoint) -> Fraction:
    return space.distance(a, b)


def compression(space: CobwebSpace, a: GammaPoint):
    return space.compression(a)


def in_spider(space: CobwebSpace, a: GammaPoint, x) -> bool:
    return space.in_spider(a, x)


def ball_witness(space: CobwebSpace, x, z, r: Fraction) -> GammaPoint:
    """A member a with compression z within distance r of the vertex x."""
    if z == x:
        return Vertex(x)
    if space.base.truncated_distance(x, z) > 0:
        return space.x_sub_y(z, x)
    return normalize(z, x, 1 - r / 2)


def pi_ball_image_check(
    space: CobwebSpace, x, r: Fraction, sample: Sequence[GammaPoint] = None
) -> Verdict:
    """Compression maps the cobweb ball B(x, r) onto the base ball B(x, r)."""
    r = Fraction(r)
    if not 0 < r <= 1:
        raise exceptions.RadiusOutOfRange(f"Radius {r} is outside (0, 1]")
    sample = space.witness_grid() if sample is None else sample
    center = Vertex(x)
    checked = 0
    for a in sample:
        if space.distance(center, a) < r:
            checked += 1
            if space.base.distance(x, space.compression(a)) >= r:
                return Verdict(
                    False, ("image-outside-ball", a), space.base.is_finite, checked
                )
    for z in ball(space.base, x, r):
        checked += 1
        a = ball_witness(space, x, z, r)
        if not (
            space.contains(a)
            and space.compression(a) == z
            and space.distance(center, a) < r
        ):
            return Verdict(
                False, ("no-preimage", z, a), space.base.is_finite, checked
            )
    return Verdict(True, None, space.base.is_finite, checked)


def cobweb_map(
    f, source: CobwebSpace, target: CobwebSpace, a: GammaPoint, points=None
) -> GammaPoint:
    """Apply the cobweb functor to a non-expanding map.

    Raises:
        NotNonExpanding: the sampled base pair on which f expands.
        MembershipViolation: the image left the target cobweb.
    """
    verdict = is_non_expanding(f, source.base, target.base, points)
    if not verdict:
        raise exceptions.NotNonExpanding(verdict.witness)
    image = gamma_map(f, source.check_member(a))
    if not target.contains(image):
        raise exceptions.MembershipViolation(
            f"{a!r} maps to {image!r} outside the target cobweb"
        )
    return image


def compression_naturality(
    f, source: CobwebSpace, target: CobwebSpace, a: GammaPoint
) -> bool:
    """f(pi_X a) == pi_Y(f_* a)."""
    f = as_callable(f)
    return f(source.compression(a)) == target.compression(gamma_map(f, a))


def check_cobweb_isometric_embedding(
    f, source: CobwebSpace, target: CobwebSpace, sample: Sequence = None
) -> Verdict:
    """An injective non-expanding map induces an isometric embedding."""
    f = as_callable(f)
    carrier = source.base.listed_points()
    images = {}
    for x in carrier:
        if f(x) in images:
            raise exceptions.NotInjective((images[f(x)], x))
        images[f(x)] = x
    sample = source.witness_grid() if sample is None else sample
    checked = 0
    for a, b in itertools.product(sample, repeat=2):
        checked += 1
        image_a, image_b = gamma_map(f, a), gamma_map(f, b)
        if target.distance(image_a, image_b) != source.distance(a, b):
            return Verdict(False, (a, b), True, checked)
    return Verdict(True, None, True, checked)


@dataclasses.dataclass
class NonExpansionResult(object):
    nonexpanding: bool
    pseudometric: bool
    witness: tuple = None
    checked: int = 0

    @property
    def agree(self) -> bool:
        return self.nonexpanding == self.pseudometric


def compression_nonexpansion_experiment(
    space: CobwebSpace, grid: Sequence[GammaPoint] = None
) -> NonExpansionResult:
    """Compare non-expansion of compression with d-bar being a pseudometric."""
    grid = space.witness_grid() if grid is None else grid
    pseudometric = classify(truncate(space.base)).is_pseudometric
    checked = 0
    for a, b in itertools.product(grid, repeat=2):
        checked += 1
        image_distance = space.base.truncated_distance(
            space.compression(a), space.compression(b)
        )
        if image_distance > space.distance(a, b):
            return NonExpansionResult(False, pseudometric, (a, b), checked)
    return NonExpansionResult(True, pseudometric, None, checked)


def check_vertex_nonexpansion(space: CobwebSpace, sample: Sequence = None) -> Verdict:
    """d-bar(x, pi a) <= d(x, a) for every vertex x."""
    sample = space.witness_grid() if sample is None else sample
    checked = 0
    for x in space.base.listed_points():
        for a in sample:
            checked += 1
            if space.base.truncated_distance(
                x, space.compression(a)
            ) > space.distance(Vertex(x), a):
                return Verdict(False, (x, a), True, checked)
    return Verdict(True, None, True, checked)


def check_distance_lower_bound(space: CobwebSpace, sample: Sequence = None) -> Verdict:
    """d(a, b) >= min over x of d-bar(x, pi a) + d-bar(x, pi b)."""
    sample = space.witness_grid() if sample is None else sample
    carrier = space.base.listed_points()
    checked = 0
    for a, b in itertools.product(sample, repeat=2):
        checked += 1
        pa, pb = space.compression(a), space.compression(b)
        bound = min(
            space.base.truncated_distance(x, pa) + space.base.truncated_distance(x, pb)
            for x in carrier
        )
        if space.distance(a, b) < bound:
            return Verdict(False, (a, b), space.base.is_finite, checked)
    return Verdict(True, None, space.base.is_finite, checked)


def check_local_constancy(space: CobwebSpace, sample: Sequence = None) -> Verdict:
    """Compression is constant on B(a, min(t, 1 - t)) for an arc point a."""
    sample = space.witness_grid() if sample is None else sample
    checked = 0
    for a in sample:
        if not isinstance(a, Edge):
            continue
        radius = min(a.t, 1 - a.t)
        for b in sample:
            if space.distance(a, b) < radius:
                checked += 1
                if space.compression(b) != space.compression(a):
                    return Verdict(False, (a, b), True, checked)
    return Verdict(True, None, True, checked)


def compression_image_census(space: CobwebSpace, sample: Sequence) -> dict:
    """Sizes of a finite sample and its image; equal iff spiders are distinct."""
    images = list(dict.fromkeys(space.compression(a) for a in sample))
    return {
        "sample": len(list(dict.fromkeys(sample))),
        "image": len(images),
        "distinct_spiders": len(images) == len(list(dict.fromkeys(sample))),
    }


def lift_map(f: Callable) -> Callable:
    """The induced map on cobweb points, for building tower maps."""

    def induced(a):
        return gamma_map(f, a)

    return induced
