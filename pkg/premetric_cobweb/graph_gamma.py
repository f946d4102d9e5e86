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
"""The complete oriented graph over a carrier and its path metric.

Every ordered pair of distinct points spans a unit arc; [x, y] and [y, x]
share only their endpoints. Distinct vertices are at distance 1, so a
shortest route either stays on one arc or leaves through an endpoint and
enters the other point's arc through an endpoint, which gives a closed form.
"""

import dataclasses
import itertools
import random
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple, Union

import networkx

from premetric_cobweb import exceptions, rationals
from premetric_cobweb.premetric import PremetricSpace, Verdict, as_callable


@dataclasses.dataclass(frozen=True)
class Vertex(object):
    point: object

    def __repr__(self):
        return f"v({self.point!r})"


@dataclasses.dataclass(frozen=True)
class Edge(object):
    """Interior point of the arc from source to target at parameter t."""

    source: object
    target: object
    t: Fraction

    def __repr__(self):
        return f"e({self.source!r}, {self.target!r}, {self.t})"


GammaPoint = Union[Vertex, Edge]


def normalize(x, y, t) -> GammaPoint:
    t = Fraction(t)
    if t < 0 or t > 1:
        raise exceptions.OutOfRange(f"Edge parameter {t} is outside [0, 1]")
    if x == y or t == 0:
        return Vertex(x)
    if t == 1:
        return Vertex(y)
    return Edge(x, y, t)


def endpoints(a: GammaPoint) -> List[Tuple[object, Fraction]]:
    """Return (vertex, distance along the arc) for the ends of a's arc."""
    if isinstance(a, Vertex):
        return [(a.point, rationals.ZERO)]
    return [(a.source, a.t), (a.target, 1 - a.t)]


def gamma_distance(a: GammaPoint, b: GammaPoint) -> Fraction:
    if a == b:
        return rationals.ZERO
    best = None
    if (
        isinstance(a, Edge)
        and isinstance(b, Edge)
        and (a.source, a.target) == (b.source, b.target)
    ):
        best = abs(a.t - b.t)
    for p, along_a in endpoints(a):
        for q, along_b in endpoints(b):
            route = along_a + (0 if p == q else 1) + along_b
            if best is None or route < best:
                best = route
    return best


def gamma_map(f: Callable, a: GammaPoint) -> GammaPoint:
    """Apply the induced map <x, y, t> -> <f x, f y, t>."""
    f = as_callable(f)
    if isinstance(a, Vertex):
        return Vertex(f(a.point))
    return normalize(f(a.source), f(a.target), a.t)


def carrier_of(a: GammaPoint) -> Tuple:
    if isinstance(a, Vertex):
        return (a.point,)
    return (a.source, a.target)


def arc_points(points: Sequence, params: Iterable[Fraction]) -> List[GammaPoint]:
    """All vertices plus the normalized arc points at the given parameters."""
    params = list(params)
    result = [Vertex(p) for p in points]
    for x, y in itertools.permutations(points, 2):
        for t in params:
            result.append(normalize(x, y, t))
    return list(dict.fromkeys(result))


def check_isometric_embedding(
    f, carrier: Sequence, sample: Sequence[GammaPoint] = None
) -> Verdict:
    """Gamma f preserves every sampled distance exactly.

    Raises:
        NotInjective: when f identifies two sampled carrier points.
    """
    f = as_callable(f)
    images = {}
    for x in carrier:
        image = f(x)
        if image in images:
            raise exceptions.NotInjective((images[image], x))
        images[image] = x
    if sample is None:
        sample = arc_points(carrier, [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
    checked = 0
    for a, b in itertools.product(sample, repeat=2):
        checked += 1
        if gamma_distance(gamma_map(f, a), gamma_map(f, b)) != gamma_distance(a, b):
            return Verdict(False, (a, b), True, checked)
    return Verdict(True, None, True, checked)


class GammaSpace(PremetricSpace):
    """Gamma X over the carrier of a base space."""

    def __init__(self, base: PremetricSpace):
        self.base = base
        self.name = f"gamma({base.name})"

    def distance(self, a, b):
        self.check_point(a)
        self.check_point(b)
        return gamma_distance(a, b)

    def has_point(self, a):
        if isinstance(a, Vertex):
            return self.base.has_point(a.point)
        if isinstance(a, Edge):
            return (
                a.source != a.target
                and 0 < a.t < 1
                and self.base.has_point(a.source)
                and self.base.has_point(a.target)
            )
        return False

    def sample_points(self, rng: random.Random, size: int):
        carrier = self.base.sample_points(rng, None if size is None else max(2, size))
        points = arc_points(carrier, [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
        if size is None or size >= len(points):
            return points
        return rng.sample(points, size)

    def format_point(self, a):
        if isinstance(a, Vertex):
            return f"v({self.base.format_point(a.point)})"
        return (
            f"e({self.base.format_point(a.source)},"
            f"{self.base.format_point(a.target)},{rationals.format_rational(a.t)})"
        )


def discretized_graph(points: Sequence, steps: int) -> networkx.Graph:
    """Gamma X sampled at parameters j / steps, consecutive nodes joined by
    edges of weight 1 / steps."""
    graph = networkx.Graph()
    graph.add_nodes_from(Vertex(p) for p in points)
    step = Fraction(1, steps)
    for x, y in itertools.permutations(points, 2):
        chain = [normalize(x, y, step * j) for j in range(steps + 1)]
        for a, b in zip(chain, chain[1:]):
            graph.add_edge(a, b, weight=step)
    return graph


def check_shortest_path_oracle(points: Sequence, steps: int) -> Verdict:
    """gamma_distance equals the shortest path length on every node pair."""
    graph = discretized_graph(points, steps)
    checked = 0
    for a, lengths in networkx.all_pairs_dijkstra_path_length(graph):
        for b, length in lengths.items():
            checked += 1
            if gamma_distance(a, b) != length:
                return Verdict(False, (a, b, length), True, checked)
    return Verdict(True, None, True, checked)
