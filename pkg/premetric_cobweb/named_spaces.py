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
"""Built-in spaces: Arens' space, the harmonic sequence, the double interval
and truncated Cantor cubes, plus the sequence families living in them."""

import dataclasses
import logging
import random
import re
from fractions import Fraction
from typing import List, Optional

import numpy

from premetric_cobweb import consts, exceptions, jellyfish_distance, rationals
from premetric_cobweb.cobweb import CobwebSpace
from premetric_cobweb.graph_gamma import Edge, GammaPoint, Vertex, normalize
from premetric_cobweb.premetric import PremetricSpace, Verdict
from premetric_cobweb.seqdec import SeqPresentation
from premetric_cobweb.sequences import (
    TREND_CONSTANT,
    TREND_DECREASING,
    TREND_INCREASING,
    DistanceTail,
    IndexedFamily,
    IndexedTail,
    SequenceSpec,
)

ORIGIN = (Fraction(0), Fraction(0))
BUILTIN_NAMES = [
    consts.SPACE_ARENS,
    consts.SPACE_DOUBLE_INTERVAL,
    consts.SPACE_HARMONIC,
]

_ARENS_RE = re.compile(r"^(\d+)(?:\.(\d+))?$")
_II_RE = re.compile(r"^([+-]1)@(.+)$")
_FAMILY_RE = re.compile(r"^([a-z-]+)(?:\((\d+)\))?$")


def arens_point(n: int = 0, m: int = 0):
    """(0, 0) for n = 0, (1/n, 0) for m = 0, else (1/n, 1/(nm))."""
    if n == 0:
        return ORIGIN
    if m == 0:
        return (Fraction(1, n), Fraction(0))
    return (Fraction(1, n), Fraction(1, n * m))


class ArensSpace(PremetricSpace):
    def __init__(self, bound: Optional[int] = consts.DEFAULT_ARENS_BOUND):
        """Initialize Arens' space S_2 with its four case premetric.

        Args:
            bound (int): Largest n and m listed or accepted from user input;
                distances are defined on all of S_2 regardless.
        """
        self.bound = bound
        self.name = consts.SPACE_ARENS

    def decompose(self, point):
        """Return (n, m) with n = 0 at the origin and m = 0 on the spine."""
        try:
            x, y = (Fraction(c) for c in point)
        except (TypeError, ValueError):
            raise exceptions.OutOfBounds(f"{point!r} is not a point of S_2")
        if x == 0 and y == 0:
            return 0, 0
        if x > 0 and x.numerator == 1:
            n = x.denominator
            if y == 0:
                return n, 0
            if y > 0 and y.numerator == 1 and y.denominator % n == 0:
                return n, y.denominator // n
        raise exceptions.OutOfBounds(f"{point!r} is not a point of S_2")

    def distance(self, a, b) -> Fraction:
        n, m = self.decompose(a)
        k, j = self.decompose(b)
        if (n, m) == (k, j):
            return rationals.ZERO
        if n == 0 and k > 0 and j == 0:
            return Fraction(1, k)
        if n > 0 and m == 0 and k == n and j > 0:
            return Fraction(1, n * j)
        return rationals.ONE

    def has_point(self, a) -> bool:
        try:
            self.decompose(a)
        except exceptions.OutOfBounds:
            return False
        return True

    def listed_points(self) -> List:
        if self.bound is None:
            raise exceptions.OutOfBounds("An unbounded Arens space has no listing")
        points = [ORIGIN]
        for n in range(1, self.bound + 1):
            points.append(arens_point(n))
            points.extend(arens_point(n, m) for m in range(1, self.bound + 1))
        return points

    def sample_points(self, rng: random.Random, size: int = None):
        points = self.listed_points()
        if size is None or size >= len(points):
            return points
        return rng.sample(points, size)

    def parse_point(self, text: str):
        match = _ARENS_RE.match(text.strip())
        if not match:
            raise exceptions.ParseError(
                f"Arens points are written 0, n or n.m, got '{text}'", "point"
            )
        n, m = int(match.group(1)), int(match.group(2) or 0)
        if n == 0 and match.group(2) is not None:
            raise exceptions.OutOfBounds(f"'{text}' is not a point of S_2")
        if match.group(2) is not None and m == 0:
            raise exceptions.OutOfBounds(f"'{text}' is not a point of S_2")
        if self.bound is not None and max(n, m) > self.bound:
            raise exceptions.OutOfBounds(
                f"'{text}' is beyond the Arens bound {self.bound}"
            )
        return arens_point(n, m)

    def format_point(self, a) -> str:
        n, m = self.decompose(a)
        if n == 0:
            return "0"
        return f"{n}.{m}" if m else str(n)


def arens_A_subspace_check(bound: int) -> Verdict:
    """d restricted to A = {(0,0)} u {(1/n, 1/(nm))} only takes values 0 and 1."""
    if bound < 2:
        raise exceptions.OutOfBounds(f"The A subspace check needs N >= 2, got {bound}")
    space = ArensSpace(bound)
    subset = [ORIGIN] + [
        arens_point(n, m) for n in range(1, bound + 1) for m in range(1, bound + 1)
    ]
    checked = 0
    for a in subset:
        for b in subset:
            checked += 1
            if space.distance(a, b) not in (rationals.ZERO, rationals.ONE):
                return Verdict(False, (a, b), True, checked)
    return Verdict(True, None, True, checked)


class ArensSpineFamily(IndexedFamily):
    """(1/n, 0) -> (0, 0)."""

    name = consts.FAMILY_ARENS_SPINE

    @property
    def limit(self):
        return ORIGIN

    def term(self, k):
        return arens_point(k)

    def index_of(self, point):
        n, m = ArensSpace(None).decompose(point)
        return n if n > 0 and m == 0 else None

    def distance_tail(self, space, center):
        n, m = space.decompose(center)
        if n == 0:
            return DistanceTail(rationals.ZERO, 1, TREND_DECREASING)
        if m == 0:
            return DistanceTail(rationals.ONE, n + 1, TREND_CONSTANT)
        return DistanceTail(rationals.ONE, 1, TREND_CONSTANT)


class ArensRowFamily(IndexedFamily):
    """(1/n, 1/(nm)) -> (1/n, 0) as m grows."""

    def __init__(self, row: int):
        if row < 1:
            raise exceptions.OutOfBounds(f"Arens rows start at 1, got {row}")
        self.row = row
        self.name = f"{consts.FAMILY_ARENS_ROW}({row})"

    @property
    def limit(self):
        return arens_point(self.row)

    def term(self, k):
        return arens_point(self.row, k)

    def index_of(self, point):
        n, m = ArensSpace(None).decompose(point)
        return m if n == self.row and m > 0 else None

    def distance_tail(self, space, center):
        n, m = space.decompose(center)
        if n == self.row and m == 0:
            return DistanceTail(rationals.ZERO, 1, TREND_DECREASING)
        if n == self.row:
            return DistanceTail(rationals.ONE, m + 1, TREND_CONSTANT)
        return DistanceTail(rationals.ONE, 1, TREND_CONSTANT)


class ArensDiagFamily(IndexedFamily):
    """(1/k, 1/k^2); no point of S_2 is a premetric limit of it."""

    name = consts.FAMILY_ARENS_DIAG

    @property
    def limit(self):
        return ORIGIN

    def term(self, k):
        return arens_point(k, k)

    def index_of(self, point):
        n, m = ArensSpace(None).decompose(point)
        return n if n > 0 and n == m else None

    def distance_tail(self, space, center):
        n, _ = space.decompose(center)
        start = n + 1 if n > 0 else 1
        return DistanceTail(rationals.ONE, start, TREND_CONSTANT)


class HarmonicSpace(PremetricSpace):
    """{0} u {1/k} with |x - y|."""

    def __init__(self, bound: int = consts.DEFAULT_DISCRETIZATION):
        self.bound = bound
        self.name = consts.SPACE_HARMONIC

    def has_point(self, x) -> bool:
        if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
            return False
        x = Fraction(x)
        return x == 0 or (x > 0 and x.numerator == 1)

    def distance(self, x, y) -> Fraction:
        self.check_point(x)
        self.check_point(y)
        return abs(Fraction(x) - Fraction(y))

    def listed_points(self):
        return [rationals.ZERO] + [Fraction(1, k) for k in range(1, self.bound + 1)]

    def sample_points(self, rng, size=None):
        points = self.listed_points()
        if size is None or size >= len(points):
            return points
        return rng.sample(points, size)

    def parse_point(self, text):
        value = rationals.parse_rational(text, "point")
        if not self.has_point(value):
            raise exceptions.OutOfBounds(f"'{text}' is not 0 or 1/k")
        return value

    def format_point(self, x):
        return rationals.format_rational(x)


class HarmonicFamily(IndexedFamily):
    name = consts.FAMILY_HARMONIC

    @property
    def limit(self):
        return rationals.ZERO

    def term(self, k):
        return Fraction(1, k)

    def index_of(self, point):
        point = Fraction(point)
        return point.denominator if point > 0 and point.numerator == 1 else None

    def distance_tail(self, space, center):
        center = Fraction(center)
        if center == 0:
            return DistanceTail(rationals.ZERO, 1, TREND_DECREASING)
        return DistanceTail(center, center.denominator + 1, TREND_INCREASING)


class DoubleIntervalSpace(PremetricSpace):
    def __init__(self, max_denominator: int = consts.DEFAULT_II_MAX_DENOMINATOR):
        """Initialize {-1, +1} x ([0, 1] n Q) with bounded denominators.

        Args:
            max_denominator (int): Largest denominator accepted for the
                second coordinate.
        """
        self.max_denominator = max_denominator
        self.name = consts.SPACE_DOUBLE_INTERVAL

    def has_point(self, a) -> bool:
        try:
            sign, x = a
        except (TypeError, ValueError):
            return False
        if sign not in (-1, 1) or not isinstance(x, (int, Fraction)):
            return False
        x = Fraction(x)
        return 0 <= x <= 1 and x.denominator <= self.max_denominator

    def distance(self, a, b) -> Fraction:
        self.check_point(a)
        self.check_point(b)
        (i, x), (_, y) = a, b
        if i == -1 and x >= y:
            return Fraction(x - y)
        if i == 1 and y >= x:
            return Fraction(y - x)
        return rationals.ONE

    def random_point(self, rng: random.Random):
        denominator = rng.randint(1, self.max_denominator)
        return (
            rng.choice((-1, 1)),
            Fraction(rng.randint(0, denominator), denominator),
        )

    def sample_points(self, rng, size=None):
        size = size or consts.DEFAULT_SAMPLE_SIZE
        return list(dict.fromkeys(self.random_point(rng) for _ in range(size)))

    def parse_point(self, text):
        match = _II_RE.match(text.strip())
        if not match:
            raise exceptions.ParseError(
                f"Double interval points are written -1@x or +1@x, got '{text}'",
                "point",
            )
        point = (int(match.group(1)), rationals.parse_rational(match.group(2), "point"))
        if not self.has_point(point):
            raise exceptions.OutOfBounds(
                f"'{text}' is outside [0, 1] or has a denominator above "
                f"{self.max_denominator}"
            )
        return point

    def format_point(self, a):
        sign, x = a
        return f"{sign:+d}@{rationals.format_rational(x)}"


@dataclasses.dataclass(frozen=True)
class ExtremalityWitness(object):
    radius: Fraction
    kind: str


def locally_extremal_f(cobweb: CobwebSpace, a: GammaPoint) -> Fraction:
    """The second coordinate of the compression of a."""
    return cobweb.compression(a)[1]


def extremality_witness(cobweb: CobwebSpace, a: GammaPoint) -> ExtremalityWitness:
    cobweb.check_member(a)
    if isinstance(a, Vertex):
        kind = consts.EXTREMUM_MAX if a.point[0] == -1 else consts.EXTREMUM_MIN
        return ExtremalityWitness(rationals.ONE, kind)
    return ExtremalityWitness(min(a.t, 1 - a.t), consts.EXTREMUM_CONST)


def _incident_arc_points(cobweb, p, others, discretization, rng=None):
    found = []
    for q in others:
        if q == p or not cobweb.base.has_point(q):
            continue
        for x, y in ((p, q), (q, p)):
            c = cobweb.cutoff(x, y)
            if c == 0:
                continue
            params = {c} | {
                Fraction(j, discretization)
                for j in range(1, discretization + 1)
                if Fraction(j, discretization) <= c
            }
            if rng is not None:
                params.add(c * Fraction(rng.randint(1, discretization), discretization))
            found.extend(normalize(x, y, t) for t in sorted(params))
    return found


def ii_ball_sample(
    cobweb: CobwebSpace,
    a: GammaPoint,
    radius: Fraction,
    rng: random.Random,
    count: int = consts.DEFAULT_II_BALL_SAMPLES,
    discretization: int = consts.DEFAULT_DISCRETIZATION,
) -> List[GammaPoint]:
    """Members of the open ball B(a, radius) of the cobweb over II.

    Around an edge point the ball is an interval of its own arc. Around a
    vertex it lies on incident arcs, sampled at the x_y points, a parameter
    grid and random parameters towards random partners.
    """
    cobweb.check_member(a)

    def members(candidates):
        return [
            b
            for b in dict.fromkeys(candidates)
            if cobweb.contains(b) and cobweb.distance(a, b) < radius
        ]

    if isinstance(a, Edge):
        steps = 2 * count + 1
        candidates = [
            normalize(
                a.source, a.target, a.t - radius + 2 * radius * Fraction(j, steps)
            )
            for j in range(1, steps)
        ]
        return members(candidates)

    p = a.point
    grid = [Fraction(j, discretization) for j in range(discretization + 1)]
    candidates = [a] + _incident_arc_points(
        cobweb, p, [(s, x) for s in (-1, 1) for x in grid], discretization
    )
    found = members(candidates)
    attempts = 0
    while len(found) < count and attempts < 50 * count:
        attempts += 1
        q = cobweb.base.random_point(rng)
        candidates.extend(_incident_arc_points(cobweb, p, [q], discretization, rng))
        found = members(candidates)
    if len(found) < count:
        logging.warning(
            "Only %s ball samples found around %s", len(found), cobweb.format_point(a)
        )
    return found


def verify_extremality(
    cobweb: CobwebSpace,
    a: GammaPoint,
    rng: random.Random,
    count: int = consts.DEFAULT_II_BALL_SAMPLES,
) -> Verdict:
    witness = extremality_witness(cobweb, a)
    value = locally_extremal_f(cobweb, a)
    samples = ii_ball_sample(cobweb, a, witness.radius, rng, count)
    for checked, b in enumerate(samples, start=1):
        other = locally_extremal_f(cobweb, b)
        if witness.kind == consts.EXTREMUM_MAX:
            holds = other <= value
        elif witness.kind == consts.EXTREMUM_MIN:
            holds = other >= value
        else:
            holds = other == value
        if not holds:
            return Verdict(False, (a, b, witness.kind), False, checked)
    return Verdict(True, None, False, len(samples))


def sample_ii_members(
    cobweb: CobwebSpace,
    rng: random.Random,
    count: int = consts.DEFAULT_II_MEMBERS,
    discretization: int = consts.DEFAULT_DISCRETIZATION,
) -> List[GammaPoint]:
    """Half vertices with distinct second coordinates, half arc points."""
    base = cobweb.base
    values = [
        Fraction(j, base.max_denominator) for j in range(base.max_denominator + 1)
    ]
    vertices = [
        Vertex((rng.choice((-1, 1)), x))
        for x in rng.sample(values, min(len(values), count // 2))
    ]
    edges = []
    while len(vertices) + len(edges) < count:
        p, q = base.random_point(rng), base.random_point(rng)
        if p == q:
            continue
        c = cobweb.cutoff(p, q)
        if c == 0:
            continue
        t = c * Fraction(rng.randint(1, discretization), discretization)
        edges.append(normalize(p, q, t))
    return vertices + edges


class CantorSpace(PremetricSpace):
    """{0,1}^k with d(x, y) = 2^-n for the first differing index n."""

    is_finite = True

    def __init__(self, bits: int = consts.DEFAULT_CANTOR_BITS):
        if not 1 <= bits <= consts.MAX_CANTOR_BITS:
            raise exceptions.OutOfBounds(
                f"Cantor bit length must be in 1..{consts.MAX_CANTOR_BITS}, "
                f"got {bits}"
            )
        self.bits = bits
        self.name = f"{consts.SPACE_CANTOR_PREFIX}:{bits}"
        self._points = tuple(format(i, f"0{bits}b") for i in range(2**bits))
        self._scaled = None

    @property
    def points(self):
        return self._points

    def has_point(self, x) -> bool:
        return (
            isinstance(x, str) and len(x) == self.bits and set(x) <= {"0", "1"}
        )

    def distance(self, x, y) -> Fraction:
        self.check_point(x)
        self.check_point(y)
        differing = (int(x, 2) ^ int(y, 2)).bit_length()
        if differing == 0:
            return rationals.ZERO
        return Fraction(1, 2 ** (self.bits - differing))

    def listed_points(self):
        return list(self._points)

    def sample_points(self, rng, size=None):
        if size is None or size >= len(self._points):
            return self.listed_points()
        return rng.sample(self.listed_points(), size)

    def parse_point(self, text):
        text = text.strip()
        if not self.has_point(text):
            raise exceptions.UnknownPoint(
                f"'{text}' is not a {self.bits} bit string of {self.name}"
            )
        return text

    def scaled_matrix(self):
        """Distances times 2^(k-1) as an integer matrix."""
        if self._scaled is None:
            codes = numpy.arange(2**self.bits, dtype=numpy.int64)
            xor = codes[:, None] ^ codes[None, :]
            lengths = numpy.array(
                [int(v).bit_length() for v in range(2**self.bits)], dtype=numpy.int64
            )
            shifted = numpy.left_shift(1, numpy.maximum(lengths[xor] - 1, 0))
            matrix = numpy.where(xor == 0, 0, shifted).astype(numpy.int64)
            self._scaled = (matrix, 2 ** (self.bits - 1))
        return self._scaled


def cantor_census(bits: int) -> dict:
    """Distinct distance values realized over all pairs of {0,1}^k."""
    space = CantorSpace(bits)
    matrix, scale = space.scaled_matrix()
    values = [Fraction(int(v), scale) for v in numpy.unique(matrix)]
    logging.info("Cantor census over %s points", len(space.points))
    return {
        "space": space.name,
        "points": len(space.points),
        "pairs": int(matrix.size),
        "value_count": len(values),
        "distance_values": [rationals.format_rational(v) for v in values],
    }


def get_named_space(name: str) -> PremetricSpace:
    """Return a built-in space by its CLI name."""
    name = name.strip()
    if name == consts.SPACE_ARENS:
        return ArensSpace()
    if name == consts.SPACE_HARMONIC:
        return HarmonicSpace()
    if name == consts.SPACE_DOUBLE_INTERVAL:
        return DoubleIntervalSpace()
    prefix = consts.SPACE_CANTOR_PREFIX + ":"
    if name.startswith(prefix):
        bits = name[len(prefix) :]
        if not bits.isdigit():
            raise exceptions.ParseError(f"Invalid Cantor bit length '{bits}'", "space")
        return CantorSpace(int(bits))
    raise exceptions.ParseError(
        jellyfish_distance.unknown_name_message(
            "space", name, consts.BUILTIN_SPACE_NAMES
        ),
        "space",
    )


def get_family(name: str) -> IndexedFamily:
    """Return a built-in indexed family, e.g. "harmonic" or "arens-row(3)"."""
    match = _FAMILY_RE.match(name.strip())
    family, row = (match.group(1), match.group(2)) if match else (name, None)
    if family == consts.FAMILY_ARENS_ROW and row is not None:
        return ArensRowFamily(int(row))
    if row is None:
        if family == consts.FAMILY_ARENS_SPINE:
            return ArensSpineFamily()
        if family == consts.FAMILY_ARENS_DIAG:
            return ArensDiagFamily()
        if family == consts.FAMILY_HARMONIC:
            return HarmonicFamily()
    raise exceptions.ParseError(
        jellyfish_distance.unknown_name_message("family", name, consts.FAMILY_NAMES),
        "tail",
    )


def arens_presentation(bound: int = consts.DEFAULT_ARENS_BOUND) -> SeqPresentation:
    """Arens' space with its spine and the first `bound` rows registered."""
    space = ArensSpace(bound)
    sequences = [SequenceSpec("spine", ORIGIN, (), IndexedTail(ArensSpineFamily()))]
    for n in range(1, bound + 1):
        family = ArensRowFamily(n)
        sequences.append(
            SequenceSpec(f"row-{n}", family.limit, (), IndexedTail(family))
        )
    return SeqPresentation(space, space.listed_points(), sequences)


def harmonic_presentation(
    bound: int = consts.DEFAULT_DISCRETIZATION,
) -> SeqPresentation:
    space = HarmonicSpace(bound)
    sequence = SequenceSpec(
        "harmonic", rationals.ZERO, (), IndexedTail(HarmonicFamily())
    )
    return SeqPresentation(space, space.listed_points(), [sequence])


def get_named_presentation(name: str) -> SeqPresentation:
    if name == consts.SPACE_ARENS:
        return arens_presentation()
    if name == consts.SPACE_HARMONIC:
        return harmonic_presentation()
    raise exceptions.ParseError(
        jellyfish_distance.unknown_name_message(
            "presentation", name, [consts.SPACE_ARENS, consts.SPACE_HARMONIC]
        ),
        "space",
    )
