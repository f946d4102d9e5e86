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

import random
from fractions import Fraction

import pytest

from premetric_cobweb import consts, exceptions
from premetric_cobweb.cobweb import CobwebSpace
from premetric_cobweb.graph_gamma import Edge, Vertex
from premetric_cobweb.premetric import classify

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@pytest.fixture
def module_under_test():
    from premetric_cobweb import named_spaces

    return named_spaces


@pytest.fixture
def ii_cobweb(module_under_test):
    return CobwebSpace(module_under_test.DoubleIntervalSpace(8))


@pytest.mark.parametrize(
    ("a", "b", "expected"),
    (
        ((0, 0), (3, 0), Fraction(1, 3)),
        ((3, 0), (0, 0), Fraction(1)),
        ((2, 0), (2, 3), Fraction(1, 6)),
        ((2, 3), (2, 0), Fraction(1)),
        ((0, 0), (2, 3), Fraction(1)),
        ((2, 0), (3, 0), Fraction(1)),
        ((2, 3), (2, 3), Fraction(0)),
    ),
)
def test_arens_distance(module_under_test, a, b, expected):
    space = module_under_test.ArensSpace()
    distance = space.distance(
        module_under_test.arens_point(*a), module_under_test.arens_point(*b)
    )
    assert distance == expected


@pytest.mark.parametrize(
    ("text", "expected"),
    (
        ("0", (0, 0)),
        ("2", (2, 0)),
        ("2.3", (2, 3)),
    ),
)
def test_arens_parse_point(module_under_test, text, expected):
    space = module_under_test.ArensSpace()
    point = space.parse_point(text)
    assert point == module_under_test.arens_point(*expected)
    assert space.format_point(point) == text


@pytest.mark.parametrize(
    ("text", "error"),
    (
        ("x", exceptions.ParseError),
        ("0.1", exceptions.OutOfBounds),
        ("2.0", exceptions.OutOfBounds),
        ("5", exceptions.OutOfBounds),
        ("1.5", exceptions.OutOfBounds),
    ),
)
def test_arens_parse_errors(module_under_test, text, error):
    with pytest.raises(error):
        module_under_test.ArensSpace(4).parse_point(text)


def test_arens_bound(module_under_test):
    assert len(module_under_test.ArensSpace(2).listed_points()) == 7
    unbounded = module_under_test.ArensSpace(None)
    assert unbounded.parse_point("50") == module_under_test.arens_point(50)
    with pytest.raises(exceptions.OutOfBounds):
        unbounded.listed_points()


def test_arens_membership(module_under_test):
    space = module_under_test.ArensSpace()
    assert space.has_point((HALF, Fraction(1, 6)))
    assert not space.has_point((HALF, Fraction(1, 3)))
    assert not space.has_point((Fraction(2, 3), 0))
    assert not space.has_point("0")


def test_arens_a_subspace_check(module_under_test):
    verdict = module_under_test.arens_A_subspace_check(3)
    assert verdict
    assert verdict.checked == 100
    with pytest.raises(exceptions.OutOfBounds):
        module_under_test.arens_A_subspace_check(1)


def test_arens_families(module_under_test):
    point = module_under_test.arens_point
    spine = module_under_test.ArensSpineFamily()
    assert spine.term(3) == point(3)
    assert spine.index_of(point(3)) == 3
    assert spine.index_of(point(3, 2)) is None
    row = module_under_test.ArensRowFamily(2)
    assert row.limit == point(2)
    assert row.index_of(point(2, 3)) == 3
    assert row.index_of(point(3, 3)) is None
    diag = module_under_test.ArensDiagFamily()
    assert diag.term(2) == (HALF, QUARTER)
    assert diag.index_of(point(2, 2)) == 2
    with pytest.raises(exceptions.OutOfBounds):
        module_under_test.ArensRowFamily(0)


def test_arens_diag_has_no_premetric_limit(module_under_test):
    space = module_under_test.ArensSpace()
    diag = module_under_test.ArensDiagFamily()
    for center in space.listed_points():
        assert diag.distance_tail(space, center).limit == 1


def test_harmonic_space(module_under_test):
    space = module_under_test.HarmonicSpace(4)
    assert space.listed_points() == [0, 1, HALF, Fraction(1, 3), QUARTER]
    assert space.parse_point("1/3") == Fraction(1, 3)
    assert space.distance(HALF, Fraction(1, 3)) == Fraction(1, 6)
    with pytest.raises(exceptions.OutOfBounds):
        space.parse_point("2/3")
    assert not space.has_point(True)


@pytest.mark.parametrize(
    ("a", "b", "expected"),
    (
        ((-1, HALF), (1, QUARTER), QUARTER),
        ((-1, QUARTER), (1, HALF), Fraction(1)),
        ((1, QUARTER), (-1, HALF), QUARTER),
        ((1, HALF), (1, QUARTER), Fraction(1)),
        ((-1, HALF), (1, HALF), Fraction(0)),
    ),
)
def test_double_interval_distance(module_under_test, a, b, expected):
    assert module_under_test.DoubleIntervalSpace().distance(a, b) == expected


def test_double_interval_points(module_under_test):
    space = module_under_test.DoubleIntervalSpace()
    assert space.parse_point("-1@1/2") == (-1, HALF)
    assert space.parse_point("+1@1") == (1, Fraction(1))
    assert space.format_point((1, HALF)) == "+1@1/2"
    assert space.format_point((-1, Fraction(0))) == "-1@0"
    assert not space.has_point((1, Fraction(1, 128)))
    rng = random.Random(7)
    assert all(space.has_point(space.random_point(rng)) for _ in range(20))


@pytest.mark.parametrize(
    ("text", "error"),
    (
        ("0@1/2", exceptions.ParseError),
        ("+1@3/2", exceptions.OutOfBounds),
        ("+1@1/128", exceptions.OutOfBounds),
    ),
)
def test_double_interval_parse_errors(module_under_test, text, error):
    with pytest.raises(error):
        module_under_test.DoubleIntervalSpace().parse_point(text)


def test_extremality_witness(module_under_test, ii_cobweb):
    top = Vertex((-1, HALF))
    bottom = Vertex((1, HALF))
    arc = Edge((-1, HALF), (1, QUARTER), QUARTER)
    witness = module_under_test.extremality_witness(ii_cobweb, top)
    assert witness == module_under_test.ExtremalityWitness(1, consts.EXTREMUM_MAX)
    witness = module_under_test.extremality_witness(ii_cobweb, bottom)
    assert witness.kind == consts.EXTREMUM_MIN
    witness = module_under_test.extremality_witness(ii_cobweb, arc)
    assert witness == module_under_test.ExtremalityWitness(
        QUARTER, consts.EXTREMUM_CONST
    )
    assert module_under_test.locally_extremal_f(ii_cobweb, arc) == HALF


def test_extremality_rejects_non_member(module_under_test, ii_cobweb):
    # d((1, 1/2), (-1, 1/4)) = 1 so the arc is cut at 0.
    with pytest.raises(exceptions.NotMember):
        module_under_test.extremality_witness(
            ii_cobweb, Edge((-1, QUARTER), (1, HALF), HALF)
        )


@pytest.mark.parametrize(
    "point",
    (
        Vertex((-1, HALF)),
        Vertex((1, QUARTER)),
        Edge((-1, HALF), (1, QUARTER), QUARTER),
    ),
)
def test_verify_extremality(module_under_test, ii_cobweb, point):
    verdict = module_under_test.verify_extremality(
        ii_cobweb, point, random.Random(1), count=10
    )
    assert verdict
    assert not verdict.certified
    assert verdict.checked > 0


def test_ii_ball_sample_stays_in_ball(module_under_test, ii_cobweb):
    center = Vertex((-1, HALF))
    samples = module_under_test.ii_ball_sample(
        ii_cobweb, center, QUARTER, random.Random(2), count=5
    )
    assert samples
    assert all(ii_cobweb.distance(center, b) < QUARTER for b in samples)


def test_sample_ii_members(module_under_test, ii_cobweb):
    members = module_under_test.sample_ii_members(ii_cobweb, random.Random(0), 6)
    assert len(members) == 6
    assert all(ii_cobweb.contains(a) for a in members)
    vertices = members[:3]
    assert all(isinstance(a, Vertex) for a in vertices)
    assert len({a.point[1] for a in vertices}) == 3


def test_cantor_space(module_under_test):
    space = module_under_test.CantorSpace(3)
    assert space.name == "cantor:3"
    assert len(space.listed_points()) == 8
    assert space.distance("000", "001") == QUARTER
    assert space.distance("000", "010") == HALF
    assert space.distance("000", "100") == 1
    assert space.distance("101", "101") == 0
    assert classify(space).is_ultrametric
    with pytest.raises(exceptions.UnknownPoint):
        space.parse_point("0101")


@pytest.mark.parametrize("bits", (0, 13))
def test_cantor_space_bounds(module_under_test, bits):
    with pytest.raises(exceptions.OutOfBounds):
        module_under_test.CantorSpace(bits)


def test_cantor_census(module_under_test):
    census = module_under_test.cantor_census(3)
    assert census == {
        "space": "cantor:3",
        "points": 8,
        "pairs": 64,
        "value_count": 4,
        "distance_values": ["0", "1/4", "1/2", "1"],
    }


def test_get_named_space(module_under_test):
    assert isinstance(
        module_under_test.get_named_space("arens"), module_under_test.ArensSpace
    )
    assert module_under_test.get_named_space(" cantor:4 ").bits == 4
    with pytest.raises(exceptions.ParseError):
        module_under_test.get_named_space("cantor:x")
    with pytest.raises(exceptions.ParseError, match="Did you mean 'arens'"):
        module_under_test.get_named_space("arnes")


def test_get_family(module_under_test):
    assert module_under_test.get_family("arens-row(3)").row == 3
    assert isinstance(
        module_under_test.get_family("harmonic"), module_under_test.HarmonicFamily
    )
    with pytest.raises(exceptions.ParseError):
        module_under_test.get_family("arens-spine(2)")
    with pytest.raises(exceptions.ParseError, match="Did you mean"):
        module_under_test.get_family("harmonc")


def test_named_presentations(module_under_test):
    arens = module_under_test.arens_presentation(2)
    assert arens.sequence_ids[:3] == ["spine", "row-1", "row-2"]
    harmonic = module_under_test.get_named_presentation("harmonic")
    assert harmonic.sequence_ids[0] == "harmonic"
    with pytest.raises(exceptions.ParseError):
        module_under_test.get_named_presentation("cantor:3")
