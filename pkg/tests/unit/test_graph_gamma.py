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

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from premetric_cobweb import exceptions
from premetric_cobweb.graph_gamma import Edge, Vertex
from premetric_cobweb.premetric import FinitePremetricSpace

CARRIER = ("p", "q", "r", "u")
params = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def gamma_points(draw):
    from premetric_cobweb.graph_gamma import normalize

    x = draw(st.sampled_from(CARRIER))
    y = draw(st.sampled_from(CARRIER))
    return normalize(x, y, draw(params))


@pytest.fixture
def module_under_test():
    from premetric_cobweb import graph_gamma

    return graph_gamma


@pytest.mark.parametrize(
    ("x", "y", "t", "expected"),
    (
        ("p", "q", Fraction(0), Vertex("p")),
        ("p", "p", Fraction(1, 2), Vertex("p")),
        ("p", "q", Fraction(1), Vertex("q")),
        ("p", "q", Fraction(1, 3), Edge("p", "q", Fraction(1, 3))),
    ),
)
def test_normalize(module_under_test, x, y, t, expected):
    assert module_under_test.normalize(x, y, t) == expected


def test_normalize_rejects_out_of_range(module_under_test):
    with pytest.raises(exceptions.OutOfRange):
        module_under_test.normalize("p", "q", Fraction(3, 2))


@pytest.mark.parametrize(
    ("a", "b", "expected"),
    (
        (Vertex("p"), Vertex("q"), Fraction(1)),
        (
            Edge("p", "q", Fraction(1, 4)),
            Edge("p", "q", Fraction(3, 4)),
            Fraction(1, 2),
        ),
        (Edge("p", "q", Fraction(1, 4)), Edge("q", "p", Fraction(1, 4)), Fraction(1)),
        (Edge("p", "q", Fraction(1, 2)), Edge("r", "u", Fraction(1, 2)), Fraction(2)),
        (Vertex("p"), Edge("p", "q", Fraction(1, 3)), Fraction(1, 3)),
        (Vertex("r"), Edge("p", "q", Fraction(1, 2)), Fraction(3, 2)),
        (Edge("p", "q", Fraction(1, 4)), Edge("q", "r", Fraction(1, 4)), Fraction(1)),
    ),
)
def test_gamma_distance(module_under_test, a, b, expected):
    assert module_under_test.gamma_distance(a, b) == expected
    assert module_under_test.gamma_distance(b, a) == expected


@settings(max_examples=200, deadline=None)
@given(gamma_points(), gamma_points(), gamma_points())
def test_gamma_distance_is_a_metric(a, b, c):
    from premetric_cobweb.graph_gamma import gamma_distance

    assert gamma_distance(a, b) == gamma_distance(b, a)
    assert (gamma_distance(a, b) == 0) == (a == b)
    assert gamma_distance(a, c) <= gamma_distance(a, b) + gamma_distance(b, c)
    assert gamma_distance(a, b) <= 2


def test_gamma_map_collapses_edges(module_under_test):
    image = module_under_test.gamma_map(lambda x: "c", Edge("p", "q", Fraction(1, 3)))
    assert image == Vertex("c")


def test_gamma_map_accepts_mappings(module_under_test):
    f = {"p": "a", "q": "b"}
    image = module_under_test.gamma_map(f, Edge("p", "q", Fraction(1, 3)))
    assert image == Edge("a", "b", Fraction(1, 3))


def test_arc_points(module_under_test):
    points = module_under_test.arc_points(["p", "q"], [Fraction(1, 2), Fraction(1)])
    assert points == [
        Vertex("p"),
        Vertex("q"),
        Edge("p", "q", Fraction(1, 2)),
        Edge("q", "p", Fraction(1, 2)),
    ]


def test_check_isometric_embedding(module_under_test):
    verdict = module_under_test.check_isometric_embedding(
        {"p": "a", "q": "b", "r": "c"}, ["p", "q", "r"]
    )
    assert verdict.holds
    assert verdict.checked == 21 * 21


def test_check_isometric_embedding_rejects_non_injective(module_under_test):
    with pytest.raises(exceptions.NotInjective) as e_info:
        module_under_test.check_isometric_embedding({"p": "a", "q": "a"}, ["p", "q"])
    assert e_info.value.witness == ("p", "q")


def test_gamma_space_membership(module_under_test):
    base = FinitePremetricSpace.from_function(
        ["p", "q"], lambda x, y: Fraction(0) if x == y else Fraction(1, 2)
    )
    space = module_under_test.GammaSpace(base)
    assert space.has_point(Edge("p", "q", Fraction(1, 2)))
    assert not space.has_point(Edge("p", "z", Fraction(1, 2)))
    assert not space.has_point(Edge("p", "q", Fraction(1)))
    assert space.format_point(Edge("p", "q", Fraction(1, 2))) == "e(p,q,1/2)"
    with pytest.raises(exceptions.UnknownPoint):
        space.distance(Vertex("p"), Vertex("z"))


def test_discretized_graph(module_under_test):
    graph = module_under_test.discretized_graph(["a", "b", "c"], 4)
    assert graph.number_of_nodes() == 3 + 6 * 3
    assert graph.number_of_edges() == 6 * 4


def test_shortest_path_oracle(module_under_test):
    verdict = module_under_test.check_shortest_path_oracle(["a", "b", "c"], 4)
    assert verdict.holds
    assert verdict.checked == 21 * 21
