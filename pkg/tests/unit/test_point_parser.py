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

from premetric_cobweb import exceptions
from premetric_cobweb.graph_gamma import Edge, Vertex
from premetric_cobweb.named_spaces import ArensSpace, arens_point

HALF = Fraction(1, 2)


@pytest.fixture
def module_under_test():
    from premetric_cobweb import point_parser

    return point_parser


@pytest.mark.parametrize(
    ("text", "expected"),
    (
        ("v:p", Vertex("p")),
        ("e:p,q,1/2", Edge("p", "q", HALF)),
        (" e:p , q , 1/2 ", Edge("p", "q", HALF)),
        ("e:p,q,0", Vertex("p")),
        ("e:p,q,1", Vertex("q")),
        ("v(e:p,q,1/4)", Vertex(Edge("p", "q", Fraction(1, 4)))),
        (
            "e(v:p,e:p,q,1/2,1/4)",
            Edge(Vertex("p"), Edge("p", "q", HALF), Fraction(1, 4)),
        ),
    ),
)
def test_parse_gamma_point(module_under_test, text, expected):
    assert module_under_test.parse_gamma_point(text, str) == expected


@pytest.mark.parametrize("text", ("x:p", "v:", "e:p,q", "e:p,q,1/2)", "v(v:p"))
def test_parse_gamma_point_errors(module_under_test, text):
    with pytest.raises(exceptions.ParseError) as excinfo:
        module_under_test.parse_gamma_point(text, str)
    assert excinfo.value.field == "point"


def test_parse_gamma_point_parameter_range(module_under_test):
    with pytest.raises(exceptions.OutOfRange):
        module_under_test.parse_gamma_point("e:p,q,3/2", str)


def test_parse_with_base_space_atoms(module_under_test):
    space = ArensSpace()
    point = module_under_test.parse_gamma_point("e:0,2.1,1/2", space.parse_point)
    assert point == Edge(arens_point(), arens_point(2, 1), HALF)
    with pytest.raises(exceptions.OutOfBounds):
        module_under_test.parse_gamma_point("v:9", space.parse_point)


def test_parse_stem(module_under_test):
    stem = module_under_test.parse_stem("v:p; v(v:p)", str)
    assert stem == (Vertex("p"), Vertex(Vertex("p")))
    with pytest.raises(exceptions.ParseError):
        module_under_test.parse_stem("", str)
