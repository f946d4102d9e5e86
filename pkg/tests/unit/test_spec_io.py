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

import json
from fractions import Fraction

import pytest

from premetric_cobweb import exceptions, file_helper
from premetric_cobweb.graph_gamma import Edge, Vertex
from premetric_cobweb.named_spaces import ORIGIN, ArensSpace, arens_point
from premetric_cobweb.premetric import Verdict
from premetric_cobweb.seqdec import DPoint
from premetric_cobweb.sequences import S0Param
from premetric_cobweb.tower import TowerPoint

TWO_POINTS = json.dumps(
    {"points": ["p", "q"], "dist": [["p", "q", "1/3"], ["q", "p", "1"]]}
)


@pytest.fixture
def module_under_test():
    from premetric_cobweb import spec_io

    return spec_io


def test_load_space(module_under_test):
    space = module_under_test.load_space(TWO_POINTS)
    assert space.points == ("p", "q")
    assert space.distance("p", "q") == Fraction(1, 3)
    assert space.distance("q", "p") == 1
    assert space.distance("q", "q") == 0


def test_load_space_default(module_under_test):
    text = json.dumps(
        {"points": ["p", "q", "r"], "default": "1", "dist": [["p", "q", "0"]]}
    )
    space = module_under_test.load_space(text)
    assert space.distance("p", "q") == 0
    assert space.distance("q", "r") == 1
    assert space.distance("r", "r") == 0


def test_dump_space(module_under_test):
    space = module_under_test.load_space(TWO_POINTS)
    doc = json.loads(module_under_test.dump_space(space))
    assert doc["dist"] == [
        ["p", "p", "0"],
        ["p", "q", "1/3"],
        ["q", "p", "1"],
        ["q", "q", "0"],
    ]
    assert module_under_test.load_space(module_under_test.dump_space(space)) == space


@pytest.mark.parametrize(
    ("doc", "field"),
    (
        ({"points": ["p", "q"], "dist": [["p", "q", "1"]]}, "dist"),
        (
            {"points": ["p", "q"], "default": "1", "dist": [["p", "q", "1"]] * 2},
            "dist",
        ),
        ({"points": ["p"], "dist": [["p", "p"]]}, "dist"),
        ({"points": ["p", "q"], "default": "1", "dist": [["p", "q", 0.5]]}, "dist"),
        ({"points": ["p", "q"], "default": "1/0"}, "default"),
        ({"points": ["p", "p"]}, "points"),
        ({"points": [1]}, "points"),
        ({"points": []}, "points"),
    ),
)
def test_load_space_errors(module_under_test, doc, field):
    with pytest.raises(exceptions.ParseError) as excinfo:
        module_under_test.load_space(json.dumps(doc))
    assert excinfo.value.field == field


def test_load_space_invalid_json(module_under_test):
    with pytest.raises(exceptions.ParseError) as excinfo:
        module_under_test.load_space('{"points": ["p"],\n')
    assert excinfo.value.field == "line 2"
    with pytest.raises(exceptions.ParseError) as excinfo:
        module_under_test.load_space("[1, 2]")
    assert excinfo.value.field == "document"


def test_load_space_unknown_point(module_under_test):
    text = json.dumps({"points": ["p", "q"], "default": "1", "dist": [["p", "s", "0"]]})
    with pytest.raises(exceptions.UnknownPoint, match="Unknown point 's'"):
        module_under_test.load_space(text)


def test_load_presentation_named_space(module_under_test):
    text = json.dumps(
        {
            "space": "arens",
            "bound": 2,
            "sequences": [
                {
                    "id": "shifted-spine",
                    "limit": "0",
                    "prefix": ["1.1"],
                    "tail": {"indexed": "arens-spine"},
                }
            ],
        }
    )
    presentation = module_under_test.load_presentation(text)
    assert presentation.space.bound == 2
    assert len(presentation.points) == 7
    assert presentation.sequence_ids[0] == "shifted-spine"
    seq = presentation.sequence("shifted-spine")
    assert seq.term(1) == arens_point(1, 1)
    assert seq.term(3) == arens_point(3)


def test_load_presentation_constant_tails(module_under_test):
    undeclared = {
        "space": "arens",
        "points": ["0", "1"],
        "sequences": [{"id": "c", "limit": "0", "tail": {"constant": "1"}}],
    }
    with pytest.raises(exceptions.InvalidSequence):
        module_under_test.presentation_from_document(undeclared)

    undeclared["sequences"][0]["tail"]["declared"] = True
    presentation = module_under_test.presentation_from_document(undeclared)
    assert presentation.points == (ORIGIN, arens_point(1))
    assert presentation.sequence("c").term(1) == arens_point(1)


def test_load_presentation_finite_space(module_under_test):
    doc = {
        "points": ["p", "q"],
        "default": "1",
        "dist": [["p", "q", "0"]],
        "sequences": [{"id": "s", "limit": "p", "tail": {"constant": "q"}}],
    }
    presentation = module_under_test.presentation_from_document(doc)
    # d(p, q) = 0, so the constant tail at q converges to p.
    assert presentation.sequence("s").limit == "p"
    assert "const:p" in presentation.sequence_ids


def test_load_presentation_discrete_default(module_under_test):
    doc = {
        "points": ["x0", "x1", "x2"],
        "sequences": [
            {
                "id": "f",
                "limit": "x0",
                "prefix": ["x1", "x2"],
                "tail": {"constant": "x0"},
            }
        ],
    }
    presentation = module_under_test.presentation_from_document(doc)
    space = presentation.space
    assert space.distance("x0", "x0") == 0
    assert space.distance("x0", "x1") == 1
    assert space.distance("x2", "x1") == 1
    assert presentation.sequence("f").term(2) == "x2"
    assert presentation.sequence("f").term(3) == "x0"

    # An explicit table still requires every pair.
    with pytest.raises(exceptions.ParseError):
        module_under_test.presentation_from_document(
            {**doc, "dist": [["x0", "x1", "1/2"]]}
        )


@pytest.mark.parametrize(
    "entry",
    (
        {"limit": "0", "tail": {"constant": "0"}},
        {"id": "x", "limit": "0", "tail": {}},
        {"id": "x", "limit": "0", "tail": {"indexed": "arens-spiral"}},
    ),
)
def test_load_presentation_sequence_errors(module_under_test, entry):
    doc = {"space": "arens", "bound": 2, "sequences": [entry]}
    with pytest.raises(exceptions.ParseError):
        module_under_test.presentation_from_document(doc)


def test_resolve_space_by_name(module_under_test, fs):
    space, digest = module_under_test.resolve_space("arens")
    assert isinstance(space, ArensSpace)
    assert digest == file_helper.content_digest("arens")
    with pytest.raises(exceptions.ParseError, match="Did you mean 'arens'"):
        module_under_test.resolve_space("arnes")


def test_resolve_space_from_file(module_under_test, fs):
    fs.create_file("/specs/two.json", contents=TWO_POINTS)
    space, digest = module_under_test.resolve_space("/specs/two.json")
    assert space.points == ("p", "q")
    assert digest == file_helper.content_digest(TWO_POINTS)
    with pytest.raises(exceptions.ParseError) as excinfo:
        module_under_test.resolve_space("/specs/missing.json")
    assert excinfo.value.field == "file"


def test_resolve_presentation(module_under_test, fs):
    presentation, _ = module_under_test.resolve_presentation("harmonic")
    assert presentation.sequence_ids[0] == "harmonic"
    fs.create_file(
        "/specs/pres.json",
        contents=json.dumps({"space": "harmonic", "bound": 3}),
    )
    presentation, _ = module_under_test.resolve_presentation("/specs/pres.json")
    assert len(presentation.points) == 4


def test_to_jsonable(module_under_test):
    verdict = Verdict(False, (Fraction(1, 2), "p"), True, 4)
    assert module_under_test.to_jsonable(verdict) == {
        "holds": False,
        "witness": ["1/2", "p"],
        "certified": True,
        "checked": 4,
    }
    assert module_under_test.to_jsonable(Edge("p", "q", Fraction(1, 2))) == {
        "e": ["p", "q", "1/2"]
    }
    assert module_under_test.to_jsonable(Vertex(ORIGIN)) == {"v": "(0, 0)"}
    assert module_under_test.to_jsonable({"b", "a"}) == ["a", "b"]
    assert module_under_test.to_jsonable(DPoint("spine", S0Param(2))) == "spine@2"


def test_stem_to_json(module_under_test):
    point = TowerPoint((Vertex("p"), Edge(Vertex("p"), Vertex("q"), Fraction(1, 4))))
    assert module_under_test.to_jsonable(point) == [
        {"level": 1, "point": {"v": "p"}},
        {"level": 2, "point": {"e": [{"v": "p"}, {"v": "q"}, "1/4"]}},
    ]
