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
"""Grammar for graph points and stems given on the command line.

    point := "v:" atom
           | "e:" atom "," atom "," rational
           | "v(" point ")"
           | "e(" point "," point "," rational ")"
    stem  := point (";" point)*

Atoms are handed to the base space's own point parser, so "p", "2.3",
"-1@1/2" or "f@0" all work depending on the space.
"""

from typing import Callable, Tuple

import parsy

from premetric_cobweb import exceptions, rationals
from premetric_cobweb.graph_gamma import GammaPoint, Vertex, normalize

_ATOM = parsy.regex(r"[^,;()\s]+")
_RATIONAL = parsy.regex(r"\d+(/\d+)?")
_COMMA = parsy.regex(r"\s*,\s*")
_SEMICOLON = parsy.regex(r"\s*;\s*")


def _build_grammar(parse_atom: Callable):
    atom = _ATOM.map(parse_atom)
    rational = _RATIONAL.map(rationals.parse_rational)
    point = parsy.forward_declaration()

    flat_vertex = parsy.string("v:") >> atom.map(Vertex)
    flat_edge = parsy.string("e:") >> parsy.seq(
        atom << _COMMA, atom << _COMMA, rational
    ).combine(normalize)
    nested_vertex = parsy.string("v(") >> point.map(Vertex) << parsy.string(")")
    nested_edge = (
        parsy.string("e(")
        >> parsy.seq(point << _COMMA, point << _COMMA, rational).combine(normalize)
        << parsy.string(")")
    )
    point.become(nested_vertex | nested_edge | flat_vertex | flat_edge)
    stem = point.sep_by(_SEMICOLON, min=1)
    return point, stem


def _run(parser, text: str):
    try:
        return parser.parse(text.strip())
    except parsy.ParseError as e:
        raise exceptions.ParseError(f"Cannot parse point '{text}': {e}", "point")


def parse_gamma_point(text: str, parse_atom: Callable) -> GammaPoint:
    point, _ = _build_grammar(parse_atom)
    return _run(point, text)


def parse_stem(text: str, parse_atom: Callable) -> Tuple[GammaPoint, ...]:
    _, stem = _build_grammar(parse_atom)
    return tuple(_run(stem, text))
