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
"""Reading and writing space specs, presentations and points as JSON.

A space spec lists its points and distance triples:

    {"points": ["p", "q"], "dist": [["p", "q", "1/3"], ["q", "p", "1"]]}

Omitted diagonal entries are 0; any other omitted pair takes "default",
which is required as soon as such a pair is missing.
"""

import json
import os
from fractions import Fraction
from typing import Callable, Tuple

from premetric_cobweb import (
    consts,
    exceptions,
    file_helper,
    jellyfish_distance,
    named_spaces,
    rationals,
)
from premetric_cobweb.graph_gamma import Edge, Vertex
from premetric_cobweb.premetric import FinitePremetricSpace, PremetricSpace, Verdict
from premetric_cobweb.seqdec import DPoint, SeqPresentation
from premetric_cobweb.sequences import ConstantTail, IndexedTail, SequenceSpec
from premetric_cobweb.tower import TowerPoint


def _parse_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise exceptions.ParseError(
            f"Invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
            f"line {e.lineno}",
        )
    if not isinstance(doc, dict):
        raise exceptions.ParseError("A spec must be a JSON object", "document")
    return doc


def _check_point_ids(points) -> list:
    if not isinstance(points, list) or not points:
        raise exceptions.ParseError("'points' must be a non-empty list", "points")
    for p in points:
        if not isinstance(p, str):
            raise exceptions.ParseError(
                f"Point ids must be strings, got {p!r}", "points"
            )
    if len(set(points)) != len(points):
        raise exceptions.ParseError("Duplicate point ids", "points")
    return points


def space_from_document(
    doc: dict, name: str = consts.SPACE_FINITE
) -> FinitePremetricSpace:
    points = _check_point_ids(doc.get(consts.SPEC_POINTS))
    default = doc.get(consts.SPEC_DEFAULT)
    if default is not None:
        default = rationals.parse_rational(default, consts.SPEC_DEFAULT)

    table = {}
    for entry in doc.get(consts.SPEC_DIST, []):
        if not isinstance(entry, list) or len(entry) != 3:
            raise exceptions.ParseError(
                f"Distance entries are [x, y, value], got {entry!r}", consts.SPEC_DIST
            )
        x, y, value = entry
        for p in (x, y):
            if p not in points:
                raise exceptions.UnknownPoint(
                    jellyfish_distance.unknown_name_message("point", str(p), points)
                )
        if (x, y) in table:
            raise exceptions.ParseError(
                f"Duplicate distance for pair ({x}, {y})", consts.SPEC_DIST
            )
        table[(x, y)] = rationals.parse_rational(value, consts.SPEC_DIST)

    for x in points:
        table.setdefault((x, x), rationals.ZERO)
        for y in points:
            if (x, y) in table:
                continue
            if default is None:
                raise exceptions.ParseError(
                    f"Missing distance for pair ({x}, {y}) and no default",
                    consts.SPEC_DIST,
                )
            table[(x, y)] = default
    return FinitePremetricSpace(points, table, name=name)


def load_space(text: str, name: str = consts.SPACE_FINITE) -> FinitePremetricSpace:
    return space_from_document(_parse_json(text), name)


def dump_space(space: FinitePremetricSpace) -> str:
    """Deterministic JSON with every pair written out."""
    doc = {
        consts.SPEC_POINTS: list(space.points),
        consts.SPEC_DIST: [
            [x, y, rationals.format_rational(space.distance(x, y))]
            for x in space.points
            for y in space.points
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _presentation_space(doc: dict) -> Tuple[PremetricSpace, list]:
    name = doc.get(consts.SPEC_SPACE)
    if name is None:
        if consts.SPEC_DIST not in doc and consts.SPEC_DEFAULT not in doc:
            # Bare point lists carry the discrete premetric.
            doc = {**doc, consts.SPEC_DEFAULT: "1"}
        space = space_from_document(doc)
        return space, list(space.points)
    bound = doc.get(consts.SPEC_BOUND)
    if name == consts.SPACE_ARENS:
        space = named_spaces.ArensSpace(bound or consts.DEFAULT_ARENS_BOUND)
    elif name == consts.SPACE_HARMONIC:
        space = named_spaces.HarmonicSpace(bound or consts.DEFAULT_DISCRETIZATION)
    else:
        space = named_spaces.get_named_space(name)
    if consts.SPEC_POINTS in doc:
        points = [space.parse_point(str(p)) for p in doc[consts.SPEC_POINTS]]
    else:
        points = space.listed_points()
    return space, points


def _sequence_from_document(entry: dict, space: PremetricSpace) -> SequenceSpec:
    try:
        seq_id = entry[consts.SPEC_SEQ_ID]
        limit = entry[consts.SPEC_SEQ_LIMIT]
        tail = entry[consts.SPEC_SEQ_TAIL]
    except (KeyError, TypeError) as e:
        raise exceptions.ParseError(
            f"Sequence entry is missing {e}", consts.SPEC_SEQUENCES
        )

    def point(text):
        return space.parse_point(str(text))

    prefix = tuple(point(p) for p in entry.get(consts.SPEC_SEQ_PREFIX, []))
    if consts.SPEC_TAIL_CONSTANT in tail:
        rule = ConstantTail(
            point(tail[consts.SPEC_TAIL_CONSTANT]),
            bool(tail.get(consts.SPEC_TAIL_DECLARED, False)),
        )
    elif consts.SPEC_TAIL_INDEXED in tail:
        rule = IndexedTail(named_spaces.get_family(tail[consts.SPEC_TAIL_INDEXED]))
    else:
        raise exceptions.ParseError(
            f"Tail of '{seq_id}' must be constant or indexed", consts.SPEC_SEQ_TAIL
        )
    return SequenceSpec(str(seq_id), point(limit), prefix, rule)


def presentation_from_document(doc: dict) -> SeqPresentation:
    space, points = _presentation_space(doc)
    sequences = [
        _sequence_from_document(entry, space)
        for entry in doc.get(consts.SPEC_SEQUENCES, [])
    ]
    return SeqPresentation(space, points, sequences)


def load_presentation(text: str) -> SeqPresentation:
    return presentation_from_document(_parse_json(text))


def _is_builtin(arg: str) -> bool:
    return arg in named_spaces.BUILTIN_NAMES or arg.startswith(
        consts.SPACE_CANTOR_PREFIX + ":"
    )


def _is_named(arg: str) -> bool:
    """Built-in names, and bare words that are not files, resolve by name."""
    return _is_builtin(arg) or (
        not os.path.splitext(arg)[1] and not os.path.exists(arg)
    )


def resolve_space(arg: str) -> Tuple[PremetricSpace, str]:
    """Return a built-in space or the finite space in a spec file, with the
    digest of its input."""
    if _is_named(arg):
        return named_spaces.get_named_space(arg), file_helper.content_digest(arg)
    text = file_helper.read_file(arg)
    return load_space(text), file_helper.content_digest(text)


def resolve_presentation(arg: str) -> Tuple[SeqPresentation, str]:
    if _is_named(arg):
        presentation = named_spaces.get_named_presentation(arg)
        return presentation, file_helper.content_digest(arg)
    text = file_helper.read_file(arg)
    return load_presentation(text), file_helper.content_digest(text)


def gamma_to_json(point, format_atom: Callable = str):
    """{"v": x} or {"e": [x, y, "t"]}, nested for higher levels."""
    if isinstance(point, Vertex):
        return {consts.POINT_VERTEX: gamma_to_json(point.point, format_atom)}
    if isinstance(point, Edge):
        return {
            consts.POINT_EDGE: [
                gamma_to_json(point.source, format_atom),
                gamma_to_json(point.target, format_atom),
                rationals.format_rational(point.t),
            ]
        }
    return format_atom(point)


def stem_to_json(point: TowerPoint, format_atom: Callable = str) -> list:
    return [
        {"level": k, "point": gamma_to_json(x, format_atom)}
        for k, x in enumerate(point.stem, start=1)
    ]


def to_jsonable(value, format_atom: Callable = None):
    """Convert witnesses and results to JSON values with exact rationals."""
    format_atom = format_atom or _format_atom
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return rationals.format_rational(value)
    if isinstance(value, Verdict):
        return {
            "holds": value.holds,
            "witness": to_jsonable(value.witness, format_atom),
            "certified": value.certified,
            "checked": value.checked,
        }
    if isinstance(value, (Vertex, Edge)):
        return gamma_to_json(value, format_atom)
    if isinstance(value, TowerPoint):
        return stem_to_json(value, format_atom)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v, format_atom) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        is_set = isinstance(value, (set, frozenset))
        items = sorted(value, key=repr) if is_set else value
        return [to_jsonable(v, format_atom) for v in items]
    return format_atom(value)


def _format_atom(value) -> str:
    if isinstance(value, DPoint):
        return repr(value)
    if isinstance(value, tuple):
        return "(" + ", ".join(_format_atom(v) for v in value) + ")"
    if isinstance(value, Fraction):
        return rationals.format_rational(value)
    return str(value)
