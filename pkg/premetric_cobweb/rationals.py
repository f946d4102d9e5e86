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
"""Exact non-negative rationals used for every distance, radius and
edge parameter."""

import re
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Union

from premetric_cobweb import exceptions

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^\s*(\d+)(?:\s*/\s*(\d+))?\s*$")

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike, field: str = None) -> Fraction:
    """Return a non-negative Fraction parsed from "p/q", "p" or an int.

    Floats and decimal strings are rejected so that values stay exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise exceptions.ParseError(f"Inexact value {value!r}", field)
    if isinstance(value, Fraction):
        if value < 0:
            raise exceptions.ParseError(f"Negative value {value}", field)
        return value
    if isinstance(value, int):
        if value < 0:
            raise exceptions.ParseError(f"Negative value {value}", field)
        return Fraction(value)
    if not isinstance(value, str):
        raise exceptions.ParseError(f"Cannot parse rational from {value!r}", field)

    match = _RATIONAL_RE.match(value)
    if not match:
        raise exceptions.ParseError(f"Invalid rational literal {value!r}", field)
    numerator, denominator = match.group(1), match.group(2) or "1"
    if int(denominator) == 0:
        raise exceptions.ParseError(f"Zero denominator in {value!r}", field)
    return Fraction(int(numerator), int(denominator))


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def truncate_one(value: Fraction) -> Fraction:
    return value if value < ONE else ONE


def common_scale(values: Iterable[Fraction]) -> int:
    """Return the least common multiple of the denominators."""
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def candidate_radii(values: Iterable[Fraction]) -> list:
    """Radii at which balls can change: the realized positive values, the
    midpoints between consecutive ones and one value above the maximum."""
    positive = sorted({Fraction(v) for v in values if v > 0})
    if not positive:
        return [ONE]
    radii = [positive[0] / 2]
    for low, high in zip(positive, positive[1:]):
        radii.extend([low, (low + high) / 2])
    radii.extend([positive[-1], positive[-1] + 1])
    return radii
