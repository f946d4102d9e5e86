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


class PremetricException(Exception):
    pass


class InputException(PremetricException):
    """Raised for malformed or out-of-domain user input."""

    pass


class ParseError(InputException):
    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class UnknownPoint(InputException):
    pass


class OutOfBounds(InputException):
    pass


class OutOfRange(InputException):
    pass


class ZeroRadius(InputException):
    pass


class RadiusOutOfRange(InputException):
    pass


class SamePoint(InputException):
    pass


class UnknownSequence(InputException):
    pass


class DuplicateSequence(InputException):
    pass


class InvalidSequence(InputException):
    pass


class InvalidNeighborhoodSystem(InputException):
    pass


class NotMember(InputException):
    def __init__(self, point, level=1):
        super().__init__(f"Point {point!r} is not a member at level {level}")
        self.point = point
        self.level = level


class NotMemberAt(NotMember):
    pass


class IncoherentAt(InputException):
    def __init__(self, index):
        super().__init__(f"Stem is not coherent at level {index}")
        self.index = index


class Violation(PremetricException):
    def __init__(self, point, message=None):
        super().__init__(message or f"Premetric axiom violated at {point!r}")
        self.point = point


class NotUltrametric(PremetricException):
    def __init__(self, witness):
        super().__init__(f"Space is not ultrametric, witness {witness!r}")
        self.witness = witness


class UndecidableTail(PremetricException):
    pass


class NotInjective(PremetricException):
    def __init__(self, witness):
        super().__init__(f"Map is not injective, witness {witness!r}")
        self.witness = witness


class NotNonExpanding(PremetricException):
    def __init__(self, pair):
        super().__init__(f"Map is not non-expanding on pair {pair!r}")
        self.pair = pair


class MembershipViolation(PremetricException):
    pass


class NotSeqOpen(PremetricException):
    pass


class NotInV(PremetricException):
    pass


class MaxNotAttained(PremetricException):
    pass
