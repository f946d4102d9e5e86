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
"""Topology engine for finite premetric spaces.

In a finite space the smallest ball around x is Z(x) = {y : d(x, y) = 0}, so a
set is open iff it is closed under the relation x -> y for d(x, y) = 0. The
minimal open neighborhood U_x is the reachability closure of x in that
relation, which makes every finite premetric topology an Alexandrov topology
determined by the family (U_x).
"""

import dataclasses
import itertools
import logging
import random
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

import networkx

from premetric_cobweb import consts, exceptions, rationals, sequences
from premetric_cobweb.premetric import FinitePremetricSpace, Verdict, ball


@dataclasses.dataclass(frozen=True)
class FiniteTopology(object):
    points: Tuple
    minimal: Dict[object, FrozenSet]

    def is_open(self, subset) -> bool:
        subset = frozenset(subset)
        return all(self.minimal[x] <= subset for x in subset)

    def open_sets(self) -> Iterator[FrozenSet]:
        """Yield every open set, smallest index masks first."""
        for mask in range(2 ** len(self.points)):
            subset = frozenset(
                p for i, p in enumerate(self.points) if mask & (1 << i)
            )
            if self.is_open(subset):
                yield subset

    def neighborhood(self, x) -> FrozenSet:
        return self.minimal[x]

    def same_as(self, other: "FiniteTopology") -> bool:
        return set(self.points) == set(other.points) and all(
            self.minimal[x] == other.minimal[x] for x in self.points
        )


@dataclasses.dataclass(frozen=True)
class NeighborhoodSystem(object):
    """For each point a finite decreasing list B_0(x) >= B_1(x) >= ..."""

    points: Tuple
    bases: Dict[object, Tuple[FrozenSet, ...]]

    def validate(self) -> "NeighborhoodSystem":
        for x in self.points:
            chain = self.bases.get(x)
            if not chain:
                raise exceptions.InvalidNeighborhoodSystem(
                    f"No neighborhoods listed for {x!r}"
                )
            for n, current in enumerate(chain):
                if x not in current:
                    raise exceptions.InvalidNeighborhoodSystem(
                        f"{x!r} is not in B_{n}({x!r})"
                    )
                if not set(current) <= set(self.points):
                    raise exceptions.InvalidNeighborhoodSystem(
                        f"B_{n}({x!r}) leaves the carrier"
                    )
                if n and not current <= chain[n - 1]:
                    raise exceptions.InvalidNeighborhoodSystem(
                        f"B_{n}({x!r}) is not contained in B_{n - 1}({x!r})"
                    )
        return self


def _topology_from_relation(points: Sequence, edges) -> FiniteTopology:
    graph = networkx.DiGraph()
    graph.add_nodes_from(points)
    graph.add_edges_from(edges)
    minimal = {
        x: frozenset(networkx.descendants(graph, x) | {x}) for x in points
    }
    return FiniteTopology(tuple(points), minimal)


def zero_relation(space: FinitePremetricSpace) -> List[Tuple]:
    return [
        (x, y)
        for x, y in itertools.permutations(space.points, 2)
        if space.distance(x, y) == 0
    ]


def premetric_topology(space: FinitePremetricSpace) -> FiniteTopology:
    """U is open iff every x in U has a ball B(x, r) inside U."""
    return _topology_from_relation(space.points, zero_relation(space))


def interior(top: FiniteTopology, subset) -> FrozenSet:
    subset = frozenset(subset)
    return frozenset(x for x in subset if top.minimal[x] <= subset)


def closure(top: FiniteTopology, subset) -> FrozenSet:
    subset = frozenset(subset)
    return frozenset(x for x in top.points if top.minimal[x] & subset)


def is_basic(space: FinitePremetricSpace) -> Verdict:
    """Every ball B(x, r) is a neighborhood of x.

    Balls change only at realized values, so the candidate radii cover
    every distinct ball. The witness is the first failing (x, r).
    """
    top = premetric_topology(space)
    radii = rationals.candidate_radii(space.values())
    checked = 0
    for x in space.points:
        for r in radii:
            checked += 1
            if not top.minimal[x] <= frozenset(ball(space, x, r)):
                return Verdict(False, (x, r), True, checked)
    return Verdict(True, None, True, checked)


def _subsets(points: Sequence, rng: random.Random, samples: int):
    n = len(points)
    if n <= consts.MAX_EXHAUSTIVE_SUBSET_POINTS:
        for mask in range(1, 2**n):
            yield [p for i, p in enumerate(points) if mask & (1 << i)]
        return
    logging.info("Sampling %s subsets of a %s point space", samples, n)
    for _ in range(samples):
        size = rng.randint(2, n)
        yield rng.sample(list(points), size)


def is_hereditary(
    space: FinitePremetricSpace, rng: random.Random = None, samples: int = None
) -> Verdict:
    """For every subset A the premetric d|A generates the subspace topology.

    Both topologies are Alexandrov, so they agree iff for each a in A the
    zero-distance closure of a inside A equals U_a intersected with A.
    The check is exhaustive up to a dozen points and sampled beyond.
    """
    top = premetric_topology(space)
    graph = networkx.DiGraph()
    graph.add_nodes_from(space.points)
    graph.add_edges_from(zero_relation(space))
    rng = rng or random.Random(0)
    samples = samples or consts.HEREDITARY_SUBSET_SAMPLES
    exhaustive = len(space.points) <= consts.MAX_EXHAUSTIVE_SUBSET_POINTS
    checked = 0
    for subset in _subsets(space.points, rng, samples):
        view = graph.subgraph(subset)
        members = frozenset(subset)
        for a in subset:
            checked += 1
            own = frozenset(networkx.descendants(view, a) | {a})
            if own != top.minimal[a] & members:
                return Verdict(False, (tuple(subset), a), exhaustive, checked)
    return Verdict(True, None, exhaustive, checked)


def is_seq_hausdorff_finite(space: FinitePremetricSpace) -> Verdict:
    """Convergent sequences have unique limits.

    A sequence converges to x iff it is eventually in U_x, so two limits are
    possible exactly when U_x and U_y meet.
    """
    top = premetric_topology(space)
    for x, y in itertools.combinations(space.points, 2):
        common = top.minimal[x] & top.minimal[y]
        if common:
            witness = next(p for p in space.points if p in common)
            return Verdict(False, (x, y, witness), True)
    return Verdict(True, None, True, len(space.points) ** 2)


def is_t1(top: FiniteTopology) -> Verdict:
    for x in top.points:
        if top.minimal[x] != frozenset([x]):
            other = next(p for p in top.points if p in top.minimal[x] and p != x)
            return Verdict(False, (x, other), True)
    return Verdict(True, None, True, len(top.points))


def premetric_from_neighborhoods(ns: NeighborhoodSystem) -> FinitePremetricSpace:
    """Build d(x, y) = inf{2^-n : y in B_n(x)} from a finite system.

    The last listed B_K(x) stands for every later index, so y in B_K(x)
    gives 0. Points outside B_0(x) get the sentinel distance 2.
    """
    ns.validate()
    table = {}
    for x in ns.points:
        chain = ns.bases[x]
        last = len(chain) - 1
        for y in ns.points:
            if y in chain[last]:
                table[(x, y)] = rationals.ZERO
                continue
            depth = max(
                (n for n, current in enumerate(chain) if y in current), default=None
            )
            if depth is None:
                table[(x, y)] = Fraction(consts.NEIGHBORHOOD_SENTINEL)
            else:
                table[(x, y)] = Fraction(1, 2**depth)
    return FinitePremetricSpace(ns.points, table, name="neighborhoods")


def neighborhood_topology(ns: NeighborhoodSystem) -> FiniteTopology:
    """The topology in which U is open iff it contains some B_n(x) per x.

    For decreasing finite chains the smallest member B_K(x) decides.
    """
    ns.validate()
    edges = [
        (x, y) for x in ns.points for y in ns.bases[x][-1] if y != x
    ]
    return _topology_from_relation(ns.points, edges)


def neighborhoods_are_open_bases(ns: NeighborhoodSystem) -> bool:
    """Every B_n(x) is a neighborhood of x in the generated topology."""
    top = neighborhood_topology(ns)
    return all(
        top.minimal[x] <= current for x in ns.points for current in ns.bases[x]
    )


def enumerate_grid_spaces(
    points: Sequence = ("p", "q", "r"), values: Sequence[Fraction] = None
) -> Iterator[FinitePremetricSpace]:
    """Yield every premetric table with off-diagonal values from the grid."""
    values = values or [Fraction(0), Fraction(1, 2), Fraction(1)]
    pairs = list(itertools.permutations(points, 2))
    for assignment in itertools.product(values, repeat=len(pairs)):
        table = {(x, x): rationals.ZERO for x in points}
        table.update(zip(pairs, assignment))
        yield FinitePremetricSpace(points, table, name="grid")


def find_non_basic(points: Sequence = ("p", "q", "r"), values: Sequence = None):
    """Return the first grid space that is not basic, with its witness.

    Every finite space is first-countable, so this is a finite instance of a
    first-countable premetric space whose balls are not all neighborhoods.
    """
    for space in enumerate_grid_spaces(points, values):
        verdict = is_basic(space)
        if not verdict:
            return space, verdict.witness
    return None, None


def converges_topologically_finite(
    space: FinitePremetricSpace, seq: "sequences.SequenceSpec", x
) -> bool:
    """The sequence is eventually inside U_x."""
    top = premetric_topology(space)
    if not isinstance(seq.tail, sequences.ConstantTail):
        raise exceptions.UndecidableTail(
            "Injective tails cannot live in a finite space"
        )
    return seq.tail.point in top.minimal[space.check_point(x)]
