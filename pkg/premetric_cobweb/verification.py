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

"""The Verifier runs the property suites and collects one verdict per case.

    verifier = Verifier(config_manager)
    result_df = verifier.execute()

Suites:
    s3   finite topology theorems on the exhaustive table grid, Arens checks
    s5   the complete oriented graph: metric axioms, path oracle, functor
    s7   the cobweb: ball images, compression, naturality
    s8   the tower: closed form, metric, projections, Cantor economy
    s9   sequence decomposition and the economical resolution
    s10  local extremality on the cobweb of the double interval

Each suite draws from its own PRNG seeded with "<seed>:<suite>", so a
report only depends on the options and the seed.
"""

import functools
import itertools
import json
import logging
import operator
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List

import pandas

from premetric_cobweb import (
    consts,
    exceptions,
    file_helper,
    metadata,
    named_spaces,
    rationals,
    spec_io,
)
from premetric_cobweb.cobweb import (
    CobwebSpace,
    check_cobweb_isometric_embedding,
    check_distance_lower_bound,
    check_local_constancy,
    check_vertex_nonexpansion,
    cobweb_map,
    compression_naturality,
    compression_nonexpansion_experiment,
    pi_ball_image_check,
)
from premetric_cobweb.config_manager import ConfigManager
from premetric_cobweb.eres import (
    EResolution,
    convergent_sequence_neighborhood,
    eres_map,
    lift_base_point,
    resolution_census,
    resolve,
    sample_epoints,
    verify_neighborhood,
)
from premetric_cobweb.graph_gamma import (
    GammaSpace,
    arc_points,
    check_isometric_embedding,
    check_shortest_path_oracle,
    gamma_distance,
    gamma_map,
)
from premetric_cobweb.metadata import PropertyResult
from premetric_cobweb.premetric import (
    FinitePremetricSpace,
    Verdict,
    as_callable,
    classify,
    is_1_separating,
    is_2_separating,
    isoceles_check,
    subspace,
    truncate,
    validate_premetric,
)
from premetric_cobweb.seqdec import (
    DPoint,
    DSpace,
    SeqPresentation,
    d_map,
    d_premetric,
    evaluate,
    is_seq_open,
    lemma41_ball_witness,
    relabel,
    zero_distance_aliases,
)
from premetric_cobweb.sequences import (
    LIMIT,
    BallPointSet,
    ConstantTail,
    FinitePointSet,
    IndexedTail,
    SequenceSpec,
    Universe,
    converges_by_premetric,
)
from premetric_cobweb.topology import (
    NeighborhoodSystem,
    converges_topologically_finite,
    enumerate_grid_spaces,
    find_non_basic,
    is_basic,
    is_hereditary,
    is_seq_hausdorff_finite,
    is_t1,
    neighborhood_topology,
    premetric_from_neighborhoods,
    premetric_topology,
)
from premetric_cobweb.tower import (
    OmegaSpace,
    TowerSpace,
    limit_projection,
    omega_compression,
    omega_distance,
    omega_distance_brute_force,
    omega_map,
    sample_stems,
)

GRID_VALUES = [Fraction(0), Fraction(1, 2), Fraction(1)]
NONEXPANSION_VALUES = [
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(1),
    Fraction(3, 2),
]
RANDOM_BASE_VALUES = [
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
    Fraction(3, 2),
]
GAMMA_PARAMS = [
    Fraction(1, 4),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(3, 4),
]
BALL_RADII = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]
GAMMA_CARRIER = ("a", "b", "c", "d")
CHECK_SAMPLE_SIZE = 30


def point_names(count: int) -> List[str]:
    if count <= 10:
        return [chr(ord("p") + i) for i in range(count)]
    return [f"p{i}" for i in range(count)]


def space_witness(space: FinitePremetricSpace) -> dict:
    return json.loads(spec_io.dump_space(space))


def error_witness(error: exceptions.PremetricException) -> dict:
    witness = {"error": type(error).__name__, "message": str(error)}
    for attr in ("point", "witness", "pair", "index", "level"):
        if hasattr(error, attr):
            witness[attr] = spec_io.to_jsonable(getattr(error, attr))
    return witness


def run_case(suite: str, name: str, prop: str, check: Callable) -> PropertyResult:
    """Evaluate one property; a raised library error is a failed case."""
    case_id = f"{suite}.{name}"
    try:
        verdict = check()
    except exceptions.PremetricException as e:
        logging.warning("Case %s raised %s: %s", case_id, type(e).__name__, e)
        return PropertyResult(
            case_id, suite, prop, consts.STATUS_FAIL, witness=error_witness(e)
        )
    if not isinstance(verdict, Verdict):
        verdict = Verdict(bool(verdict))
    if not verdict.certified:
        logging.debug("Case %s is sampled, not certified", case_id)
    return PropertyResult(
        case_id,
        suite,
        prop,
        consts.STATUS_PASS if verdict.holds else consts.STATUS_FAIL,
        checked=verdict.checked,
        certified=verdict.certified,
        witness=None if verdict.holds else spec_io.to_jsonable(verdict.witness),
    )


def _equivalence(spaces, left: Callable, right: Callable) -> Verdict:
    """left(space) == right(space) on every space; witness is the first table."""
    checked = 0
    for space in spaces:
        checked += 1
        lhs, rhs = bool(left(space)), bool(right(space))
        if lhs != rhs:
            return Verdict(
                False, {"space": space_witness(space), "left": lhs, "right": rhs}
            )
    return Verdict(True, None, True, checked)


def _implication(spaces, premise: Callable, conclusion: Callable) -> Verdict:
    checked = 0
    for space in spaces:
        checked += 1
        if premise(space) and not conclusion(space):
            return Verdict(False, {"space": space_witness(space)})
    return Verdict(True, None, True, checked)


def random_base(
    rng: random.Random, size: int, values=RANDOM_BASE_VALUES, name: str = "random"
) -> FinitePremetricSpace:
    points = point_names(size)
    table = {
        (x, y): rationals.ZERO if x == y else rng.choice(values)
        for x in points
        for y in points
    }
    return FinitePremetricSpace(points, table, name=name)


def random_line_base(rng: random.Random, size: int) -> FinitePremetricSpace:
    """Points on a line at multiples of 1/4, a pseudometric base."""
    points = point_names(size)
    positions = {p: Fraction(rng.randint(0, 8), 4) for p in points}
    return FinitePremetricSpace.from_function(
        points, lambda x, y: abs(positions[x] - positions[y]), name="line"
    )


def renamed(space: FinitePremetricSpace):
    """An isometric copy with upper-case point ids and the renaming maps."""
    forward = {p: p.upper() for p in space.points}
    backward = {v: k for k, v in forward.items()}
    copy = FinitePremetricSpace.from_function(
        [forward[p] for p in space.points],
        lambda x, y: space.distance(backward[x], backward[y]),
        name=f"{space.name}'",
    )
    return copy, forward, backward


POINT_SPACE = FinitePremetricSpace(["*"], {("*", "*"): 0}, name="point")


def _collapse(_):
    return "*"


def canonical_tables(size: int, values=NONEXPANSION_VALUES):
    """Truncated tables up to relabeling of points, and the raw table count.

    Compression and its target only see min{1, d}, so tables that agree
    after truncation and a permutation of points behave identically.
    """
    points = point_names(size)
    pairs = list(itertools.permutations(range(size), 2))
    perms = list(itertools.permutations(range(size)))
    classes = {}
    total = 0
    for assignment in itertools.product(values, repeat=len(pairs)):
        total += 1
        table = dict(zip(pairs, (rationals.truncate_one(v) for v in assignment)))
        key = min(
            tuple(table[(sigma[i], sigma[j])] for i, j in pairs) for sigma in perms
        )
        if key not in classes:
            full = {(points[i], points[j]): v for (i, j), v in zip(pairs, key)}
            full.update({(p, p): rationals.ZERO for p in points})
            classes[key] = FinitePremetricSpace(points, full, name="table")
    return list(classes.values()), total


# Suite s3: finite premetric topology.


def _neighborhood_systems(spaces):
    """Decreasing chains of balls at the candidate radii of each space."""
    for space in spaces:
        radii = sorted(rationals.candidate_radii(space.values()), reverse=True)
        bases = {
            x: tuple(
                frozenset(y for y in space.points if space.distance(x, y) < r)
                for r in radii
            )
            for x in space.points
        }
        yield NeighborhoodSystem(space.points, bases)


def _check_neighborhood_topologies(spaces) -> Verdict:
    checked = 0
    for ns in _neighborhood_systems(spaces):
        checked += 1
        built = premetric_topology(premetric_from_neighborhoods(ns))
        if not built.same_as(neighborhood_topology(ns)):
            return Verdict(False, {"points": list(ns.points)}, True, checked)
    return Verdict(True, None, True, checked)


def _check_non_basic_exists(points) -> Verdict:
    space, witness = find_non_basic(points, GRID_VALUES)
    if space is None:
        return Verdict(False, {"points": list(points)})
    logging.debug("Non-basic witness %s in %s", witness, space)
    return Verdict(True, None, True, 1)


def _check_arens_diag_rejected(bound: int) -> Verdict:
    space = named_spaces.ArensSpace(bound)
    diag = SequenceSpec(
        "diag",
        named_spaces.ORIGIN,
        (),
        IndexedTail(named_spaces.ArensDiagFamily()),
    )
    try:
        SeqPresentation(space, space.listed_points(), [diag])
    except exceptions.InvalidSequence:
        return Verdict(True, None, True, 1)
    return Verdict(False, "diag accepted", True, 1)


def _check_arens_convergence(bound: int) -> Verdict:
    presentation = named_spaces.arens_presentation(bound)
    space = presentation.space
    checked = 0
    for seq in presentation.sequences:
        if isinstance(seq.tail, ConstantTail):
            continue
        checked += 1
        if not converges_by_premetric(space, seq, seq.limit):
            return Verdict(False, (seq.id, seq.limit), True, checked)
        for other in space.listed_points():
            if other == seq.limit:
                continue
            checked += 1
            if converges_by_premetric(space, seq, other):
                return Verdict(False, (seq.id, other), True, checked)
    return Verdict(True, None, True, checked)


def _check_convergence_agreement(spaces) -> Verdict:
    """On 2-separating spaces, lim d(x, x_n) = 0 iff the tail enters U_x."""
    checked = 0
    for space in spaces:
        if not is_2_separating(space):
            continue
        for x, c in itertools.product(space.points, repeat=2):
            checked += 1
            seq = SequenceSpec("s", x, tuple(space.points), ConstantTail(c, True))
            by_premetric = converges_by_premetric(space, seq, x)
            if by_premetric != converges_topologically_finite(space, seq, x):
                witness = {"space": space_witness(space), "limit": x, "tail": c}
                return Verdict(False, witness, True, checked)
    return Verdict(True, None, True, checked)


def _check_truncate_idempotent(spaces) -> Verdict:
    checked = 0
    for space in spaces:
        checked += 1
        once = truncate(space)
        if truncate(once) != once:
            return Verdict(False, space_witness(space), True, checked)
    return Verdict(True, None, True, checked)


def suite_s3(config: ConfigManager, rng: random.Random) -> List[PropertyResult]:
    suite = consts.SUITE_S3
    points = point_names(config.grid)
    logging.info(
        "Enumerating %s tables on %s points",
        len(GRID_VALUES) ** (len(points) * (len(points) - 1)),
        len(points),
    )
    spaces = list(enumerate_grid_spaces(points, GRID_VALUES))

    def hereditary(space):
        return is_hereditary(space, rng)

    bound = config.arens_bound
    arens = named_spaces.ArensSpace(bound)
    return [
        run_case(
            suite,
            "basic-iff-hereditary",
            "is_basic <=> is_hereditary",
            lambda: _equivalence(spaces, is_basic, hereditary),
        ),
        run_case(
            suite,
            "2sep-iff-seq-hausdorff",
            "is_2_separating <=> is_seq_hausdorff",
            lambda: _equivalence(spaces, is_2_separating, is_seq_hausdorff_finite),
        ),
        run_case(
            suite,
            "2sep-implies-basic",
            "is_2_separating => is_basic",
            lambda: _implication(spaces, is_2_separating, is_basic),
        ),
        run_case(
            suite,
            "1sep-iff-t1",
            "is_1_separating <=> T1",
            lambda: _equivalence(
                spaces, is_1_separating, lambda s: is_t1(premetric_topology(s))
            ),
        ),
        run_case(
            suite,
            "non-basic-exists",
            "a finite (first-countable) space that is not basic",
            lambda: _check_non_basic_exists(point_names(max(3, config.grid))),
        ),
        run_case(
            suite,
            "neighborhood-premetric",
            "premetric of a neighborhood system generates its topology",
            lambda: _check_neighborhood_topologies(spaces),
        ),
        run_case(
            suite,
            "truncate-idempotent",
            "truncate(truncate(X)) == truncate(X)",
            lambda: _check_truncate_idempotent(spaces),
        ),
        run_case(
            suite,
            "convergence-agreement",
            "constant tails: premetric convergence == topological convergence",
            lambda: _check_convergence_agreement(spaces),
        ),
        run_case(
            suite,
            "arens-A-subspace",
            "d restricted to A is {0,1}-valued",
            lambda: named_spaces.arens_A_subspace_check(bound),
        ),
        run_case(
            suite,
            "arens-premetric",
            "Arens premetric validates",
            lambda: validate_premetric(arens),
        ),
        run_case(
            suite,
            "arens-convergence",
            "spine and rows converge by the premetric to their limits only",
            lambda: _check_arens_convergence(bound),
        ),
        run_case(
            suite,
            "arens-diag-rejected",
            "the diagonal has no premetric limit",
            lambda: _check_arens_diag_rejected(bound),
        ),
    ]


# Suite s5: the complete oriented graph.


def _carrier(size: int) -> FinitePremetricSpace:
    points = GAMMA_CARRIER[:size]
    return FinitePremetricSpace.from_function(
        points, lambda x, y: rationals.ZERO if x == y else rationals.ONE, name="carrier"
    )


def _check_gamma_metric() -> Verdict:
    checked = 0
    for size in range(1, len(GAMMA_CARRIER) + 1):
        carrier = _carrier(size)
        points = arc_points(carrier.points, GAMMA_PARAMS)
        space = subspace(GammaSpace(carrier), points)
        flags = classify(space)
        checked += flags.checked
        if not flags.is_metric:
            return Verdict(False, {"carrier": size, **flags.witnesses}, True, checked)
        diameter = max(space.values())
        if diameter > 2:
            witness = {"carrier": size, "diameter": diameter}
            return Verdict(False, witness, True, checked)
    return Verdict(True, None, True, checked)


def _check_gamma_injections() -> Verdict:
    checked = 0
    for size in range(1, len(GAMMA_CARRIER) + 1):
        source = point_names(size)
        for image in itertools.permutations(GAMMA_CARRIER, size):
            f = dict(zip(source, image))
            verdict = check_isometric_embedding(f, source)
            checked += verdict.checked
            if not verdict:
                witness = {"map": f, "pair": verdict.witness}
                return Verdict(False, witness, True, checked)
    return Verdict(True, None, True, checked)


def _check_gamma_contraction() -> Verdict:
    """A non-injective map strictly shrinks some distance."""
    f = {"p": "a", "q": "a", "r": "b"}
    sample = arc_points(list(f), [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
    checked = 0
    for a, b in itertools.product(sample, repeat=2):
        checked += 1
        if gamma_distance(gamma_map(f, a), gamma_map(f, b)) < gamma_distance(a, b):
            return Verdict(True, None, True, checked)
    return Verdict(False, "no contracted pair", True, checked)


def _check_gamma_functor(rng: random.Random, samples: int) -> Verdict:
    carrier = list(GAMMA_CARRIER)
    points = arc_points(carrier, GAMMA_PARAMS)
    checked = 0
    for _ in range(samples):
        f = {x: rng.choice(carrier) for x in carrier}
        g = {x: rng.choice(carrier) for x in carrier}
        a = rng.choice(points)
        checked += 1
        if gamma_map(lambda x: x, a) != a:
            return Verdict(False, ("identity", a), True, checked)
        composed = gamma_map(lambda x: g[f[x]], a)
        if composed != gamma_map(g, gamma_map(f, a)):
            return Verdict(False, ("composition", a, f, g), True, checked)
    return Verdict(True, None, True, checked)


def suite_s5(config: ConfigManager, rng: random.Random) -> List[PropertyResult]:
    suite = consts.SUITE_S5
    return [
        run_case(
            suite,
            "gamma-metric",
            "Gamma X is a metric space of diameter <= 2",
            _check_gamma_metric,
        ),
        run_case(
            suite,
            "gamma-shortest-path",
            "closed form equals shortest paths on the discretized graph",
            lambda: check_shortest_path_oracle(
                GAMMA_CARRIER[:3], consts.DEFAULT_DISCRETIZATION
            ),
        ),
        run_case(
            suite,
            "gamma-injective-isometry",
            "Gamma f is isometric for injective f",
            _check_gamma_injections,
        ),
        run_case(
            suite,
            "gamma-noninjective-contraction",
            "a non-injective f contracts some pair",
            _check_gamma_contraction,
        ),
        run_case(
            suite,
            "gamma-functor",
            "identity and composition laws",
            lambda: _check_gamma_functor(rng, 100),
        ),
    ]


# Suite s7: the cobweb.


def _subsample(rng: random.Random, points: list, size: int = CHECK_SAMPLE_SIZE):
    if len(points) <= size:
        return points
    return rng.sample(points, size)


def _each_base(bases, check: Callable) -> Verdict:
    """Run a per-base check, stopping at the first failure."""
    checked = 0
    for base in bases:
        verdict = check(base)
        checked += verdict.checked
        if not verdict:
            return Verdict(
                False,
                {"space": space_witness(base), "witness": verdict.witness},
                verdict.certified,
                checked,
            )
    return Verdict(True, None, True, checked)


def _check_ball_images(base) -> Verdict:
    space = CobwebSpace(base)
    grid = space.witness_grid()
    checked = 0
    for x in base.points:
        for r in BALL_RADII:
            verdict = pi_ball_image_check(space, x, r, grid)
            checked += verdict.checked
            if not verdict:
                return Verdict(False, (x, r, verdict.witness), True, checked)
    return Verdict(True, None, True, checked)


def _check_nonexpansion_equivalence() -> Verdict:
    checked = 0
    total = 0
    for size in (2, 3):
        tables, count = canonical_tables(size)
        total += count
        logging.info(
            "Compression experiment on %s classes of %s tables", len(tables), count
        )
        for base in tables:
            checked += 1
            result = compression_nonexpansion_experiment(CobwebSpace(base))
            if not result.agree:
                return Verdict(
                    False,
                    {
                        "space": space_witness(base),
                        "nonexpanding": result.nonexpanding,
                        "pseudometric": result.pseudometric,
                        "pair": result.witness,
                    },
                    True,
                    checked,
                )
    return Verdict(True, None, True, total)


def _check_cobweb_naturality(rng: random.Random, base) -> Verdict:
    source = CobwebSpace(base)
    copy, forward, backward = renamed(base)
    target = CobwebSpace(copy)
    point = CobwebSpace(POINT_SPACE)
    sample = _subsample(rng, source.witness_grid())
    checked = 0
    for a in sample:
        checked += 1
        image = cobweb_map(forward, source, target, a)
        if not compression_naturality(forward, source, target, a):
            return Verdict(False, ("rename", a), True, checked)
        if not compression_naturality(_collapse, source, point, a):
            return Verdict(False, ("collapse", a), True, checked)
        if cobweb_map(backward, target, source, image) != a:
            return Verdict(False, ("composition", a), True, checked)
        if cobweb_map(lambda x: x, source, source, a) != a:
            return Verdict(False, ("identity", a), True, checked)
    return Verdict(True, None, True, checked)


def _check_cobweb_embedding(rng: random.Random, base) -> Verdict:
    source = CobwebSpace(base)
    copy, forward, _ = renamed(base)
    sample = _subsample(rng, source.witness_grid())
    return check_cobweb_isometric_embedding(forward, source, CobwebSpace(copy), sample)


def suite_s7(config: ConfigManager, rng: random.Random) -> List[PropertyResult]:
    suite = consts.SUITE_S7
    bases = [random_base(rng, rng.randint(2, 5)) for _ in range(config.sample)]

    def sampled(check):
        def run(base):
            space = CobwebSpace(base)
            return check(space, _subsample(rng, space.witness_grid()))

        return run

    return [
        run_case(
            suite,
            "pi-ball-image",
            "pi(B(x, r)) == B(x, r) for r in (0, 1]",
            lambda: _each_base(bases, _check_ball_images),
        ),
        run_case(
            suite,
            "nonexpansion-iff-pseudometric",
            "pi non-expanding on the witness grid <=> d-bar pseudometric",
            _check_nonexpansion_equivalence,
        ),
        run_case(
            suite,
            "vertex-nonexpansion",
            "d-bar(x, pi a) <= d(x, a)",
            lambda: _each_base(bases, sampled(check_vertex_nonexpansion)),
        ),
        run_case(
            suite,
            "distance-lower-bound",
            "d(a, b) >= min_x d-bar(x, pi a) + d-bar(x, pi b)",
            lambda: _each_base(bases, sampled(check_distance_lower_bound)),
        ),
        run_case(
            suite,
            "local-constancy",
            "pi is constant on B(a, min(t, 1 - t))",
            lambda: _each_base(bases, sampled(check_local_constancy)),
        ),
        run_case(
            suite,
            "pi-naturality",
            "f(pi a) == pi(f a) and functor laws",
            lambda: _each_base(bases, lambda b: _check_cobweb_naturality(rng, b)),
        ),
        run_case(
            suite,
            "isometric-embedding",
            "injective non-expanding maps embed isometrically",
            lambda: _each_base(bases, lambda b: _check_cobweb_embedding(rng, b)),
        ),
    ]


# Suite s8: the tower.


def _stem_pairs(config: ConfigManager, rng: random.Random, base_factory: Callable):
    """Random (tower, a, b) triples spread over several small bases."""
    per_base = 50
    triples = []
    while len(triples) < config.stem_pairs:
        tower = TowerSpace(base_factory(rng, rng.randint(2, 3)))
        count = min(per_base, config.stem_pairs - len(triples))
        stems = sample_stems(tower, rng, 2 * count, config.max_stem_length)
        triples.extend((tower, a, b) for a, b in zip(stems[::2], stems[1::2]))
    return triples


def _check_closed_form(triples) -> Verdict:
    checked = 0
    for tower, a, b in triples:
        checked += 1
        closed = omega_distance(tower, a, b)
        brute = omega_distance_brute_force(
            tower, a, b, consts.DEFAULT_BRUTE_FORCE_EXTRA_LEVELS
        )
        if closed != brute:
            return Verdict(False, (a, b, closed, brute), True, checked)
    return Verdict(True, None, True, checked)


def _check_omega_metric(rng: random.Random, config: ConfigManager) -> Verdict:
    checked = 0
    for _ in range(5):
        base = random_base(rng, rng.randint(2, 3))
        space = OmegaSpace(base)
        stems = sample_stems(space.tower, rng, 12, config.max_stem_length)
        flags = classify(subspace(space, list(dict.fromkeys(stems))))
        checked += flags.checked
        if not flags.is_metric:
            return Verdict(
                False, {"space": space_witness(base), **flags.witnesses}, True, checked
            )
    return Verdict(True, None, True, checked)


def _check_projections(triples) -> Verdict:
    """Projections are n-Lipschitz and coherent under compression."""
    checked = 0
    for tower, a, b in triples:
        distance = omega_distance(tower, a, b)
        last = max(len(a), len(b)) + 1
        for n in range(1, last + 1):
            checked += 1
            pa, pb = limit_projection(a, n), limit_projection(b, n)
            if tower.level_distance(n, pa, pb) > n * distance:
                return Verdict(False, ("lipschitz", a, b, n), True, checked)
            if tower.level(n + 1).compression(limit_projection(a, n + 1)) != pa:
                return Verdict(False, ("coherence", a, n), True, checked)
    return Verdict(True, None, True, checked)


def _check_omega_compression(triples) -> Verdict:
    checked = 0
    for tower, a, b in triples:
        checked += 1
        image = tower.base.truncated_distance(
            omega_compression(tower, a), omega_compression(tower, b)
        )
        if image > omega_distance(tower, a, b):
            return Verdict(False, (a, b), True, checked)
    return Verdict(True, None, True, checked)


def _check_cantor(bits: int) -> Verdict:
    census = named_spaces.cantor_census(bits)
    if census["value_count"] != bits + 1:
        return Verdict(False, census, True, census["pairs"])
    verdict = isoceles_check(named_spaces.CantorSpace(bits))
    verdict.checked += census["pairs"]
    return verdict


def _check_omega_naturality(rng: random.Random, config: ConfigManager) -> Verdict:
    checked = 0
    for _ in range(10):
        base = random_base(rng, rng.randint(2, 3))
        copy, forward, backward = renamed(base)
        source, target = TowerSpace(base), TowerSpace(copy)
        point = TowerSpace(POINT_SPACE)
        for a in sample_stems(source, rng, 10, config.max_stem_length):
            checked += 1
            image = omega_map(forward, source, target, a)
            expected = forward[omega_compression(source, a)]
            if omega_compression(target, image) != expected:
                return Verdict(False, ("rename", a), True, checked)
            if omega_map(backward, target, source, image) != a:
                return Verdict(False, ("composition", a), True, checked)
            if omega_map(lambda x: x, source, source, a) != a:
                return Verdict(False, ("identity", a), True, checked)
            collapsed = omega_map(_collapse, source, point, a)
            if omega_compression(point, collapsed) != "*":
                return Verdict(False, ("collapse", a), True, checked)
    return Verdict(True, None, True, checked)


def suite_s8(config: ConfigManager, rng: random.Random) -> List[PropertyResult]:
    suite = consts.SUITE_S8
    triples = _stem_pairs(config, rng, random_base)
    pseudometric_triples = _stem_pairs(config, rng, random_line_base)
    return [
        run_case(
            suite,
            "closed-form",
            "closed form equals the brute force maximum over levels",
            lambda: _check_closed_form(triples),
        ),
        run_case(
            suite,
            "omega-metric",
            "the tower metric is a metric on stems",
            lambda: _check_omega_metric(rng, config),
        ),
        run_case(
            suite,
            "projections",
            "limit projections are n-Lipschitz and coherent",
            lambda: _check_projections(triples),
        ),
        run_case(
            suite,
            "omega-compression",
            "compression non-expanding over pseudometric bases",
            lambda: _check_omega_compression(pseudometric_triples),
        ),
        run_case(
            suite,
            "cantor-economy",
            "Cantor truncation realizes k + 1 values and is isoceles",
            lambda: _check_cantor(config.cantor_bits),
        ),
        run_case(
            suite,
            "omega-naturality",
            "pi^omega naturality and tower functor laws",
            lambda: _check_omega_naturality(rng, config),
        ),
    ]


# Suite s9: sequence decomposition and the economical resolution.


def _check_census(resolution: EResolution, sample) -> Verdict:
    census = resolution_census(resolution, sample).census
    if not census.bound_holds:
        return Verdict(False, census.as_dict(), False, census.pairs)
    return Verdict(True, None, False, census.pairs)


def _check_lifts(resolution: EResolution) -> Verdict:
    """resolve is a left inverse of the lift, and lifts are 1 apart."""
    points = resolution.presentation.points
    lifts = {x: lift_base_point(resolution, x) for x in points}
    checked = 0
    for x in points:
        checked += 1
        if resolve(resolution, lifts[x]) != x:
            return Verdict(False, ("section", x), True, checked)
    for x, y in itertools.combinations(points, 2):
        checked += 1
        distance = omega_distance(resolution.tower, lifts[x], lifts[y])
        if distance != rationals.ONE:
            return Verdict(False, ("lift-distance", x, y, distance), True, checked)
    return Verdict(True, None, True, checked)


def _check_separation(resolution: EResolution, sample) -> Verdict:
    checked = 0
    for a, b in itertools.combinations(sample, 2):
        checked += 1
        if resolve(resolution, a) != resolve(resolution, b):
            if omega_distance(resolution.tower, a, b) == 0:
                return Verdict(False, (a, b), False, checked)
    return Verdict(True, None, False, checked)


def _check_neighborhoods(resolution: EResolution, sample) -> Verdict:
    checked = 0
    for a in sample:
        if convergent_sequence_neighborhood(resolution, a).radius <= 0:
            return Verdict(False, ("radius", a), False, checked)
        verdict = verify_neighborhood(resolution, a, sample)
        checked += verdict.checked
        if not verdict:
            return Verdict(False, verdict.witness, False, checked)
    return Verdict(True, None, False, checked)


def _check_dspace(presentation: SeqPresentation) -> Verdict:
    dspace = DSpace(presentation)
    checked = 0
    for a in dspace.grid_points():
        checked += 1
        if d_premetric(presentation, a, a) != 0:
            return Verdict(False, ("diagonal", a), True, checked)
        if not a.param.is_limit:
            limit = DPoint(a.seq_id, LIMIT)
            if d_premetric(presentation, limit, a) > a.param.value:
                return Verdict(False, ("convergence", a), True, checked)
    return Verdict(True, None, True, checked)


def _check_seq_open_examples(presentation: SeqPresentation) -> Verdict:
    space = presentation.space
    ball = BallPointSet(space, named_spaces.ORIGIN, Fraction(1, 2))
    verdict = is_seq_open(presentation, ball)
    checked = verdict.checked
    if verdict:
        return Verdict(False, ("ball accepted",), True, checked)
    verdict = is_seq_open(presentation, Universe())
    checked += verdict.checked
    if not verdict:
        return Verdict(False, ("universe rejected", verdict.witness), True, checked)
    cofinite = FinitePointSet([named_spaces.arens_point(1, 1)], complement=True)
    verdict = is_seq_open(presentation, cofinite)
    checked += verdict.checked
    if not verdict:
        return Verdict(False, ("cofinite rejected", verdict.witness), True, checked)
    return Verdict(True, None, True, checked)


def seq_open_pool(presentation: SeqPresentation, rng: random.Random, count: int):
    """Sequentially open sets among sampled finite, cofinite and ball sets."""
    space = presentation.space
    points = list(presentation.points)
    candidates = [Universe()]
    for _ in range(count):
        picked = rng.sample(points, min(2, len(points)))
        candidates.append(FinitePointSet(picked))
        candidates.append(FinitePointSet(picked, complement=True))
        radius = Fraction(1, rng.randint(1, 4))
        candidates.append(BallPointSet(space, rng.choice(points), radius))
    return [s for s in candidates if is_seq_open(presentation, s)]


def _check_seq_open_closure(
    presentation: SeqPresentation, rng: random.Random, count: int
) -> Verdict:
    """Unions and finite intersections of sequentially open sets stay open."""
    opens = seq_open_pool(presentation, rng, count)
    checked = 0
    for (i, a), (j, b) in itertools.combinations(enumerate(opens), 2):
        for name, combined in (("union", a | b), ("intersection", a & b)):
            checked += 1
            verdict = is_seq_open(presentation, combined)
            if not verdict:
                return Verdict(False, (name, i, j, verdict.witness), True, checked)
    checked += 1
    everything = functools.reduce(operator.or_, opens)
    verdict = is_seq_open(presentation, everything)
    if not verdict:
        return Verdict(False, ("union-all", verdict.witness), True, checked)
    return Verdict(True, None, True, checked)


def _check_zero_distance_cutoffs(resolution: EResolution) -> Verdict:
    """Zero distance aliases are joined by edges of cutoff 1 in level 1."""
    presentation = resolution.presentation
    level = resolution.tower.level(1)
    grid = DSpace(presentation).grid_points()
    checked = 0
    for a in grid:
        for b in zero_distance_aliases(presentation, a, grid):
            if b == a:
                continue
            checked += 1
            if level.cutoff(a, b) != rationals.ONE:
                return Verdict(False, (a, b, level.cutoff(a, b)), True, checked)
    return Verdict(True, None, True, checked)


def _check_lemma41(presentation: SeqPresentation) -> Verdict:
    spine = DPoint("spine", LIMIT)
    m = lemma41_ball_witness(presentation, spine, Universe())
    if m != 1:
        return Verdict(False, ("universe", m), True, 1)
    hole = FinitePointSet([named_spaces.arens_point(2)], complement=True)
    m = lemma41_ball_witness(presentation, spine, hole)
    if m != 3:
        return Verdict(False, ("cofinite", m), True, 2)
    return Verdict(True, None, True, 2)


def small_presentation() -> SeqPresentation:
    space = FinitePremetricSpace.from_function(
        ["a", "b", "c"],
        lambda x, y: rationals.ZERO if x == y else Fraction(1, 2),
        name="small",
    )
    seq = SequenceSpec("f", "a", ("b", "c"), ConstantTail("a"))
    return SeqPresentation(space, space.points, [seq])


def _check_relabel_naturality(rng: random.Random, sample_size: int) -> Verdict:
    """evaluate and resolve commute with an injective and a collapsing map."""
    presentation = small_presentation()
    copy, forward, _ = renamed(presentation.space)
    source = EResolution(presentation)
    sample = sample_epoints(source, rng, sample_size, base_size=12)
    checked = 0
    for name, mapping, space in (
        ("rename", forward, copy),
        ("collapse", _collapse, POINT_SPACE),
    ):
        g = as_callable(mapping)
        image = relabel(presentation, g, space)
        for a in DSpace(presentation).grid_points():
            checked += 1
            image_point = evaluate(image, d_map(g, a, image))
            if image_point != g(evaluate(presentation, a)):
                return Verdict(False, (name, "evaluate", a), True, checked)
        target = EResolution(image)
        for a in sample:
            checked += 1
            mapped = eres_map(g, source, target, a)
            if resolve(target, mapped) != g(resolve(source, a)):
                return Verdict(False, (name, "resolve", a), False, checked)
    return Verdict(True, None, False, checked)


def suite_s9(config: ConfigManager, rng: random.Random) -> List[PropertyResult]:
    suite = consts.SUITE_S9
    presentation = named_spaces.arens_presentation(max(3, config.arens_bound))
    resolution = EResolution(presentation)
    sample = sample_epoints(resolution, rng, config.sample, config.max_stem_length)
    results = [
        run_case(
            suite,
            "economy-census",
            "every distance is a level term and |values| <= 1 + sum_n |pi_n(A)|^2",
            lambda: _check_census(resolution, sample),
        )
    ]
    results.extend(
        [
            run_case(
                suite,
                "lift-section",
                "resolve(lift x) == x and lifts are 1 apart",
                lambda: _check_lifts(resolution),
            ),
            run_case(
                suite,
                "resolve-separation",
                "different resolve values are at positive distance",
                lambda: _check_separation(resolution, sample),
            ),
            run_case(
                suite,
                "sequence-neighborhood",
                "B(a, r) resolves into one convergent sequence",
                lambda: _check_neighborhoods(resolution, sample),
            ),
            run_case(
                suite,
                "dspace-premetric",
                "d(a, a) == 0 and d((f, 0), (f, 1/n)) <= 1/n",
                lambda: _check_dspace(presentation),
            ),
            run_case(
                suite,
                "zero-distance-cutoff",
                "d(a, b) == 0 gives an edge of cutoff 1 from a to b",
                lambda: _check_zero_distance_cutoffs(resolution),
            ),
            run_case(
                suite,
                "seq-open",
                "sequentially open examples over the Arens registry",
                lambda: _check_seq_open_examples(presentation),
            ),
            run_case(
                suite,
                "seq-open-closure",
                "unions and intersections of sequentially open sets are open",
                lambda: _check_seq_open_closure(presentation, rng, config.sample),
            ),
            run_case(
                suite,
                "lemma41-witness",
                "ball witness m for sequentially open sets",
                lambda: _check_lemma41(presentation),
            ),
            run_case(
                suite,
                "relabel-naturality",
                "evaluate and resolve commute with relabeling",
                lambda: _check_relabel_naturality(rng, config.sample),
            ),
        ]
    )
    return results


# Suite s10: the double interval.


def _check_extremality(cobweb, members, rng: random.Random, count: int) -> Verdict:
    checked = 0
    for a in members:
        verdict = named_spaces.verify_extremality(cobweb, a, rng, count)
        checked += verdict.checked
        if not verdict:
            return Verdict(False, verdict.witness, False, checked)
    return Verdict(True, None, False, checked)


def _check_surjectivity(cobweb, members) -> Verdict:
    values = {named_spaces.locally_extremal_f(cobweb, a) for a in members}
    needed = min(50, len(members) // 2)
    if len(values) < needed:
        return Verdict(False, {"distinct": len(values), "needed": needed}, False)
    return Verdict(True, None, False, len(members))


def suite_s10(config: ConfigManager, rng: random.Random) -> List[PropertyResult]:
    suite = consts.SUITE_S10
    space = named_spaces.DoubleIntervalSpace(config.ii_max_denominator)
    cobweb = CobwebSpace(space)
    members = named_spaces.sample_ii_members(cobweb, rng, config.ii_members)
    return [
        run_case(
            suite,
            "ii-premetric",
            "the double interval premetric validates",
            lambda: validate_premetric(space, rng, config.sample),
        ),
        run_case(
            suite,
            "local-extremality",
            "f = pr o pi is locally extremal",
            lambda: _check_extremality(cobweb, members, rng, config.ii_ball_samples),
        ),
        run_case(
            suite,
            "surjectivity",
            "f takes many distinct values",
            lambda: _check_surjectivity(cobweb, members),
        ),
    ]


SUITES: Dict[str, Callable] = {
    consts.SUITE_S3: suite_s3,
    consts.SUITE_S5: suite_s5,
    consts.SUITE_S7: suite_s7,
    consts.SUITE_S8: suite_s8,
    consts.SUITE_S9: suite_s9,
    consts.SUITE_S10: suite_s10,
}


class Verifier(object):
    def __init__(self, config_manager: ConfigManager, result_handler=None):
        """Initialize a Verifier over the requested suites.

        Args:
            config_manager (ConfigManager): Suite selection and run options.
            result_handler (TextResultHandler): Optional handler that renders
                the verdict table once the suites finish.
        """
        self.config_manager = config_manager
        self.result_handler = result_handler
        options = dict(config_manager.as_dict())
        options.pop(consts.CONFIG_FORMAT, None)
        self.run_metadata = metadata.RunMetadata(
            command="verify",
            seed=config_manager.seed,
            inputs_digest=file_helper.content_digest(
                json.dumps(options, sort_keys=True)
            ),
        )
        self.run_metadata.details = {
            "options": options,
            "ii_max_denominator": config_manager.ii_max_denominator,
        }

    def suite_rng(self, suite: str) -> random.Random:
        return random.Random(f"{self.config_manager.seed}:{suite}")

    def run_suite(self, suite: str) -> List[PropertyResult]:
        logging.info("Running suite %s", suite)
        results = SUITES[suite](self.config_manager, self.suite_rng(suite))
        failed = [r.case_id for r in results if not r.passed]
        if failed:
            logging.warning("Suite %s failed cases: %s", suite, ", ".join(failed))
        else:
            logging.info("Suite %s passed %s cases", suite, len(results))
        return results

    def execute(self) -> pandas.DataFrame:
        """Run every requested suite and return the verdict table."""
        suites = self.config_manager.suites
        with ThreadPoolExecutor(max_workers=len(suites)) as executor:
            futures = [executor.submit(self.run_suite, suite) for suite in suites]
            for future in futures:
                self.run_metadata.results.extend(future.result())
        self.run_metadata.finish()

        result_df = results_frame(self.run_metadata.results)
        if self.result_handler is not None:
            self.result_handler.execute(result_df)
        return result_df


def results_frame(results: List[PropertyResult]) -> pandas.DataFrame:
    rows = [r.as_dict() for r in sorted(results, key=lambda r: r.case_id)]
    return pandas.DataFrame(rows, columns=consts.RESULT_COLUMNS)
