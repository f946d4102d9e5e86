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

# Environment variables
ENV_SEED_VAR = "COBWEB_SEED"

# Default run options
DEFAULT_SEED = 0
DEFAULT_GRID_POINTS = 3
DEFAULT_SAMPLE_SIZE = 50
DEFAULT_STEM_PAIRS = 500
DEFAULT_MAX_STEM_LENGTH = 3
DEFAULT_BRUTE_FORCE_EXTRA_LEVELS = 8
DEFAULT_II_MAX_DENOMINATOR = 64
DEFAULT_II_BALL_SAMPLES = 200
DEFAULT_II_MEMBERS = 100
DEFAULT_CANTOR_BITS = 8
DEFAULT_ARENS_BOUND = 4
DEFAULT_DISCRETIZATION = 16
MAX_CANTOR_BITS = 12
MAX_EXHAUSTIVE_SUBSET_POINTS = 12
HEREDITARY_SUBSET_SAMPLES = 2048

# Local extremality kinds
EXTREMUM_MAX = "max"
EXTREMUM_MIN = "min"
EXTREMUM_CONST = "const"

# Sentinel distance for points outside every listed neighborhood
NEIGHBORHOOD_SENTINEL = 2

# Config keys
CONFIG_SUITE = "suite"
CONFIG_SUITES = "suites"
CONFIG_SEED = "seed"
CONFIG_GRID = "grid"
CONFIG_SAMPLE = "sample"
CONFIG_STEM_PAIRS = "stem_pairs"
CONFIG_MAX_STEM_LENGTH = "max_stem_length"
CONFIG_II_MAX_DENOMINATOR = "ii_max_denominator"
CONFIG_II_BALL_SAMPLES = "ii_ball_samples"
CONFIG_II_MEMBERS = "ii_members"
CONFIG_CANTOR_BITS = "cantor_bits"
CONFIG_ARENS_BOUND = "arens_bound"
CONFIG_FORMAT = "format"
CONFIG_FILTER_STATUS = "filter_status"

# Suites
SUITE_S3 = "s3"
SUITE_S5 = "s5"
SUITE_S7 = "s7"
SUITE_S8 = "s8"
SUITE_S9 = "s9"
SUITE_S10 = "s10"
SUITE_ALL = "all"
SUITE_NAMES = [SUITE_S3, SUITE_S5, SUITE_S7, SUITE_S8, SUITE_S9, SUITE_S10]

# Constructions accepted by the dist command
CONSTRUCTION_GAMMA = "gamma"
CONSTRUCTION_COBWEB = "cobweb"
CONSTRUCTION_TOWER = "tower"
CONSTRUCTION_OMEGA = "omega"
CONSTRUCTION_ERES = "eres"
CONSTRUCTIONS = [
    CONSTRUCTION_GAMMA,
    CONSTRUCTION_COBWEB,
    CONSTRUCTION_TOWER,
    CONSTRUCTION_OMEGA,
    CONSTRUCTION_ERES,
]

# Built-in spaces and sequence families
SPACE_FINITE = "finite"
SPACE_ARENS = "arens"
SPACE_DOUBLE_INTERVAL = "double-interval"
SPACE_HARMONIC = "harmonic"
SPACE_CANTOR_PREFIX = "cantor"
BUILTIN_SPACE_NAMES = [
    SPACE_ARENS,
    SPACE_DOUBLE_INTERVAL,
    SPACE_HARMONIC,
    SPACE_CANTOR_PREFIX + ":k",
]
FAMILY_ARENS_SPINE = "arens-spine"
FAMILY_ARENS_ROW = "arens-row"
FAMILY_ARENS_DIAG = "arens-diag"
FAMILY_HARMONIC = "harmonic"
FAMILY_NAMES = [
    FAMILY_ARENS_SPINE,
    FAMILY_ARENS_ROW + "(n)",
    FAMILY_ARENS_DIAG,
    FAMILY_HARMONIC,
]
CONSTANT_SEQUENCE_PREFIX = "const:"

# Spec file fields
SPEC_POINTS = "points"
SPEC_DIST = "dist"
SPEC_DEFAULT = "default"
SPEC_SPACE = "space"
SPEC_BOUND = "bound"
SPEC_SEQUENCES = "sequences"
SPEC_SEQ_ID = "id"
SPEC_SEQ_LIMIT = "limit"
SPEC_SEQ_PREFIX = "prefix"
SPEC_SEQ_TAIL = "tail"
SPEC_TAIL_CONSTANT = "constant"
SPEC_TAIL_INDEXED = "indexed"
SPEC_TAIL_DECLARED = "declared"

# Point serialization keys
POINT_VERTEX = "v"
POINT_EDGE = "e"

# Verdict table columns
RESULT_CASE_ID = "case_id"
RESULT_SUITE = "suite"
RESULT_PROPERTY = "property"
RESULT_STATUS = "status"
RESULT_CHECKED = "checked"
RESULT_CERTIFIED = "certified"
RESULT_WITNESS = "witness"
RESULT_COLUMNS = [
    RESULT_CASE_ID,
    RESULT_SUITE,
    RESULT_PROPERTY,
    RESULT_STATUS,
    RESULT_CHECKED,
    RESULT_CERTIFIED,
    RESULT_WITNESS,
]
COLUMN_FILTER_LIST = [RESULT_WITNESS]

STATUS_PASS = "pass"
STATUS_FAIL = "fail"

# Output formats
FORMAT_TYPES = ["csv", "json", "table", "text"]

# Exit codes
EXIT_PASS = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_INPUT_ERROR = 2
