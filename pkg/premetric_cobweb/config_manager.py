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

import logging
import os
from typing import Dict, List, Optional

import yaml

from premetric_cobweb import consts, exceptions, file_helper, jellyfish_distance


class ConfigManager(object):
    _config: dict = None

    def __init__(self, config: Optional[Dict] = None, overrides: Optional[Dict] = None):
        """Initialize a ConfigManager which supplies the options of a
            verification run.

        Command line overrides win over the YAML config, which wins over the
        seed environment variable, which wins over the built-in defaults.

        Args:
            config (Dict): The run config, usually loaded from YAML.
            overrides (Dict): Options given on the command line; None values
                are ignored.
        """
        self._config = dict(config or {})
        for key, value in (overrides or {}).items():
            if value is not None:
                self._config[key] = value
        self._check_suites(self.suites)

    @classmethod
    def from_yaml(cls, config_file: str, overrides: Optional[Dict] = None):
        text = file_helper.read_file(config_file)
        try:
            config = yaml.safe_load(text) or {}
        except yaml.YAMLError as e:
            raise exceptions.ParseError(f"Invalid YAML in {config_file}: {e}", "config")
        if not isinstance(config, dict):
            raise exceptions.ParseError(
                f"Config file {config_file} must hold a mapping", "config"
            )
        return cls(config, overrides)

    @property
    def config(self):
        """Return config object."""
        return self._config

    def _get_int(self, key: str, default: int, minimum: int = 1) -> int:
        value = self._config.get(key, default)
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise exceptions.ParseError(f"'{key}' must be an integer", key)
        if value < minimum:
            raise exceptions.OutOfRange(f"'{key}' must be >= {minimum}, got {value}")
        return value

    @property
    def seed(self) -> int:
        if consts.CONFIG_SEED in self._config:
            return self._get_int(consts.CONFIG_SEED, consts.DEFAULT_SEED, 0)
        env_seed = os.environ.get(consts.ENV_SEED_VAR)
        if env_seed:
            logging.debug("Using seed from %s", consts.ENV_SEED_VAR)
            try:
                return int(env_seed)
            except ValueError:
                raise exceptions.ParseError(
                    f"{consts.ENV_SEED_VAR} must be an integer, got '{env_seed}'",
                    consts.ENV_SEED_VAR,
                )
        return consts.DEFAULT_SEED

    @property
    def suites(self) -> List[str]:
        """Requested suites, with "all" expanded, in canonical order."""
        requested = self._config.get(
            consts.CONFIG_SUITES,
            self._config.get(consts.CONFIG_SUITE, consts.SUITE_ALL),
        )
        if isinstance(requested, str):
            requested = [s.strip() for s in requested.split(",") if s.strip()]
        if consts.SUITE_ALL in requested:
            return list(consts.SUITE_NAMES)
        return [s for s in consts.SUITE_NAMES if s in requested] + [
            s for s in requested if s not in consts.SUITE_NAMES
        ]

    def _check_suites(self, suites: List[str]):
        for suite in suites:
            if suite not in consts.SUITE_NAMES:
                raise exceptions.ParseError(
                    jellyfish_distance.unknown_name_message(
                        "suite", suite, consts.SUITE_NAMES + [consts.SUITE_ALL]
                    ),
                    consts.CONFIG_SUITE,
                )

    @property
    def grid(self) -> int:
        return self._get_int(consts.CONFIG_GRID, consts.DEFAULT_GRID_POINTS, 2)

    @property
    def sample(self) -> int:
        return self._get_int(consts.CONFIG_SAMPLE, consts.DEFAULT_SAMPLE_SIZE)

    @property
    def stem_pairs(self) -> int:
        return self._get_int(consts.CONFIG_STEM_PAIRS, consts.DEFAULT_STEM_PAIRS)

    @property
    def max_stem_length(self) -> int:
        return self._get_int(
            consts.CONFIG_MAX_STEM_LENGTH, consts.DEFAULT_MAX_STEM_LENGTH
        )

    @property
    def ii_max_denominator(self) -> int:
        return self._get_int(
            consts.CONFIG_II_MAX_DENOMINATOR, consts.DEFAULT_II_MAX_DENOMINATOR, 2
        )

    @property
    def ii_ball_samples(self) -> int:
        return self._get_int(
            consts.CONFIG_II_BALL_SAMPLES, consts.DEFAULT_II_BALL_SAMPLES
        )

    @property
    def ii_members(self) -> int:
        return self._get_int(consts.CONFIG_II_MEMBERS, consts.DEFAULT_II_MEMBERS, 2)

    @property
    def cantor_bits(self) -> int:
        bits = self._get_int(consts.CONFIG_CANTOR_BITS, consts.DEFAULT_CANTOR_BITS)
        if bits > consts.MAX_CANTOR_BITS:
            raise exceptions.OutOfBounds(
                f"'{consts.CONFIG_CANTOR_BITS}' must be <= {consts.MAX_CANTOR_BITS}"
            )
        return bits

    @property
    def arens_bound(self) -> int:
        return self._get_int(consts.CONFIG_ARENS_BOUND, consts.DEFAULT_ARENS_BOUND, 2)

    @property
    def format(self) -> str:
        value = self._config.get(consts.CONFIG_FORMAT, "table")
        if value not in consts.FORMAT_TYPES:
            raise exceptions.ParseError(
                jellyfish_distance.unknown_name_message(
                    "format", str(value), consts.FORMAT_TYPES
                ),
                consts.CONFIG_FORMAT,
            )
        return value

    @property
    def filter_status(self) -> Optional[List[str]]:
        status = self._config.get(consts.CONFIG_FILTER_STATUS)
        if isinstance(status, str):
            return [s.strip() for s in status.split(",")]
        return status

    def as_dict(self) -> Dict:
        """The effective options, as written by `configs get`."""
        return {
            consts.CONFIG_SUITES: self.suites,
            consts.CONFIG_SEED: self.seed,
            consts.CONFIG_GRID: self.grid,
            consts.CONFIG_SAMPLE: self.sample,
            consts.CONFIG_STEM_PAIRS: self.stem_pairs,
            consts.CONFIG_MAX_STEM_LENGTH: self.max_stem_length,
            consts.CONFIG_II_MAX_DENOMINATOR: self.ii_max_denominator,
            consts.CONFIG_II_BALL_SAMPLES: self.ii_ball_samples,
            consts.CONFIG_II_MEMBERS: self.ii_members,
            consts.CONFIG_CANTOR_BITS: self.cantor_bits,
            consts.CONFIG_ARENS_BOUND: self.arens_bound,
            consts.CONFIG_FORMAT: self.format,
        }
