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

import argparse
from unittest import mock

import pytest

from premetric_cobweb import cli_tools, consts

CLI_ARGS = {
    "command": "verify",
    "suite": "s3,s7",
    "seed": 7,
    "grid": 3,
    "json": True,
    "verbose": True,
    "log_level": "INFO",
}

CLI_VERIFY_ARGS = [
    "verify",
    "--suite",
    "s3,s10",
    "--seed",
    "7",
    "--grid",
    "4",
    "--stem-pairs",
    "50",
    "--ii-max-denominator",
    "16",
    "--format",
    "csv",
    "--filter-status",
    "fail, pass",
    "--json",
]

CLI_DIST_ARGS = [
    "dist",
    "--spec",
    "space.json",
    "--construction",
    "cobweb",
    "v:p",
    "e:q,p,1/2",
]


@mock.patch(
    "argparse.ArgumentParser.parse_args",
    return_value=argparse.Namespace(**CLI_ARGS),
)
def test_get_parsed_args(mock_args):
    """Test arg parser values."""
    args = cli_tools.get_parsed_args()
    assert args.command == "verify"
    assert args.suite == "s3,s7"
    assert args.seed == 7


def test_get_parsed_args_without_arguments_prints_help(capsys):
    with mock.patch("sys.argv", ["premetric-cobweb"]):
        with pytest.raises(SystemExit) as excinfo:
            cli_tools.get_parsed_args()
    assert excinfo.value.code == 0
    assert "premetric-cobweb" in capsys.readouterr().out


def test_verify_args():
    parser = cli_tools.configure_arg_parser()
    args = parser.parse_args(CLI_VERIFY_ARGS)
    assert args.command == "verify"
    assert args.grid == 4
    assert args.stem_pairs == 50
    assert args.ii_max_denominator == 16
    assert args.filter_status == ["fail", "pass"]
    assert args.json
    assert args.sample is None
    assert args.log_level == "INFO"
    assert not args.verbose


def test_dist_args():
    parser = cli_tools.configure_arg_parser()
    args = parser.parse_args(CLI_DIST_ARGS)
    assert args.spec == "space.json"
    assert args.construction == "cobweb"
    assert (args.point_a, args.point_b) == ("v:p", "e:q,p,1/2")
    assert not args.json


def test_dist_default_construction():
    parser = cli_tools.configure_arg_parser()
    args = parser.parse_args(["dist", "-s", "arens", "v:0", "v:1"])
    assert args.construction == consts.CONSTRUCTION_GAMMA


def test_census_args():
    parser = cli_tools.configure_arg_parser()
    args = parser.parse_args(["census", "eres:arens", "--sample", "50", "--seed", "1"])
    assert args.target == "eres:arens"
    assert args.sample == 50
    assert args.seed == 1
    assert args.max_stem_length is None


def test_configs_args():
    parser = cli_tools.configure_arg_parser()
    args = parser.parse_args(["configs", "run", "-c", "suites.yaml", "-fmt", "json"])
    assert args.command == "configs"
    assert args.config_cmd == "run"
    assert args.config_file == "suites.yaml"
    assert args.format == "json"

    args = parser.parse_args(["configs", "get", "-c", "suites.yaml"])
    assert args.config_cmd == "get"


@pytest.mark.parametrize(
    "argv",
    (
        ["verify", "--grid", "0"],
        ["verify", "--sample", "-3"],
        ["verify", "--format", "xml"],
        ["validate"],
        ["dist", "--spec", "arens", "v:0"],
        ["census"],
    ),
)
def test_invalid_args(argv):
    parser = cli_tools.configure_arg_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(argv)


def test_get_suite_overrides():
    parser = cli_tools.configure_arg_parser()
    overrides = cli_tools.get_suite_overrides(parser.parse_args(CLI_VERIFY_ARGS))
    assert overrides[consts.CONFIG_SUITE] == "s3,s10"
    assert overrides[consts.CONFIG_SEED] == 7
    assert overrides[consts.CONFIG_STEM_PAIRS] == 50
    assert overrides[consts.CONFIG_FORMAT] == "csv"
    assert overrides[consts.CONFIG_CANTOR_BITS] is None


def test_get_suite_overrides_missing_attributes():
    overrides = cli_tools.get_suite_overrides(argparse.Namespace(seed=3))
    assert overrides[consts.CONFIG_SEED] == 3
    assert all(
        value is None for key, value in overrides.items() if key != consts.CONFIG_SEED
    )


@pytest.mark.parametrize(
    ("value", "default", "expected"),
    (
        ("s3,s5", None, ["s3", "s5"]),
        (" s3 , s5, ", None, ["s3", "s5"]),
        ("", ["all"], ["all"]),
        (None, None, None),
    ),
)
def test_get_arg_list(value, default, expected):
    assert cli_tools.get_arg_list(value, default_value=default) == expected


def test_check_positive():
    assert cli_tools._check_positive("5") == 5
    with pytest.raises(argparse.ArgumentTypeError):
        cli_tools._check_positive("0")
