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

import pytest

from premetric_cobweb import consts, exceptions, file_helper


@pytest.fixture
def module_under_test():
    from premetric_cobweb import census

    return census


@pytest.mark.parametrize(
    ("target", "expected"),
    (
        ("cantor:3", ("cantor", "3")),
        (" eres:arens ", ("eres", "arens")),
        ("eres:/specs/pres.json", ("eres", "/specs/pres.json")),
    ),
)
def test_split_target(module_under_test, target, expected):
    assert module_under_test.split_target(target) == expected


@pytest.mark.parametrize("target", ("cantor", "eres:", "cobweb:3"))
def test_split_target_errors(module_under_test, target):
    with pytest.raises(exceptions.ParseError):
        module_under_test.split_target(target)


def test_cantor_bits(module_under_test):
    assert module_under_test.cantor_bits("12") == 12
    with pytest.raises(exceptions.ParseError):
        module_under_test.cantor_bits("three")
    with pytest.raises(exceptions.OutOfBounds):
        module_under_test.cantor_bits("13")
    with pytest.raises(exceptions.OutOfBounds):
        module_under_test.cantor_bits("0")


def test_cantor_census(module_under_test):
    run_metadata = module_under_test.cmd_census("cantor:3")
    assert run_metadata.command == "census cantor:3"
    assert run_metadata.inputs_digest == file_helper.content_digest("cantor:3")
    assert run_metadata.details["value_count"] == 4
    assert run_metadata.details["distance_values"] == ["0", "1/4", "1/2", "1"]
    assert [r.case_id for r in run_metadata.results] == [
        "census.value-count",
        "census.isoceles",
    ]
    assert run_metadata.status == consts.STATUS_PASS
    assert run_metadata.end_time is not None


def test_eres_census(module_under_test):
    run_metadata = module_under_test.cmd_census(
        "eres:harmonic", sample=6, seed=1, max_length=2
    )
    assert run_metadata.inputs_digest == file_helper.content_digest("harmonic")
    assert run_metadata.status == consts.STATUS_PASS
    details = run_metadata.details
    assert details["bound_holds"]
    assert details["value_count"] == len(details["distance_values"])
    assert sum(details["fibers"].values()) <= 6
    assert [r.case_id for r in run_metadata.results] == [
        "census.max-attained",
        "census.counting-bound",
    ]


def test_eres_census_is_reproducible(module_under_test):
    first = module_under_test.cmd_census("eres:harmonic", sample=6, seed=4)
    second = module_under_test.cmd_census("eres:harmonic", sample=6, seed=4)
    assert first.report()["digest"] == second.report()["digest"]


def test_eres_census_from_file(module_under_test, fs):
    doc = {"space": "harmonic", "bound": 4}
    fs.create_file("/specs/pres.json", contents=json.dumps(doc))
    run_metadata = module_under_test.cmd_census(
        "eres:/specs/pres.json", sample=4, seed=0, max_length=2
    )
    assert run_metadata.inputs_digest == file_helper.content_digest(json.dumps(doc))
    assert run_metadata.status == consts.STATUS_PASS
