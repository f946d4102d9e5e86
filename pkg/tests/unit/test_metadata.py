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

import datetime

import pytest

START = datetime.datetime(2026, 1, 1, tzinfo=datetime.timezone.utc)


@pytest.fixture
def module_under_test():
    from premetric_cobweb import metadata

    return metadata


def make_result(module_under_test, case_id, status="pass", witness=None):
    return module_under_test.PropertyResult(
        case_id, "s3", "ball-image", status, 4, True, witness
    )


@pytest.mark.parametrize(("status", "expected"), (("pass", True), ("fail", False)))
def test_property_result_passed(module_under_test, status, expected):
    assert make_result(module_under_test, "s3.a", status).passed is expected


def test_property_result_as_dict(module_under_test):
    result = make_result(module_under_test, "s3.a", "fail", ["p", "q"])
    assert result.as_dict() == {
        "case_id": "s3.a",
        "suite": "s3",
        "property": "ball-image",
        "status": "fail",
        "checked": 4,
        "certified": True,
        "witness": ["p", "q"],
    }


def test_run_status(module_under_test):
    run = module_under_test.RunMetadata(command="verify")
    assert run.status == "pass"
    run.results.append(make_result(module_under_test, "s3.a"))
    assert run.status == "pass"
    run.results.append(make_result(module_under_test, "s3.b", "fail"))
    assert run.status == "fail"


def test_report_orders_verdicts(module_under_test):
    run = module_under_test.RunMetadata(command="verify", seed=5, start_time=START)
    run.results = [
        make_result(module_under_test, "s3.b"),
        make_result(module_under_test, "s3.a"),
    ]
    report = run.report()
    assert [v["case_id"] for v in report["verdicts"]] == ["s3.a", "s3.b"]
    assert report["seed"] == 5
    assert report["status"] == "pass"
    assert "details" not in report


def test_report_digest_ignores_timing(module_under_test):
    first = module_under_test.RunMetadata(
        command="census", inputs_digest="abc", details={"points": 8}, start_time=START
    )
    first.end_time = START + datetime.timedelta(seconds=3)
    second = module_under_test.RunMetadata(
        command="census", inputs_digest="abc", details={"points": 8}
    )
    second.finish()
    assert first.report()["digest"] == second.report()["digest"]
    assert first.report()["timing"]["seconds"] == 3
    assert first.report()["details"] == {"points": 8}

    third = module_under_test.RunMetadata(
        command="census", inputs_digest="abd", details={"points": 8}
    )
    assert third.report()["digest"] != first.report()["digest"]


def test_timing_without_finish(module_under_test):
    run = module_under_test.RunMetadata(start_time=START)
    timing = run.timing()
    assert timing["start_time"] == "2026-01-01T00:00:00+00:00"
    assert timing["seconds"] > 0
