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

import pytest

from premetric_cobweb import exceptions


@pytest.fixture
def module_under_test():
    from premetric_cobweb import file_helper

    return file_helper


def test_write_and_read_local_file(module_under_test, fs, caplog):
    caplog.set_level(logging.INFO)
    module_under_test.write_file("/reports/run/report.json", '{"status": "pass"}')

    assert os.path.isdir("/reports/run")
    assert module_under_test.read_file("/reports/run/report.json") == (
        '{"status": "pass"}'
    )
    assert "Success! Output written to /reports/run/report.json" in caplog.text


def test_write_without_log(module_under_test, fs, caplog):
    caplog.set_level(logging.INFO)
    module_under_test.write_file("report.txt", "x", include_log=False)
    assert module_under_test.read_file("report.txt") == "x"
    assert "Success!" not in caplog.text


def test_read_missing_file(module_under_test, fs):
    with pytest.raises(exceptions.ParseError) as excinfo:
        module_under_test.read_file("/specs/missing.json")
    assert excinfo.value.field == "file"


def test_fsspec_url_round_trip(module_under_test):
    module_under_test.write_file(
        "memory://premetric-cobweb/space.json", '{"points": ["p"]}', include_log=False
    )
    text = module_under_test.read_file("memory://premetric-cobweb/space.json")
    assert text == '{"points": ["p"]}'


def test_content_digest(module_under_test):
    assert module_under_test.content_digest("abc") == (
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
    )
