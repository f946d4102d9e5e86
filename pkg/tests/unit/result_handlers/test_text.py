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

import io

import pytest

from pandas import DataFrame

from premetric_cobweb import consts

SAMPLE_CONFIG_FILTER_STATUS = [
    consts.STATUS_FAIL,
]

SAMPLE_RESULT_DATA = [
    ["s3.a", "s3", "ball-image", "pass", 4, True, None],
    ["s3.b", "s3", "ball-image", "pass", 6, True, None],
    ["s5.a", "s5", "isometric", "fail", 2, False, "(p, q)"],
]
SAMPLE_RESULT_COLUMNS_FILTER_LIST = [
    consts.RESULT_SUITE,
    consts.RESULT_PROPERTY,
    consts.RESULT_CHECKED,
    consts.RESULT_CERTIFIED,
    consts.RESULT_WITNESS,
]


@pytest.fixture
def module_under_test():
    from premetric_cobweb.result_handlers import text

    return text


@pytest.fixture
def result_df():
    return DataFrame(SAMPLE_RESULT_DATA, columns=consts.RESULT_COLUMNS)


def test_import(module_under_test):
    """Test import cleanly"""
    assert module_under_test is not None


def test_basic_result_handler(module_under_test, result_df):
    """Test basic handler executes"""
    result_handler = module_under_test.TextResultHandler("csv", stream=io.StringIO())

    handler_output = result_handler.execute(result_df)
    assert handler_output[consts.RESULT_CHECKED].sum() == 12


def test_basic_result_handler_filtered_results(module_under_test, result_df):
    """Test basic handler executes and shows only failed records"""
    result_handler = module_under_test.TextResultHandler(
        "table", SAMPLE_CONFIG_FILTER_STATUS, stream=io.StringIO()
    )

    handler_output = result_handler.execute(result_df)
    assert list(handler_output[consts.RESULT_CASE_ID]) == ["s5.a"]


def test_unsupported_result_format(module_under_test, result_df):
    """Check for invalid format"""
    result_handler = module_under_test.TextResultHandler("foobar", stream=io.StringIO())
    with pytest.raises(ValueError, match="not supported"):
        result_handler.execute(result_df)


def test_prints_to_stderr_by_default(module_under_test, result_df, capsys):
    module_under_test.TextResultHandler("text").execute(result_df)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "s5.a" in captured.err


def test_columns_to_print(module_under_test, result_df):
    """Check for trimmed columns in grid print"""
    stream = io.StringIO()
    result_handler = module_under_test.TextResultHandler(
        "table", cols_filter_list=SAMPLE_RESULT_COLUMNS_FILTER_LIST, stream=stream
    )
    result_handler.execute(result_df)

    grid_text = "│case_id│status││s3.a│pass││s3.b│pass││s5.a│fail│"
    printed_text = stream.getvalue()
    printed_text = "".join(
        line.replace(" ", "")
        for line in printed_text.splitlines()
        if not line.startswith(("╒", "╞", "├", "╘"))
    )
    assert printed_text == grid_text


@pytest.mark.parametrize(
    "format,module_under_test",
    [
        ("csv", None),
        ("json", None),
        ("text", None),
        ("table", None),
    ],
    indirect=["module_under_test"],
)
def test_column_filter_list(format, module_under_test, result_df):
    """CSV and JSON don't filter out columns."""
    result_handler = module_under_test.TextResultHandler(format)
    printed_output = result_handler._get_formatted(result_df)
    if format in ("csv", "json"):
        assert consts.RESULT_WITNESS in printed_output
    else:
        assert consts.RESULT_WITNESS not in printed_output
