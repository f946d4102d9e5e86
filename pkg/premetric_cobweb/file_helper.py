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

import hashlib
import logging
import os

import fsspec

from premetric_cobweb import exceptions


def _is_local_path(file_path: str) -> bool:
    return "://" not in file_path


def _open(file_path: str, mode: str):
    if _is_local_path(file_path):
        return open(file_path, mode, encoding="utf-8")
    return fsspec.open(file_path, mode, encoding="utf-8")


def read_file(file_path: str) -> str:
    """Read a text file from a local path or any fsspec URL."""
    try:
        with _open(file_path, "r") as f:
            return f.read()
    except FileNotFoundError:
        raise exceptions.ParseError(f"File not found: {file_path}", "file")


def write_file(file_path: str, data: str, include_log: bool = True):
    if _is_local_path(file_path):
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
    with _open(file_path, "w") as f:
        f.write(data)

    if include_log:
        logging.info("Success! Output written to {}".format(file_path))


def content_digest(data: str) -> str:
    return hashlib.sha256(data.encode("utf-8")).hexdigest()
