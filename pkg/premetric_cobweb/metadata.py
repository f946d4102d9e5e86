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

"""Metadata classes with data about a verification run."""

import dataclasses
import datetime
import hashlib
import json
import typing

from premetric_cobweb import consts


@dataclasses.dataclass
class PropertyResult(object):
    case_id: str
    suite: str
    property: str
    status: str
    checked: int = 0
    certified: bool = True
    witness: typing.Any = None

    @property
    def passed(self) -> bool:
        return self.status == consts.STATUS_PASS

    def as_dict(self) -> dict:
        return {
            consts.RESULT_CASE_ID: self.case_id,
            consts.RESULT_SUITE: self.suite,
            consts.RESULT_PROPERTY: self.property,
            consts.RESULT_STATUS: self.status,
            consts.RESULT_CHECKED: self.checked,
            consts.RESULT_CERTIFIED: self.certified,
            consts.RESULT_WITNESS: self.witness,
        }


@dataclasses.dataclass
class RunMetadata(object):
    command: str = dataclasses.field(default_factory=str)
    seed: int = consts.DEFAULT_SEED
    inputs_digest: str = dataclasses.field(default_factory=str)
    results: list = dataclasses.field(default_factory=list)
    details: dict = dataclasses.field(default_factory=dict)
    start_time: typing.Optional[datetime.datetime] = dataclasses.field(
        default_factory=lambda: datetime.datetime.now(datetime.timezone.utc)
    )
    end_time: typing.Optional[datetime.datetime] = None

    @property
    def status(self) -> str:
        if all(r.passed for r in self.results):
            return consts.STATUS_PASS
        return consts.STATUS_FAIL

    def finish(self):
        self.end_time = datetime.datetime.now(datetime.timezone.utc)

    def timing(self) -> dict:
        end_time = self.end_time or datetime.datetime.now(datetime.timezone.utc)
        return {
            "start_time": self.start_time.isoformat(),
            "end_time": end_time.isoformat(),
            "seconds": (end_time - self.start_time).total_seconds(),
        }

    def report(self) -> dict:
        """The report document; digest covers everything but the timing."""
        body = {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "seed": self.seed,
            "verdicts": [
                r.as_dict() for r in sorted(self.results, key=lambda r: r.case_id)
            ],
            "status": self.status,
        }
        if self.details:
            body["details"] = self.details
        canonical = json.dumps(body, sort_keys=True, separators=(",", ":"))
        body["digest"] = hashlib.sha256(canonical.encode("utf-8")).hexdigest()
        body["timing"] = self.timing()
        return body
