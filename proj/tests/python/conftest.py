# Copyright 2026 The knpoly Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import os
import pathlib
import shutil
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


def _binary():
    explicit = os.environ.get("KNPOLY_BIN")
    if explicit:
        return explicit
    for candidate in (ROOT / "build" / "knpoly", shutil.which("knpoly")):
        if candidate and pathlib.Path(candidate).exists():
            return str(candidate)
    pytest.skip("knpoly binary not found; set KNPOLY_BIN")


class Cli:
    def __init__(self, binary):
        self.binary = binary

    def __call__(self, *args, env=None):
        full_env = dict(os.environ)
        full_env.pop("KNPOLY_OUTPUT_DIR", None)
        full_env.update(env or {})
        return subprocess.run([self.binary, *map(str, args)], capture_output=True, text=True,
                              env=full_env, timeout=600)

    def json(self, *args):
        run = self(*args)
        return run, json.loads(run.stdout)


@pytest.fixture(scope="session")
def cli():
    return Cli(_binary())


@pytest.fixture(scope="session")
def schemas():
    directory = pathlib.Path(os.environ.get("KNPOLY_SCHEMA_DIR", ROOT / "schemas"))
    return {p.name.split(".")[0]: json.loads(p.read_text()) for p in directory.glob("*.schema.json")}
