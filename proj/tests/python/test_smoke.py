# Copyright 2026 The ffval Authors
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
import sys

import pytest

# In-tree runs: the built extension is on PYTHONPATH, the pure-python
# package sits next to the sources.
_py_dir = os.environ.get("FFVAL_PY_DIR")
if _py_dir and _py_dir not in sys.path:
    sys.path.insert(0, _py_dir)

import ffval  # noqa: E402

CONFIGS = os.path.join(os.path.dirname(__file__), "..", "..", "configs")


def read_config(name):
    with open(os.path.join(CONFIGS, name)) as f:
        return f.read()


def test_validate_and_run_construction():
    cfg = read_config("f7_single.json")
    assert ffval.validate_config(cfg) == "construction"
    state = ffval.run_construction(cfg, steps=8)
    doc = json.loads(state)
    assert doc["i"] == 8
    report = json.loads(ffval.check_state(state))
    for key in ("eqOdd", "eqEven", "properties"):
        assert all(item["pass"] for item in report[key]["items"])


def test_run_is_deterministic():
    cfg = read_config("f7_single.json")
    assert ffval.run_construction(cfg, steps=8) == ffval.run_construction(
        cfg, steps=8
    )


def test_resume_matches_straight_run():
    cfg = read_config("f7_single.json")
    half = ffval.run_construction(cfg, steps=6)
    assert ffval.resume_construction(half, 2) == ffval.run_construction(
        cfg, steps=8
    )


def test_theory_report():
    cfg = read_config("theory_f7.json")
    assert ffval.validate_config(cfg) == "theory"
    report = json.loads(ffval.theory_report(cfg, depth=2))
    assert report["item1Failures"] == 0
    assert all(item["pass"] for item in report["items"])


def test_oracle():
    res = ffval.run_oracle("le_order", seed=7, trials=50)
    assert res["pass"]
    assert res["trials"] == 50
    assert "le_order" in ffval.oracle_suites()


def test_ord_at():
    # ord of t^2/(t-1) at (t) is 2, at (t-1) is -1, at infinity is -1.
    rf = json.dumps({"num": [0, 0, 1], "den": [-1, 1]})
    assert ffval.ord_at(7, json.dumps([0, 1]), rf) == 2
    assert ffval.ord_at(7, json.dumps([-1, 1]), rf) == -1
    assert ffval.ord_at(7, "inf", rf) == -1


def test_schema_error():
    with pytest.raises(ffval.SchemaError):
        ffval.validate_config("{not json")
