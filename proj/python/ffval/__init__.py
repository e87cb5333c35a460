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

"""Exact valuation engine for Kummer towers over F(t).

The compiled extension does the work; this package re-exports it.
"""

try:
    # Installed layout: the extension sits inside the package.
    from ._ffval import (  # noqa: F401
        InvariantFailure,
        SchemaError,
        ValidationError,
        check_state,
        oracle_suites,
        ord_at,
        resume_construction,
        run_construction,
        run_oracle,
        theory_report,
        validate_config,
    )
except ImportError:  # pragma: no cover - in-tree builds put it on sys.path
    from _ffval import (  # noqa: F401
        InvariantFailure,
        SchemaError,
        ValidationError,
        check_state,
        oracle_suites,
        ord_at,
        resume_construction,
        run_construction,
        run_oracle,
        theory_report,
        validate_config,
    )

__all__ = [
    "InvariantFailure",
    "SchemaError",
    "ValidationError",
    "check_state",
    "oracle_suites",
    "ord_at",
    "resume_construction",
    "run_construction",
    "run_oracle",
    "theory_report",
    "validate_config",
]
