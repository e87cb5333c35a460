// Copyright 2026 The ffval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Seeded randomized property suites.  Each suite draws its instances from a
// single mt19937_64 stream, re-verifies the library's answers against
// independent direct computation, and reports the number of failures.  The
// suites back both the oracle CLI command and the acceptance checks.

#ifndef FFVAL_ORACLES_HPP
#define FFVAL_ORACLES_HPP

#include <string>
#include <vector>

#include "ffval/theory.hpp"

namespace ffval {

struct OracleResult {
  std::string suite;
  long long trials = 0;
  long long failures = 0;
  std::string detail;
  bool pass() const { return failures == 0; }
};

/// Known suites: le_order, le_notq, ramification, ef_sum, compositum,
/// canfind, forevery, qth_power.  Unknown names raise ValueError.
OracleResult run_oracle_suite(const std::string& name,
                              unsigned long long seed, long long trials);

std::vector<std::string> oracle_suite_names();

}  // namespace ffval

#endif  // FFVAL_ORACLES_HPP
