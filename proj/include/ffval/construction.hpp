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

#ifndef FFVAL_CONSTRUCTION_HPP
#define FFVAL_CONSTRUCTION_HPP

#include "ffval/lemmas.hpp"
#include "ffval/tower_place.hpp"

namespace ffval {

/// One indexed family member: the prime q_u, the shape-checked R_u, and the
/// finite explicit subset A_u of F the construction encodes.
struct IndexSpec {
  RuSpec R;
  std::vector<FElem> A;
  long long q() const { return R.q(); }
};

/// Generator entry of the element enumeration: either an explicit base-field
/// element, or a reference to the root adjoined at a given tower level
/// (treated as "not in the current field" while that level does not exist).
struct EnumEntry {
  std::optional<RatFunc> base;  // set for base-field entries
  int beta_level = -1;          // set (>= 0) for root references
};

struct ConstructionConfig {
  FieldPtr F;
  std::vector<IndexSpec> indices;            // u = 1..U
  std::vector<EnumEntry> enumeration;        // cycled: x_n = entry[n mod size]
  std::vector<FElem> witness_stream;         // r_1 candidates (finite prefix of
                                             // the infinite complement stream)
  // Extra (u, r1, r2) pairs checked by the even-stage invariant; u is the
  // 1-based family index.
  std::vector<std::tuple<int, FElem, FElem>> witness_pairs;
  int max_steps = 0;
  unsigned long long seed = 1;
};

/// Validates all config clauses; throws ValidationError naming the violated
/// clause.
void validate_config(const ConstructionConfig& cfg);

/// An element of some S_{i,u} together with its designated chain, at which
/// the order of R_u(s) is not divisible by q_u.
struct SEntry {
  TowerElement s;
  TowerPlace prime;
};

struct LogRecord {
  int i;              // stage index the record belongs to
  std::string kind;   // step case or event tag
  std::string detail;
};

/// Construction state after i stages.  Members are public so tests can
/// corrupt states deliberately (negative controls).
struct ConstructionState {
  ConstructionConfig cfg;
  int i = 0;
  TowerPtr tower;
  std::vector<std::vector<SEntry>> S;  // one vector per family index
  // (u, r1, r2) pairs produced by the engine itself; checked by eq-even
  // whenever r1 + r2 lands in A_u.
  std::vector<std::tuple<int, FElem, FElem>> generated_pairs;
  std::vector<LogRecord> log;
};

ConstructionState new_state(const ConstructionConfig& cfg);

/// Executes one stage (case selected by i mod 4) and re-checks both standing
/// invariants; a failed check raises InvariantFailure with a forensic dump.
ConstructionState step(const ConstructionState& st);

struct CheckItem {
  std::string what;
  bool pass;
  std::string detail;
};
struct Report {
  std::vector<CheckItem> items;
  bool all_pass() const;
  std::string str() const;
};

/// Every designated pair: ord at the designated chain of R_u(s) not
/// divisible by q_u.
Report check_eq_odd(const ConstructionState& st);

/// For each witness pair (u, r1, r2) with r1*r2 != 0 and r1 + r2 in A_u:
/// all designated chains give divisible order for the r1 shift, or all give
/// it for the r2 shift.  Checks the supplied pairs plus the engine-generated
/// ones.
Report check_eq_even(const ConstructionState& st,
                     const std::vector<std::tuple<int, FElem, FElem>>& pairs);

/// R_u(x) for a tower element.
TowerElement ru_apply_tower(const RuSpec& R, const TowerElement& x);

enum class DefFOutcome { Accepted, Rejected, Undetermined };
struct DefFResult {
  DefFOutcome outcome;
  std::optional<TowerElement> witness;  // the rejecting b
};
/// Finite-stage reading of the constant-field defining formula: rejected if
/// some b in the fragment satisfies both q_1-th power conditions while
/// R_1(b) is not itself a q_1-th power; undetermined if a power test was
/// unsupported; accepted (no counterexample in the fragment) otherwise.
DefFResult eval_def_F(const ConstructionState& st, const TowerElement& a,
                      const std::vector<TowerElement>& fragment);

enum class DefAuOutcome { In, Out, Undetermined };
/// Finite-stage reading of the subset-defining formula at r, over the
/// supplied pairs plus the engine-generated pairs summing to r.
DefAuOutcome eval_def_Au(const ConstructionState& st, int u, const FElem& r,
                         const std::vector<std::pair<FElem, FElem>>& pairs);

/// Finite-stage evidence for the structure theorem: (1) no S element has
/// R_u(s) a q_u-th power; (2)/(3) formula evaluations on all engine-known
/// elements; (4) every adjunction degree is one of the family primes.
Report properties_report(const ConstructionState& st);

}  // namespace ffval

#endif  // FFVAL_CONSTRUCTION_HPP
