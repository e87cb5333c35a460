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

#ifndef FFVAL_RUSPEC_HPP
#define FFVAL_RUSPEC_HPP

#include <string>
#include <utility>
#include <vector>

#include "ffval/place.hpp"

namespace ffval {

/// A rational function R(T) = prod (T - c_i)^{n_i} / prod (T - b_i)^{j_i}
/// with all roots in the constant field, together with the prime q it is
/// paired with.  Shape requirements (checked at construction):
///   - q is prime and differs from the field characteristic;
///   - at least one zero; all c_i, b_i distinct; all n_i, j_i positive;
///   - n_1 (the multiplicity of the distinguished zero a = c_1) not
///     divisible by q;
///   - deg num - deg den is positive and not divisible by q.
class RuSpec {
 public:
  RuSpec(long long q, std::vector<std::pair<FElem, long long>> zeros,
         std::vector<std::pair<FElem, long long>> poles);

  long long q() const { return q_; }
  const std::vector<std::pair<FElem, long long>>& zeros() const { return zeros_; }
  const std::vector<std::pair<FElem, long long>>& poles() const { return poles_; }
  /// The distinguished zero a = c_1.
  const FElem& a() const { return zeros_[0].first; }
  const FieldPtr& const_field() const { return zeros_[0].first.field(); }

  long long deg_num() const;  // sum of the n_i
  long long deg_den() const;  // sum of the j_i

  /// All roots with their signed multiplicities: (c_i, +n_i) and (b_i, -j_i).
  std::vector<std::pair<FElem, long long>> roots_signed() const;

  Poly num_poly() const;
  Poly den_poly() const;

  /// R(s).  Throws ValueError if s is identically a pole root b_i.
  RatFunc apply(const RatFunc& s) const;

  std::string str() const;

 private:
  long long q_;
  std::vector<std::pair<FElem, long long>> zeros_, poles_;
};

}  // namespace ffval

#endif  // FFVAL_RUSPEC_HPP
