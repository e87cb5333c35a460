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

#include "ffval/tower.hpp"

#include <algorithm>
#include <sstream>

namespace ffval {

namespace {

bool is_prime_small(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Add coef * prod b_j^{e_j} into `out`, cascading the reductions
// b_j^{q_j} -> W_j from the highest offending level down.  Terminates since
// each cascade strictly decreases the exponent vector in the
// top-significant lexicographic order.
void accumulate(const Tower& tw, std::map<std::vector<int>, RatFunc>& out,
                std::vector<int> e, const RatFunc& coef) {
  if (coef.is_zero()) return;
  const auto& steps = tw.steps();
  for (int j = static_cast<int>(steps.size()) - 1; j >= 0; --j) {
    if (e[j] < steps[j].q) continue;
    e[j] -= static_cast<int>(steps[j].q);
    for (const auto& [m, f] : steps[j].W.terms()) {
      std::vector<int> e2 = e;
      for (size_t l = 0; l < m.size(); ++l) e2[l] += m[l];
      accumulate(tw, out, std::move(e2), coef * f);
    }
    return;
  }
  auto it = out.find(e);
  if (it == out.end()) {
    out.emplace(std::move(e), coef);
  } else {
    it->second = it->second + coef;
    if (it->second.is_zero()) out.erase(it);
  }
}

void require_same_tower(const TowerElement& a, const TowerElement& b,
                        const char* op) {
  if (!a.valid() || !b.valid())
    throw ValueError(std::string(op) + ": invalid tower element");
  if (!Tower::same(a.tower(), b.tower()))
    throw ValueError(std::string(op) + ": elements of different towers");
}

}  // namespace

bool TowerElement::is_one() const {
  return c_.size() == 1 && c_.begin()->second.is_constant() &&
         c_.begin()->second.constant_value().is_one() &&
         std::all_of(c_.begin()->first.begin(), c_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

bool TowerElement::is_base() const {
  if (c_.empty()) return true;
  if (c_.size() != 1) return false;
  const auto& e = c_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

RatFunc TowerElement::as_ratfunc() const {
  if (!is_base()) throw ValueError("as_ratfunc: element not in the base field");
  if (c_.empty()) return RatFunc(tw_->const_field());
  return c_.begin()->second;
}

TowerElement TowerElement::operator-() const {
  std::map<std::vector<int>, RatFunc> out;
  for (const auto& [e, f] : c_) out.emplace(e, -f);
  return TowerElement(tw_, std::move(out));
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
  require_same_tower(a, b, "add");
  std::map<std::vector<int>, RatFunc> out = a.c_;
  for (const auto& [e, f] : b.c_) {
    auto it = out.find(e);
    if (it == out.end()) {
      out.emplace(e, f);
    } else {
      it->second = it->second + f;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return TowerElement(a.tw_, std::move(out));
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) {
  return a + (-b);
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  require_same_tower(a, b, "mul");
  std::map<std::vector<int>, RatFunc> out;
  for (const auto& [ea, fa] : a.c_)
    for (const auto& [eb, fb] : b.c_) {
      std::vector<int> e = ea;
      for (size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
      accumulate(*a.tw_, out, std::move(e), fa * fb);
    }
  return TowerElement(a.tw_, std::move(out));
}

TowerElement operator/(const TowerElement& a, const TowerElement& b) {
  return a * b.inverse();
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  require_same_tower(a, b, "eq");
  return a.c_ == b.c_;
}

int TowerElement::cmp(const TowerElement& a, const TowerElement& b) {
  auto ia = a.c_.begin(), ib = b.c_.begin();
  for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = RatFunc::cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.c_.end()) return 1;
  if (ib != b.c_.end()) return -1;
  return 0;
}

TowerElement TowerElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  TowerElement result = tw_->one();
  TowerElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw ValueError("inverse of zero tower element");
  if (c_.size() == 1) {
    // (f * prod b_j^{e_j})^-1 = f^-1 * prod b_j^{q_j - e_j} W_j^-1.
    const auto& [e, f] = *c_.begin();
    TowerElement y = tw_->from_ratfunc(f.inverse());
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      y = y * tw_->beta(static_cast<int>(j))
                  .pow(tw_->steps()[j].q - e[j]) *
          tw_->radicand(static_cast<int>(j)).inverse();
    }
    return y;
  }
  // General case: solve x*y = 1 in the monomial basis.
  int n = tw_->num_levels();
  std::vector<std::vector<int>> basis;
  std::vector<int> cur(n, 0);
  for (;;) {
    basis.push_back(cur);
    int j = 0;
    while (j < n && ++cur[j] == tw_->steps()[j].q) cur[j++] = 0;
    if (j == n) break;
    if (n == 0) break;
  }
  size_t N = basis.size();
  std::map<std::vector<int>, size_t> index;
  for (size_t i = 0; i < N; ++i) index[basis[i]] = i;

  RatFunc zero(tw_->const_field());
  std::vector<std::vector<RatFunc>> M(N, std::vector<RatFunc>(N + 1, zero));
  for (size_t i = 0; i < N; ++i) {
    TowerElement col = *this * tw_->element({{basis[i], RatFunc::constant(
                                                  tw_->const_field()->one())}});
    for (const auto& [e, f] : col.terms()) M[index.at(e)][i] = f;
  }
  M[index.at(std::vector<int>(n, 0))][N] = RatFunc::constant(tw_->const_field()->one());

  // Gaussian elimination over F(t).
  for (size_t col = 0, row = 0; col < N && row < N; ++col) {
    size_t piv = row;
    while (piv < N && M[piv][col].is_zero()) ++piv;
    if (piv == N)
      throw InternalCheckError("tower inverse: singular multiplication matrix");
    std::swap(M[piv], M[row]);
    RatFunc inv = M[row][col].inverse();
    for (size_t c2 = col; c2 <= N; ++c2) M[row][c2] = M[row][c2] * inv;
    for (size_t r2 = 0; r2 < N; ++r2) {
      if (r2 == row || M[r2][col].is_zero()) continue;
      RatFunc factor = M[r2][col];
      for (size_t c2 = col; c2 <= N; ++c2)
        M[r2][c2] = M[r2][c2] - factor * M[row][c2];
    }
    ++row;
  }
  std::map<std::vector<int>, RatFunc> out;
  for (size_t i = 0; i < N; ++i)
    if (!M[i][N].is_zero()) out.emplace(basis[i], M[i][N]);
  TowerElement y(tw_, std::move(out));
  if (!(*this * y).is_one())
    throw InternalCheckError("tower inverse: verification failed");
  return y;
}

std::string TowerElement::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, f] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str() << ")";
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) os << "*b" << j << "^" << e[j];
  }
  return os.str();
}

TowerPtr Tower::make_base(FieldPtr constant_field) {
  auto tw = std::shared_ptr<Tower>(new Tower());
  tw->k_ = std::move(constant_field);
  return tw;
}

long long Tower::degree() const {
  long long d = 1;
  for (const auto& s : steps_) d *= s.q;
  return d;
}

TowerElement Tower::zero() const {
  return TowerElement(shared_from_this(), {});
}

TowerElement Tower::one() const { return from_const(k_->one()); }

TowerElement Tower::from_ratfunc(RatFunc r) const {
  if (!Field::same(r.coeff_field(), k_))
    throw ValueError("from_ratfunc: wrong constant field");
  if (r.is_zero()) return zero();
  std::map<std::vector<int>, RatFunc> c;
  c.emplace(std::vector<int>(steps_.size(), 0), std::move(r));
  return TowerElement(shared_from_this(), std::move(c));
}

TowerElement Tower::from_const(const FElem& c) const {
  return from_ratfunc(RatFunc::constant(c));
}

TowerElement Tower::t() const { return from_ratfunc(RatFunc::t(k_)); }

TowerElement Tower::beta(int level) const {
  if (level < 0 || level >= num_levels()) throw ValueError("beta: bad level");
  std::vector<int> e(steps_.size(), 0);
  e[level] = 1;
  std::map<std::vector<int>, RatFunc> c;
  c.emplace(std::move(e), RatFunc::constant(k_->one()));
  return TowerElement(shared_from_this(), std::move(c));
}

TowerElement Tower::element(std::map<std::vector<int>, RatFunc> terms) const {
  std::map<std::vector<int>, RatFunc> out;
  for (const auto& [e, f] : terms) {
    if (e.size() != steps_.size())
      throw ValueError("element: exponent vector length mismatch");
    for (int x : e)
      if (x < 0) throw ValueError("element: negative exponent");
    if (!Field::same(f.coeff_field(), k_))
      throw ValueError("element: wrong constant field");
    accumulate(*this, out, e, f);
  }
  return TowerElement(shared_from_this(), std::move(out));
}

TowerElement Tower::lift(const TowerElement& x) const {
  if (!x.valid()) throw ValueError("lift: invalid element");
  if (Tower::same(x.tower(), shared_from_this())) return element(x.terms());
  if (!Tower::is_prefix(x.tower(), shared_from_this()))
    throw ValueError("lift: source tower is not a prefix");
  std::map<std::vector<int>, RatFunc> out;
  for (const auto& [e, f] : x.terms()) {
    std::vector<int> e2 = e;
    e2.resize(steps_.size(), 0);
    out.emplace(std::move(e2), f);
  }
  return TowerElement(shared_from_this(), std::move(out));
}

TowerElement Tower::radicand(int level) const {
  if (level < 0 || level >= num_levels()) throw ValueError("radicand: bad level");
  return lift(steps_[level].W);
}

TowerPtr Tower::prefix(int k) const {
  if (k < 0 || k > num_levels()) throw ValueError("prefix: bad level count");
  if (k == num_levels()) return shared_from_this();
  auto tw = std::shared_ptr<Tower>(new Tower());
  tw->k_ = k_;
  tw->steps_.assign(steps_.begin(), steps_.begin() + k);
  return tw;
}

bool Tower::same(const TowerPtr& a, const TowerPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (!Field::same(a->k_, b->k_)) return false;
  if (a->steps_.size() != b->steps_.size()) return false;
  for (size_t i = 0; i < a->steps_.size(); ++i) {
    if (a->steps_[i].q != b->steps_[i].q) return false;
    if (a->steps_[i].W.terms() != b->steps_[i].W.terms()) return false;
  }
  return true;
}

bool Tower::is_prefix(const TowerPtr& a, const TowerPtr& b) {
  if (!a || !b) return false;
  if (!Field::same(a->k_, b->k_)) return false;
  if (a->steps_.size() > b->steps_.size()) return false;
  for (size_t i = 0; i < a->steps_.size(); ++i) {
    if (a->steps_[i].q != b->steps_[i].q) return false;
    if (a->steps_[i].W.terms() != b->steps_[i].W.terms()) return false;
  }
  return true;
}

std::string Tower::str() const {
  std::ostringstream os;
  os << k_->str() << "(t)";
  for (size_t i = 0; i < steps_.size(); ++i)
    os << " + b" << i << " = (" << steps_[i].W.str() << ")^(1/" << steps_[i].q
       << ")";
  return os.str();
}

long long qth_root_degree(const TowerPtr& tw, long long q, const TowerElement& W,
                          TowerElement* witness) {
  auto y = is_qth_power(tw, W, q);
  if (y) {
    if (witness) *witness = *y;
    return 1;
  }
  return q;
}

std::optional<TowerElement> is_qth_power(const TowerPtr& tw, const TowerElement& x,
                                         long long q) {
  if (!is_prime_small(q)) throw ValueError("is_qth_power: q must be prime");
  if (q == tw->const_field()->characteristic())
    throw UnsupportedError("is_qth_power: q equals the characteristic");
  if (x.is_zero()) throw ValueError("is_qth_power: x must be nonzero");
  if (!Tower::same(x.tower(), tw))
    throw ValueError("is_qth_power: element of a different tower");
  if (!x.is_base() && !x.is_monomial())
    throw UnsupportedError(
        "is_qth_power: undecided for multi-term tower elements");

  // Search roots of the form (monomial) * (base-field element): reduce to
  // the exactly decidable base-field test for each candidate monomial.
  int n = tw->num_levels();
  std::vector<int> m(n, 0);
  for (;;) {
    std::map<std::vector<int>, RatFunc> one_term;
    one_term.emplace(m, RatFunc::constant(tw->const_field()->one()));
    TowerElement z = tw->element(std::move(one_term));
    TowerElement r = x * z.pow(q).inverse();
    if (r.is_base()) {
      if (auto y0 = is_qth_power_ratfunc(r.as_ratfunc(), q)) {
        TowerElement y = z * tw->from_ratfunc(*y0);
        if (!(y.pow(q) == x))
          throw InternalCheckError("is_qth_power: witness verification failed");
        return y;
      }
    }
    int j = 0;
    while (j < n && ++m[j] == tw->steps()[j].q) m[j++] = 0;
    if (j == n) break;
  }
  return std::nullopt;
}

TowerPtr adjoin_root(const TowerPtr& tw, long long q, const TowerElement& W) {
  if (!is_prime_small(q)) throw ValueError("adjoin_root: q must be prime");
  if (q == tw->const_field()->characteristic())
    throw UnsupportedError("adjoin_root: q equals the characteristic");
  if (W.is_zero()) throw ValueError("adjoin_root: zero radicand");
  if (!Tower::same(W.tower(), tw))
    throw ValueError("adjoin_root: radicand from a different tower");
  if (is_qth_power(tw, W, q))
    throw ValueError("adjoin_root: radicand is already a q-th power");
  auto next = std::shared_ptr<Tower>(new Tower());
  next->k_ = tw->const_field();
  next->steps_ = tw->steps();
  next->steps_.push_back(KummerStep{q, W});
  return next;
}

}  // namespace ffval
