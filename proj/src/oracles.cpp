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

#include "ffval/oracles.hpp"

#include <random>
#include <sstream>

#include "ffval/lemmas.hpp"

namespace ffval {

namespace {

long long mod_nonneg(long long x, long long q) { return ((x % q) + q) % q; }
bool div_q(long long v, long long q) {
  return v == kOrdInfinity || mod_nonneg(v, q) == 0;
}

// Seeded generator with platform-independent draws (plain modulo; the slight
// bias is irrelevant for property sampling).
struct Rng {
  std::mt19937_64 g;
  explicit Rng(unsigned long long seed) : g(seed) {}
  long long uni(long long lo, long long hi) {
    return lo + static_cast<long long>(g() % static_cast<unsigned long long>(
                                                 hi - lo + 1));
  }
};

const long long kPrimes[] = {5, 7, 11, 13};
const long long kQs[] = {2, 3, 5};

FieldPtr random_field(Rng& r) { return Field::prime(kPrimes[r.uni(0, 3)]); }

FElem random_const(const FieldPtr& F, Rng& r) {
  if (F->is_finite()) return F->from_int(r.uni(0, F->characteristic() - 1));
  return F->from_int(r.uni(-6, 6));
}

long long random_q(Rng& r, long long charp) {
  long long q = kQs[r.uni(0, 2)];
  while (q == charp) q = kQs[r.uni(0, 2)];
  return q;
}

Poly random_poly(const FieldPtr& F, Rng& r, int maxdeg, bool nonzero) {
  for (;;) {
    int d = static_cast<int>(r.uni(0, maxdeg));
    std::vector<FElem> cs;
    for (int i = 0; i <= d; ++i)
      cs.push_back(random_const(F, r));
    Poly p(F, std::move(cs));
    if (!nonzero || !p.is_zero()) return p;
  }
}

RatFunc random_ratfunc(const FieldPtr& F, Rng& r, int maxdeg, bool nonconstant) {
  for (;;) {
    RatFunc f(random_poly(F, r, maxdeg, false), random_poly(F, r, maxdeg, true));
    if (!nonconstant || !f.is_constant()) return f;
  }
}

Place random_place(const FieldPtr& F, Rng& r) {
  if (r.uni(0, 4) == 0) return Place::infinite(F);
  return Place::finite(nth_monic_irreducible(F, r.uni(0, 20)));
}

RuSpec random_ruspec(const FieldPtr& F, Rng& r, long long q) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::pair<FElem, long long>> zeros, poles;
    std::vector<FElem> used;
    auto fresh = [&]() -> FElem {
      for (;;) {
        FElem c = random_const(F, r);
        bool seen = false;
        for (const FElem& u : used)
          if (u == c) seen = true;
        if (!seen) {
          used.push_back(c);
          return c;
        }
      }
    };
    long long n1 = r.uni(1, 2 * q);
    if (n1 % q == 0) ++n1;
    zeros.emplace_back(fresh(), n1);
    int extra_z = static_cast<int>(r.uni(0, 1));
    for (int i = 0; i < extra_z; ++i) zeros.emplace_back(fresh(), r.uni(1, 3));
    int np = static_cast<int>(r.uni(0, 2));
    for (int i = 0; i < np; ++i) poles.emplace_back(fresh(), r.uni(1, 2));
    try {
      return RuSpec(q, zeros, poles);
    } catch (const ValidationError&) {
      continue;  // shape clash (e.g. degree difference divisible by q)
    }
  }
  throw InternalCheckError("random_ruspec: no valid shape found");
}

// ---------------------------------------------------------------------------

OracleResult suite_le_order(unsigned long long seed, long long trials) {
  Rng r(seed);
  OracleResult res{"le_order", trials, 0, ""};
  long long by_case[4] = {0, 0, 0, 0};
  for (long long k = 0; k < trials; ++k) {
    long long pick = r.uni(0, 3);
    FieldPtr F = pick == 3 ? Field::rationals() : Field::prime(kPrimes[pick]);
    long long q = random_q(r, F->characteristic());
    RuSpec R = random_ruspec(F, r, q);
    RatFunc s = random_ratfunc(F, r, 2, false);
    bool is_pole_root = false;
    for (const auto& [b, j] : R.poles())
      if (s.is_constant() && s.constant_value() == b) is_pole_root = true;
    if (is_pole_root) {
      --k;  // retry; R(s) undefined
      continue;
    }
    Place p = random_place(F, r);
    try {
      OrderAtResult out = order_of_R_at(R, s, p);
      long long direct = ord_at(p, R.apply(s));
      if (out.value != direct) ++res.failures;
      by_case[static_cast<int>(out.tag)]++;
    } catch (const InternalCheckError&) {
      ++res.failures;
    }
  }
  std::ostringstream os;
  os << "cases: coincidence=" << by_case[1] << " none=" << by_case[2]
     << " pole=" << by_case[3];
  res.detail = os.str();
  return res;
}

OracleResult suite_le_notq(unsigned long long seed, long long trials) {
  Rng r(seed);
  OracleResult res{"le_notq", trials, 0, ""};
  long long by_id[6] = {0, 0, 0, 0, 0, 0};
  for (long long k = 0; k < trials; ++k) {
    FieldPtr F = random_field(r);
    long long q = random_q(r, F->characteristic());
    RuSpec R = random_ruspec(F, r, q);
    RatFunc w = random_ratfunc(F, r, 2, true);
    FElem u = random_const(F, r);
    Place p = random_place(F, r);
    try {
      ModQResult out = classify_mod_q(R, w, u, p);
      long long direct = ord_at(p, R.apply(w - RatFunc::constant(u)));
      bool direct_div = div_q(direct, q);
      if (out.divisible != direct_div) ++res.failures;
      if (out.divisible != (out.condition_id <= 3)) ++res.failures;
      by_id[out.condition_id]++;
    } catch (const InternalCheckError&) {
      ++res.failures;
    }
  }
  std::ostringstream os;
  os << "ids:";
  for (int i = 1; i <= 5; ++i) os << " #" << i << "=" << by_id[i];
  res.detail = os.str();
  return res;
}

OracleResult suite_ramification(unsigned long long seed, long long trials) {
  Rng r(seed);
  OracleResult res{"ramification", trials, 0, ""};
  long long ramified = 0;
  for (long long k = 0; k < trials; ++k) {
    FieldPtr F = random_field(r);
    long long q = random_q(r, F->characteristic());
    RatFunc W = random_ratfunc(F, r, 3, true);
    Place p = random_place(F, r);
    long long v = ord_at(p, W);  // the known divisor coefficient
    TowerPtr tw = Tower::make_base(F);
    TowerPlace chain = start_chain(p, tw);
    try {
      long long e = ramification_in_step(chain, q, tw->from_ratfunc(W));
      bool expect_ram = mod_nonneg(v, q) != 0;
      if (e != (expect_ram ? q : 1)) ++res.failures;
      bool unram = unramified_by_discriminant(chain, q, tw->from_ratfunc(W));
      if (unram != (e == 1)) ++res.failures;
      if (e == q) ++ramified;
    } catch (const Error&) {
      ++res.failures;
    }
  }
  res.detail = "ramified in " + std::to_string(ramified) + " trials";
  return res;
}

// Adjoin a q-th root of a random non-power radicand; retries until the
// radicand is certified non-power.
TowerPtr grow_random_step(TowerPtr tw, long long q, Rng& r) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    RatFunc W = random_ratfunc(tw->const_field(), r, 2, true);
    TowerElement We = tw->from_ratfunc(W);
    try {
      if (is_qth_power(tw, We, q)) continue;
      return adjoin_root(tw, q, We);
    } catch (const UnsupportedError&) {
      continue;
    }
  }
  throw InternalCheckError("grow_random_step: no non-power radicand found");
}

OracleResult suite_ef_sum(unsigned long long seed, long long trials) {
  Rng r(seed);
  (void)trials;
  OracleResult res{"ef_sum", 0, 0, ""};
  for (long long p : kPrimes) {
    FieldPtr F = Field::prime(p);
    // One deterministic 3-step tower per characteristic, with all step
    // primes from {2,3,5} different from p.
    std::vector<long long> qs;
    for (long long q : kQs)
      if (q != p) qs.push_back(q);
    TowerPtr tw = Tower::make_base(F);
    for (size_t i = 0; i < 3 && i < qs.size(); ++i)
      tw = grow_random_step(tw, qs[i], r);
    long long deg = tw->degree();

    std::vector<Place> places{Place::infinite(F)};
    for (long long idx = 0;; ++idx) {
      Poly pi = nth_monic_irreducible(F, idx);
      if (pi.degree() > 3) break;
      places.push_back(Place::finite(pi));
    }
    for (const Place& pl : places) {
      ++res.trials;
      try {
        long long sum = 0;
        for (const TowerPlace& ch : places_above(pl, tw))
          sum += ch.chain_e() * ch.chain_f();
        if (sum != deg) ++res.failures;
      } catch (const Error&) {
        ++res.failures;
      }
    }
  }
  res.detail = "places checked across 4 characteristics, 3-step towers";
  return res;
}

OracleResult suite_compositum(unsigned long long seed, long long trials) {
  Rng r(seed);
  OracleResult res{"compositum", trials, 0, ""};
  for (long long k = 0; k < trials; ++k) {
    FieldPtr F = random_field(r);
    std::vector<long long> qs;
    for (long long q : kQs)
      if (q != F->characteristic() && r.uni(0, 1) == 1) qs.push_back(q);
    if (qs.empty()) qs.push_back(random_q(r, F->characteristic()));
    TowerPtr tw = Tower::make_base(F);
    long long expect = 1;
    try {
      for (long long q : qs) {
        tw = grow_random_step(tw, q, r);
        expect *= q;
      }
      if (tw->degree() != expect) ++res.failures;
      // Structural basis check: a product of all roots stays in canonical
      // exponent range.
      TowerElement prod = tw->one();
      for (int l = 0; l < tw->num_levels(); ++l) prod = prod * tw->beta(l);
      prod = prod * prod;
      for (const auto& [e, c] : prod.terms())
        for (int l = 0; l < tw->num_levels(); ++l)
          if (e[l] < 0 || e[l] >= tw->steps()[l].q) ++res.failures;
    } catch (const Error&) {
      ++res.failures;
    }
  }
  return res;
}

OracleResult suite_canfind(unsigned long long seed, long long trials) {
  Rng r(seed);
  OracleResult res{"canfind", trials, 0, ""};
  for (long long k = 0; k < trials; ++k) {
    FieldPtr F = random_field(r);
    long long q = random_q(r, F->characteristic());
    RuSpec R = [&] {
      for (;;) {
        RuSpec cand = random_ruspec(F, r, q);
        if (cand.deg_num() > cand.deg_den()) return cand;
      }
    }();
    RatFunc a = random_ratfunc(F, r, 2, true);
    // T: the smallest pole place of a plus up to two distinct extras.
    Divisor D = divisor_of(a);
    std::vector<Place> T;
    for (const auto& [p, m] : D.terms())
      if (m < 0) {
        T.push_back(p);
        break;
      }
    if (T.empty()) {
      --k;
      continue;
    }
    for (int extra = static_cast<int>(r.uni(0, 2)); extra > 0; --extra) {
      Place p = random_place(F, r);
      bool dup = false;
      for (const Place& t : T)
        if (t == p) dup = true;
      if (!dup) T.push_back(p);
    }
    try {
      RatFunc b = find_b_canfind(R, a, T);
      RatFunc Rb = R.apply(b);
      RatFunc Raq = R.apply(a).pow(q);
      // Independent re-verification of all three order congruences.
      std::vector<Place> sorted = T;
      std::sort(sorted.begin(), sorted.end());
      const Place* pole = nullptr;
      for (const Place& p : sorted)
        if (ord_at(p, a) < 0) {
          pole = &p;
          break;
        }
      if (!pole || div_q(ord_at(*pole, Rb), q)) ++res.failures;
      for (const Place& p : T) {
        if (!div_q(ord_at(p, Raq - Rb), q)) ++res.failures;
        if (!div_q(ord_at(p, Raq - Rb.inverse()), q)) ++res.failures;
      }
    } catch (const Error&) {
      ++res.failures;
    }
  }
  return res;
}

OracleResult suite_forevery(unsigned long long seed, long long trials) {
  Rng r(seed);
  OracleResult res{"forevery", trials, 0, ""};
  long long satisfied = 0;
  for (long long k = 0; k < trials; ++k) {
    FieldPtr F = random_field(r);
    long long q = random_q(r, F->characteristic());
    // Bias towards w that are exact q-th powers half the time, to exercise
    // satisfiable hypotheses.
    RatFunc w = random_ratfunc(F, r, 2, false);
    if (w.is_zero()) {
      --k;
      continue;
    }
    if (r.uni(0, 1) == 1) w = w.pow(q);
    FElem v = random_const(F, r);
    try {
      ForeveryResult out = check_forevery(w, v, q);
      if (out.hypothesis_satisfied) {
        ++satisfied;
        if (!out.conclusion_holds) ++res.failures;
      }
    } catch (const Error&) {
      ++res.failures;
    }
  }
  res.detail = "hypothesis satisfied in " + std::to_string(satisfied) +
               " trials";
  return res;
}

OracleResult suite_qth_power(unsigned long long seed, long long trials) {
  Rng r(seed);
  OracleResult res{"qth_power", trials, 0, ""};
  for (long long k = 0; k < trials; ++k) {
    FieldPtr F = random_field(r);
    long long q = random_q(r, F->characteristic());
    RatFunc y = random_ratfunc(F, r, 2, false);
    if (y.is_zero()) {
      --k;
      continue;
    }
    RatFunc x = y.pow(q);
    try {
      std::optional<RatFunc> w = is_qth_power_ratfunc(x, q);
      if (!w || w->pow(q) != x) ++res.failures;
      // Spoil one exponent: multiply by a fresh irreducible.
      Poly pi = nth_monic_irreducible(F, r.uni(0, 10));
      RatFunc xs = x * RatFunc::from_poly(pi);
      if (mod_nonneg(ord_at(Place::finite(pi), xs), q) != 0 &&
          is_qth_power_ratfunc(xs, q))
        ++res.failures;
    } catch (const Error&) {
      ++res.failures;
    }
  }
  return res;
}

}  // namespace

std::vector<std::string> oracle_suite_names() {
  return {"le_order",   "le_notq", "ramification", "ef_sum",
          "compositum", "canfind", "forevery",     "qth_power"};
}

OracleResult run_oracle_suite(const std::string& name,
                              unsigned long long seed, long long trials) {
  if (trials <= 0) throw ValueError("oracle: trials must be positive");
  if (name == "le_order") return suite_le_order(seed, trials);
  if (name == "le_notq") return suite_le_notq(seed, trials);
  if (name == "ramification") return suite_ramification(seed, trials);
  if (name == "ef_sum") return suite_ef_sum(seed, trials);
  if (name == "compositum") return suite_compositum(seed, trials);
  if (name == "canfind") return suite_canfind(seed, trials);
  if (name == "forevery") return suite_forevery(seed, trials);
  if (name == "qth_power") return suite_qth_power(seed, trials);
  throw ValueError("oracle: unknown suite \"" + name + "\"");
}

}  // namespace ffval
