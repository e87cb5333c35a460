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

#include "ffval/json_io.hpp"

namespace ffval {

namespace {

const Json& get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long long get_int(const Json& j, const char* key) {
  const Json& v = get(j, key);
  if (!v.is_number_integer())
    throw SchemaError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

std::string get_str(const Json& j, const char* key) {
  const Json& v = get(j, key);
  if (!v.is_string())
    throw SchemaError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array())
    throw SchemaError(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json field_to_json(const FieldPtr& f) {
  switch (f->kind()) {
    case Field::Kind::Rationals:
      return Json{{"kind", "rationals"}};
    case Field::Kind::Prime:
      return Json{{"kind", "prime"}, {"p", f->characteristic()}};
    default: {
      Json mod = Json::array();
      for (const FElem& c : f->modulus()) mod.push_back(felem_to_json(c));
      return Json{{"kind", "extension"},
                  {"base", field_to_json(f->base())},
                  {"modulus", mod}};
    }
  }
}

FieldPtr field_from_json(const Json& j) {
  std::string kind = get_str(j, "kind");
  if (kind == "rationals") return Field::rationals();
  if (kind == "prime") return Field::prime(get_int(j, "p"));
  if (kind == "extension") {
    FieldPtr base = field_from_json(get(j, "base"));
    std::vector<FElem> mod;
    for (const Json& c : as_array(get(j, "modulus"), "modulus"))
      mod.push_back(felem_from_json(c, base));
    return Field::extension(base, std::move(mod));
  }
  throw SchemaError("unknown field kind \"" + kind + "\"");
}

Json felem_to_json(const FElem& x) {
  switch (x.field()->kind()) {
    case Field::Kind::Rationals:
      return x.rational_value().get_str();
    case Field::Kind::Prime:
      return x.prime_value();
    default: {
      Json a = Json::array();
      for (const FElem& c : x.ext_coeffs()) a.push_back(felem_to_json(c));
      return a;
    }
  }
}

FElem felem_from_json(const Json& j, const FieldPtr& f) {
  switch (f->kind()) {
    case Field::Kind::Rationals: {
      if (j.is_number_integer()) return f->from_int(j.get<long long>());
      if (!j.is_string())
        throw SchemaError("rational element must be a string or integer");
      try {
        return f->from_mpq(mpq_class(j.get<std::string>()));
      } catch (const std::invalid_argument&) {
        throw SchemaError("malformed rational \"" + j.get<std::string>() + "\"");
      }
    }
    case Field::Kind::Prime:
      if (!j.is_number_integer())
        throw SchemaError("prime-field element must be an integer");
      return f->from_int(j.get<long long>());
    default: {
      std::vector<FElem> cs;
      for (const Json& c : as_array(j, "extension element"))
        cs.push_back(felem_from_json(c, f->base()));
      return f->make(std::move(cs));
    }
  }
}

Json poly_to_json(const Poly& p) {
  Json a = Json::array();
  for (const FElem& c : p.coeffs()) a.push_back(felem_to_json(c));
  return a;
}

Poly poly_from_json(const Json& j, const FieldPtr& f) {
  std::vector<FElem> cs;
  for (const Json& c : as_array(j, "polynomial")) cs.push_back(felem_from_json(c, f));
  return Poly(f, std::move(cs));
}

Json ratfunc_to_json(const RatFunc& r) {
  return Json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

RatFunc ratfunc_from_json(const Json& j, const FieldPtr& f) {
  return RatFunc(poly_from_json(get(j, "num"), f),
                 poly_from_json(get(j, "den"), f));
}

Json place_to_json(const Place& p) {
  if (p.is_infinite()) return Json{{"infinite", true}};
  return Json{{"infinite", false}, {"pi", poly_to_json(p.pi())}};
}

Place place_from_json(const Json& j, const FieldPtr& f) {
  const Json& inf = get(j, "infinite");
  if (!inf.is_boolean()) throw SchemaError("field \"infinite\" must be a boolean");
  if (inf.get<bool>()) return Place::infinite(f);
  return Place::finite(poly_from_json(get(j, "pi"), f));
}

Json divisor_to_json(const Divisor& d) {
  Json terms = Json::array();
  for (const auto& [p, m] : d.terms())
    terms.push_back(Json{{"place", place_to_json(p)}, {"m", m}});
  return Json{{"terms", terms}};
}

Json ruspec_to_json(const RuSpec& r) {
  auto roots = [](const std::vector<std::pair<FElem, long long>>& v) {
    Json a = Json::array();
    for (const auto& [c, m] : v)
      a.push_back(Json{{"root", felem_to_json(c)}, {"mult", m}});
    return a;
  };
  return Json{{"q", r.q()},
              {"a", felem_to_json(r.a())},
              {"zeros", roots(r.zeros())},
              {"poles", roots(r.poles())}};
}

RuSpec ruspec_from_json(const Json& j, const FieldPtr& f) {
  auto roots = [&](const Json& a, const char* what) {
    std::vector<std::pair<FElem, long long>> v;
    for (const Json& e : as_array(a, what))
      v.emplace_back(felem_from_json(get(e, "root"), f), get_int(e, "mult"));
    return v;
  };
  return RuSpec(get_int(j, "q"), roots(get(j, "zeros"), "zeros"),
                roots(get(j, "poles"), "poles"));
}

Json tower_to_json(const TowerPtr& tw) {
  Json steps = Json::array();
  for (const KummerStep& s : tw->steps())
    steps.push_back(Json{{"q", s.q}, {"W", tower_element_to_json(s.W)}});
  return Json{{"field", field_to_json(tw->const_field())}, {"steps", steps}};
}

TowerPtr tower_from_json(const Json& j) {
  TowerPtr tw = Tower::make_base(field_from_json(get(j, "field")));
  for (const Json& s : as_array(get(j, "steps"), "steps")) {
    TowerElement W = tower_element_from_json(get(s, "W"), tw);
    tw = adjoin_root(tw, get_int(s, "q"), W);
  }
  return tw;
}

Json tower_element_to_json(const TowerElement& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms())
    terms.push_back(Json{{"e", e}, {"c", ratfunc_to_json(c)}});
  return Json{{"terms", terms}};
}

TowerElement tower_element_from_json(const Json& j, const TowerPtr& tw) {
  std::map<std::vector<int>, RatFunc> terms;
  for (const Json& t : as_array(get(j, "terms"), "terms")) {
    const Json& ej = as_array(get(t, "e"), "exponent vector");
    std::vector<int> e;
    for (const Json& v : ej) {
      if (!v.is_number_integer())
        throw SchemaError("exponents must be integers");
      e.push_back(v.get<int>());
    }
    terms.emplace(std::move(e),
                  ratfunc_from_json(get(t, "c"), tw->const_field()));
  }
  return tw->element(std::move(terms));
}

Json tower_place_to_json(const TowerPlace& p) {
  Json levels = Json::array();
  for (const TowerLevel& l : p.levels())
    levels.push_back(Json{{"e", l.e}, {"f", l.f}});
  return Json{{"base", place_to_json(p.base_place())},
              {"path", p.path()},
              {"levels", levels}};
}

TowerPlace tower_place_from_json(const Json& j, const TowerPtr& tw) {
  Place base = place_from_json(get(j, "base"), tw->const_field());
  std::vector<int> path;
  for (const Json& v : as_array(get(j, "path"), "path")) {
    if (!v.is_number_integer()) throw SchemaError("path entries must be integers");
    path.push_back(v.get<int>());
  }
  if (static_cast<int>(path.size()) != tw->num_levels())
    throw SchemaError("chain path length must match the tower depth");
  TowerPlace p = start_chain(base, tw);
  for (int k = 0; k < tw->num_levels(); ++k) {
    std::vector<TowerPlace> children = split_place(p, tw->prefix(k + 1));
    if (path[k] < 0 || path[k] >= static_cast<int>(children.size()))
      throw SchemaError("chain path index out of range at level " +
                        std::to_string(k));
    p = children[path[k]];
  }
  return p;
}

Json construction_config_to_json(const ConstructionConfig& cfg) {
  Json indices = Json::array();
  for (const IndexSpec& idx : cfg.indices) {
    Json A = Json::array();
    for (const FElem& a : idx.A) A.push_back(felem_to_json(a));
    indices.push_back(Json{{"R", ruspec_to_json(idx.R)}, {"A", A}});
  }
  Json en = Json::array();
  for (const EnumEntry& e : cfg.enumeration) {
    if (e.base)
      en.push_back(Json{{"base", ratfunc_to_json(*e.base)}});
    else
      en.push_back(Json{{"beta", e.beta_level}});
  }
  Json stream = Json::array();
  for (const FElem& r : cfg.witness_stream) stream.push_back(felem_to_json(r));
  Json pairs = Json::array();
  for (const auto& [u, r1, r2] : cfg.witness_pairs)
    pairs.push_back(Json{{"u", u},
                         {"r1", felem_to_json(r1)},
                         {"r2", felem_to_json(r2)}});
  return Json{{"field", field_to_json(cfg.F)},
              {"indices", indices},
              {"enumeration", en},
              {"witnessStream", stream},
              {"witnessPairs", pairs},
              {"maxSteps", cfg.max_steps},
              {"seed", cfg.seed}};
}

ConstructionConfig construction_config_from_json(const Json& j) {
  ConstructionConfig cfg;
  cfg.F = field_from_json(get(j, "field"));
  for (const Json& idx : as_array(get(j, "indices"), "indices")) {
    IndexSpec spec{ruspec_from_json(get(idx, "R"), cfg.F), {}};
    for (const Json& a : as_array(get(idx, "A"), "A"))
      spec.A.push_back(felem_from_json(a, cfg.F));
    cfg.indices.push_back(std::move(spec));
  }
  for (const Json& e : as_array(get(j, "enumeration"), "enumeration")) {
    EnumEntry en;
    if (e.contains("base"))
      en.base = ratfunc_from_json(e.at("base"), cfg.F);
    else
      en.beta_level = static_cast<int>(get_int(e, "beta"));
    cfg.enumeration.push_back(std::move(en));
  }
  for (const Json& r : as_array(get(j, "witnessStream"), "witnessStream"))
    cfg.witness_stream.push_back(felem_from_json(r, cfg.F));
  for (const Json& p : as_array(get(j, "witnessPairs"), "witnessPairs"))
    cfg.witness_pairs.emplace_back(static_cast<int>(get_int(p, "u")),
                                   felem_from_json(get(p, "r1"), cfg.F),
                                   felem_from_json(get(p, "r2"), cfg.F));
  cfg.max_steps = static_cast<int>(get_int(j, "maxSteps"));
  const Json& seed = get(j, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    throw SchemaError("field \"seed\" must be an integer");
  cfg.seed = seed.get<unsigned long long>();
  return cfg;
}

Json construction_state_to_json(const ConstructionState& st) {
  Json S = Json::array();
  for (const auto& su : st.S) {
    Json entries = Json::array();
    for (const SEntry& e : su)
      entries.push_back(Json{{"s", tower_element_to_json(e.s)},
                             {"sLevels", e.s.tower()->num_levels()},
                             {"prime", tower_place_to_json(e.prime)},
                             {"primeLevels", e.prime.num_levels()}});
    S.push_back(entries);
  }
  Json pairs = Json::array();
  for (const auto& [u, r1, r2] : st.generated_pairs)
    pairs.push_back(Json{{"u", u},
                         {"r1", felem_to_json(r1)},
                         {"r2", felem_to_json(r2)}});
  Json log = Json::array();
  for (const LogRecord& lr : st.log)
    log.push_back(Json{{"i", lr.i}, {"kind", lr.kind}, {"detail", lr.detail}});
  return Json{{"config", construction_config_to_json(st.cfg)},
              {"i", st.i},
              {"tower", tower_to_json(st.tower)},
              {"S", S},
              {"generatedPairs", pairs},
              {"log", log}};
}

ConstructionState construction_state_from_json(const Json& j) {
  ConstructionState st;
  st.cfg = construction_config_from_json(get(j, "config"));
  st.i = static_cast<int>(get_int(j, "i"));
  st.tower = tower_from_json(get(j, "tower"));
  for (const Json& su : as_array(get(j, "S"), "S")) {
    std::vector<SEntry> entries;
    for (const Json& e : as_array(su, "S entries")) {
      int lv = static_cast<int>(get_int(e, "primeLevels"));
      int slv = static_cast<int>(get_int(e, "sLevels"));
      if (lv < 0 || lv > st.tower->num_levels() || slv < 0 ||
          slv > st.tower->num_levels())
        throw SchemaError("designated chain depth out of range");
      entries.push_back(
          {tower_element_from_json(get(e, "s"), st.tower->prefix(slv)),
           tower_place_from_json(get(e, "prime"), st.tower->prefix(lv))});
    }
    st.S.push_back(std::move(entries));
  }
  for (const Json& p : as_array(get(j, "generatedPairs"), "generatedPairs"))
    st.generated_pairs.emplace_back(
        static_cast<int>(get_int(p, "u")),
        felem_from_json(get(p, "r1"), st.cfg.F),
        felem_from_json(get(p, "r2"), st.cfg.F));
  for (const Json& lr : as_array(get(j, "log"), "log"))
    st.log.push_back({static_cast<int>(get_int(lr, "i")), get_str(lr, "kind"),
                      get_str(lr, "detail")});
  if (st.S.size() != st.cfg.indices.size())
    throw SchemaError("S must have one entry list per family index");
  return st;
}

Json theory_config_to_json(const TheoryConfig& cfg) {
  Json R = Json::array();
  for (const auto& [q, spec] : cfg.R)
    R.push_back(Json{{"q", q}, {"spec", ruspec_to_json(spec)}});
  Json P = Json::array(), Z = Json::array(), sample = Json::array();
  for (const Poly& p : cfg.P) P.push_back(poly_to_json(p));
  for (const Poly& z : cfg.Z) Z.push_back(poly_to_json(z));
  for (const FElem& x : cfg.closure_sample) sample.push_back(felem_to_json(x));
  return Json{{"field", field_to_json(cfg.U)}, {"Q", cfg.Q},
              {"R", R},                        {"P", P},
              {"Z", Z},                        {"closureSample", sample}};
}

TheoryConfig theory_config_from_json(const Json& j) {
  TheoryConfig cfg;
  cfg.U = field_from_json(get(j, "field"));
  for (const Json& q : as_array(get(j, "Q"), "Q")) {
    if (!q.is_number_integer()) throw SchemaError("Q entries must be integers");
    cfg.Q.push_back(q.get<long long>());
  }
  for (const Json& r : as_array(get(j, "R"), "R"))
    cfg.R.emplace(get_int(r, "q"), ruspec_from_json(get(r, "spec"), cfg.U));
  for (const Json& p : as_array(get(j, "P"), "P"))
    cfg.P.push_back(poly_from_json(p, cfg.U));
  for (const Json& z : as_array(get(j, "Z"), "Z"))
    cfg.Z.push_back(poly_from_json(z, cfg.U));
  for (const Json& x : as_array(get(j, "closureSample"), "closureSample"))
    cfg.closure_sample.push_back(felem_from_json(x, cfg.U));
  return cfg;
}

Json report_to_json(const Report& rep) {
  Json items = Json::array();
  for (const CheckItem& it : rep.items)
    items.push_back(
        Json{{"what", it.what}, {"pass", it.pass}, {"detail", it.detail}});
  return Json{{"allPass", rep.all_pass()}, {"items", items}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ffval
