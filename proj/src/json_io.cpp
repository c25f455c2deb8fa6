#include "cherednik/json_io.hpp"

namespace cherednik {

namespace {

std::string as_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidInput("expected a rational string, got " + j.dump());
}

Exponent exponent_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an exponent array");
  Exponent e;
  for (const auto& v : j) e.push_back(v.get<int>());
  return e;
}

SchurSource source_from_string(const std::string& s) {
  for (auto src : {SchurSource::Poincare, SchurSource::Gr1n, SchurSource::Trace, SchurSource::Table})
    if (to_string(src) == s) return src;
  throw InvalidInput("unknown Schur source '" + s + "'");
}

Positivity positivity_from_string(const std::string& s) {
  for (auto p : {Positivity::Positive, Positivity::NotPositive, Positivity::Indeterminate})
    if (to_string(p) == s) return p;
  throw InvalidInput("unknown positivity '" + s + "'");
}

std::string hyperplane_text(const Exponent& a, const Rational& v, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    int k = a[i];
    if (!out.empty()) out += k < 0 ? " - " : " + ";
    else if (k < 0) out += "-";
    if (std::abs(k) != 1) out += std::to_string(std::abs(k)) + "*";
    out += "c_" + (i < vars.size() ? vars[i] : "x" + std::to_string(i + 1));
  }
  return out + " = " + v.get_str();
}

}  // namespace

Json to_json(const Rational& r) { return r.get_str(); }
Rational rational_from_json(const Json& j) { return parse_rational(as_text(j)); }

Json to_json(const CycloNum& c) {
  CycloNum r = c.reduced();
  Json coeffs = Json::array();
  for (const auto& v : r.coeffs()) coeffs.push_back(to_json(v));
  return Json{{"order", r.order()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return CycloNum(rational_from_json(j));
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw InvalidInput("cyclotomic number needs order and coeffs");
  std::vector<Rational> coeffs;
  for (const auto& v : j.at("coeffs")) coeffs.push_back(rational_from_json(v));
  int order = j.at("order").get<int>();
  if (order < 1 || coeffs.empty()) throw InvalidInput("cyclotomic number needs a positive order and coefficients");
  return CycloNum(order, std::move(coeffs)).reduced();
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
  return Json{{"vars", p.vars()}, {"terms", terms}, {"text", p.str()}};
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  LaurentPoly p(vars);
  for (const auto& t : j.at("terms")) {
    Exponent e = exponent_from_json(t.at("exp"));
    if (e.size() != vars.size()) throw InvalidInput("term exponent has the wrong length");
    p.add_term(e, cyclo_from_json(t.at("coeff")));
  }
  return p;
}

Json to_json(const CycloFactor& f) {
  Json j{{"monomial", f.monomial}, {"root", to_json(f.root)}};
  if (auto a = f.root.root_of_unity_angle()) j["angle"] = to_json(*a);
  j["multiplicity"] = f.multiplicity;
  return j;
}

CycloFactor factor_from_json(const Json& j) {
  CycloFactor f;
  f.monomial = exponent_from_json(j.at("monomial"));
  f.root = cyclo_from_json(j.at("root"));
  f.multiplicity = j.value("multiplicity", 1);
  return f;
}

Json to_json(const SchurElement& s) {
  Json factors = Json::array();
  for (const auto& f : s.factorization.factors) factors.push_back(to_json(f));
  Json groups = Json::array();
  for (const auto& g : s.groups()) groups.push_back(Json{{"monomial", g.monomial}, {"labels", g.labels}});
  Json j{{"vars", s.vars},
         {"text", s.text()},
         {"source", to_string(s.source)},
         {"unit", Json{{"monomial", s.factorization.unit_monomial}, {"scalar", to_json(s.factorization.unit_scalar)}}},
         {"factors", factors},
         {"groups", groups}};
  const auto& rem = s.factorization.remainder;
  if (!rem.is_zero() && rem.total_degree() != 0) j["remainder"] = to_json(rem);
  j["poly"] = to_json(s.poly);
  return j;
}

SchurElement schur_from_json(const Json& j) {
  SchurElement s;
  s.vars = j.at("vars").get<std::vector<std::string>>();
  s.source = source_from_string(j.at("source").get<std::string>());
  s.poly = laurent_from_json(j.at("poly"));
  auto& f = s.factorization;
  f.vars = s.vars;
  f.unit_monomial = exponent_from_json(j.at("unit").at("monomial"));
  f.unit_scalar = cyclo_from_json(j.at("unit").at("scalar"));
  for (const auto& x : j.at("factors")) f.factors.push_back(factor_from_json(x));
  f.remainder = j.contains("remainder") ? laurent_from_json(j.at("remainder"))
                                        : LaurentPoly::constant(s.vars, CycloNum(1));
  return s;
}

Json to_json(const ParamPoint& p) {
  Json c = Json::object();
  for (std::size_t i = 0; i < p.names.size(); ++i) c[p.names[i]] = to_json(p.values[i]);
  return Json{{"c", c}};
}

ParamPoint param_point_from_json(const Json& j) {
  ParamPoint p;
  for (const auto& [k, v] : j.at("c").items()) {
    p.names.push_back(k);
    p.values.push_back(rational_from_json(v));
  }
  return p;
}

Json to_json(const Witness& w, const std::vector<std::string>& vars) {
  return Json{{"condition", Json{{"a", w.condition.a}, {"theta", to_json(w.condition.theta)}}},
              {"value", to_json(w.value)},
              {"hyperplane", hyperplane_text(w.condition.a, w.value, vars)},
              {"positivity", to_string(w.positivity)}};
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.condition.a = exponent_from_json(j.at("condition").at("a"));
  w.condition.theta = rational_from_json(j.at("condition").at("theta"));
  w.value = rational_from_json(j.at("value"));
  w.positivity = positivity_from_string(j.at("positivity").get<std::string>());
  return w;
}

Json to_json(const SupportResult& r, const StrataData& strata, const std::vector<std::string>& vars,
             const std::string& route) {
  Json items = Json::array();
  for (const auto& v : r.strata) {
    const auto& s = strata.strata[v.stratum];
    Json item{{"id", s.id}, {"type", s.type}, {"codim", s.codim}, {"in_support", v.in_support},
              {"certified", v.certified}};
    if (route == "schur") {
      item["source"] = to_string(v.source);
      Json ws = Json::array();
      for (const auto& w : v.witnesses) ws.push_back(to_json(w, vars));
      item["witnesses"] = ws;
    }
    items.push_back(item);
  }
  return Json{{"route", route}, {"finite_dimensional", r.finite_dimensional}, {"warnings", r.warnings},
              {"strata", items}};
}

SupportResult support_from_json(const Json& j, const StrataData& strata) {
  SupportResult r;
  r.finite_dimensional = j.at("finite_dimensional").get<bool>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  for (const auto& item : j.at("strata")) {
    StratumVerdict v;
    v.stratum = strata.find(item.at("id").get<std::string>());
    if (v.stratum < 0) throw InvalidInput("unknown stratum id in support result");
    v.in_support = item.at("in_support").get<bool>();
    v.certified = item.at("certified").get<bool>();
    if (item.contains("source")) v.source = source_from_string(item.at("source").get<std::string>());
    if (item.contains("witnesses"))
      for (const auto& w : item.at("witnesses")) v.witnesses.push_back(witness_from_json(w));
    r.strata.push_back(std::move(v));
  }
  return r;
}

ParamPoint parse_params(const ReflectionGroup& g, const Json& j) {
  if (!j.is_object()) throw InvalidInput("parameters must be a JSON object");
  if (j.contains("gr1n")) {
    const auto& n = j.at("gr1n");
    Gr1nParams p;
    p.c0 = rational_from_json(n.value("c0", Json("0")));
    for (const auto& d : n.at("d")) p.d.push_back(rational_from_json(d));
    return param_point_gr1n(g, p);
  }
  if (!j.contains("c")) throw InvalidInput("parameters need a \"c\" or \"gr1n\" key");
  const auto& c = j.at("c");
  if (c.is_string() || c.is_number_integer()) return param_point_uniform(g, rational_from_json(c));
  if (!c.is_object()) throw InvalidInput("\"c\" must be a rational or an object");
  std::map<std::string, Rational> values;
  for (const auto& [k, v] : c.items()) values[k] = rational_from_json(v);
  return param_point(g, values);
}

}  // namespace cherednik
