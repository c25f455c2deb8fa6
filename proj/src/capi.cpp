#include "cherednik/cherednik.h"

#include <cstring>
#include <memory>
#include <optional>

#include "cherednik/json_io.hpp"

using namespace cherednik;

struct chd_group {
  ReflectionGroup g;
  std::optional<StrataData> strata;
  std::optional<CharacterData> chars;
  std::map<std::pair<int, const chd_table*>, std::vector<SchurElement>> qindices;

  const StrataData& get_strata() {
    if (!strata) strata = compute_strata(g);
    return *strata;
  }
  const CharacterData& get_chars() {
    if (!chars) chars = compute_characters(g);
    return *chars;
  }
};

struct chd_table {
  SchurTable table;
};

namespace {

thread_local std::string last_error;

template <class F>
int guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return CHD_OK;
  } catch (const InvalidInput& e) {
    last_error = e.what();
    return CHD_ERR_INVALID;
  } catch (const Json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return CHD_ERR_INVALID;
  } catch (const Undecidable& e) {
    last_error = e.what();
    return CHD_ERR_UNDECIDABLE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CHD_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CHD_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw InvalidInput(std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  need(out, "output pointer");
  *out = dup(j.dump(2));
}

int check_bound(int bound) {
  if (bound < 1 || bound > 1000) throw InvalidInput("unity bound must be in 1..1000");
  return bound;
}

const SchurTable* table_of(const chd_table* t) { return t ? &t->table : nullptr; }

const std::vector<SchurElement>& qindices(chd_group* h, const chd_table* t, int bound) {
  auto key = std::make_pair(bound, t);
  auto it = h->qindices.find(key);
  if (it == h->qindices.end()) it = h->qindices.emplace(key, all_qindices(h->g, h->get_strata(), table_of(t), bound)).first;
  return it->second;
}

Json gr1n_dictionary(const ReflectionGroup& g) {
  bool cyclic = g.spec().kind == GroupKind::Cyclic;
  int r = cyclic ? g.spec().n : g.spec().r;
  int n = cyclic ? 1 : g.spec().n;
  Json coords = Json::object();
  std::string transp;
  for (const auto& pc : g.coords()) {
    const auto& h = g.hyperplanes()[g.orbits()[pc.orbit].hyperplanes.front()];
    int nonzero = 0;
    for (const auto& v : h.alpha) nonzero += !v.is_zero();
    if (nonzero == 1 && r >= 2) {
      coords[pc.name] = "(d_0 - d_" + std::to_string(pc.j) + ")/" + std::to_string(r);
    } else {
      coords[pc.name] = "c0";
      transp = pc.name;
    }
  }
  Json q = Json::array();
  if (r >= 2) {
    std::string diag;
    for (const auto& pc : g.coords())
      if (coords[pc.name] != "c0") {
        diag = g.orbits()[pc.orbit].label;
        break;
      }
    q.push_back("1");
    for (int j = 1; j < r; ++j) q.push_back("zeta_" + std::to_string(r) + "^" + std::to_string(j) + "*" + diag + std::to_string(j));
  }
  Json out{{"r", r}, {"n", n}};
  if (!transp.empty()) out["q"] = transp + "^-1";
  if (r >= 2) out["Q"] = q;
  out["coordinates"] = coords;
  out["native"] = "q = exp(-2 pi i c0), Q_j = exp(2 pi i (j - d_j)/r)";
  return out;
}

int find_stratum(const StrataData& s, const std::string& key) {
  int i = s.find(key);
  if (i >= 0) return i;
  for (std::size_t k = 0; k < s.strata.size(); ++k)
    if (s.strata[k].type == key) return static_cast<int>(k);
  throw InvalidInput("no stratum '" + key + "'");
}

Json qindex_entry(const Stratum& s, const SchurElement& e) {
  Json j = to_json(e);
  j["stratum"] = s.id;
  j["type"] = s.type;
  return j;
}

Vec lambda_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw InvalidInput("lambda must be a JSON array");
  Vec out;
  for (const auto& v : j) out.push_back(cyclo_from_json(v));
  if (out.size() != rank) throw InvalidInput("lambda needs " + std::to_string(rank) + " entries");
  return out;
}

Json xpoly_terms(const XPoly<CycloNum>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
  return terms;
}

}  // namespace

extern "C" {

const char* chd_version(void) { return "0.1.0"; }
const char* chd_last_error(void) { return last_error.c_str(); }
void chd_string_free(char* s) { std::free(s); }

int chd_group_new(const char* spec, chd_group** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "output pointer");
    *out = new chd_group{ReflectionGroup::build(parse_group_spec(spec)), {}, {}, {}};
  });
}

void chd_group_free(chd_group* g) { delete g; }

int chd_group_order(const chd_group* g, size_t* out) {
  return guarded([&] {
    need(g, "group");
    need(out, "output pointer");
    *out = g->g.size();
  });
}

int chd_table_load(const char* path, chd_table** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new chd_table{SchurTable::load(path)};
  });
}

int chd_table_parse(const char* text, chd_table** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new chd_table{SchurTable::parse(text)};
  });
}

void chd_table_free(chd_table* t) { delete t; }

int chd_table_serialize(const chd_table* t, char** out) {
  return guarded([&] {
    need(t, "table");
    need(out, "output pointer");
    *out = dup(t->table.serialize());
  });
}

int chd_describe(chd_group* h, char** out) {
  return guarded([&] {
    need(h, "group");
    const auto& g = h->g;
    const auto& st = h->get_strata();
    Json orbits = Json::array();
    for (const auto& o : g.orbits())
      orbits.push_back(Json{{"label", o.label}, {"n_H", o.n_H}, {"hyperplanes", o.hyperplanes.size()}});
    Json coords = Json::array();
    for (const auto& c : g.coords()) coords.push_back(c.name);
    Json strata = Json::array();
    for (const auto& s : st.strata)
      strata.push_back(Json{{"id", s.id},
                            {"type", s.type},
                            {"codim", s.codim},
                            {"orbit_size", s.orbit_size},
                            {"parabolic_order", s.parabolic.size()},
                            {"hyperplanes", s.hyperplanes.size()}});
    Json j{{"group", g.spec().name},
           {"order", g.size()},
           {"rank", g.rank()},
           {"reflections", g.reflections().size()},
           {"coxeter_generators", g.has_coxeter_generators()},
           {"orbits", orbits},
           {"parameters", coords},
           {"strata", strata}};
    if (is_gr1n(g)) j["gr1n_dictionary"] = gr1n_dictionary(g);
    emit(j, out);
  });
}

int chd_schur(chd_group* h, const chd_table* t, const char* method, int unity_bound, char** out) {
  return guarded([&] {
    need(h, "group");
    int bound = check_bound(unity_bound);
    std::string m = method ? method : "auto";
    const auto& st = h->get_strata();
    SchurElement e;
    if (m == "auto") {
      e = stratum_qindex(h->g, st, st.open_index, table_of(t), bound);
    } else if (m == "poincare") {
      if (!h->g.has_coxeter_generators()) throw InvalidInput("Poincare route needs a Coxeter system");
      e = schur_from_poly(poincare_polynomial(h->g), SchurSource::Poincare, bound);
    } else if (m == "trace") {
      e = schur_from_trace(h->g, bound);
    } else if (m == "table") {
      if (!t) throw InvalidInput("table method needs --schur-table");
      auto row = t->table.lookup(h->g, st.strata[st.open_index]);
      if (!row) throw Undecidable("no table row for " + h->g.spec().name);
      e = *row;
    } else {
      throw InvalidInput("unknown method '" + m + "'");
    }
    Json j = to_json(e);
    j["group"] = h->g.spec().name;
    emit(j, out);
  });
}

int chd_qindex(chd_group* h, const chd_table* t, const char* stratum, int unity_bound, char** out) {
  return guarded([&] {
    need(h, "group");
    int bound = check_bound(unity_bound);
    const auto& st = h->get_strata();
    Json items = Json::array();
    if (stratum) {
      int i = find_stratum(st, stratum);
      items.push_back(qindex_entry(st.strata[i], stratum_qindex(h->g, st, i, table_of(t), bound)));
    } else {
      const auto& qi = qindices(h, t, bound);
      for (std::size_t i = 0; i < qi.size(); ++i) items.push_back(qindex_entry(st.strata[i], qi[i]));
    }
    emit(Json{{"group", h->g.spec().name}, {"qindices", items}}, out);
  });
}

int chd_support(chd_group* h, const chd_table* t, const char* params, int unity_bound, char** out) {
  return guarded([&] {
    need(h, "group");
    need(params, "params");
    int bound = check_bound(unity_bound);
    auto p = parse_params(h->g, Json::parse(params));
    const auto& st = h->get_strata();
    auto r = support_from_qindices(st, qindices(h, t, bound), p);
    Json j = to_json(r, st, param_vars(h->g), "schur");
    j["group"] = h->g.spec().name;
    j["params"] = to_json(p)["c"];
    emit(j, out);
  });
}

int chd_support_exponential(chd_group* h, const char* params, int degree, uint64_t seed, char** out) {
  return guarded([&] {
    need(h, "group");
    need(params, "params");
    if (degree < 1) throw InvalidInput("degree must be at least 1");
    auto p = parse_params(h->g, Json::parse(params));
    const auto& st = h->get_strata();
    auto r = support_via_exponential(h->g, st, p, degree, seed);
    Json j = to_json(r, st, param_vars(h->g), "exponential");
    j["group"] = h->g.spec().name;
    j["params"] = to_json(p)["c"];
    j["degree"] = degree;
    emit(j, out);
  });
}

int chd_finite_dim(chd_group* h, const chd_table* t, const char* params, int unity_bound, int* result, char** out) {
  return guarded([&] {
    need(h, "group");
    need(params, "params");
    need(result, "result pointer");
    int bound = check_bound(unity_bound);
    auto p = parse_params(h->g, Json::parse(params));
    const auto& st = h->get_strata();
    auto r = support_from_qindices(st, qindices(h, t, bound), p);
    *result = r.finite_dimensional ? 1 : 0;
    if (out) {
      Json j{{"group", h->g.spec().name}, {"params", to_json(p)["c"]}, {"finite_dimensional", r.finite_dimensional}};
      if (is_gr1n(h->g)) {
        auto pj = Json::parse(params);
        int rr = h->g.spec().kind == GroupKind::Cyclic ? h->g.spec().n : h->g.spec().r;
        int nn = h->g.spec().kind == GroupKind::Cyclic ? 1 : h->g.spec().n;
        if (pj.contains("gr1n") && rr >= 2) {
          Gr1nParams gp;
          gp.c0 = rational_from_json(pj["gr1n"].value("c0", Json("0")));
          for (const auto& d : pj["gr1n"].at("d")) gp.d.push_back(rational_from_json(d));
          j["gr1n_criterion"] = gr1n_finite_dim_criterion(rr, nn, gp);
        }
      }
      emit(j, out);
    }
  });
}

int chd_gr1n_criterion(int r, int n, const char* params, int* result) {
  return guarded([&] {
    need(params, "params");
    need(result, "result pointer");
    auto j = Json::parse(params);
    if (!j.contains("gr1n")) throw InvalidInput("criterion needs the gr1n parameter form");
    Gr1nParams gp;
    gp.c0 = rational_from_json(j["gr1n"].value("c0", Json("0")));
    for (const auto& d : j["gr1n"].at("d")) gp.d.push_back(rational_from_json(d));
    *result = gr1n_finite_dim_criterion(r, n, gp) ? 1 : 0;
  });
}

int chd_wexp(chd_group* h, const char* lambda, const char* params, int degree, uint64_t seed, char** out) {
  return guarded([&] {
    need(h, "group");
    if (degree < 1 || degree > 40) throw InvalidInput("degree must be in 1..40");
    const auto& g = h->g;
    const auto& st = h->get_strata();
    Vec lam = lambda ? lambda_from_json(Json::parse(lambda), g.rank()) : choose_lambda(g, st.strata[st.open_index], seed);
    Json lj = Json::array();
    for (const auto& v : lam) lj.push_back(to_json(v));
    Json j{{"group", g.spec().name}, {"lambda", lj}, {"degree", degree}};
    if (!params) {
      auto s = exp_series_symbolic(g, lam, degree, &h->get_chars());
      j["mode"] = "symbolic";
      j["parameters"] = s.cvars;
      Json comps = Json::array();
      for (int d = 0; d <= degree; ++d) {
        Json c{{"degree", d}, {"numerator", s.numerators[d].str()}, {"denominator", s.denominators[d].str()}};
        if (d > 0) {
          auto step = s.denominators[d].divide_exact(s.denominators[d - 1]);
          c["step_factor"] = step ? Json(step->str()) : Json(nullptr);
        }
        comps.push_back(c);
      }
      j["components"] = comps;
      Json factors = Json::array();
      for (const auto& f : s.denominator_factors) factors.push_back(f.str());
      j["denominator_factors"] = factors;
      Json unf = Json::array();
      for (const auto& f : s.unfactored) unf.push_back(f.str());
      j["unfactored"] = unf;
      Json sing = Json::array();
      for (const auto& lc : singular_hyperplanes(s)) sing.push_back(lc.str());
      j["singular_hyperplanes"] = sing;
      j["scope"] = "up to degree " + std::to_string(degree);
    } else {
      auto p = parse_params(g, Json::parse(params));
      auto s = exp_series_numeric(g, p.cyclo(), lam, degree);
      j["mode"] = "numeric";
      j["params"] = to_json(p)["c"];
      const char* status = s.status == NumericSeries::Status::Regular ? "regular"
                           : s.status == NumericSeries::Status::Pole  ? "pole"
                                                                      : "indeterminate";
      j["status"] = status;
      if (s.degree >= 0) j["status_degree"] = s.degree;
      Json comps = Json::array();
      for (std::size_t d = 0; d < s.components.size(); ++d)
        comps.push_back(Json{{"degree", d}, {"poly", s.components[d].str()}, {"terms", xpoly_terms(s.components[d])}});
      j["components"] = comps;
      j["scope"] = "up to degree " + std::to_string(degree);
    }
    emit(j, out);
  });
}

}  // extern "C"
