#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cherednik/cherednik.h"

using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string group;
  std::string c;
  std::string gr1n;
  int degree = 6;
  int unity_bound = 60;
  std::string schur_table;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string lambda;
  std::string method = "auto";
  std::string stratum;
  std::string route = "schur";
  int r = 0, n = 0;
};

struct Failure {
  int code;
};

void check(int status) {
  if (status != CHD_OK) {
    std::cerr << "error: " << chd_last_error() << "\n";
    throw Failure{status};
  }
}

std::string take(char* s) {
  std::string out(s);
  chd_string_free(s);
  return out;
}

struct Handles {
  chd_group* group = nullptr;
  chd_table* table = nullptr;
  ~Handles() {
    chd_group_free(group);
    chd_table_free(table);
  }
};

void open_handles(const Options& o, Handles& h) {
  if (o.group.empty()) {
    std::cerr << "error: --group is required\n";
    throw Failure{CHD_ERR_INVALID};
  }
  std::string spec = o.group;
  if (!spec.empty() && spec[0] != '{' && spec.find(':') == std::string::npos && std::ifstream(spec)) {
    std::ifstream in(spec);
    std::stringstream ss;
    ss << in.rdbuf();
    spec = ss.str();
  }
  check(chd_group_new(spec.c_str(), &h.group));
  if (!o.schur_table.empty()) check(chd_table_load(o.schur_table.c_str(), &h.table));
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

// --c "1/2" | "x1=1/2,y1=1/3" | JSON;  --gr1n "c0;d0,d1,..." | JSON
std::string params_json(const Options& o) {
  if (!o.c.empty() && !o.gr1n.empty()) {
    std::cerr << "error: give either --c or --gr1n\n";
    throw Failure{CHD_ERR_INVALID};
  }
  if (!o.gr1n.empty()) {
    if (o.gr1n[0] == '{') return o.gr1n;
    auto parts = split(o.gr1n, ';');
    if (parts.size() != 2) {
      std::cerr << "error: --gr1n expects \"c0;d0,d1,...\"\n";
      throw Failure{CHD_ERR_INVALID};
    }
    Json d = Json::array();
    for (const auto& v : split(parts[1], ',')) d.push_back(v);
    return Json{{"gr1n", Json{{"c0", parts[0]}, {"d", d}}}}.dump();
  }
  if (o.c.empty()) {
    std::cerr << "error: parameters required (--c or --gr1n)\n";
    throw Failure{CHD_ERR_INVALID};
  }
  if (o.c[0] == '{') return o.c;
  if (o.c.find('=') == std::string::npos) return Json{{"c", o.c}}.dump();
  Json c = Json::object();
  for (const auto& kv : split(o.c, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: bad parameter assignment '" << kv << "'\n";
      throw Failure{CHD_ERR_INVALID};
    }
    c[trim(kv.substr(0, eq))] = trim(kv.substr(eq + 1));
  }
  return Json{{"c", c}}.dump();
}

std::string lambda_json(const Options& o) {
  if (o.lambda.empty() || o.lambda[0] == '[') return o.lambda;
  Json a = Json::array();
  for (const auto& v : split(o.lambda, ',')) a.push_back(v);
  return a.dump();
}

std::string schur_line(const Json& e) {
  std::string out = e["text"].get<std::string>();
  if (e.contains("remainder")) out += " * (" + e["remainder"]["text"].get<std::string>() + ")";
  return out;
}

void print(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void cmd_describe(const Options& o) {
  Handles h;
  open_handles(o, h);
  char* s = nullptr;
  check(chd_describe(h.group, &s));
  Json j = Json::parse(take(s));
  std::ostringstream t;
  t << "group: " << j["group"].get<std::string>() << "\n"
    << "order: " << j["order"] << "\n"
    << "rank: " << j["rank"] << "\n"
    << "reflections: " << j["reflections"] << "\n"
    << "hyperplane orbits: " << j["orbits"].size() << "\n";
  for (const auto& orb : j["orbits"])
    t << "  " << orb["label"].get<std::string>() << ": n_H = " << orb["n_H"] << ", " << orb["hyperplanes"]
      << " hyperplanes\n";
  t << "parameters:";
  for (const auto& p : j["parameters"]) t << " " << p.get<std::string>();
  t << "\nstratum orbits: " << j["strata"].size() << "\n";
  for (const auto& s : j["strata"])
    t << "  " << s["id"].get<std::string>() << "  codim " << s["codim"] << "  type "
      << (s["type"].get<std::string>().empty() ? "?" : s["type"].get<std::string>()) << "  |W_S| = "
      << s["parabolic_order"] << "  orbit size " << s["orbit_size"] << "\n";
  if (j.contains("gr1n_dictionary")) {
    const auto& d = j["gr1n_dictionary"];
    t << "G(r,1,n) dictionary (" << d["native"].get<std::string>() << "):\n";
    if (d.contains("q")) t << "  q -> " << d["q"].get<std::string>() << "\n";
    if (d.contains("Q"))
      for (std::size_t k = 0; k < d["Q"].size(); ++k) t << "  Q" << k << " -> " << d["Q"][k].get<std::string>() << "\n";
    for (const auto& [k, v] : d["coordinates"].items()) t << "  c_" << k << " = " << v.get<std::string>() << "\n";
  }
  print(o, j, t.str());
}

void cmd_schur(const Options& o) {
  Handles h;
  open_handles(o, h);
  char* s = nullptr;
  check(chd_schur(h.group, h.table, o.method.c_str(), o.unity_bound, &s));
  Json j = Json::parse(take(s));
  print(o, j, schur_line(j) + "\n");
}

void cmd_qindex(const Options& o) {
  Handles h;
  open_handles(o, h);
  char* s = nullptr;
  check(chd_qindex(h.group, h.table, o.stratum.empty() ? nullptr : o.stratum.c_str(), o.unity_bound, &s));
  Json j = Json::parse(take(s));
  std::ostringstream t;
  for (const auto& e : j["qindices"])
    t << e["stratum"].get<std::string>() << "  " << (e["type"].get<std::string>().empty() ? "?" : e["type"].get<std::string>())
      << "  " << schur_line(e) << "  [" << e["source"].get<std::string>() << "]\n";
  print(o, j, t.str());
}

std::string support_text(const Json& j) {
  std::ostringstream t;
  for (const auto& s : j["strata"]) {
    t << s["id"].get<std::string>() << "  " << (s["type"].get<std::string>().empty() ? "?" : s["type"].get<std::string>())
      << "  ";
    if (j["route"] == "exponential")
      t << (s["in_support"].get<bool>() ? "not excluded up to degree " + std::to_string(j["degree"].get<int>())
                                        : std::string("excluded (certified)"));
    else
      t << (s["in_support"].get<bool>() ? "in support" : "excluded");
    t << "\n";
    if (s.contains("witnesses"))
      for (const auto& w : s["witnesses"])
        t << "    vanishing factor on " << w["hyperplane"].get<std::string>() << ": " << w["positivity"].get<std::string>()
          << "\n";
  }
  for (const auto& w : j["warnings"]) t << "warning: " << w.get<std::string>() << "\n";
  t << "finite dimensional: " << (j["finite_dimensional"].get<bool>() ? "true" : "false") << "\n";
  return t.str();
}

void cmd_support(const Options& o) {
  Handles h;
  open_handles(o, h);
  std::string p = params_json(o);
  if (o.route != "schur" && o.route != "exponential" && o.route != "both") {
    std::cerr << "error: --route must be schur, exponential or both\n";
    throw Failure{CHD_ERR_INVALID};
  }
  Json out = Json::array();
  std::string text;
  if (o.route != "exponential") {
    char* s = nullptr;
    check(chd_support(h.group, h.table, p.c_str(), o.unity_bound, &s));
    out.push_back(Json::parse(take(s)));
    text += support_text(out.back());
  }
  if (o.route != "schur") {
    char* s = nullptr;
    check(chd_support_exponential(h.group, p.c_str(), o.degree, o.seed, &s));
    out.push_back(Json::parse(take(s)));
    if (!text.empty()) text += "-- exponential route --\n";
    text += support_text(out.back());
  }
  print(o, out.size() == 1 ? out[0] : out, text);
}

void cmd_finite_dim(const Options& o) {
  Handles h;
  open_handles(o, h);
  std::string p = params_json(o);
  char* s = nullptr;
  int result = 0;
  check(chd_finite_dim(h.group, h.table, p.c_str(), o.unity_bound, &result, &s));
  Json j = Json::parse(take(s));
  std::string text = result ? "true\n" : "false\n";
  if (j.contains("gr1n_criterion"))
    text += std::string("closed criterion: ") + (j["gr1n_criterion"].get<bool>() ? "true" : "false") + "\n";
  print(o, j, text);
}

void cmd_criterion(const Options& o) {
  if (o.gr1n.empty()) {
    std::cerr << "error: --gr1n is required\n";
    throw Failure{CHD_ERR_INVALID};
  }
  std::string p = params_json(o);
  int result = 0;
  check(chd_gr1n_criterion(o.r, o.n, p.c_str(), &result));
  print(o, Json{{"r", o.r}, {"n", o.n}, {"finite_dimensional", result == 1}}, result ? "true\n" : "false\n");
}

void cmd_wexp(const Options& o) {
  Handles h;
  open_handles(o, h);
  std::string lam = lambda_json(o);
  std::string p = (o.c.empty() && o.gr1n.empty()) ? "" : params_json(o);
  char* s = nullptr;
  check(chd_wexp(h.group, lam.empty() ? nullptr : lam.c_str(), p.empty() ? nullptr : p.c_str(), o.degree, o.seed, &s));
  Json j = Json::parse(take(s));
  std::ostringstream t;
  t << "lambda:";
  for (const auto& v : j["lambda"]) t << " " << v.dump();
  t << "\n";
  if (j["mode"] == "symbolic") {
    for (const auto& c : j["components"]) {
      t << "g_" << c["degree"] << " = (" << c["numerator"].get<std::string>() << ") / ("
        << c["denominator"].get<std::string>() << ")";
      if (c.contains("step_factor") && !c["step_factor"].is_null())
        t << "   step factor " << c["step_factor"].get<std::string>();
      t << "\n";
    }
    t << "singular hyperplanes " << j["scope"].get<std::string>() << ":";
    if (j["singular_hyperplanes"].empty()) t << " none";
    for (const auto& s2 : j["singular_hyperplanes"]) t << "\n  " << s2.get<std::string>();
    t << "\n";
    for (const auto& u : j["unfactored"]) t << "unfactored denominator: " << u.get<std::string>() << "\n";
  } else {
    for (const auto& c : j["components"]) t << "g_" << c["degree"] << " = " << c["poly"].get<std::string>() << "\n";
    t << "status " << j["scope"].get<std::string>() << ": " << j["status"].get<std::string>();
    if (j.contains("status_degree")) t << " at degree " << j["status_degree"];
    t << "\n";
  }
  print(o, j, t.str());
}

void cmd_table(const Options& o) {
  if (o.schur_table.empty()) {
    std::cerr << "error: --schur-table is required\n";
    throw Failure{CHD_ERR_INVALID};
  }
  chd_table* t = nullptr;
  check(chd_table_load(o.schur_table.c_str(), &t));
  char* s = nullptr;
  int st = chd_table_serialize(t, &s);
  chd_table_free(t);
  check(st);
  std::cout << take(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Support of spherical representations of rational Cherednik algebras"};
  app.require_subcommand(1);
  Options o;
  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "group spec (h3, b2, i2:5, grpn:r,p,n, cyclic:n, JSON or a file)");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--unity-bound", o.unity_bound, "largest root-of-unity order searched in factorizations")
        ->check(CLI::PositiveNumber);
    c->add_option("--schur-table", o.schur_table, "Schur element table file");
    c->add_option("--seed", o.seed, "seed for random choices");
  };
  auto add_params = [&](CLI::App* c) {
    c->add_option("--c", o.c, "parameters: 1/2, x1=1/2,y1=1/3 or JSON");
    c->add_option("--gr1n", o.gr1n, "G(r,1,n) parameters \"c0;d0,d1,...\" or JSON");
  };

  auto* describe = app.add_subcommand("describe", "group order, hyperplane orbits, strata, parameters");
  add_group(describe);
  auto* schur = app.add_subcommand("schur", "principal Schur element");
  add_group(schur);
  schur->add_option("--method", o.method, "auto, poincare, trace or table")
      ->check(CLI::IsMember({"auto", "poincare", "trace", "table"}));
  auto* qindex = app.add_subcommand("qindex", "q-indices |W:W_S|_q of the strata");
  add_group(qindex);
  qindex->add_option("--stratum", o.stratum, "stratum id or type (default: all)");
  auto* support = app.add_subcommand("support", "strata in the support of L_c(1)");
  add_group(support);
  add_params(support);
  support->add_option("--route", o.route, "schur, exponential or both");
  support->add_option("--degree", o.degree, "degree bound for the exponential route")->check(CLI::PositiveNumber);
  auto* fd = app.add_subcommand("finite-dim", "is L_c(1) finite dimensional");
  add_group(fd);
  add_params(fd);
  auto* crit = app.add_subcommand("gr1n-criterion", "closed finite-dimensionality criterion for G(r,1,n)");
  crit->add_option("--r", o.r, "r")->required();
  crit->add_option("--n", o.n, "n")->required();
  crit->add_option("--gr1n", o.gr1n, "parameters \"c0;d0,d1,...\" or JSON");
  crit->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  auto* wexp = app.add_subcommand("wexp", "W-exponential series up to a degree");
  add_group(wexp);
  add_params(wexp);
  wexp->add_option("--degree", o.degree, "degree bound")->check(CLI::PositiveNumber);
  wexp->add_option("--lambda", o.lambda, "eigenvalue covector, e.g. 1,1/3 or a JSON array");
  auto* table = app.add_subcommand("table", "parse and re-serialize a Schur table");
  table->add_option("--schur-table", o.schur_table, "table file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : CHD_ERR_INVALID;
  }

  try {
    if (*describe) cmd_describe(o);
    else if (*schur) cmd_schur(o);
    else if (*qindex) cmd_qindex(o);
    else if (*support) cmd_support(o);
    else if (*fd) cmd_finite_dim(o);
    else if (*crit) cmd_criterion(o);
    else if (*wexp) cmd_wexp(o);
    else if (*table) cmd_table(o);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return CHD_ERR_INVALID;
  }
  return 0;
}
