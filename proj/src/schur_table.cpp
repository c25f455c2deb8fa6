#include "cherednik/schur_table.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cherednik {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// names inside every "( ... )" of a factor list
std::set<std::string> monomial_vars(const std::string& text) {
  std::set<std::string> out;
  std::size_t i = 0;
  while ((i = text.find('(', i)) != std::string::npos) {
    auto close = text.find(')', i);
    if (close == std::string::npos) break;
    std::string m = text.substr(i + 1, close - i - 1);
    std::string name;
    bool in_exp = false;
    for (char c : m + "*") {
      if (c == '*') {
        if (!name.empty()) out.insert(name);
        name.clear();
        in_exp = false;
      } else if (c == '^') {
        in_exp = true;
      } else if (!in_exp && !std::isspace(static_cast<unsigned char>(c))) {
        name.push_back(c);
      }
    }
    i = close + 1;
  }
  return out;
}

}  // namespace

std::string shephard_todd_alias(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"H3", "G23"}, {"F4", "G28"}, {"H4", "G30"}, {"E6", "G35"}, {"E7", "G36"}, {"E8", "G37"}};
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

SchurTable SchurTable::parse(const std::string& text) {
  SchurTable t;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::string> factor_text;
  std::map<std::string, std::set<std::string>> names;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') {
      t.lines_.push_back({raw, -1});
      continue;
    }
    auto p1 = s.find('|');
    auto p2 = p1 == std::string::npos ? p1 : s.find('|', p1 + 1);
    if (p2 == std::string::npos)
      throw InvalidInput("schur table line " + std::to_string(lineno) + ": expected 'group | parabolic | factors'");
    SchurTableRow row;
    row.group = trim(s.substr(0, p1));
    row.parabolic = trim(s.substr(p1 + 1, p2 - p1 - 1));
    row.line = lineno;
    if (row.group.empty() || row.parabolic.empty())
      throw InvalidInput("schur table line " + std::to_string(lineno) + ": empty group or parabolic");
    std::string f = trim(s.substr(p2 + 1));
    auto vs = monomial_vars(f);
    names[row.group].insert(vs.begin(), vs.end());
    factor_text.push_back(f);
    t.lines_.push_back({raw, static_cast<int>(t.rows_.size())});
    t.rows_.push_back(std::move(row));
  }
  for (auto& [g, set] : names) t.vars_[g] = std::vector<std::string>(set.begin(), set.end());
  for (std::size_t i = 0; i < t.rows_.size(); ++i) {
    try {
      t.rows_[i].groups = parse_groups(factor_text[i], t.vars_[t.rows_[i].group]);
    } catch (const InvalidInput& e) {
      throw InvalidInput("schur table line " + std::to_string(t.rows_[i].line) + ": " + e.what());
    }
  }
  return t;
}

SchurTable SchurTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read schur table " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::vector<std::string> SchurTable::vars(const std::string& group) const {
  auto it = vars_.find(group);
  return it == vars_.end() ? std::vector<std::string>{} : it->second;
}

const SchurTableRow* SchurTable::find(const std::string& group, const std::string& parabolic) const {
  for (const auto& r : rows_)
    if (r.group == group && r.parabolic == parabolic) return &r;
  return nullptr;
}

SchurElement SchurTable::element(const SchurTableRow& row) const {
  return schur_from_factors(vars(row.group), ungroup_labels(row.groups), SchurSource::Table);
}

std::string SchurTable::serialize() const {
  std::ostringstream os;
  for (const auto& l : lines_) {
    if (l.row < 0) {
      os << l.text << '\n';
      continue;
    }
    const auto& r = rows_[l.row];
    os << r.group << " | " << r.parabolic << " | " << format_groups(r.groups, vars(r.group)) << '\n';
  }
  return os.str();
}

std::optional<SchurElement> SchurTable::lookup(const ReflectionGroup& g, const Stratum& s) const {
  const std::string& name = g.spec().name;
  for (const std::string& gid : {name, shephard_todd_alias(name)}) {
    const SchurTableRow* row = find(gid, s.id);
    if (!row && !s.type.empty()) row = find(gid, s.type);
    if (!row) continue;
    auto target = param_vars(g);
    for (const auto& v : vars(gid))
      if (std::find(target.begin(), target.end(), v) == target.end())
        throw InvalidInput("schur table variable " + v + " is not a parameter of " + name);
    auto e = element(*row);
    std::vector<CycloFactor> fs;
    auto src = vars(gid);
    for (auto f : e.factorization.factors) {
      Exponent m(target.size(), 0);
      for (std::size_t i = 0; i < src.size(); ++i)
        m[std::find(target.begin(), target.end(), src[i]) - target.begin()] = f.monomial[i];
      f.monomial = std::move(m);
      fs.push_back(orient_factor(f));
    }
    return schur_from_factors(target, fs, SchurSource::Table);
  }
  return std::nullopt;
}

}  // namespace cherednik
