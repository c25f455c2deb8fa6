#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/hecke.hpp"

namespace cherednik {

/// One row "G23 | A2 | Phi2^2 Phi5 Phi6 Phi10 (x1)". The parabolic column is
/// a type name ("1" for the trivial parabolic, i.e. the principal Schur
/// element) or a stratum id such as "S3".
struct SchurTableRow {
  std::string group;
  std::string parabolic;
  std::vector<LabelGroup> groups;
  int line = 0;
};

class SchurTable {
 public:
  static SchurTable parse(const std::string& text);
  static SchurTable load(const std::string& path);

  const std::vector<SchurTableRow>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  /// Variables appearing in any row of the group, sorted.
  std::vector<std::string> vars(const std::string& group) const;
  const SchurTableRow* find(const std::string& group, const std::string& parabolic) const;
  SchurElement element(const SchurTableRow& row) const;
  /// Comments and blank lines are kept verbatim; rows are re-emitted from
  /// their parsed factors.
  std::string serialize() const;

  /// Row for a stratum of a built group, in that group's variables.
  std::optional<SchurElement> lookup(const ReflectionGroup& g, const Stratum& s) const;

 private:
  struct Line {
    std::string text;
    int row = -1;
  };
  std::vector<Line> lines_;
  std::vector<SchurTableRow> rows_;
  std::map<std::string, std::vector<std::string>> vars_;
};

/// Shephard-Todd name for the Coxeter groups that have one ("H3" -> "G23").
std::string shephard_todd_alias(const std::string& name);

}  // namespace cherednik
