#pragma once

#include <json.hpp>

#include "cherednik/support.hpp"

namespace cherednik {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings ("3" for integers); CycloNum is
// {"order": N, "coeffs": [...]}, coefficients of 1, zeta_N, ... (phi(N) of
// them on output; up to N accepted on input).

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const CycloNum& c);
CycloNum cyclo_from_json(const Json& j);

/// {"vars": [...], "terms": [{"exp": [...], "coeff": cyclo}, ...], "text": "..."}
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"monomial": [...], "root": cyclo, "angle": "k/n", "multiplicity": m}
Json to_json(const CycloFactor& f);
CycloFactor factor_from_json(const Json& j);

/// {"vars", "text", "source", "unit": {"monomial", "scalar"}, "factors", "groups", "remainder", "poly"}
Json to_json(const SchurElement& s);
SchurElement schur_from_json(const Json& j);

Json to_json(const ParamPoint& p);
ParamPoint param_point_from_json(const Json& j);

Json to_json(const Witness& w, const std::vector<std::string>& vars);
Witness witness_from_json(const Json& j);

/// Strata are named by id; "route" is "schur" or "exponential".
Json to_json(const SupportResult& r, const StrataData& strata, const std::vector<std::string>& vars,
             const std::string& route);
SupportResult support_from_json(const Json& j, const StrataData& strata);

/// Accepts {"c": {"x.1": "1/2", ...}}, {"c": "1/2"} (all coordinates equal)
/// or {"gr1n": {"c0": "1/3", "d": ["0", "0"]}}.
ParamPoint parse_params(const ReflectionGroup& g, const Json& j);

}  // namespace cherednik
