#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "horncone/combinatorics.hpp"
#include "horncone/horn_classical.hpp"
#include "horncone/horn_pq.hpp"
#include "horncone/numeric.hpp"
#include "horncone/polyhedra.hpp"
#include "horncone/schubert.hpp"

namespace horncone::io {

using nlohmann::json;

json to_json(const Partition& lambda);
Partition partition_from_json(const json& j);

json to_json(const GLWeight& lambda);
GLWeight weight_from_json(const json& j);

/// {"n":4,"elements":[1,3]}
json to_json(const Subset& I);
Subset subset_from_json(const json& j);

/// Integers that fit in 64 bits become numbers, larger ones strings.
json to_json(const Integer& x);
/// "num/den"
json to_json(const Rational& x);
/// Numbers or "n", "n/d" strings.
Rational rational_from_json(const json& j);

json to_json(const Spectrum& x);
Spectrum spectrum_from_json(const json& j);

/// Map from "[2,1]" (or "[[2,1],[1]]" in a tensor ring) to the coefficient.
json to_json(const CohomologyClass& x);

json to_json(const InequalitySpec& spec, int p, int q);
InequalitySpec inequality_from_json(const json& j, int p, int q);

json to_json(const ClassicalInequality& ineq);
json to_json(const HornTripleTable& table);

/// [{"coeffs":[...],"sense":"le","rhs":"0/1"}, ...]
json to_json(const RationalSystem& sys);

/// One CSV line per inequality after a header line; integral coefficients
/// are written without a denominator.
std::string to_csv(const std::vector<InequalitySpec>& specs, int p, int q);

/// Splits whitespace-separated bracketed values such as "[2,1] [1]".
std::vector<json> parse_inline_values(const std::string& text);
/// Splits an inline triple such as "[[1],[0]] [[1],[0]] [[2],[0]]" (or
/// "[1,0] [1,0] [1,1]") into its three JSON values.
std::vector<json> parse_inline_triple(const std::string& text);

}  // namespace horncone::io
