#include "horncone/polyhedra.hpp"

namespace horncone {

std::string to_string(Sense sense) {
  switch (sense) {
    case Sense::le:
      return "le";
    case Sense::ge:
      return "ge";
    case Sense::eq:
      return "eq";
  }
  return "?";
}

Sense parse_sense(const std::string& text) {
  if (text == "le") return Sense::le;
  if (text == "ge") return Sense::ge;
  if (text == "eq") return Sense::eq;
  throw std::invalid_argument("unknown sense '" + text + "' (expected le, ge or eq)");
}

RationalConstraint normalize(const RationalConstraint& row) {
  const Eigen::Index d = row.coeffs.size();
  RationalVector full(d + 1);
  full.head(d) = row.coeffs;
  full(d) = row.rhs;
  if (row.sense == Sense::ge) full = -full;
  full = primitive(full);
  if (row.sense == Sense::eq) {
    for (Eigen::Index i = 0; i <= d; ++i)
      if (full(i) != 0) {
        if (full(i) < 0) full = -full;
        break;
      }
  }
  return {full.head(d), row.sense == Sense::eq ? Sense::eq : Sense::le, full(d)};
}

RationalSystem normalize(const RationalSystem& sys) {
  RationalSystem out{sys.dimension, {}};
  for (const auto& row : sys.rows) out.add(normalize(row));
  return out;
}

FilterResult filter_redundant(const RationalSystem& sys, const RationalSystem& context) {
  if (context.dimension != sys.dimension) throw std::domain_error("filter_redundant: context has the wrong dimension");
  FilterResult result;
  result.system.dimension = sys.dimension;
  std::vector<bool> alive(sys.rows.size(), true);

  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    if (sys.rows[i].sense == Sense::eq) continue;
    RationalSystem rest = context;
    for (std::size_t j = 0; j < sys.rows.size(); ++j)
      if (j != i && alive[j]) rest.add(sys.rows[j]);
    const RationalConstraint row = normalize(sys.rows[i]);
    const auto lp = lp_optimize(row.coeffs, rest);
    if (lp.status == LpStatus::infeasible) {
      result.issues.push_back({i, "the remaining system is infeasible"});
    } else if (lp.status == LpStatus::optimal && lp.value <= row.rhs) {
      alive[i] = false;
    }
  }
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    if (alive[i]) {
      result.kept.push_back(i);
      result.system.rows.push_back(sys.rows[i]);
    } else {
      result.removed.push_back(i);
    }
  }
  return result;
}

FilterResult filter_redundant(const RationalSystem& sys) { return filter_redundant(sys, {sys.dimension, {}}); }

}  // namespace horncone
