#include "horncone/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace horncone::io {

json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const GLWeight& lambda) { return lambda.parts(); }

GLWeight weight_from_json(const json& j) { return GLWeight(j.get<std::vector<int>>()); }

json to_json(const Subset& I) { return {{"n", I.ambient()}, {"elements", I.elements()}}; }

Subset subset_from_json(const json& j) { return Subset(j.at("n").get<int>(), j.at("elements").get<std::vector<int>>()); }

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"n/d\" string, got " + j.dump());
}

json to_json(const Spectrum& x) {
  json out = json::array();
  for (const auto& v : x.values()) out.push_back(to_json(v));
  return out;
}

Spectrum spectrum_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals, got " + j.dump());
  std::vector<Rational> values;
  for (const auto& v : j) values.push_back(rational_from_json(v));
  return Spectrum(std::move(values));
}

json to_json(const CohomologyClass& x) {
  json out = json::object();
  for (const auto& [key, c] : x.terms()) {
    json k;
    if (key.size() == 1) {
      k = to_json(key[0]);
    } else {
      k = json::array();
      for (const auto& lambda : key) k.push_back(to_json(lambda));
    }
    out[k.dump()] = to_json(c);
  }
  return out;
}

namespace {

json pair_to_json(const SubsetPair& X) { return {{"Ip", X.first.elements()}, {"Is", X.second.elements()}}; }

SubsetPair pair_from_json(const json& j, int p, int q) {
  return {Subset(p, j.at("Ip").get<std::vector<int>>()), Subset(q, j.at("Is").get<std::vector<int>>())};
}

}  // namespace

json to_json(const InequalitySpec& spec, int p, int q) {
  json coeffs = json::object();
  const char* names[] = {"A", "B", "C"};
  for (int b = 0; b < 3; ++b) {
    json block = json::array();
    for (int i = 0; i < p + q; ++i) block.push_back(to_json(spec.coeffs(b * (p + q) + i)));
    coeffs[names[b]] = block;
  }
  return {{"family", to_string(spec.family)},
          {"r", spec.r},
          {"s", spec.s},
          {"I", pair_to_json(spec.I)},
          {"J", pair_to_json(spec.J)},
          {"K", pair_to_json(spec.K)},
          {"sense", to_string(spec.sense)},
          {"coeffs", coeffs}};
}

InequalitySpec inequality_from_json(const json& j, int p, int q) {
  InequalitySpec spec;
  spec.family = parse_family(j.at("family").get<std::string>());
  spec.r = j.at("r").get<int>();
  spec.s = j.at("s").get<int>();
  spec.I = pair_from_json(j.at("I"), p, q);
  spec.J = pair_from_json(j.at("J"), p, q);
  spec.K = pair_from_json(j.at("K"), p, q);
  spec.sense = parse_sense(j.at("sense").get<std::string>());
  spec.coeffs = RationalVector::Zero(3 * (p + q));
  const char* names[] = {"A", "B", "C"};
  for (int b = 0; b < 3; ++b) {
    const auto& block = j.at("coeffs").at(names[b]);
    if (block.size() != static_cast<std::size_t>(p + q)) throw std::invalid_argument("coefficient block has the wrong length");
    for (int i = 0; i < p + q; ++i) spec.coeffs(b * (p + q) + i) = rational_from_json(block.at(static_cast<std::size_t>(i)));
  }
  return spec;
}

json to_json(const ClassicalInequality& ineq) {
  return {{"r", ineq.r}, {"I", ineq.I.elements()}, {"J", ineq.J.elements()}, {"K", ineq.K.elements()},
          {"kind", ineq.r == 0 ? "trace-equality" : "le"}};
}

json to_json(const HornTripleTable& table) {
  json triples = json::array();
  for (const auto& t : table.triples) triples.push_back({t.I.elements(), t.J.elements(), t.K.elements()});
  return {{"n", table.n}, {"r", table.r}, {"triples", triples}};
}

json to_json(const RationalSystem& sys) {
  json rows = json::array();
  for (const auto& row : sys.rows) {
    json coeffs = json::array();
    for (const auto& c : row.coeffs) coeffs.push_back(to_json(c));
    rows.push_back({{"coeffs", coeffs}, {"sense", to_string(row.sense)}, {"rhs", to_json(row.rhs)}});
  }
  return rows;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string plain(const Rational& x) { return denominator(x) == 1 ? numerator(x).str() : to_string(x); }

}  // namespace

std::string to_csv(const std::vector<InequalitySpec>& specs, int p, int q) {
  std::ostringstream out;
  out << "family,r,s,I',I'',J',J'',K',K'',sense";
  for (const char* block : {"a", "b", "c"})
    for (int i = 1; i <= p + q; ++i) out << ',' << block << i;
  out << '\n';
  for (const auto& spec : specs) {
    out << to_string(spec.family) << ',' << spec.r << ',' << spec.s;
    for (const auto* X : {&spec.I, &spec.J, &spec.K}) out << ',' << join(X->first.elements()) << ',' << join(X->second.elements());
    out << ',' << to_string(spec.sense);
    for (const auto& c : spec.coeffs) out << ',' << plain(c);
    out << '\n';
  }
  return out.str();
}

std::vector<json> parse_inline_values(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in: " + text);
    if (depth == 0 && (std::isspace(static_cast<unsigned char>(ch)) || ch == ',')) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    current += ch;
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in: " + text);
  if (!current.empty()) tokens.push_back(std::move(current));
  std::vector<json> out;
  for (const auto& t : tokens) {
    try {
      out.push_back(json::parse(t));
    } catch (const json::parse_error&) {
      throw std::invalid_argument("malformed value: " + t);
    }
  }
  return out;
}

std::vector<json> parse_inline_triple(const std::string& text) {
  auto values = parse_inline_values(text);
  if (values.size() != 3) throw std::invalid_argument("expected three bracketed values, got " + std::to_string(values.size()));
  return values;
}

}  // namespace horncone::io
