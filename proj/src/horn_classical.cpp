#include "horncone/horn_classical.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "horncone/lr.hpp"
#include "horncone/parallel.hpp"

namespace horncone {

Spectrum::Spectrum(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i - 1] < values_[i]) throw std::domain_error("spectrum must be weakly decreasing");
}

Spectrum Spectrum::from_weight(const GLWeight& lambda) {
  std::vector<Rational> values;
  for (int x : lambda.parts()) values.emplace_back(x);
  return Spectrum(std::move(values));
}

Rational Spectrum::total() const {
  Rational sum = 0;
  for (const auto& x : values_) sum += x;
  return sum;
}

Rational Spectrum::partial_sum(const Subset& I) const {
  if (I.ambient() != size()) throw std::domain_error("subset ambient does not match spectrum length");
  Rational sum = 0;
  for (int i : I.elements()) sum += values_[static_cast<std::size_t>(i - 1)];
  return sum;
}

Spectrum scale(const Spectrum& x, const Rational& t) {
  if (t < 0) throw std::domain_error("scale: negative factor breaks the ordering");
  std::vector<Rational> values;
  for (const auto& v : x.values()) values.push_back(t * v);
  return Spectrum(std::move(values));
}

CacheConfig CacheConfig::from_environment() {
  CacheConfig config;
  if (const char* env = std::getenv("HORNCONE_CACHE"); env && *env) config.directory = env;
  config.enabled = true;
  return config;
}

bool horn_n_semigroup(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu, int n) {
  return gl_multiplicity(nu, lambda, mu, n) != 0;
}

namespace {

using nlohmann::json;

ConcurrentMemo<std::pair<int, int>, std::shared_ptr<const HornTripleTable>>& table_memo() {
  static ConcurrentMemo<std::pair<int, int>, std::shared_ptr<const HornTripleTable>> memo;
  return memo;
}

std::filesystem::path table_path(const CacheConfig& cache, int n, int r) {
  return cache.directory / ("horn-n" + std::to_string(n) + "-r" + std::to_string(r) + ".json");
}

json table_to_json(const HornTripleTable& table) {
  json triples = json::array();
  for (const auto& t : table.triples) triples.push_back({t.I.elements(), t.J.elements(), t.K.elements()});
  return {{"n", table.n}, {"r", table.r}, {"triples", triples}};
}

std::optional<HornTripleTable> read_table(const std::filesystem::path& path, int n, int r) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const json doc = json::parse(in);
    if (doc.at("n").get<int>() != n || doc.at("r").get<int>() != r) return std::nullopt;
    HornTripleTable table{n, r, {}};
    for (const auto& t : doc.at("triples")) {
      auto subset = [&](const json& j) {
        Subset s(n, j.get<std::vector<int>>());
        if (s.cardinality() != r) throw std::domain_error("bad cardinality");
        return s;
      };
      table.triples.push_back({subset(t.at(0)), subset(t.at(1)), subset(t.at(2))});
    }
    return table;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void write_table(const std::filesystem::path& path, const HornTripleTable& table) {
  std::filesystem::create_directories(path.parent_path());
  std::random_device rd;
  const auto tmp = path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << table_to_json(table).dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

HornTripleTable compute_table(int n, int r, int jobs) {
  const auto subsets = enumerate_subsets(n, r);
  const std::size_t k = subsets.size();
  std::vector<GLWeight> weights;
  for (const auto& s : subsets) weights.push_back(GLWeight::from_partition(lambda_of_subset(s), r));
  auto flags = parallel_map(k * k * k, jobs, [&](std::size_t idx) {
    return horn_n_semigroup(weights[idx / (k * k)], weights[(idx / k) % k], weights[idx % k], r);
  });
  HornTripleTable table{n, r, {}};
  for (std::size_t idx = 0; idx < flags.size(); ++idx)
    if (flags[idx]) table.triples.push_back({subsets[idx / (k * k)], subsets[(idx / k) % k], subsets[idx % k]});
  return table;
}

}  // namespace

HornTripleTable horn_triple_table(int n, int r, const CacheConfig& cache, int jobs) {
  if (r < 1 || r > n - 1)
    throw std::domain_error("horn_triple_table: need 1 <= r <= n-1, got n=" + std::to_string(n) + ", r=" +
                            std::to_string(r));
  const auto path = table_path(cache, n, r);
  auto cached = table_memo().find({n, r});
  bool stale = cache.enabled && !std::filesystem::exists(path);
  if (!cached) {
    std::optional<HornTripleTable> table;
    if (cache.enabled && !stale) {
      table = read_table(path, n, r);
      stale = !table;
    }
    if (!table) table = compute_table(n, r, jobs);
    cached = table_memo().insert({n, r}, std::make_shared<const HornTripleTable>(std::move(*table)));
  }
  if (stale) write_table(path, **cached);
  return **cached;
}

namespace {

bool in_horn_r(const Subset& I, const Subset& J, const Subset& K, int r) {
  auto spectrum = [&](const Subset& X) { return Spectrum::from_weight(GLWeight::from_partition(lambda_of_subset(X), r)); };
  return horn_n_cone(spectrum(I), spectrum(J), spectrum(K), r, true).member;
}

}  // namespace

ClassicalVerdict horn_n_cone(const Spectrum& A, const Spectrum& B, const Spectrum& C, int n, bool recursive) {
  if (n < 1) throw std::domain_error("horn_n_cone: n must be >= 1");
  if (A.size() != n || B.size() != n || C.size() != n)
    throw std::domain_error("horn_n_cone: spectra must have length " + std::to_string(n));

  const Subset all(n, [&] {
    std::vector<int> e;
    for (int i = 1; i <= n; ++i) e.push_back(i);
    return e;
  }());
  if (A.total() + B.total() != C.total()) return {false, ClassicalInequality{0, all, all, all}};

  for (int r = 1; r < n; ++r) {
    std::vector<SubsetTriple> triples;
    if (recursive) {
      const auto subsets = enumerate_subsets(n, r);
      for (const auto& I : subsets)
        for (const auto& J : subsets)
          for (const auto& K : subsets)
            if (in_horn_r(I, J, K, r)) triples.push_back({I, J, K});
    } else {
      triples = horn_triple_table(n, r).triples;
    }
    for (const auto& t : triples)
      if (A.partial_sum(t.I) + B.partial_sum(t.J) > C.partial_sum(t.K))
        return {false, ClassicalInequality{r, t.I, t.J, t.K}};
  }
  return {};
}

}  // namespace horncone
