#include "horncone/sweep.hpp"

#include <functional>

#include "horncone/horn_classical.hpp"
#include "horncone/parallel.hpp"

namespace horncone {

std::vector<GLWeight> weights_in_range(int n, int lo, int hi) {
  std::vector<GLWeight> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
  return out;
}

std::vector<WeightPair> weight_pairs_in_range(int p, int q, int lo, int hi) {
  std::vector<WeightPair> out;
  const auto first = weights_in_range(p, lo, hi);
  const auto second = weights_in_range(q, lo, hi);
  for (const auto& a : first)
    for (const auto& b : second) out.push_back({a, b});
  return out;
}

namespace {

std::vector<GLWeight> split(const WeightTriple& t) {
  return {t.a.first, t.a.second, t.b.first, t.b.second, t.c.first, t.c.second};
}

SweepReport collect(std::vector<std::pair<bool, std::vector<SweepMismatch>>> results) {
  SweepReport report;
  report.checked = results.size();
  for (auto& [member, mismatches] : results) {
    if (member) ++report.members;
    for (auto& m : mismatches) report.mismatches.push_back(std::move(m));
  }
  return report;
}

}  // namespace

SweepReport sweep_pq(int p, int q, int bound, SweepRoute route, int jobs) {
  const auto pairs = weight_pairs_in_range(p, q, -bound, bound);
  const std::size_t k = pairs.size();
  generate_inequalities(p, q, jobs);
  if (route == SweepRoute::theta) generate_s_inequalities(p, q, jobs);
  auto results = parallel_map(k * k * k, jobs, [&](std::size_t idx) {
    const WeightTriple t{pairs[idx / (k * k)], pairs[(idx / k) % k], pairs[idx % k]};
    std::vector<SweepMismatch> mismatches;
    const bool semigroup = horn_pq_semigroup(t.a, t.b, t.c, p, q).has_value();
    if (route == SweepRoute::cone) {
      const bool cone = horn_pq_cone(SpectrumPair::from_weights(t.a), SpectrumPair::from_weights(t.b),
                                     SpectrumPair::from_weights(t.c), p, q)
                            .member;
      if (cone != semigroup) mismatches.push_back({"horn_pq_cone vs horn_pq_semigroup", split(t)});
    } else {
      const WeightTriple s = theta(t);
      if (semigroup != s_pq_semigroup(s.a, s.b, s.c, p, q).has_value())
        mismatches.push_back({"horn_pq_semigroup vs s_pq_semigroup after theta", split(t)});
      const auto sa = SpectrumPair::from_weights(s.a), sb = SpectrumPair::from_weights(s.b),
                 sc = SpectrumPair::from_weights(s.c);
      const bool cone = horn_pq_cone(SpectrumPair::from_weights(t.a), SpectrumPair::from_weights(t.b),
                                     SpectrumPair::from_weights(t.c), p, q)
                            .member;
      if (cone != s_pq_cone(sa, sb, sc, p, q).member)
        mismatches.push_back({"horn_pq_cone vs s_pq_cone after theta", split(t)});
    }
    return std::pair{semigroup, std::move(mismatches)};
  });
  return collect(std::move(results));
}

SweepReport sweep_n(int n, int bound, int jobs) {
  const auto weights = weights_in_range(n, 0, bound);
  const std::size_t k = weights.size();
  for (int r = 1; r < n; ++r) horn_triple_table(n, r, {}, jobs);
  auto results = parallel_map(k * k * k, jobs, [&](std::size_t idx) {
    const GLWeight& a = weights[idx / (k * k)];
    const GLWeight& b = weights[(idx / k) % k];
    const GLWeight& c = weights[idx % k];
    std::vector<SweepMismatch> mismatches;
    const bool semigroup = horn_n_semigroup(a, b, c, n);
    const bool cone =
        horn_n_cone(Spectrum::from_weight(a), Spectrum::from_weight(b), Spectrum::from_weight(c), n).member;
    if (cone != semigroup) mismatches.push_back({"horn_n_cone vs horn_n_semigroup", {a, b, c}});
    return std::pair{semigroup, std::move(mismatches)};
  });
  return collect(std::move(results));
}

}  // namespace horncone
