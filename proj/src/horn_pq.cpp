#include "horncone/horn_pq.hpp"

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>

#include "horncone/lr.hpp"
#include "horncone/parallel.hpp"
#include "horncone/schubert.hpp"

namespace horncone {

namespace {

void require_pq(int p, int q, const char* what) {
  if (!(p >= q && q >= 1))
    throw std::domain_error(std::string(what) + ": need p >= q >= 1, got p=" + std::to_string(p) +
                            ", q=" + std::to_string(q));
}

void require_ranks(const WeightPair& w, int p, int q, const char* what) {
  if (w.first.rank() != p || w.second.rank() != q)
    throw std::domain_error(std::string(what) + ": weights must have ranks (" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
}

void require_shape(const SpectrumPair& x, int p, int q, const char* what) {
  if (x.first.size() != p || x.second.size() != q)
    throw std::domain_error(std::string(what) + ": spectra must have lengths (" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
}

Spectrum dual_spectrum(const Spectrum& x) {
  std::vector<Rational> values(x.values().rbegin(), x.values().rend());
  for (auto& v : values) v = -v;
  return Spectrum(std::move(values));
}

Subset full_subset(int n) {
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) e.push_back(i);
  return Subset(n, std::move(e));
}

Subset empty_subset(int n) { return Subset(n, {}); }

GLWeight weight_of(const Subset& X) { return GLWeight::from_partition(lambda_of_subset(X), X.cardinality()); }

// Partitions of `size` with at most `rows` parts, in lexicographic order.
std::vector<Partition> partitions_of(int size, int rows) {
  std::vector<Partition> out;
  for (auto& lambda : partitions_in_box(rows, size))
    if (lambda.total() == size) out.push_back(std::move(lambda));
  return out;
}

}  // namespace

SpectrumPair SpectrumPair::from_weights(const WeightPair& w) {
  return {Spectrum::from_weight(w.first), Spectrum::from_weight(w.second)};
}

WeightTriple theta(const WeightTriple& t) {
  return {{t.a.first, dual_weight(t.a.second)},
          {t.b.first, dual_weight(t.b.second)},
          {dual_weight(t.c.first), t.c.second}};
}

SpectrumTriple theta(const SpectrumTriple& t) {
  return {{t.a.first, dual_spectrum(t.a.second)},
          {t.b.first, dual_spectrum(t.b.second)},
          {dual_spectrum(t.c.first), t.c.second}};
}

RationalMatrix theta_matrix(int p, int q) {
  const int n = 3 * (p + q);
  RationalMatrix m = RationalMatrix::Zero(n, n);
  auto identity = [&](int off, int len) {
    for (int i = 0; i < len; ++i) m(off + i, off + i) = 1;
  };
  auto reversal = [&](int off, int len) {
    for (int i = 0; i < len; ++i) m(off + i, off + len - 1 - i) = -1;
  };
  identity(0, p);
  reversal(p, q);
  identity(p + q, p);
  reversal(2 * p + q, q);
  reversal(2 * (p + q), p);
  identity(2 * (p + q) + p, q);
  return m;
}

RationalVector flatten(const SpectrumTriple& t) {
  const int p = t.a.first.size();
  const int q = t.a.second.size();
  RationalVector x(3 * (p + q));
  Eigen::Index k = 0;
  for (const SpectrumPair* pair : {&t.a, &t.b, &t.c}) {
    if (pair->first.size() != p || pair->second.size() != q) throw std::domain_error("flatten: shape mismatch");
    for (const auto& v : pair->first.values()) x(k++) = v;
    for (const auto& v : pair->second.values()) x(k++) = v;
  }
  return x;
}

SpectrumTriple unflatten(const RationalVector& x, int p, int q) {
  if (x.size() != 3 * (p + q)) throw std::domain_error("unflatten: wrong length");
  auto block = [&](Eigen::Index off, int len) {
    std::vector<Rational> v;
    for (int i = 0; i < len; ++i) v.push_back(x(off + i));
    return Spectrum(std::move(v));
  };
  auto pair = [&](Eigen::Index off) { return SpectrumPair{block(off, p), block(off + p, q)}; };
  return {pair(0), pair(p + q), pair(2 * (p + q))};
}

std::optional<Partition> horn_pq_semigroup(const WeightPair& lambda, const WeightPair& mu, const WeightPair& nu, int p,
                                           int q) {
  require_pq(p, q, "horn_pq_semigroup");
  for (const auto* w : {&lambda, &mu, &nu}) require_ranks(*w, p, q, "horn_pq_semigroup");
  const int size = nu.first.total() - lambda.first.total() - mu.first.total();
  if (size < 0 || size != lambda.second.total() + mu.second.total() - nu.second.total()) return std::nullopt;
  const GLWeight nu1 = dual_weight(nu.first), nu2 = dual_weight(nu.second);
  for (const auto& a : partitions_of(size, q)) {
    if (invariant_dim({lambda.first, mu.first, nu1, GLWeight::from_partition(a, p)}, 0, p) == 0) continue;
    if (invariant_dim({lambda.second, mu.second, nu2, dual_weight(GLWeight::from_partition(a, q))}, 0, q) == 0)
      continue;
    return a;
  }
  return std::nullopt;
}

std::optional<Partition> s_pq_semigroup(const WeightPair& lambda, const WeightPair& mu, const WeightPair& nu, int p,
                                        int q) {
  require_pq(p, q, "s_pq_semigroup");
  for (const auto* w : {&lambda, &mu, &nu}) require_ranks(*w, p, q, "s_pq_semigroup");
  const int size = -(lambda.first.total() + mu.first.total() + nu.first.total());
  if (size < 0 || size != -(lambda.second.total() + mu.second.total() + nu.second.total())) return std::nullopt;
  for (const auto& a : partitions_of(size, q)) {
    if (invariant_dim({lambda.first, mu.first, nu.first, GLWeight::from_partition(a, p)}, 0, p) == 0) continue;
    if (invariant_dim({lambda.second, mu.second, nu.second, GLWeight::from_partition(a, q)}, 0, q) == 0) continue;
    return a;
  }
  return std::nullopt;
}

bool q_pq_semigroup(const WeightPair& lambda, const WeightPair& mu, const WeightPair& nu, int p, int q) {
  require_pq(p, q, "q_pq_semigroup");
  for (const auto* w : {&lambda, &mu, &nu}) require_ranks(*w, p, q, "q_pq_semigroup");
  for (const auto* w : {&lambda, &mu})
    if (!w->first.is_nonpositive() || !w->second.is_nonpositive()) return false;
  return horn_pq_semigroup(lambda, mu, {dual_weight(nu.first), dual_weight(nu.second)}, p, q).has_value();
}

namespace {

constexpr std::array<std::pair<Family, const char*>, 14> kFamilyNames{{
    {Family::trace, "trace-equality"},
    {Family::first_block, "first-block"},
    {Family::r_le, "r-le"},
    {Family::r_ge, "r-ge"},
    {Family::s_ge, "s-ge"},
    {Family::s_le, "s-le"},
    {Family::mixed_rs, "mixed-rs"},
    {Family::s_pq_trace, "s-pq-trace"},
    {Family::s_pq_block, "s-pq-block"},
    {Family::s_pq_r_le, "s-pq-r-le"},
    {Family::s_pq_r_ge, "s-pq-r-ge"},
    {Family::s_pq_s_le, "s-pq-s-le"},
    {Family::s_pq_s_ge, "s-pq-s-ge"},
    {Family::s_pq_mixed, "s-pq-mixed"},
}};

}  // namespace

std::string to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames)
    if (f == family) return name;
  return "?";
}

Family parse_family(const std::string& text) {
  for (const auto& [f, name] : kFamilyNames)
    if (text == name) return f;
  throw std::invalid_argument("unknown inequality family '" + text + "'");
}

bool is_s_family(Family family) { return static_cast<int>(family) >= static_cast<int>(Family::s_pq_trace); }

RationalVector coefficients_for(const InequalitySpec& spec, int p, int q) {
  RationalVector c = RationalVector::Zero(3 * (p + q));
  auto add = [&](int block, const Subset& X, int sign) {
    const int off = block * (p + q);
    if (X.ambient() != p) throw std::domain_error("coefficients_for: primed subset must live in [p]");
    for (int i : X.elements()) c(off + i - 1) += sign;
  };
  auto add2 = [&](int block, const Subset& X, int sign) {
    const int off = block * (p + q) + p;
    if (X.ambient() != q) throw std::domain_error("coefficients_for: double-primed subset must live in [q]");
    for (int i : X.elements()) c(off + i - 1) += sign;
  };
  const std::array<const SubsetPair*, 3> subsets{&spec.I, &spec.J, &spec.K};
  if (!is_s_family(spec.family)) {
    for (int b = 0; b < 3; ++b) {
      const int sign = b == 2 ? -1 : 1;
      add(b, subsets[static_cast<std::size_t>(b)]->first, sign);
      add2(b, subsets[static_cast<std::size_t>(b)]->second, sign);
    }
    return c;
  }
  const bool second_positive = spec.family == Family::s_pq_s_le || spec.family == Family::s_pq_s_ge;
  for (int b = 0; b < 3; ++b) {
    add(b, subsets[static_cast<std::size_t>(b)]->first, 1);
    add2(b, subsets[static_cast<std::size_t>(b)]->second, second_positive ? 1 : -1);
  }
  return c;
}

RationalSystem to_system(const std::vector<InequalitySpec>& specs, int p, int q) {
  RationalSystem sys{3 * (p + q), {}};
  for (const auto& spec : specs) sys.add({spec.coeffs, spec.sense, Rational(0)});
  return sys;
}

RationalSystem chamber_context(int p, int q) {
  const int n = 3 * (p + q);
  RationalSystem sys{n, {}};
  for (int b = 0; b < 3; ++b)
    for (const auto& [off, len] : {std::pair{b * (p + q), p}, std::pair{b * (p + q) + p, q}})
      for (int i = 0; i + 1 < len; ++i) {
        RationalVector c = RationalVector::Zero(n);
        c(off + i) = 1;
        c(off + i + 1) = -1;
        sys.add({c, Sense::ge, Rational(0)});
      }
  return sys;
}

namespace {

struct Candidate {
  InequalitySpec spec;
  std::function<bool()> gate;
};

std::vector<InequalitySpec> select(std::vector<Candidate> candidates, int p, int q, int jobs) {
  const auto flags = parallel_map(candidates.size(), jobs, [&](std::size_t i) {
    return candidates[i].gate ? candidates[i].gate() : true;
  });
  std::vector<InequalitySpec> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!flags[i]) continue;
    auto spec = std::move(candidates[i].spec);
    spec.coeffs = coefficients_for(spec, p, q);
    out.push_back(std::move(spec));
  }
  return out;
}

// Calls fn(I, J, K) for all triples of r-subsets of [n], lexicographically.
template <typename Fn>
void for_each_triple(int n, int r, Fn&& fn) {
  const auto subsets = enumerate_subsets(n, r);
  for (const auto& I : subsets)
    for (const auto& J : subsets)
      for (const auto& K : subsets) fn(I, J, K);
}

template <typename Fn>
void for_each_pair_triple(int p, int q, int r, int s, Fn&& fn) {
  std::vector<SubsetPair> pairs;
  for (const auto& a : enumerate_subsets(p, r))
    for (const auto& b : enumerate_subsets(q, s)) pairs.push_back({a, b});
  for (const auto& I : pairs)
    for (const auto& J : pairs)
      for (const auto& K : pairs) fn(I, J, K);
}

using ListMemo = ConcurrentMemo<std::pair<int, int>, std::shared_ptr<const std::vector<InequalitySpec>>>;

ListMemo& horn_memo() {
  static ListMemo memo;
  return memo;
}

ListMemo& s_memo() {
  static ListMemo memo;
  return memo;
}

std::vector<InequalitySpec> build_horn(int p, int q, int jobs) {
  const Subset fp = full_subset(p), fq = full_subset(q), ep = empty_subset(p), eq = empty_subset(q);
  std::vector<Candidate> cands;
  cands.push_back({{Family::trace, p, q, {fp, fq}, {fp, fq}, {fp, fq}, Sense::eq, {}}, nullptr});
  cands.push_back({{Family::first_block, p, 0, {fp, eq}, {fp, eq}, {fp, eq}, Sense::le, {}}, nullptr});

  for (int r = 1; r < p; ++r) {
    for_each_triple(p, r, [&](const Subset& I, const Subset& J, const Subset& K) {
      cands.push_back({{Family::r_le, r, 0, {I, eq}, {J, eq}, {K, eq}, Sense::le, {}},
                       [=] { return horn_n_semigroup(weight_of(I), weight_of(J), weight_of(K), r); }});
    });
    for_each_triple(p, r, [&](const Subset& I, const Subset& J, const Subset& K) {
      cands.push_back({{Family::r_ge, r, 0, {I, eq}, {J, eq}, {K, eq}, Sense::ge, {}}, [=] {
                         return horn_n_semigroup(weight_of(I), weight_of(J), shift_weight(weight_of(K), q + p - r), r);
                       }});
    });
  }
  for (int s = 1; s < q; ++s) {
    for_each_triple(q, s, [&](const Subset& I, const Subset& J, const Subset& K) {
      cands.push_back({{Family::s_ge, 0, s, {ep, I}, {ep, J}, {ep, K}, Sense::ge, {}}, [=] {
                         return horn_n_semigroup(weight_of(I), weight_of(J), shift_weight(weight_of(K), q - s), s);
                       }});
    });
    for_each_triple(q, s, [&](const Subset& I, const Subset& J, const Subset& K) {
      cands.push_back({{Family::s_le, 0, s, {ep, I}, {ep, J}, {ep, K}, Sense::le, {}},
                       [=] { return horn_n_semigroup(weight_of(I), weight_of(J), shift_weight(weight_of(K), -p), s); }});
    });
  }
  for (int r = 1; r < p; ++r)
    for (int s = 1; s < q && s <= r; ++s)
      for_each_pair_triple(p, q, r, s, [&](const SubsetPair& I, const SubsetPair& J, const SubsetPair& K) {
        cands.push_back({{Family::mixed_rs, r, s, I, J, K, Sense::le, {}}, [=] {
                           const WeightPair a{weight_of(I.first), weight_of(I.second)};
                           const WeightPair b{weight_of(J.first), weight_of(J.second)};
                           const WeightPair c{weight_of(K.first), shift_weight(weight_of(K.second), r - p)};
                           return horn_pq_semigroup(a, b, c, r, s).has_value();
                         }});
      });
  return select(std::move(cands), p, q, jobs);
}

std::vector<InequalitySpec> build_s(int p, int q, int jobs) {
  const Subset fp = full_subset(p), fq = full_subset(q), ep = empty_subset(p), eq = empty_subset(q);
  std::vector<Candidate> cands;
  cands.push_back({{Family::s_pq_trace, p, q, {fp, fq}, {fp, fq}, {fp, fq}, Sense::eq, {}}, nullptr});
  cands.push_back({{Family::s_pq_block, p, 0, {fp, eq}, {fp, eq}, {fp, eq}, Sense::le, {}}, nullptr});

  auto gate3 = [](const Subset& I, const Subset& J, const Subset& K, int det_power, int rank) {
    return invariant_dim({weight_of(I), weight_of(J), weight_of(K)}, det_power, rank) != 0;
  };
  for (int r = 1; r < p; ++r) {
    for_each_triple(p, r, [&](const Subset& I, const Subset& J, const Subset& K) {
      cands.push_back({{Family::s_pq_r_le, r, 0, {I, eq}, {J, eq}, {K, eq}, Sense::le, {}},
                       [=] { return gate3(I, J, K, -p + r, r); }});
    });
    for_each_triple(p, r, [&](const Subset& I, const Subset& J, const Subset& K) {
      cands.push_back({{Family::s_pq_r_ge, r, 0, {I, eq}, {J, eq}, {K, eq}, Sense::ge, {}}, [=] {
                         return gate3(tilde_subset(I), tilde_subset(J), tilde_subset(K), q - p + r, r);
                       }});
    });
  }
  for (int s = 1; s < q; ++s) {
    for_each_triple(q, s, [&](const Subset& I, const Subset& J, const Subset& K) {
      cands.push_back({{Family::s_pq_s_le, 0, s, {ep, I}, {ep, J}, {ep, K}, Sense::le, {}},
                       [=] { return gate3(I, J, K, -q + s, s); }});
    });
    for_each_triple(q, s, [&](const Subset& I, const Subset& J, const Subset& K) {
      cands.push_back({{Family::s_pq_s_ge, 0, s, {ep, I}, {ep, J}, {ep, K}, Sense::ge, {}}, [=] {
                         return gate3(tilde_subset(I), tilde_subset(J), tilde_subset(K), p - q + s, s);
                       }});
    });
  }
  for (int r = 1; r < p; ++r)
    for (int s = 1; s < q && s <= r; ++s)
      for_each_pair_triple(p, q, r, s, [&](const SubsetPair& I, const SubsetPair& J, const SubsetPair& K) {
        cands.push_back({{Family::s_pq_mixed, r, s, I, J, K, Sense::le, {}},
                         [=] { return witness_mu_exists(p, q, r, s, I, J, K).has_value(); }});
      });
  return select(std::move(cands), p, q, jobs);
}

const std::vector<InequalitySpec>& cached_list(ListMemo& memo, int p, int q, int jobs,
                                        std::vector<InequalitySpec> (*build)(int, int, int)) {
  auto list = memo.get_or_compute({p, q}, [&] {
    return std::shared_ptr<const std::vector<InequalitySpec>>(
        std::make_shared<std::vector<InequalitySpec>>(build(p, q, jobs)));
  });
  return *list;  // entries are never evicted
}

}  // namespace

const std::vector<InequalitySpec>& generate_inequalities(int p, int q, int jobs) {
  require_pq(p, q, "generate_inequalities");
  return cached_list(horn_memo(), p, q, jobs, &build_horn);
}

const std::vector<InequalitySpec>& generate_s_inequalities(int p, int q, int jobs) {
  require_pq(p, q, "generate_s_inequalities");
  return cached_list(s_memo(), p, q, jobs, &build_s);
}

InequalitySpec theta_transport(const InequalitySpec& spec, int p, int q) {
  if (!is_s_family(spec.family)) throw std::domain_error("theta_transport: expects an S(p,q) condition");
  InequalitySpec out = spec;
  switch (spec.family) {
    case Family::s_pq_trace:
      out.family = Family::trace;
      break;
    case Family::s_pq_block:
      out.family = Family::first_block;
      break;
    case Family::s_pq_r_le:
    case Family::s_pq_r_ge:
      out.family = spec.family == Family::s_pq_r_le ? Family::r_le : Family::r_ge;
      out.K.first = tilde_subset(spec.K.first);
      break;
    case Family::s_pq_s_le:
    case Family::s_pq_s_ge:
      // Θ reverses the orientation of the double-primed blocks.
      out.family = spec.family == Family::s_pq_s_le ? Family::s_ge : Family::s_le;
      out.sense = spec.sense == Sense::le ? Sense::ge : Sense::le;
      out.I.second = tilde_subset(spec.I.second);
      out.J.second = tilde_subset(spec.J.second);
      break;
    case Family::s_pq_mixed:
      out.family = Family::mixed_rs;
      out.I.second = tilde_subset(spec.I.second);
      out.J.second = tilde_subset(spec.J.second);
      out.K.first = tilde_subset(spec.K.first);
      break;
    default:
      break;
  }
  out.coeffs = coefficients_for(out, p, q);
  return out;
}

namespace {

PqVerdict evaluate_specs(const std::vector<InequalitySpec>& specs, const RationalVector& x) {
  for (const auto& spec : specs) {
    const Rational lhs = spec.coeffs.dot(x);
    const bool ok = spec.sense == Sense::le ? lhs <= 0 : spec.sense == Sense::ge ? lhs >= 0 : lhs == 0;
    if (!ok) return {false, spec};
  }
  return {};
}

}  // namespace

PqVerdict horn_pq_cone(const SpectrumPair& A, const SpectrumPair& B, const SpectrumPair& C, int p, int q) {
  require_pq(p, q, "horn_pq_cone");
  for (const auto* x : {&A, &B, &C}) require_shape(*x, p, q, "horn_pq_cone");
  return evaluate_specs(generate_inequalities(p, q), flatten({A, B, C}));
}

PqVerdict s_pq_cone(const SpectrumPair& A, const SpectrumPair& B, const SpectrumPair& C, int p, int q) {
  require_pq(p, q, "s_pq_cone");
  for (const auto* x : {&A, &B, &C}) require_shape(*x, p, q, "s_pq_cone");
  return evaluate_specs(generate_s_inequalities(p, q), flatten({A, B, C}));
}

bool horn_hol_membership(const SpectrumPair& A, const SpectrumPair& B, const SpectrumPair& C, int p, int q) {
  require_pq(p, q, "horn_hol_membership");
  for (const auto* x : {&A, &B, &C}) {
    require_shape(*x, p, q, "horn_hol_membership");
    if (!(x->first[static_cast<std::size_t>(p - 1)] > x->second[0])) return false;
  }
  return horn_pq_cone(A, B, C, p, q).member;
}

}  // namespace horncone
