#include "horncone/lr.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "horncone/parallel.hpp"

namespace horncone {

namespace {

// Fills ν/λ in reverse reading order (rows top to bottom, each row right to
// left) and counts fillings that are semistandard with a lattice reading word.
class LRCounter {
 public:
  LRCounter(const Partition& nu, const Partition& lambda, const Partition& mu)
      : nu_(nu), lambda_(lambda), mu_(mu), counts_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    const int rows = nu.length();
    grid_.resize(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) grid_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(i)]), 0);
  }

  std::uint64_t count() {
    total_ = 0;
    visit(0, nu_[0] - 1);
    return total_;
  }

 private:
  bool in_skew(int i, int j) const {
    return i >= 0 && j >= lambda_[static_cast<std::size_t>(i)] && j < nu_[static_cast<std::size_t>(i)];
  }

  void visit(int i, int j) {
    // Advance to the next row when this one is exhausted.
    while (i < nu_.length() && j < lambda_[static_cast<std::size_t>(i)]) {
      ++i;
      if (i < nu_.length()) j = nu_[static_cast<std::size_t>(i)] - 1;
    }
    if (i >= nu_.length()) {
      ++total_;
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    int hi = std::min(mu_.length(), i + 1);
    if (j + 1 < nu_[ui]) hi = std::min(hi, grid_[ui][uj + 1]);
    int lo = 1;
    if (in_skew(i - 1, j)) lo = grid_[ui - 1][uj] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (counts_[uv] >= mu_[uv - 1]) continue;
      if (v > 1 && counts_[uv] + 1 > counts_[uv - 1]) continue;
      ++counts_[uv];
      grid_[ui][uj] = v;
      visit(i, j - 1);
      grid_[ui][uj] = 0;
      --counts_[uv];
    }
  }

  const Partition& nu_;
  const Partition& lambda_;
  const Partition& mu_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> grid_;
  std::uint64_t total_ = 0;
};

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[static_cast<std::size_t>(i)] > outer[static_cast<std::size_t>(i)]) return false;
  return true;
}

using CoefficientKey = std::array<Partition, 3>;
using ProductKey = std::tuple<Partition, Partition, int, int>;
using DecompositionKey = std::tuple<Partition, Partition, int>;

ConcurrentMemo<CoefficientKey, Integer>& coefficient_memo() {
  static ConcurrentMemo<CoefficientKey, Integer> memo;
  return memo;
}

ConcurrentMemo<ProductKey, std::shared_ptr<const std::map<Partition, Integer>>>& product_memo() {
  static ConcurrentMemo<ProductKey, std::shared_ptr<const std::map<Partition, Integer>>> memo;
  return memo;
}

ConcurrentMemo<DecompositionKey, std::shared_ptr<const Decomposition>>& decomposition_memo() {
  static ConcurrentMemo<DecompositionKey, std::shared_ptr<const Decomposition>> memo;
  return memo;
}

// Candidate ν ⊇ λ ∪ μ with |ν| = |λ|+|μ|, ν_i <= λ_i + μ_1, within the bounds.
void candidates(const Partition& lambda, const Partition& mu, int rows, int cols, int row, int remaining,
                std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition nu(cur);
    if (contains(nu, lambda) && contains(nu, mu)) out.push_back(std::move(nu));
    return;
  }
  if (row >= rows) return;
  const auto ur = static_cast<std::size_t>(row);
  const int lo = std::max(lambda[ur], mu[ur]);
  int hi = lambda[ur] + mu[0];
  if (row > 0) hi = std::min(hi, cur.back());
  if (cols >= 0) hi = std::min(hi, cols);
  hi = std::min(hi, remaining);
  for (int v = hi; v >= std::max(lo, 1); --v) {
    cur.push_back(v);
    candidates(lambda, mu, rows, cols, row + 1, remaining - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Integer lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (lambda.total() + mu.total() != nu.total() || !contains(nu, lambda) || !contains(nu, mu)) return 0;
  if (mu.empty() || lambda.empty()) return 1;  // ν equals the other factor here
  return coefficient_memo().get_or_compute({nu, lambda, mu}, [&] {
    LRCounter counter(nu, lambda, mu);
    return Integer(counter.count());
  });
}

std::map<Partition, Integer> lr_product(const Partition& lambda, const Partition& mu, int max_rows, int max_cols) {
  const int rows = max_rows < 0 ? lambda.length() + mu.length() : std::min(max_rows, lambda.length() + mu.length());
  auto cached = product_memo().get_or_compute({lambda, mu, rows, max_cols}, [&] {
    std::vector<Partition> cands;
    std::vector<int> cur;
    candidates(lambda, mu, rows, max_cols, 0, lambda.total() + mu.total(), cur, cands);
    auto out = std::make_shared<std::map<Partition, Integer>>();
    for (auto& nu : cands) {
      Integer c = lr_coefficient(nu, lambda, mu);
      if (c != 0) out->emplace(std::move(nu), std::move(c));
    }
    return std::shared_ptr<const std::map<Partition, Integer>>(std::move(out));
  });
  return *cached;
}

Decomposition tensor_decompose(const GLWeight& lambda, const GLWeight& mu, int n) {
  if (lambda.rank() != n || mu.rank() != n)
    throw std::domain_error("tensor_decompose: weights must have rank " + std::to_string(n));
  if (n == 0) return Decomposition{0, {{GLWeight{}, Integer(1)}}};
  const int k = std::max(0, -lambda[static_cast<std::size_t>(n - 1)]);
  const int l = std::max(0, -mu[static_cast<std::size_t>(n - 1)]);
  const Partition alpha = shift_weight(lambda, k).to_partition();
  const Partition beta = shift_weight(mu, l).to_partition();
  auto cached = decomposition_memo().get_or_compute({alpha, beta, n}, [&] {
    auto d = std::make_shared<Decomposition>();
    d->rank = n;
    for (auto& [nu, c] : lr_product(alpha, beta, n)) d->entries.emplace(GLWeight::from_partition(nu, n), c);
    return std::shared_ptr<const Decomposition>(std::move(d));
  });
  if (k + l == 0) return *cached;
  Decomposition out{n, {}};
  for (const auto& [nu, c] : cached->entries) out.entries.emplace(shift_weight(nu, -(k + l)), c);
  return out;
}

Integer gl_multiplicity(const GLWeight& nu, const GLWeight& lambda, const GLWeight& mu, int n) {
  if (nu.rank() != n || lambda.rank() != n || mu.rank() != n)
    throw std::domain_error("gl_multiplicity: weights must have rank " + std::to_string(n));
  if (n == 0) return 1;
  const int k = std::max(0, -lambda[static_cast<std::size_t>(n - 1)]);
  const int l = std::max(0, -mu[static_cast<std::size_t>(n - 1)]);
  const GLWeight target = shift_weight(nu, k + l);
  if (!target.is_nonnegative()) return 0;
  return lr_coefficient(target.to_partition(), shift_weight(lambda, k).to_partition(),
                        shift_weight(mu, l).to_partition());
}

Integer invariant_dim(std::span<const GLWeight> factors, int det_power, int n) {
  if (factors.size() < 2 || factors.size() > 4)
    throw std::domain_error("invariant_dim: expects 2 to 4 factors");
  for (const auto& f : factors)
    if (f.rank() != n) throw std::domain_error("invariant_dim: factor rank mismatch");

  // Fold all but the last factor, then pair with the dual of the last factor
  // twisted by the determinant power.
  Decomposition acc{n, {{factors[0], Integer(1)}}};
  for (std::size_t i = 1; i + 1 < factors.size(); ++i) {
    Decomposition next{n, {}};
    for (const auto& [nu, c] : acc.entries)
      for (const auto& [rho, d] : tensor_decompose(nu, factors[i], n).entries) next.entries[rho] += c * d;
    acc = std::move(next);
  }
  return acc.multiplicity(shift_weight(dual_weight(factors.back()), -det_power));
}

Integer invariant_dim(std::initializer_list<GLWeight> factors, int det_power, int n) {
  return invariant_dim(std::span<const GLWeight>(factors.begin(), factors.size()), det_power, n);
}

void clear_lr_caches() {
  coefficient_memo().clear();
  product_memo().clear();
  decomposition_memo().clear();
}

}  // namespace horncone
