#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "horncone/combinatorics.hpp"
#include "horncone/numeric.hpp"

namespace horncone {

/// Weakly decreasing vector of exact rationals.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Rational> values);
  static Spectrum from_weight(const GLWeight& lambda);

  const std::vector<Rational>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  Rational total() const;
  /// Σ_{i ∈ I} x_i with I ⊂ [size()] 1-based.
  Rational partial_sum(const Subset& I) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Rational> values_;
};

Spectrum scale(const Spectrum& x, const Rational& t);

/// Index triple (I, J, K) ∈ (P^n_r)^3.
struct SubsetTriple {
  Subset I, J, K;
  friend auto operator<=>(const SubsetTriple&, const SubsetTriple&) = default;
  friend bool operator==(const SubsetTriple&, const SubsetTriple&) = default;
};

struct HornTripleTable {
  int n = 0;
  int r = 0;
  std::vector<SubsetTriple> triples;  // lexicographic in (I, J, K)
  friend bool operator==(const HornTripleTable&, const HornTripleTable&) = default;
};

/// Where triple tables are persisted. A disabled cache never touches disk.
struct CacheConfig {
  std::filesystem::path directory = ".horncone-cache";
  bool enabled = false;

  /// HORNCONE_CACHE if set, ./.horncone-cache otherwise; enabled.
  static CacheConfig from_environment();
};

/// (λ, μ, ν) ∈ Horn^Z(n): [V_ν : V_λ ⊗ V_μ] ≠ 0.
bool horn_n_semigroup(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu, int n);

/// All (I, J, K) ∈ (P^n_r)^3 with (λ(I), λ(J), λ(K)) ∈ Horn(r), for 1 ≤ r ≤ n−1.
/// Results are memoized in process and, when enabled, in the cache directory.
HornTripleTable horn_triple_table(int n, int r, const CacheConfig& cache = {}, int jobs = 1);

/// |A|_I + |B|_J ≤ |C|_K, or the trace equality when r == 0.
struct ClassicalInequality {
  int r = 0;
  Subset I, J, K;
};

struct ClassicalVerdict {
  bool member = true;
  std::optional<ClassicalInequality> certificate;  // first violated condition
};

/// Horn(n) membership via Horn's inequalities. By default Horn(r) gates use
/// the LR oracle; `recursive` decides them with horn_n_cone itself instead,
/// bottoming out at Horn(1) = {a + b = c}.
ClassicalVerdict horn_n_cone(const Spectrum& A, const Spectrum& B, const Spectrum& C, int n, bool recursive = false);

}  // namespace horncone
