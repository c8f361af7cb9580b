#pragma once

#include <map>
#include <span>

#include "horncone/combinatorics.hpp"
#include "horncone/numeric.hpp"

namespace horncone {

/// Decomposition of a GL_n representation into irreducibles.
struct Decomposition {
  int rank = 0;
  std::map<GLWeight, Integer> entries;  // multiplicities are >= 1

  Integer multiplicity(const GLWeight& nu) const {
    auto it = entries.find(nu);
    return it == entries.end() ? Integer(0) : it->second;
  }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// c^ν_{λμ}: the number of LR skew tableaux of shape ν/λ and content μ.
/// Zero unless λ ⊂ ν and |λ| + |μ| = |ν|.
Integer lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

/// s_λ · s_μ = Σ c^ν_{λμ} s_ν restricted to ν with at most `max_rows` parts
/// and ν_1 <= `max_cols` (a negative bound means unbounded).
std::map<Partition, Integer> lr_product(const Partition& lambda, const Partition& mu, int max_rows = -1,
                                        int max_cols = -1);

/// V_λ ⊗ V_μ for GL_n, determinant twists included.
Decomposition tensor_decompose(const GLWeight& lambda, const GLWeight& mu, int n);

/// [V_ν : V_λ ⊗ V_μ] for GL_n.
Integer gl_multiplicity(const GLWeight& nu, const GLWeight& lambda, const GLWeight& mu, int n);

/// dim [V_{f_1} ⊗ ... ⊗ V_{f_k} ⊗ det^{det_power}]^{GL_n}, 2 <= k <= 4.
Integer invariant_dim(std::span<const GLWeight> factors, int det_power, int n);
Integer invariant_dim(std::initializer_list<GLWeight> factors, int det_power, int n);

/// Drops all memoized LR data (tests use this to compare cold and warm runs).
void clear_lr_caches();

}  // namespace horncone
