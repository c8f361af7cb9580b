#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horncone/combinatorics.hpp"
#include "horncone/horn_classical.hpp"
#include "horncone/numeric.hpp"
#include "horncone/polyhedra.hpp"

namespace horncone {

/// (X′, X″) ∈ C_p × C_q.
struct SpectrumPair {
  Spectrum first;
  Spectrum second;

  static SpectrumPair from_weights(const WeightPair& w);
  Rational total() const { return first.total() + second.total(); }
  friend bool operator==(const SpectrumPair&, const SpectrumPair&) = default;
};

template <typename T>
struct Triple {
  T a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

using WeightTriple = Triple<WeightPair>;
using SpectrumTriple = Triple<SpectrumPair>;

/// (λ, μ, ν) ↦ ((λ′, λ″*), (μ′, μ″*), (ν′*, ν″)). An involution.
WeightTriple theta(const WeightTriple& t);
SpectrumTriple theta(const SpectrumTriple& t);
/// Θ as a signed permutation matrix on the 3(p+q) coordinates
/// [A′, A″, B′, B″, C′, C″]. It is symmetric and squares to the identity.
RationalMatrix theta_matrix(int p, int q);

/// Coordinates [A′, A″, B′, B″, C′, C″].
RationalVector flatten(const SpectrumTriple& t);
/// Inverse of flatten; throws if a block is not weakly decreasing.
SpectrumTriple unflatten(const RationalVector& x, int p, int q);

/// Least witness a (lexicographic) with |a| forced by the weights,
/// length(a) ≤ q, [V_λ′ ⊗ V_μ′ ⊗ V_ν′* ⊗ V_a]^{GL_p} ≠ 0 and
/// [V_λ″ ⊗ V_μ″ ⊗ V_ν″* ⊗ V_a*]^{GL_q} ≠ 0. Requires p ≥ q ≥ 1.
std::optional<Partition> horn_pq_semigroup(const WeightPair& lambda, const WeightPair& mu, const WeightPair& nu, int p,
                                           int q);
/// Same search for [V_λ ⊗ V_μ ⊗ V_ν ⊗ Sym(C^p ⊗ C^q)]^{GL_p × GL_q} ≠ 0.
std::optional<Partition> s_pq_semigroup(const WeightPair& lambda, const WeightPair& mu, const WeightPair& nu, int p,
                                        int q);
/// λ ≤ 0, μ ≤ 0 and [V_λ ⊗ V_μ ⊗ V_ν ⊗ Sym(M_{p,q})]^{GL_p × GL_q} ≠ 0.
bool q_pq_semigroup(const WeightPair& lambda, const WeightPair& mu, const WeightPair& nu, int p, int q);

enum class Family {
  trace,
  first_block,
  r_le,
  r_ge,
  s_ge,
  s_le,
  mixed_rs,
  s_pq_trace,
  s_pq_block,
  s_pq_r_le,
  s_pq_r_ge,
  s_pq_s_le,
  s_pq_s_ge,
  s_pq_mixed,
};

std::string to_string(Family family);
Family parse_family(const std::string& text);
bool is_s_family(Family family);

/// One condition of a recursive description. Unused subset components are
/// empty subsets of [p] or [q].
struct InequalitySpec {
  Family family = Family::trace;
  int r = 0;
  int s = 0;
  SubsetPair I, J, K;
  Sense sense = Sense::le;
  RationalVector coeffs;  // over [A′, A″, B′, B″, C′, C″]; right-hand side 0

  friend bool operator==(const InequalitySpec& x, const InequalitySpec& y) {
    return x.family == y.family && x.r == y.r && x.s == y.s && x.I == y.I && x.J == y.J && x.K == y.K &&
           x.sense == y.sense && x.coeffs.size() == y.coeffs.size() && x.coeffs == y.coeffs;
  }
};

/// Rebuilds the coefficient vector from the family and index subsets:
/// |A|_I + |B|_J − |C|_K for Horn(p,q) families; for S(p,q) families the
/// primed blocks enter with +1 and the double-primed ones with −1, except
/// s-pq-s-le / s-pq-s-ge, which are sums over the double-primed blocks.
RationalVector coefficients_for(const InequalitySpec& spec, int p, int q);

RationalSystem to_system(const std::vector<InequalitySpec>& specs, int p, int q);
/// Weak decrease inside each of the six blocks.
RationalSystem chamber_context(int p, int q);

/// Conditions of the recursive description of Horn(p,q), in order: trace,
/// first-block, then r-le and r-ge for each r, s-ge and s-le for each s, and
/// mixed-rs for each (r,s) with r ≥ s; index triples lexicographic. Results
/// are memoized per (p,q) for the life of the process and never depend on
/// `jobs`.
const std::vector<InequalitySpec>& generate_inequalities(int p, int q, int jobs = 1);
/// Facet conditions of S(p,q): trace, block, r-le and r-ge for each r, s-le
/// and s-ge for each s, and the mixed family.
const std::vector<InequalitySpec>& generate_s_inequalities(int p, int q, int jobs = 1);

/// Image of an S(p,q) condition under Θ as a Horn(p,q) condition.
InequalitySpec theta_transport(const InequalitySpec& spec, int p, int q);

struct PqVerdict {
  bool member = true;
  std::optional<InequalitySpec> certificate;  // first violated condition
};

PqVerdict horn_pq_cone(const SpectrumPair& A, const SpectrumPair& B, const SpectrumPair& C, int p, int q);
PqVerdict s_pq_cone(const SpectrumPair& A, const SpectrumPair& B, const SpectrumPair& C, int p, int q);
/// horn_pq_cone together with x_p > x_{p+1} for each of A, B, C.
bool horn_hol_membership(const SpectrumPair& A, const SpectrumPair& B, const SpectrumPair& C, int p, int q);

}  // namespace horncone
