#pragma once

#include <map>
#include <optional>
#include <vector>

#include "horncone/combinatorics.hpp"
#include "horncone/lr.hpp"
#include "horncone/numeric.hpp"

namespace horncone {

/// H*(G(m,n)), the cohomology of m-planes in C^{m+n}. Its Schubert basis is
/// indexed by the partitions inside the m × n box.
struct GrassmannianRing {
  int m = 0;
  int n = 0;

  int dimension() const { return m * n; }
  bool contains(const Partition& lambda) const { return lambda.fits_in_box(m, n); }
  /// The full m × n box, whose class is [pt].
  Partition point_partition() const { return Partition(std::vector<int>(static_cast<std::size_t>(m), n)); }

  friend auto operator<=>(const GrassmannianRing&, const GrassmannianRing&) = default;
  friend bool operator==(const GrassmannianRing&, const GrassmannianRing&) = default;
};

/// Integer combination of Schubert classes in a tensor product of one or
/// more Grassmannian rings. A key holds one partition per factor.
class CohomologyClass {
 public:
  using Key = std::vector<Partition>;

  CohomologyClass() = default;
  explicit CohomologyClass(std::vector<GrassmannianRing> rings);

  static CohomologyClass schubert(const GrassmannianRing& ring, const Partition& lambda);
  static CohomologyClass unit(std::vector<GrassmannianRing> rings);
  static CohomologyClass point(std::vector<GrassmannianRing> rings);
  /// a ⊗ b in the tensor product of their rings.
  static CohomologyClass tensor(const CohomologyClass& a, const CohomologyClass& b);

  const std::vector<GrassmannianRing>& rings() const { return rings_; }
  const std::map<Key, Integer>& terms() const { return terms_; }
  Integer coefficient(const Key& key) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·σ_key; keys outside the boxes are rejected.
  void add(const Key& key, const Integer& c);

  CohomologyClass& operator+=(const CohomologyClass& other);
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator*(const Integer& k, CohomologyClass a);
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

 private:
  std::vector<GrassmannianRing> rings_;
  std::map<Key, Integer> terms_;
};

/// Cup product; the rings must match. Products of basis classes are Schur
/// products truncated to the box.
CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b);

/// φ_{m,n}: s_λ ↦ σ_λ when λ fits the box, 0 otherwise. Keys with more than
/// m parts are not GL_m weights and map to 0 as well.
CohomologyClass phi(const std::map<Partition, Integer>& character, const GrassmannianRing& ring);
CohomologyClass phi(const Partition& lambda, const GrassmannianRing& ring);
/// Requires every key of the decomposition to be a polynomial weight.
CohomologyClass phi(const Decomposition& rep, const GrassmannianRing& ring);

/// δ*: H*(G(m,n)) → H*(G(n,m)), σ_λ ↦ σ_{λ∨}; applied to every tensor factor.
CohomologyClass delta_pullback(const CohomologyClass& x);

/// Eul(E_{m,n} ⊠ E_{m′,n′}) = Σ_{λ ⊂ m′×m} σ_λ̃ ⊗ σ_λ on G(m,n) × G(m′,n′).
CohomologyClass euler_product_bundle(int m, int n, int m_prime, int n_prime);

/// Eul(V^r_s) on G(r,p−r) × G(q−s,s), for p ≥ q ≥ 1, 0 < r < p, 0 < s < q.
CohomologyClass euler_class_vrs(int p, int q, int r, int s);

/// k when x = k·[pt] with k ≥ 1, nothing otherwise.
std::optional<Integer> is_point_multiple(const CohomologyClass& x);

/// Whether (σ_{λ(I′)}⊗σ_{λ(I″^c)})·(σ_{λ(J′)}⊗σ_{λ(J″^c)})·(σ_{λ(K′)}⊗σ_{λ(K″^c)})·Eul(V^r_s)
/// is a nonzero multiple of [pt] in H*(G(r,p−r) × G(q−s,s)). I′,J′,K′ are
/// r-subsets of [p], I″,J″,K″ are s-subsets of [q]; (r,s) ∉ {(0,0),(p,q)}.
bool cohomological_condition(int p, int q, int r, int s, const SubsetPair& I, const SubsetPair& J,
                             const SubsetPair& K);

/// Least μ ⊂ s × (p−r) (lexicographic) with
///   [V_{λ(I′)} ⊗ V_{λ(J′)} ⊗ V_{λ(K′)} ⊗ V_μ ⊗ det^{−(p−r)}]^{GL_r} ≠ 0 and
///   [V_{λ(I″)} ⊗ V_{λ(J″)} ⊗ V_{λ(K″)} ⊗ V_μ ⊗ det^{−(p−r)−2(q−s)}]^{GL_s} ≠ 0.
/// Requires 0 < r < p, 0 < s < q and s ≤ r.
std::optional<Partition> witness_mu_exists(int p, int q, int r, int s, const SubsetPair& I, const SubsetPair& J,
                                           const SubsetPair& K);

}  // namespace horncone
