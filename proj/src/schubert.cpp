#include "horncone/schubert.hpp"

#include <stdexcept>
#include <string>

namespace horncone {

namespace {

void require_same_rings(const CohomologyClass& a, const CohomologyClass& b, const char* what) {
  if (a.rings() != b.rings()) throw std::domain_error(std::string(what) + ": ring mismatch");
}

std::string ring_name(const GrassmannianRing& ring) {
  return "G(" + std::to_string(ring.m) + "," + std::to_string(ring.n) + ")";
}

CohomologyClass power(const CohomologyClass& x, int k) {
  CohomologyClass out = CohomologyClass::unit(x.rings());
  for (int i = 0; i < k; ++i) out = cup_product(out, x);
  return out;
}

void check_subset(const Subset& s, int ambient, int cardinality, const char* name) {
  if (s.ambient() != ambient || s.cardinality() != cardinality)
    throw std::domain_error(std::string(name) + " must be a " + std::to_string(cardinality) + "-subset of [" +
                            std::to_string(ambient) + "], got " + to_string(s));
}

void check_triple(int p, int q, int r, int s, const SubsetPair& I, const SubsetPair& J, const SubsetPair& K) {
  check_subset(I.first, p, r, "I'");
  check_subset(J.first, p, r, "J'");
  check_subset(K.first, p, r, "K'");
  check_subset(I.second, q, s, "I''");
  check_subset(J.second, q, s, "J''");
  check_subset(K.second, q, s, "K''");
}

}  // namespace

CohomologyClass::CohomologyClass(std::vector<GrassmannianRing> rings) : rings_(std::move(rings)) {
  for (const auto& ring : rings_)
    if (ring.m < 0 || ring.n < 0) throw std::domain_error("Grassmannian dimensions must be nonnegative");
}

CohomologyClass CohomologyClass::schubert(const GrassmannianRing& ring, const Partition& lambda) {
  CohomologyClass out({ring});
  out.add({lambda}, 1);
  return out;
}

CohomologyClass CohomologyClass::unit(std::vector<GrassmannianRing> rings) {
  CohomologyClass out(std::move(rings));
  out.add(Key(out.rings_.size()), 1);
  return out;
}

CohomologyClass CohomologyClass::point(std::vector<GrassmannianRing> rings) {
  CohomologyClass out(std::move(rings));
  Key key;
  for (const auto& ring : out.rings_) key.push_back(ring.point_partition());
  out.add(key, 1);
  return out;
}

CohomologyClass CohomologyClass::tensor(const CohomologyClass& a, const CohomologyClass& b) {
  std::vector<GrassmannianRing> rings(a.rings_);
  rings.insert(rings.end(), b.rings_.begin(), b.rings_.end());
  CohomologyClass out(std::move(rings));
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      Key key(ka);
      key.insert(key.end(), kb.begin(), kb.end());
      out.add(key, ca * cb);
    }
  return out;
}

Integer CohomologyClass::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CohomologyClass::add(const Key& key, const Integer& c) {
  if (key.size() != rings_.size()) throw std::domain_error("cohomology key has the wrong number of factors");
  for (std::size_t f = 0; f < key.size(); ++f)
    if (!rings_[f].contains(key[f]))
      throw std::domain_error("partition " + to_string(key[f]) + " does not index a class of " + ring_name(rings_[f]));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
  require_same_rings(*this, other, "operator+");
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

CohomologyClass operator*(const Integer& k, CohomologyClass a) {
  if (k == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [key, c] : a.terms_) c *= k;
  return a;
}

CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b) {
  require_same_rings(a, b, "cup_product");
  const auto& rings = a.rings();
  CohomologyClass out(rings);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      // Expand factor by factor, then take the cartesian product.
      std::vector<std::pair<CohomologyClass::Key, Integer>> partial{{{}, ca * cb}};
      for (std::size_t f = 0; f < rings.size(); ++f) {
        const auto factor = lr_product(ka[f], kb[f], rings[f].m, rings[f].n);
        std::vector<std::pair<CohomologyClass::Key, Integer>> next;
        for (const auto& [key, c] : partial)
          for (const auto& [nu, d] : factor) {
            auto extended = key;
            extended.push_back(nu);
            next.emplace_back(std::move(extended), c * d);
          }
        partial = std::move(next);
      }
      for (const auto& [key, c] : partial) out.add(key, c);
    }
  return out;
}

CohomologyClass phi(const std::map<Partition, Integer>& character, const GrassmannianRing& ring) {
  CohomologyClass out({ring});
  for (const auto& [lambda, c] : character)
    if (lambda.length() <= ring.m && lambda[0] <= ring.n) out.add({lambda}, c);
  return out;
}

CohomologyClass phi(const Partition& lambda, const GrassmannianRing& ring) { return phi({{lambda, Integer(1)}}, ring); }

CohomologyClass phi(const Decomposition& rep, const GrassmannianRing& ring) {
  std::map<Partition, Integer> character;
  for (const auto& [nu, c] : rep.entries) {
    if (!nu.is_nonnegative()) throw std::domain_error("phi: " + to_string(nu) + " is not a polynomial weight");
    character[nu.to_partition()] += c;
  }
  return phi(character, ring);
}

CohomologyClass delta_pullback(const CohomologyClass& x) {
  std::vector<GrassmannianRing> rings;
  for (const auto& ring : x.rings()) rings.push_back({ring.n, ring.m});
  CohomologyClass out(std::move(rings));
  for (const auto& [key, c] : x.terms()) {
    CohomologyClass::Key transposed;
    for (const auto& lambda : key) transposed.push_back(conjugate(lambda));
    out.add(transposed, c);
  }
  return out;
}

CohomologyClass euler_product_bundle(int m, int n, int m_prime, int n_prime) {
  if (m < 1 || n < 1 || m_prime < 1 || n_prime < 1)
    throw std::domain_error("euler_product_bundle: all dimensions must be >= 1");
  const GrassmannianRing left{m, n};
  const GrassmannianRing right{m_prime, n_prime};
  CohomologyClass out({left, right});
  for (const auto& lambda : partitions_in_box(m_prime, m)) {
    const Partition lt = tilde_partition(lambda, m_prime, m);
    // σ vanishes outside its box.
    if (left.contains(lt) && right.contains(lambda)) out.add({lt, lambda}, 1);
  }
  return out;
}

CohomologyClass euler_class_vrs(int p, int q, int r, int s) {
  if (!(p >= q && q >= 1 && 0 < r && r < p && 0 < s && s < q))
    throw std::domain_error("euler_class_vrs: need p >= q >= 1, 0 < r < p, 0 < s < q; got (" + std::to_string(p) +
                            "," + std::to_string(q) + "," + std::to_string(r) + "," + std::to_string(s) + ")");
  // V^r_s = E⊥_{r,p−r} ⊠ E⊥_{q−s,s} is the pullback of E_{p−r,r} ⊠ E_{s,q−s} under δ × δ.
  return delta_pullback(euler_product_bundle(p - r, r, s, q - s));
}

std::optional<Integer> is_point_multiple(const CohomologyClass& x) {
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [key, c] = *x.terms().begin();
  for (std::size_t f = 0; f < key.size(); ++f)
    if (key[f] != x.rings()[f].point_partition()) return std::nullopt;
  if (c < 1) return std::nullopt;
  return c;
}

bool cohomological_condition(int p, int q, int r, int s, const SubsetPair& I, const SubsetPair& J,
                             const SubsetPair& K) {
  if (!(p >= q && q >= 1)) throw std::domain_error("cohomological_condition: need p >= q >= 1");
  if (r < 0 || r > p || s < 0 || s > q || (r == 0 && s == 0) || (r == p && s == q))
    throw std::domain_error("cohomological_condition: (r,s) out of range");
  check_triple(p, q, r, s, I, J, K);

  // Over a point with V^0_q of positive rank the Euler class vanishes.
  if (r == 0 && s == q) return false;
  // Over a point with V^p_0 = 0 the product is [pt].
  if (r == p && s == 0) return true;

  const GrassmannianRing first{r, p - r};
  const GrassmannianRing second{q - s, s};
  auto first_factor = [&](const Subset& X) { return CohomologyClass::schubert(first, lambda_of_subset(X)); };
  auto second_factor = [&](const Subset& X) {
    return CohomologyClass::schubert(second, lambda_of_subset(complement_subset(X)));
  };

  if (s == 0 || s == q) {
    // Only G(r,p−r) is left; Eul(V^r_q) = (σ_{p−r})^q and Eul(V^r_0) = 1.
    auto product = cup_product(cup_product(first_factor(I.first), first_factor(J.first)), first_factor(K.first));
    if (s == q) product = cup_product(product, power(CohomologyClass::schubert(first, Partition{p - r}), q));
    return is_point_multiple(product).has_value();
  }
  if (r == 0 || r == p) {
    // Only G(q−s,s) is left; Eul(V^0_s) = (σ_s)^p and Eul(V^p_s) = 1.
    auto product =
        cup_product(cup_product(second_factor(I.second), second_factor(J.second)), second_factor(K.second));
    if (r == 0) product = cup_product(product, power(CohomologyClass::schubert(second, Partition{s}), p));
    return is_point_multiple(product).has_value();
  }

  auto factor = [&](const SubsetPair& X) { return CohomologyClass::tensor(first_factor(X.first), second_factor(X.second)); };
  const auto product = cup_product(cup_product(cup_product(factor(I), factor(J)), factor(K)), euler_class_vrs(p, q, r, s));
  return is_point_multiple(product).has_value();
}

std::optional<Partition> witness_mu_exists(int p, int q, int r, int s, const SubsetPair& I, const SubsetPair& J,
                                           const SubsetPair& K) {
  if (!(0 < r && r < p && 0 < s && s < q && s <= r))
    throw std::domain_error("witness_mu_exists: need 0 < r < p, 0 < s < q, s <= r");
  check_triple(p, q, r, s, I, J, K);

  const Partition li = lambda_of_subset(I.first), lj = lambda_of_subset(J.first), lk = lambda_of_subset(K.first);
  const Partition mi = lambda_of_subset(I.second), mj = lambda_of_subset(J.second), mk = lambda_of_subset(K.second);
  // Invariants with det^{−(p−r)} in GL_r exist only in total degree r(p−r).
  const int mu_size = r * (p - r) - li.total() - lj.total() - lk.total();
  if (mu_size < 0 || mu_size + mi.total() + mj.total() + mk.total() != s * ((p - r) + 2 * (q - s))) return std::nullopt;

  const GLWeight wi = GLWeight::from_partition(li, r), wj = GLWeight::from_partition(lj, r),
                 wk = GLWeight::from_partition(lk, r);
  const GLWeight vi = GLWeight::from_partition(mi, s), vj = GLWeight::from_partition(mj, s),
                 vk = GLWeight::from_partition(mk, s);
  for (const auto& mu : partitions_in_box(s, p - r)) {
    if (mu.total() != mu_size) continue;
    if (invariant_dim({wi, wj, wk, GLWeight::from_partition(mu, r)}, -(p - r), r) == 0) continue;
    if (invariant_dim({vi, vj, vk, GLWeight::from_partition(mu, s)}, -(p - r) - 2 * (q - s), s) == 0) continue;
    return mu;
  }
  return std::nullopt;
}

}  // namespace horncone
