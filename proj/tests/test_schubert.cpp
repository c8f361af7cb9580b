#include <doctest.h>

#include "horncone/schubert.hpp"
#include "oracle.hpp"

using namespace horncone;

namespace {

CohomologyClass sigma(int m, int n, const Partition& lambda) { return CohomologyClass::schubert({m, n}, lambda); }

CohomologyClass sigma2(const GrassmannianRing& a, const Partition& x, const GrassmannianRing& b, const Partition& y) {
  return CohomologyClass::tensor(CohomologyClass::schubert(a, x), CohomologyClass::schubert(b, y));
}

}  // namespace

TEST_CASE("cup products in G(2,2)") {
  const auto s1 = sigma(2, 2, Partition{1});
  CHECK(cup_product(s1, s1) == sigma(2, 2, Partition{2}) + sigma(2, 2, Partition{1, 1}));
  CHECK(cup_product(sigma(2, 2, Partition{1, 1}), sigma(2, 2, Partition{2})).is_zero());
  const auto x = sigma(2, 2, Partition{2, 1}) + Integer(3) * sigma(2, 2, Partition{1});
  CHECK(cup_product(CohomologyClass::unit({{2, 2}}), x) == x);
}

TEST_CASE("products agree with the LR oracle on all boxes up to 3 x 3") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const auto box = partitions_in_box(m, n);
      for (const auto& a : box)
        for (const auto& b : box) {
          const auto prod = cup_product(sigma(m, n, a), sigma(m, n, b));
          for (const auto& c : box) {
            const long long expected = a.total() + b.total() == c.total() ? oracle::lr(c.parts(), a.parts(), b.parts()) : 0;
            CHECK(prod.coefficient({c}) == expected);
          }
        }
    }
}

TEST_CASE("ring axioms in G(2,2) and G(2,3)") {
  for (const auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
    const auto box = partitions_in_box(m, n);
    const auto one = CohomologyClass::unit({{m, n}});
    for (const auto& a : box) {
      CHECK(cup_product(one, sigma(m, n, a)) == sigma(m, n, a));
      for (const auto& b : box) {
        CHECK(cup_product(sigma(m, n, a), sigma(m, n, b)) == cup_product(sigma(m, n, b), sigma(m, n, a)));
        for (const auto& c : box) {
          const auto x = sigma(m, n, a), y = sigma(m, n, b), z = sigma(m, n, c);
          CHECK(cup_product(cup_product(x, y), z) == cup_product(x, cup_product(y, z)));
          CHECK(cup_product(x + y, z) == cup_product(x, z) + cup_product(y, z));
        }
      }
    }
  }
}

TEST_CASE("rings must match") {
  CHECK_THROWS(cup_product(sigma(2, 2, Partition{1}), sigma(2, 3, Partition{1})));
  CHECK_THROWS(CohomologyClass::schubert({2, 2}, Partition{3}));
}

TEST_CASE("phi on symmetric and exterior powers") {
  const GrassmannianRing ring{3, 2};
  for (int k = 0; k <= 2; ++k) CHECK(phi(Partition{k}, ring) == CohomologyClass::schubert(ring, Partition{k}));
  for (int k = 0; k <= 3; ++k) {
    std::vector<int> ones(static_cast<std::size_t>(k), 1);
    CHECK(phi(Partition(ones), ring) == CohomologyClass::schubert(ring, Partition(ones)));
  }
  CHECK(phi(Partition{3}, ring).is_zero());
  const auto rep = tensor_decompose(GLWeight{1, 0, 0}, GLWeight{1, 0, 0}, 3);
  CHECK(phi(rep, ring) == cup_product(CohomologyClass::schubert(ring, Partition{1}), CohomologyClass::schubert(ring, Partition{1})));
}

TEST_CASE("delta pullback") {
  CHECK(delta_pullback(sigma(2, 3, Partition{2, 1})) == sigma(3, 2, Partition{2, 1}));
  CHECK(delta_pullback(sigma(1, 3, Partition{2})) == sigma(3, 1, Partition{1, 1}));
  CHECK(delta_pullback(delta_pullback(sigma(2, 3, Partition{2}))) == sigma(2, 3, Partition{2}));
}

TEST_CASE("point multiples and Poincare duality") {
  const auto s11 = sigma(2, 2, Partition{1, 1});
  CHECK(is_point_multiple(cup_product(s11, s11)) == Integer(1));
  CHECK_FALSE(is_point_multiple(cup_product(sigma(2, 2, Partition{2}), s11)).has_value());
  CHECK(is_point_multiple(Integer(3) * CohomologyClass::point({{2, 2}})) == Integer(3));
  CHECK_FALSE(is_point_multiple(CohomologyClass({{2, 2}})).has_value());
  CHECK_FALSE(is_point_multiple(Integer(-1) * CohomologyClass::point({{2, 2}})).has_value());
}

TEST_CASE("Euler class of the product bundle") {
  const GrassmannianRing p1{1, 1};
  CHECK(euler_product_bundle(1, 1, 1, 1) == sigma2(p1, Partition{1}, p1, Partition{}) + sigma2(p1, Partition{}, p1, Partition{1}));
  const GrassmannianRing g21{2, 1};
  CHECK(euler_product_bundle(1, 1, 2, 1) ==
        sigma2(p1, Partition{1}, g21, Partition{1}) + sigma2(p1, Partition{}, g21, Partition{1, 1}));
  CHECK(euler_product_bundle(3, 1, 3, 1).is_zero());
}

TEST_CASE("Euler class of V^r_s") {
  const GrassmannianRing p1{1, 1};
  CHECK(euler_class_vrs(2, 2, 1, 1) == sigma2(p1, Partition{1}, p1, Partition{}) + sigma2(p1, Partition{}, p1, Partition{1}));
  CHECK(euler_class_vrs(3, 3, 1, 2).is_zero());
  const auto e = euler_class_vrs(3, 2, 2, 1);
  CHECK(e.terms().size() == 2);
  CHECK_THROWS(euler_class_vrs(2, 2, 0, 1));
  CHECK_THROWS(euler_class_vrs(2, 3, 1, 1));
}

TEST_CASE("cohomological condition boundary cases") {
  const SubsetPair I{Subset(2, {2}), Subset(1, {})};
  const SubsetPair K{Subset(2, {1}), Subset(1, {})};
  CHECK(cohomological_condition(2, 1, 1, 0, I, I, K));

  const SubsetPair none{Subset(2, {}), Subset(1, {1})};
  CHECK_FALSE(cohomological_condition(2, 1, 0, 1, none, none, none));

  const SubsetPair all{Subset(2, {1, 2}), Subset(1, {})};
  CHECK(cohomological_condition(2, 1, 2, 0, all, all, all));
  CHECK_THROWS(cohomological_condition(2, 1, 1, 0, all, all, all));
}

TEST_CASE("witness search respects degrees") {
  const SubsetPair top{Subset(2, {2}), Subset(2, {2})};
  const SubsetPair mid{Subset(2, {2}), Subset(2, {1})};
  CHECK_FALSE(witness_mu_exists(2, 2, 1, 1, top, top, top).has_value());
  const auto mu = witness_mu_exists(2, 2, 1, 1, mid, mid, top);
  REQUIRE(mu.has_value());
  CHECK(*mu == Partition{1});
  CHECK(cohomological_condition(2, 2, 1, 1, mid, mid, top));
  CHECK_THROWS(witness_mu_exists(3, 3, 1, 2, top, top, top));
}
