#include <set>
#include <tuple>

#include <doctest.h>

#include "horncone/horn_pq.hpp"
#include "horncone/schubert.hpp"
#include "oracle.hpp"

using namespace horncone;

namespace {

SpectrumPair sp(std::initializer_list<int> a, std::initializer_list<int> b) {
  return SpectrumPair::from_weights({GLWeight(a), GLWeight(b)});
}

WeightPair wp(std::initializer_list<int> a, std::initializer_list<int> b) { return {GLWeight(a), GLWeight(b)}; }

std::set<std::pair<std::string, std::vector<long long>>> canonical_rows(const std::vector<InequalitySpec>& specs) {
  std::set<std::pair<std::string, std::vector<long long>>> out;
  for (const auto& s : specs) {
    std::vector<long long> c;
    for (const auto& x : s.coeffs) {
      REQUIRE(denominator(x) == 1);
      c.push_back(numerator(x).convert_to<long long>());
    }
    out.insert(oracle::canonical(to_string(s.sense), c));
  }
  return out;
}

std::set<std::pair<std::string, std::vector<long long>>> parsed(int w, std::initializer_list<const char*> rows) {
  std::set<std::pair<std::string, std::vector<long long>>> out;
  for (const char* r : rows) {
    auto [sense, c] = oracle::parse_row(r, w);
    out.insert(oracle::canonical(sense, c));
  }
  return out;
}

}  // namespace

TEST_CASE("theta examples") {
  const WeightTriple t{wp({1}, {2}), wp({0}, {0}), wp({1}, {2})};
  const WeightTriple expected{wp({1}, {-2}), wp({0}, {0}), wp({-1}, {2})};
  CHECK(theta(t) == expected);
  CHECK(theta(theta(t)) == t);
  const WeightTriple zero{wp({0}, {0}), wp({0}, {0}), wp({0}, {0})};
  CHECK(theta(zero) == zero);
}

TEST_CASE("theta matrix is a symmetric involution matching theta") {
  for (const auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    const RationalMatrix T = theta_matrix(p, q);
    CHECK(T == T.transpose());
    CHECK(T * T == RationalMatrix::Identity(3 * (p + q), 3 * (p + q)));
  }
  const SpectrumTriple t{sp({3, 1}, {2}), sp({1, 0}, {-1}), sp({2, 2}, {0})};
  CHECK(flatten(theta(t)) == theta_matrix(2, 1) * flatten(t));
  CHECK(unflatten(flatten(t), 2, 1) == t);
}

TEST_CASE("Horn(p,q) semigroup examples") {
  const auto a = horn_pq_semigroup(wp({0}, {0}), wp({0}, {0}), wp({1}, {-1}), 1, 1);
  REQUIRE(a.has_value());
  CHECK(*a == Partition{1});
  CHECK_FALSE(horn_pq_semigroup(wp({0}, {0}), wp({0}, {0}), wp({1}, {1}), 1, 1).has_value());
  const auto z = horn_pq_semigroup(wp({0}, {0}), wp({0}, {0}), wp({0}, {0}), 1, 1);
  REQUIRE(z.has_value());
  CHECK(z->empty());
  CHECK_THROWS(horn_pq_semigroup(wp({0}, {0, 0}), wp({0}, {0, 0}), wp({0}, {0, 0}), 1, 2));
}

TEST_CASE("S(p,q) and Q(p,q) semigroup examples") {
  const auto a = s_pq_semigroup(wp({0}, {0}), wp({0}, {0}), wp({-1}, {-1}), 1, 1);
  REQUIRE(a.has_value());
  CHECK(*a == Partition{1});
  CHECK(s_pq_semigroup(wp({0}, {0}), wp({0}, {0}), wp({0}, {0}), 1, 1)->empty());
  CHECK_FALSE(q_pq_semigroup(wp({1}, {0}), wp({0}, {0}), wp({0}, {0}), 1, 1));
  CHECK(q_pq_semigroup(wp({0}, {0}), wp({0}, {0}), wp({0}, {0}), 1, 1));
}

TEST_CASE("semigroup agrees with the character oracle on (2,1), entries in [-1,1]") {
  std::vector<WeightPair> pairs;
  for (int a = 1; a >= -1; --a)
    for (int b = a; b >= -1; --b)
      for (int c = 1; c >= -1; --c) pairs.push_back(wp({a, b}, {c}));
  for (const auto& l : pairs)
    for (const auto& m : pairs)
      for (const auto& n : pairs)
        CHECK(horn_pq_semigroup(l, m, n, 2, 1).has_value() ==
              oracle::horn_pq_member(l.first.parts(), l.second.parts(), m.first.parts(), m.second.parts(),
                                     n.first.parts(), n.second.parts()));
}

TEST_CASE("shift covariance of the semigroup") {
  std::vector<WeightPair> pairs;
  for (int a = 1; a >= -1; --a)
    for (int b = 1; b >= -1; --b) pairs.push_back(wp({a}, {b}));
  auto shifted = [](const WeightPair& w, int k) {
    return WeightPair{shift_weight(w.first, k), shift_weight(w.second, k)};
  };
  for (const auto& l : pairs)
    for (const auto& m : pairs)
      for (const auto& n : pairs) {
        const bool base = horn_pq_semigroup(l, m, n, 1, 1).has_value();
        for (int k = -2; k <= 2; ++k)
          CHECK(horn_pq_semigroup(shifted(l, k), shifted(m, k), shifted(n, 2 * k), 1, 1).has_value() == base);
      }
}

TEST_CASE("family names round-trip") {
  for (int f = 0; f <= static_cast<int>(Family::s_pq_mixed); ++f)
    CHECK(parse_family(to_string(static_cast<Family>(f))) == static_cast<Family>(f));
  CHECK(to_string(Family::mixed_rs) == "mixed-rs");
  CHECK(is_s_family(Family::s_pq_block));
  CHECK_FALSE(is_s_family(Family::r_ge));
  CHECK_THROWS(parse_family("bogus"));
}

TEST_CASE("published lists") {
  CHECK(canonical_rows(generate_inequalities(1, 1)) ==
        parsed(2, {"a_1+a_2+b_1+b_2 = c_1+c_2", "a_1+b_1 <= c_1"}));

  const auto h21 = canonical_rows(generate_inequalities(2, 1));
  CHECK(h21 == parsed(3, {"a_1+a_2+a_3+b_1+b_2+b_3 = c_1+c_2+c_3", "a_1+a_2+b_1+b_2 <= c_1+c_2", "a_2+b_2 <= c_2",
                          "a_2+b_1 <= c_1", "a_1+b_2 <= c_1", "a_1+b_1 >= c_2"}));

  const auto h22 = canonical_rows(generate_inequalities(2, 2));
  CHECK(h22.size() == 14);
  for (const auto& row : parsed(4, {"a_2+a_4+b_2+b_4 <= c_1+c_4", "a_3+b_3 >= c_3", "a_2+a_3+b_2+b_4 <= c_1+c_3"}))
    CHECK(h22.count(row) == 1);
}

TEST_CASE("coefficients follow the indices") {
  for (const auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    for (const auto& s : generate_inequalities(p, q)) CHECK(coefficients_for(s, p, q) == s.coeffs);
    for (const auto& s : generate_s_inequalities(p, q)) CHECK(coefficients_for(s, p, q) == s.coeffs);
  }
}

TEST_CASE("generated lists do not depend on jobs") {
  const auto a = generate_inequalities(3, 2, 1);
  const auto b = generate_inequalities(3, 2, 4);
  CHECK(a == b);
  CHECK(generate_s_inequalities(3, 2, 3) == generate_s_inequalities(3, 2, 1));
}

TEST_CASE("theta transport maps S(p,q) conditions onto Horn(p,q) conditions") {
  for (const auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    std::vector<InequalitySpec> moved;
    const RationalMatrix T = theta_matrix(p, q);
    for (const auto& s : generate_s_inequalities(p, q)) {
      const auto h = theta_transport(s, p, q);
      CHECK_FALSE(is_s_family(h.family));
      CHECK(coefficients_for(h, p, q) == h.coeffs);
      const RationalVector image = T * s.coeffs;
      if (h.sense == s.sense)
        CHECK(h.coeffs == image);
      else
        CHECK(h.coeffs == -image);
      moved.push_back(h);
    }
    CHECK(canonical_rows(moved) == canonical_rows(generate_inequalities(p, q)));
  }
}

TEST_CASE("mixed gate matches the cohomological condition") {
  for (const auto [p, q] : {std::pair{2, 2}, {3, 2}})
    for (int r = 1; r < p; ++r)
      for (int s = 1; s < q && s <= r; ++s) {
        const auto Ip = enumerate_subsets(p, r);
        const auto Is = enumerate_subsets(q, s);
        std::set<std::tuple<SubsetPair, SubsetPair, SubsetPair>> listed;
        for (const auto& spec : generate_s_inequalities(p, q))
          if (spec.family == Family::s_pq_mixed && spec.r == r && spec.s == s) listed.insert({spec.I, spec.J, spec.K});
        for (const auto& a : Ip)
          for (const auto& b : Ip)
            for (const auto& c : Ip)
              for (const auto& x : Is)
                for (const auto& y : Is)
                  for (const auto& z : Is) {
                    const SubsetPair I{a, x}, J{b, y}, K{c, z};
                    const bool coh = cohomological_condition(p, q, r, s, I, J, K);
                    CHECK(witness_mu_exists(p, q, r, s, I, J, K).has_value() == coh);
                    CHECK(listed.count({I, J, K}) == (coh ? 1u : 0u));
                  }
      }
}

TEST_CASE("cone membership examples") {
  CHECK(horn_pq_cone(sp({1}, {0}), sp({1}, {0}), sp({2}, {0}), 1, 1).member);
  const auto bad = horn_pq_cone(sp({1}, {0}), sp({1}, {0}), sp({1}, {1}), 1, 1);
  CHECK_FALSE(bad.member);
  REQUIRE(bad.certificate.has_value());
  CHECK(bad.certificate->family == Family::first_block);
  CHECK(horn_pq_cone(sp({0}, {0}), sp({0}, {0}), sp({0}, {0}), 1, 1).member);

  CHECK(s_pq_cone(sp({0}, {0}), sp({0}, {0}), sp({0}, {0}), 1, 1).member);
  CHECK(s_pq_cone(sp({0}, {0}), sp({0}, {0}), sp({-1}, {-1}), 1, 1).member);

  CHECK(horn_hol_membership(sp({1}, {0}), sp({1}, {0}), sp({2}, {0}), 1, 1));
  CHECK_FALSE(horn_hol_membership(sp({0}, {0}), sp({1}, {0}), sp({1}, {0}), 1, 1));
  CHECK_FALSE(horn_hol_membership(sp({0}, {0}), sp({0}, {0}), sp({0}, {0}), 1, 1));
}

TEST_CASE("cone is symmetric in A, B and invariant under positive scaling") {
  std::vector<SpectrumPair> xs;
  for (int a = 2; a >= -1; --a)
    for (int b = a; b >= -1; --b)
      for (int c = 1; c >= -1; --c) xs.push_back(sp({a, b}, {c}));
  for (std::size_t i = 0; i < xs.size(); i += 3)
    for (std::size_t j = 0; j < xs.size(); j += 2)
      for (const auto& c : xs) {
        const bool m = horn_pq_cone(xs[i], xs[j], c, 2, 1).member;
        CHECK(horn_pq_cone(xs[j], xs[i], c, 2, 1).member == m);
        const Rational t(5, 3);
        auto scaled = [&](const SpectrumPair& x) { return SpectrumPair{scale(x.first, t), scale(x.second, t)}; };
        CHECK(horn_pq_cone(scaled(xs[i]), scaled(xs[j]), scaled(c), 2, 1).member == m);
      }
}

TEST_CASE("chamber context has one row per adjacent pair") {
  const auto ctx = chamber_context(2, 2);
  CHECK(ctx.dimension == 12);
  CHECK(ctx.rows.size() == 6);
  CHECK(chamber_context(1, 1).rows.empty());
}
