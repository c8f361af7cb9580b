#pragma once

// Brute-force reference computations used by the tests. Characters are
// Laurent polynomials expanded from semistandard tableaux; multiplicities are
// read off by repeatedly stripping the leading dominant monomial.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Weight = std::vector<int>;
using Character = std::map<Weight, long long>;

namespace detail {

inline void fill_tableaux(const Weight& shape, int n, std::size_t row, std::size_t col, std::vector<Weight>& cells,
                          Weight& content, Character& out) {
  if (row == shape.size()) {
    ++out[content];
    return;
  }
  if (col == static_cast<std::size_t>(shape[row])) {
    fill_tableaux(shape, n, row + 1, 0, cells, content, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, cells[row][col - 1]);
  if (row > 0) lo = std::max(lo, cells[row - 1][col] + 1);
  for (int v = lo; v <= n; ++v) {
    cells[row][col] = v;
    ++content[static_cast<std::size_t>(v - 1)];
    fill_tableaux(shape, n, row, col + 1, cells, content, out);
    --content[static_cast<std::size_t>(v - 1)];
  }
}

}  // namespace detail

/// Character of the GL_n irreducible with highest weight w (n = w.size()).
inline const Character& schur(const Weight& w) {
  static std::map<Weight, Character> memo;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  const int n = static_cast<int>(w.size());
  const int low = n == 0 ? 0 : w.back();
  Weight shape;
  for (int x : w)
    if (x - low > 0) shape.push_back(x - low);
  std::vector<Weight> cells;
  for (int len : shape) cells.emplace_back(static_cast<std::size_t>(len), 0);
  Weight content(static_cast<std::size_t>(n), 0);
  Character raw;
  if (static_cast<int>(shape.size()) <= n) detail::fill_tableaux(shape, n, 0, 0, cells, content, raw);
  Character ch;
  for (const auto& [m, c] : raw) {
    Weight shifted = m;
    for (auto& e : shifted) e += low;
    ch[shifted] += c;
  }
  return memo.emplace(w, std::move(ch)).first->second;
}

inline Character multiply(const Character& a, const Character& b) {
  Character out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Weight m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Irreducible decomposition of a character.
inline std::map<Weight, long long> decompose(Character ch) {
  std::map<Weight, long long> out;
  while (!ch.empty()) {
    const auto top = std::prev(ch.end());
    const Weight w = top->first;
    const long long c = top->second;
    if (!std::is_sorted(w.begin(), w.end(), std::greater<>())) throw std::logic_error("leading monomial not dominant");
    out[w] += c;
    for (const auto& [m, k] : schur(w)) {
      auto& slot = ch[m];
      slot -= c * k;
      if (slot == 0) ch.erase(m);
    }
  }
  return out;
}

/// Decomposition of V_a ⊗ V_b, memoized.
inline const std::map<Weight, long long>& tensor(const Weight& a, const Weight& b) {
  static std::map<std::pair<Weight, Weight>, std::map<Weight, long long>> memo;
  const auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  return memo.emplace(key, decompose(multiply(schur(a), schur(b)))).first->second;
}

/// [V_nu : V_f1 ⊗ ... ⊗ V_fk].
inline long long multiplicity(const Weight& nu, const std::vector<Weight>& factors) {
  if (factors.empty()) return 0;
  std::map<Weight, long long> current{{factors[0], 1}};
  for (std::size_t i = 1; i < factors.size(); ++i) {
    std::map<Weight, long long> next;
    for (const auto& [w, c] : current)
      for (const auto& [v, k] : tensor(w, factors[i])) next[v] += c * k;
    current = std::move(next);
  }
  auto it = current.find(nu);
  return it == current.end() ? 0 : it->second;
}

inline Weight pad(Weight w, std::size_t n) {
  w.resize(std::max(w.size(), n), 0);
  return w;
}

inline Weight dual(const Weight& w) {
  Weight out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

inline Weight shift(Weight w, int k) {
  for (auto& x : w) x += k;
  return w;
}

/// c^ν_{λμ} for partitions, computed in n = length(ν) variables.
inline long long lr(const Weight& nu, const Weight& lambda, const Weight& mu) {
  auto strip = [](Weight w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
  };
  const Weight n0 = strip(nu), l0 = strip(lambda), m0 = strip(mu);
  if (std::accumulate(n0.begin(), n0.end(), 0) != std::accumulate(l0.begin(), l0.end(), 0) + std::accumulate(m0.begin(), m0.end(), 0))
    return 0;
  const std::size_t n = std::max({n0.size(), l0.size(), m0.size(), std::size_t{1}});
  if (l0.size() > n0.size() || m0.size() > n0.size()) return 0;
  return multiplicity(pad(n0, n), {pad(l0, n), pad(m0, n)});
}

/// dim [V_f1 ⊗ ... ⊗ V_fk ⊗ det^d]^{GL_n}.
inline long long invariants(const std::vector<Weight>& factors, int d, int n) {
  return multiplicity(Weight(static_cast<std::size_t>(n), -d), factors);
}

/// Partitions of `size` with at most `rows` parts.
inline std::vector<Weight> partitions_of(int size, int rows) {
  std::vector<Weight> out;
  Weight cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == rows) return;
    for (int part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  if (size >= 0) rec(rec, size, size);
  return out;
}

inline int total(const Weight& w) { return std::accumulate(w.begin(), w.end(), 0); }

/// (λ, μ, ν) with λ = (λ′, λ″) etc. lies in the Horn(p,q) semigroup iff some
/// polynomial a with at most q rows satisfies
/// [V_ν′ : V_λ′ ⊗ V_μ′ ⊗ V_a] ≠ 0 over GL_p and [V_ν″ : V_λ″ ⊗ V_μ″ ⊗ V_a*] ≠ 0
/// over GL_q (Sym(C^p ⊗ C^q) = ⊕ V_a ⊗ V_a).
inline bool horn_pq_member(const Weight& l1, const Weight& l2, const Weight& m1, const Weight& m2, const Weight& n1,
                           const Weight& n2) {
  const int p = static_cast<int>(l1.size()), q = static_cast<int>(l2.size());
  const int size = total(n1) - total(l1) - total(m1);
  if (size < 0 || size != total(l2) + total(m2) - total(n2)) return false;
  for (const auto& a : partitions_of(size, q)) {
    if (multiplicity(n1, {l1, m1, pad(a, static_cast<std::size_t>(p))}) == 0) continue;
    if (multiplicity(n2, {l2, m2, dual(pad(a, static_cast<std::size_t>(q)))}) != 0) return true;
  }
  return false;
}

/// Parses "a_1+b_2 <= c_1+c_3" style rows over [A, B, C] blocks of width w.
/// Returns (sense, lhs - rhs coefficients) with sense one of "le", "ge", "eq".
inline std::pair<std::string, std::vector<long long>> parse_row(const std::string& text, int w) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::string sense;
  std::size_t at = std::string::npos, len = 0;
  for (const auto& [tok, name] : {std::pair{"<=", "le"}, {">=", "ge"}, {"=", "eq"}}) {
    at = s.find(tok);
    if (at != std::string::npos) {
      sense = name;
      len = std::string(tok).size();
      break;
    }
  }
  if (at == std::string::npos) throw std::invalid_argument("no relation in " + text);
  std::vector<long long> coeffs(static_cast<std::size_t>(3 * w), 0);
  auto side = [&](const std::string& part, int sign) {
    std::size_t i = 0;
    while (i < part.size()) {
      if (part[i] == '+') {
        ++i;
        continue;
      }
      const int block = part[i] - 'a';
      std::size_t j = i + 2;
      int index = 0;
      while (j < part.size() && std::isdigit(static_cast<unsigned char>(part[j]))) index = 10 * index + (part[j++] - '0');
      coeffs[static_cast<std::size_t>(block * w + index - 1)] += sign;
      i = j;
    }
  };
  side(s.substr(0, at), 1);
  side(s.substr(at + len), -1);
  return {sense, coeffs};
}

/// Canonical form: "ge" negated to "le", divided by the gcd, equalities with
/// a positive leading entry.
inline std::pair<std::string, std::vector<long long>> canonical(std::string sense, std::vector<long long> coeffs) {
  if (sense == "ge") {
    for (auto& c : coeffs) c = -c;
    sense = "le";
  }
  long long g = 0;
  for (auto c : coeffs) g = std::gcd(g, c < 0 ? -c : c);
  if (g > 1)
    for (auto& c : coeffs) c /= g;
  if (sense == "eq") {
    auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](long long c) { return c != 0; });
    if (lead != coeffs.end() && *lead < 0)
      for (auto& c : coeffs) c = -c;
  }
  return {sense, coeffs};
}

}  // namespace oracle
