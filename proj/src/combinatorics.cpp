#include "horncone/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace horncone {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing(parts_))
    throw std::domain_error("partition parts must be weakly decreasing: " + join(parts_));
  if (!parts_.empty() && parts_.back() < 0)
    throw std::domain_error("partition parts must be nonnegative: " + join(parts_));
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (*this)[0] <= cols;
}

std::vector<int> Partition::padded(int n) const {
  if (length() > n)
    throw std::domain_error("partition " + join(parts_) + " has more than " + std::to_string(n) + " parts");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

GLWeight::GLWeight(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing(parts_))
    throw std::domain_error("GL weight must be weakly decreasing: " + join(parts_));
}

GLWeight GLWeight::from_partition(const Partition& lambda, int n) { return GLWeight(lambda.padded(n)); }

int GLWeight::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition GLWeight::to_partition() const {
  if (!is_nonnegative()) throw std::domain_error("GL weight " + join(parts_) + " is not a partition");
  return Partition(parts_);
}

Subset::Subset(int ambient, std::vector<int> elements) : ambient_(ambient), elements_(std::move(elements)) {
  if (ambient_ < 0) throw std::domain_error("subset ambient must be nonnegative");
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    if (elements_[a] < 1 || elements_[a] > ambient_)
      throw std::domain_error("subset element out of [1," + std::to_string(ambient_) + "]: " + join(elements_));
    if (a > 0 && elements_[a - 1] >= elements_[a])
      throw std::domain_error("subset elements must be strictly increasing: " + join(elements_));
  }
}

bool Subset::contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

std::vector<Subset> enumerate_subsets(int n, int r) {
  if (n < 0 || r < 0 || r > n)
    throw std::domain_error("enumerate_subsets: need 0 <= r <= n, got n=" + std::to_string(n) +
                            " r=" + std::to_string(r));
  std::vector<Subset> out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(n, cur);
    int a = r - 1;
    while (a >= 0 && cur[static_cast<std::size_t>(a)] == n - r + a + 1) --a;
    if (a < 0) break;
    ++cur[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < r; ++b) cur[static_cast<std::size_t>(b)] = cur[static_cast<std::size_t>(b - 1)] + 1;
  }
  return out;
}

namespace {

void box_partitions(int rows, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  for (int v = 1; v <= cap; ++v) {
    cur.push_back(v);
    box_partitions(rows, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::domain_error("partitions_in_box: negative box");
  std::vector<Partition> out;
  std::vector<int> cur;
  box_partitions(rows, cols, cur, out);
  return out;
}

Partition lambda_of_subset(const Subset& I) {
  const int n = I.ambient();
  const int r = I.cardinality();
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) parts[static_cast<std::size_t>(a - 1)] = n - r + a - I.elements()[static_cast<std::size_t>(a - 1)];
  return Partition(std::move(parts));
}

Subset subset_of_lambda(const Partition& lambda, int m, int n) {
  if (m < 0 || n < 0 || !lambda.fits_in_box(m, n))
    throw std::domain_error("subset_of_lambda: " + to_string(lambda) + " does not fit in " + std::to_string(m) +
                            "x" + std::to_string(n));
  std::vector<int> elems(static_cast<std::size_t>(m));
  for (int a = 1; a <= m; ++a) elems[static_cast<std::size_t>(a - 1)] = n + a - lambda[static_cast<std::size_t>(a - 1)];
  return Subset(m + n, std::move(elems));
}

Subset complement_subset(const Subset& I) {
  std::vector<int> out;
  for (int i = 1; i <= I.ambient(); ++i)
    if (!I.contains(i)) out.push_back(i);
  return Subset(I.ambient(), std::move(out));
}

Subset tilde_subset(const Subset& I) {
  std::vector<int> out;
  out.reserve(I.elements().size());
  for (auto it = I.elements().rbegin(); it != I.elements().rend(); ++it) out.push_back(I.ambient() + 1 - *it);
  return Subset(I.ambient(), std::move(out));
}

Subset vee_subset(const Subset& I) { return tilde_subset(complement_subset(I)); }

Partition box_complement(const Partition& lambda, int m, int n) {
  if (m < 0 || n < 0 || !lambda.fits_in_box(m, n))
    throw std::domain_error("box_complement: " + to_string(lambda) + " does not fit in " + std::to_string(m) + "x" +
                            std::to_string(n));
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) out[static_cast<std::size_t>(k - 1)] = n - lambda[static_cast<std::size_t>(m - k)];
  return Partition(std::move(out));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Partition tilde_partition(const Partition& lambda, int m_prime, int m) {
  return conjugate(box_complement(lambda, m_prime, m));
}

GLWeight dual_weight(const GLWeight& lambda) {
  std::vector<int> out;
  out.reserve(lambda.parts().size());
  for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) out.push_back(-*it);
  return GLWeight(std::move(out));
}

GLWeight shift_weight(const GLWeight& lambda, int k) {
  std::vector<int> out(lambda.parts());
  for (int& x : out) x += k;
  return GLWeight(std::move(out));
}

GLWeight add_weights(const GLWeight& a, const GLWeight& b) {
  if (a.rank() != b.rank()) throw std::domain_error("add_weights: rank mismatch");
  std::vector<int> out(a.parts());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return GLWeight(std::move(out));
}

std::string to_string(const Partition& lambda) { return join(lambda.parts()); }
std::string to_string(const GLWeight& lambda) { return join(lambda.parts()); }
std::string to_string(const Subset& I) { return join(I.elements()) + "/" + std::to_string(I.ambient()); }

}  // namespace horncone
