#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace horncone {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// stripped on construction, so equality and ordering ignore padding.
/// Ordering is lexicographic on the part sequence.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Part i (0-based); zero past the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// |λ|
  int total() const;
  bool empty() const { return parts_.empty(); }
  /// λ_1 ≤ cols and length ≤ rows.
  bool fits_in_box(int rows, int cols) const;
  /// Parts padded with zeros to exactly `n` entries; throws if length > n.
  std::vector<int> padded(int n) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Highest weight of GL_n: weakly decreasing integers of explicit length n.
class GLWeight {
 public:
  GLWeight() = default;
  explicit GLWeight(std::vector<int> parts);
  GLWeight(std::initializer_list<int> parts) : GLWeight(std::vector<int>(parts)) {}
  /// Pads a partition with zeros to rank n; throws if length(λ) > n.
  static GLWeight from_partition(const Partition& lambda, int n);
  static GLWeight zero(int n) { return GLWeight(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  const std::vector<int>& parts() const { return parts_; }
  int rank() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int total() const;
  /// λ_n ≥ 0 (true for the empty weight).
  bool is_nonnegative() const { return parts_.empty() || parts_.back() >= 0; }
  /// λ_1 ≤ 0 (true for the empty weight).
  bool is_nonpositive() const { return parts_.empty() || parts_.front() <= 0; }
  /// Requires is_nonnegative().
  Partition to_partition() const;

  friend auto operator<=>(const GLWeight&, const GLWeight&) = default;
  friend bool operator==(const GLWeight&, const GLWeight&) = default;

 private:
  std::vector<int> parts_;
};

/// I = {i_1 < ... < i_r} ⊂ [n], 1-based. The ambient n is part of the value.
class Subset {
 public:
  Subset() = default;
  Subset(int ambient, std::vector<int> elements);

  int ambient() const { return ambient_; }
  int cardinality() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int i) const;

  friend auto operator<=>(const Subset&, const Subset&) = default;
  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  int ambient_ = 0;
  std::vector<int> elements_;
};

/// I = I′ × I″ ⊂ [p] × [q].
struct SubsetPair {
  Subset first;
  Subset second;

  friend auto operator<=>(const SubsetPair&, const SubsetPair&) = default;
  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

/// λ = (λ′, λ″), a highest weight of GL_p × GL_q.
struct WeightPair {
  GLWeight first;
  GLWeight second;

  friend auto operator<=>(const WeightPair&, const WeightPair&) = default;
  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

/// All r-subsets of [n] in lexicographic order of their element sequences.
std::vector<Subset> enumerate_subsets(int n, int r);

/// All partitions fitting in a rows × cols box, in lexicographic order.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// λ(I)_a = n − r + a − i_a.
Partition lambda_of_subset(const Subset& I);
/// Inverse of lambda_of_subset: i_a = n + a − λ_a inside [m+n], cardinality m.
Subset subset_of_lambda(const Partition& lambda, int m, int n);

/// Set complement in [n].
Subset complement_subset(const Subset& I);
/// Reflection i ↦ n + 1 − i.
Subset tilde_subset(const Subset& I);
/// I∨ = (I^c)~.
Subset vee_subset(const Subset& I);

/// λ̂_k = n − λ_{m+1−k} inside the m × n box.
Partition box_complement(const Partition& lambda, int m, int n);
/// Diagram transpose.
Partition conjugate(const Partition& lambda);
/// λ̃ = (λ̂)∨ for λ ⊂ m′ × m; the result fits in m × m′.
Partition tilde_partition(const Partition& lambda, int m_prime, int m);

/// λ* = (−λ_n, ..., −λ_1).
GLWeight dual_weight(const GLWeight& lambda);
/// λ + k·1_n.
GLWeight shift_weight(const GLWeight& lambda, int k);
/// Componentwise sum of two weights of equal rank.
GLWeight add_weights(const GLWeight& a, const GLWeight& b);

std::string to_string(const Partition& lambda);
std::string to_string(const GLWeight& lambda);
std::string to_string(const Subset& I);

}  // namespace horncone
