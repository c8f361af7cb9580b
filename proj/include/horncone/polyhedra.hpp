#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "horncone/numeric.hpp"

namespace horncone {

enum class Sense { le, ge, eq };

std::string to_string(Sense sense);
Sense parse_sense(const std::string& text);

/// coeffs · x (sense) rhs
template <typename Scalar>
struct Constraint {
  VectorX<Scalar> coeffs;
  Sense sense = Sense::le;
  Scalar rhs = Scalar(0);

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.sense == b.sense && a.rhs == b.rhs && a.coeffs.size() == b.coeffs.size() && a.coeffs == b.coeffs;
  }
};

template <typename Scalar>
struct LinearSystem {
  Eigen::Index dimension = 0;
  std::vector<Constraint<Scalar>> rows;

  void add(Constraint<Scalar> row) {
    if (row.coeffs.size() != dimension) throw std::domain_error("constraint has the wrong dimension");
    rows.push_back(std::move(row));
  }
  void append(const LinearSystem& other) {
    for (const auto& row : other.rows) add(row);
  }
};

using RationalConstraint = Constraint<Rational>;
using RationalSystem = LinearSystem<Rational>;

/// ≥ becomes ≤ by negation; [coeffs, rhs] is scaled to a primitive integer
/// vector; equalities get a positive leading coefficient.
RationalConstraint normalize(const RationalConstraint& row);
RationalSystem normalize(const RationalSystem& sys);

template <typename Scalar>
bool satisfies(const Constraint<Scalar>& row, const VectorX<Scalar>& x) {
  const Scalar lhs = row.coeffs.dot(x);
  switch (row.sense) {
    case Sense::le:
      return lhs <= row.rhs;
    case Sense::ge:
      return lhs >= row.rhs;
    case Sense::eq:
      return lhs == row.rhs;
  }
  return false;
}

struct Evaluation {
  bool satisfied = true;
  std::optional<std::size_t> first_violation;
};

template <typename Scalar>
Evaluation evaluate(const LinearSystem<Scalar>& sys, const VectorX<Scalar>& x) {
  if (x.size() != sys.dimension) throw std::domain_error("evaluate: point has the wrong dimension");
  for (std::size_t i = 0; i < sys.rows.size(); ++i)
    if (!satisfies(sys.rows[i], x)) return {false, i};
  return {};
}

enum class LpStatus { optimal, unbounded, infeasible };

template <typename Scalar>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Scalar value = Scalar(0);
  VectorX<Scalar> point;  // optimal vertex, or a feasible base point when unbounded
  VectorX<Scalar> ray;    // improving direction when unbounded
};

namespace detail {

// Dense tableau over y ≥ 0 with rows A y = b (b ≥ 0). The last column holds
// the right-hand side; `cost` holds reduced costs for a maximization.
template <typename Scalar>
class Tableau {
 public:
  MatrixX<Scalar> T;
  VectorX<Scalar> cost;
  Scalar value = Scalar(0);
  std::vector<Eigen::Index> basis;

  Eigen::Index rows() const { return T.rows(); }
  Eigen::Index rhs() const { return T.cols() - 1; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar p = T(r, c);
    T.row(r) /= p;
    for (Eigen::Index i = 0; i < T.rows(); ++i)
      if (i != r && T(i, c) != 0) {
        const Scalar f = T(i, c);
        T.row(i) -= f * T.row(r);
      }
    if (cost(c) != 0) {
      const Scalar f = cost(c);
      cost -= f * T.row(r).head(cost.size()).transpose();
      value += f * T(r, rhs());
    }
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Bland's rule over columns [0, active); returns the entering column of an
  // unbounded direction, or -1 at optimality.
  Eigen::Index run(Eigen::Index active) {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < active; ++j)
        if (cost(j) > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return -1;
      Eigen::Index leave = -1;
      Scalar best;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        if (T(i, enter) <= 0) continue;
        const Scalar ratio = T(i, rhs()) / T(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return enter;
      pivot(leave, enter);
    }
  }

  VectorX<Scalar> solution(Eigen::Index n) const {
    VectorX<Scalar> y = VectorX<Scalar>::Zero(n);
    for (Eigen::Index i = 0; i < rows(); ++i)
      if (basis[static_cast<std::size_t>(i)] < n) y(basis[static_cast<std::size_t>(i)]) = T(i, rhs());
    return y;
  }
};

}  // namespace detail

/// Maximizes objective · x over the (free-variable) system with the exact
/// two-phase simplex method and Bland's anti-cycling rule.
template <typename Scalar>
LpResult<Scalar> lp_optimize(const VectorX<Scalar>& objective, const LinearSystem<Scalar>& sys) {
  if (objective.size() != sys.dimension) throw std::domain_error("lp_optimize: objective has the wrong dimension");
  const Eigen::Index d = sys.dimension;
  const auto m = static_cast<Eigen::Index>(sys.rows.size());
  Eigen::Index slacks = 0;
  for (const auto& row : sys.rows)
    if (row.sense != Sense::eq) ++slacks;

  // Columns: x⁺ (d), x⁻ (d), slacks, artificials (m), rhs.
  const Eigen::Index structural = 2 * d + slacks;
  const Eigen::Index width = structural + m;
  detail::Tableau<Scalar> tab;
  tab.T = MatrixX<Scalar>::Zero(m, width + 1);
  tab.basis.resize(static_cast<std::size_t>(m));
  Eigen::Index slack = 2 * d;
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& row = sys.rows[static_cast<std::size_t>(i)];
    tab.T.row(i).segment(0, d) = row.coeffs.transpose();
    tab.T.row(i).segment(d, d) = -row.coeffs.transpose();
    if (row.sense == Sense::le) tab.T(i, slack++) = 1;
    if (row.sense == Sense::ge) tab.T(i, slack++) = -1;
    tab.T(i, width) = row.rhs;
    if (row.rhs < 0) tab.T.row(i) *= Scalar(-1);
    tab.T(i, structural + i) = 1;
    tab.basis[static_cast<std::size_t>(i)] = structural + i;
  }

  // Phase 1: maximize −Σ artificials.
  tab.cost = VectorX<Scalar>::Zero(width);
  for (Eigen::Index i = 0; i < m; ++i) {
    tab.cost.head(structural) += tab.T.row(i).head(structural).transpose();
    tab.value -= tab.T(i, width);
  }
  tab.run(width);
  LpResult<Scalar> result;
  if (tab.value != 0) return result;

  // Drive artificials out of the basis; rows where that is impossible are
  // linearly dependent and can be dropped.
  for (Eigen::Index i = 0; i < tab.rows();) {
    if (tab.basis[static_cast<std::size_t>(i)] < structural) {
      ++i;
      continue;
    }
    Eigen::Index c = -1;
    for (Eigen::Index j = 0; j < structural; ++j)
      if (tab.T(i, j) != 0) {
        c = j;
        break;
      }
    if (c >= 0) {
      tab.pivot(i, c);
      ++i;
    } else {
      const Eigen::Index last = tab.rows() - 1;
      if (i != last) {
        tab.T.row(i).swap(tab.T.row(last));
        std::swap(tab.basis[static_cast<std::size_t>(i)], tab.basis[static_cast<std::size_t>(last)]);
      }
      tab.T.conservativeResize(last, Eigen::NoChange);
      tab.basis.pop_back();
    }
  }

  // Phase 2 over the structural columns only.
  VectorX<Scalar> c = VectorX<Scalar>::Zero(width);
  c.head(d) = objective;
  c.segment(d, d) = -objective;
  tab.cost = c;
  tab.value = 0;
  for (Eigen::Index i = 0; i < tab.rows(); ++i) {
    const Eigen::Index b = tab.basis[static_cast<std::size_t>(i)];
    if (c(b) == 0) continue;
    tab.cost -= c(b) * tab.T.row(i).head(width).transpose();
    tab.value += c(b) * tab.T(i, tab.rhs());
  }
  for (Eigen::Index j = structural; j < width; ++j) tab.cost(j) = 0;
  const Eigen::Index enter = tab.run(structural);

  const VectorX<Scalar> y = tab.solution(width);
  result.point = y.head(d) - y.segment(d, d);
  if (enter >= 0) {
    VectorX<Scalar> dir = VectorX<Scalar>::Zero(width);
    dir(enter) = 1;
    for (Eigen::Index i = 0; i < tab.rows(); ++i) dir(tab.basis[static_cast<std::size_t>(i)]) = -tab.T(i, enter);
    result.status = LpStatus::unbounded;
    result.ray = dir.head(d) - dir.segment(d, d);
    return result;
  }
  result.status = LpStatus::optimal;
  result.value = tab.value;
  return result;
}

struct FilterIssue {
  std::size_t row = 0;
  std::string message;
};

struct FilterResult {
  RationalSystem system;
  std::vector<std::size_t> kept;     // indices into the input
  std::vector<std::size_t> removed;  // indices into the input
  std::vector<FilterIssue> issues;
};

/// Drops every inequality implied by the others together with `context`
/// (rows that constrain the ambient domain but are never emitted). Single
/// pass in input order; equalities are always kept. Rows whose test LP is
/// infeasible are kept and reported.
FilterResult filter_redundant(const RationalSystem& sys, const RationalSystem& context);
FilterResult filter_redundant(const RationalSystem& sys);

}  // namespace horncone
