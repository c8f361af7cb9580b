#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace horncone {

// Expression templates are disabled so the types compose cleanly with Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = VectorX<Rational>;
using RationalMatrix = MatrixX<Rational>;

/// Formats as "num/den" (denominator always present, e.g. "3/1").
std::string to_string(const Rational& x);

/// Accepts "n", "-n", "n/d"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Scales a rational vector to the primitive integer vector on the same ray
/// (content gcd 1). The zero vector is returned unchanged.
RationalVector primitive(const RationalVector& v);

}  // namespace horncone
