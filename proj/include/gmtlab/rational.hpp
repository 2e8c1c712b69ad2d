#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace gmtlab {

// Exact rational scalar. GMP keeps values in reduced form with a positive
// denominator, so equality is bit-exact.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Parses "p" or "p/q" (optional sign) into a canonical rational.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p/q" form; integers print without the "/1".
std::string to_string(const Rational& r);

} // namespace gmtlab
