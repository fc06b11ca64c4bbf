#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace indel {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) in exact arithmetic; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

/// base^exp for exp >= 0.
BigInt int_pow(const BigInt& base, int exp);

} // namespace indel
