#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ssc {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k) with C(n, k) = 0 whenever k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace ssc
