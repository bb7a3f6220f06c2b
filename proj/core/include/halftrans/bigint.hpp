#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace halftrans {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(BigInt const &base, unsigned exp);
BigInt binomial(unsigned n, unsigned k);
BigInt gcd(BigInt a, BigInt b);

std::string to_string(BigInt const &x);
std::string to_string(Rational const &x);

// Throws halftrans::Error if x does not fit.
std::uint64_t to_u64(BigInt const &x);

} // namespace halftrans
