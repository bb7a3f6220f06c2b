#include "halftrans/bigint.hpp"

#include <limits>

#include "halftrans/error.hpp"

namespace halftrans {

BigInt ipow(BigInt const &base, unsigned exp)
{
  BigInt result = 1, b = base;
  while (exp) {
    if (exp & 1u)
      result *= b;
    exp >>= 1u;
    if (exp)
      b *= b;
  }
  return result;
}

BigInt binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt gcd(BigInt a, BigInt b)
{
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(BigInt const &x) { return x.str(); }

std::string to_string(Rational const &x)
{
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

std::uint64_t to_u64(BigInt const &x)
{
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max())
    throw Error("integer out of 64-bit range: " + x.str());
  return static_cast<std::uint64_t>(x);
}

} // namespace halftrans
