#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace halftrans {

// GF(p^f) with an embedded defining polynomial. An element is the integer
// sum c_i p^i of its coefficient vector (c_0..c_{f-1}) in the basis 1, x, ...
// Supported: p in {2,3,5,7}, p^f <= 2^16.
//
// Defining polynomials: GF(4) x^2+x+1, GF(8) x^3+x+1, GF(16) x^4+x+1,
// GF(32) x^5+x^2+1, GF(9) x^2+2x+2. Every other field uses the first monic
// primitive polynomial in the order of the integer sum c_i p^i of its lower
// coefficients. For f = 1 the polynomial is x - g, g the least primitive root.
// In every case the class of x generates the multiplicative group.
class FiniteField {
public:
  using Elem = std::uint32_t;

  static std::shared_ptr<FiniteField const> get(unsigned q);
  static std::shared_ptr<FiniteField const> get(unsigned p, unsigned f);
  static bool supported(unsigned q);

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }
  // Lower coefficients c_0..c_{f-1} of the monic defining polynomial.
  std::vector<unsigned> const &polynomial() const { return poly_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem primitive() const { return exp(1); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const; // throws InvalidArgument on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }
  // primitive()^k, and its inverse map on nonzero elements.
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  unsigned log(Elem a) const;
  // Embedding of the prime field.
  Elem from_int(long long v) const;

  // Coefficient vector of a.
  std::vector<unsigned> coefficients(Elem a) const;
  std::string str(Elem a) const;

private:
  FiniteField(unsigned p, unsigned f, std::vector<unsigned> poly);

  unsigned p_, f_, q_;
  std::vector<unsigned> poly_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<FiniteField const>;

// (p, f) with q = p^f, if q is a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long q);
bool is_prime(unsigned long long n);

} // namespace halftrans
