#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halftrans/bigint.hpp"

namespace halftrans {

// Number of i-dimensional subspaces of GF(q)^m.
BigInt gaussian_coefficient(unsigned m, unsigned i, unsigned q);

// |Omega_i| = C(k,i) C(n-k,k-i) for i = 0..k: k-sets meeting a fixed k-set
// in exactly i points.
std::vector<BigInt> k_set_suborbit_sizes(unsigned n, unsigned k);

struct SubspaceSubdegrees {
  BigInt disjoint;                     // m-spaces meeting U trivially
  std::optional<BigInt> codim_one;     // meeting U in an (m-1)-space, m >= 2
};
// PSL_d(q) on m-spaces, 1 <= m <= d/2.
SubspaceSubdegrees subspace_action_subdegrees(unsigned d, unsigned m, unsigned q);

// (i, size) for 0 <= i < m with m - i even: orbits on one family of maximal
// totally singular subspaces in a hyperbolic space of dimension 2m, m odd >= 5.
std::vector<std::pair<unsigned, BigInt>> totally_singular_subdegrees(unsigned m, unsigned q);

enum class ClassicalFamily { PSL, PSU, PSp, POmegaPlus, POmegaMinus, POmegaOdd };
ClassicalFamily parse_family(std::string const &name);
std::string family_name(ClassicalFamily f);

BigInt transvection_count(ClassicalFamily family, unsigned d, unsigned q);

enum class TorusFamily { SL, SU, Sp, OmegaOdd, OmegaMinus, OmegaPlus };
TorusFamily parse_torus_family(std::string const &name);
struct TorusOrder {
  BigInt order;
  unsigned ell; // dimension of the irreducible block
};
TorusOrder torus_order(TorusFamily family, unsigned d, unsigned q);

// coeff * q^exponent with a possibly fractional exponent, compared exactly.
struct PowerBound {
  Rational coeff;
  unsigned q = 0;
  Rational exponent;

  // Sign of value - x, for x > 0.
  int compare(Rational const &x) const;
  bool exceeded_by(BigInt const &n) const { return compare(Rational(n)) < 0; }
  // The value, when q^exponent is rational.
  std::optional<Rational> exact() const;
  std::string str() const;
};

struct BoundQuery {
  ClassicalFamily family = ClassicalFamily::PSL;
  unsigned d = 0;
  unsigned q = 0;
  unsigned s = 0;       // nu(x) for class bounds, prime order r for outer bounds
  std::string label;    // p = 2 involution class a/b/c (a' as "a'"), or f/g/gf
};

// Lower bound for the class of an element of order p with nu(x) = s: f_1 for
// odd p, f_2 (needs label a, b or c for PSp/POmega) for p = 2.
PowerBound unipotent_class_lower_bound(BoundQuery const &query);
// Lower bound h(d, r, q) for the L-class of an outer automorphism of prime
// order r and type f, g or gf.
PowerBound outer_class_lower_bound(BoundQuery const &query);

BigInt np_threshold(unsigned k);

// Whether d fails to divide (q^d - eps)/((q - eps) gcd(q - eps, d)), q = p^f.
bool ddivx2_check(unsigned d, unsigned p, unsigned f, int eps);

BigInt e6_p3_subdegree(unsigned q);

} // namespace halftrans
