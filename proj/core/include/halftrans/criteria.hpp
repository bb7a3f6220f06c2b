#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halftrans/action.hpp"

namespace halftrans {

struct Verdict {
  std::uint64_t degree = 0;
  std::uint64_t rank = 0;
  BigInt order;
  SuborbitProfile profile;
  bool transitive = false;
  bool primitive = false;
  bool regular = false;
  bool frobenius = false;
  bool two_transitive = false;
  bool three_halves = false;
  // Primes dividing the point stabilizer order or the degree.
  std::map<unsigned, bool> p_subdegree;
};

Verdict classify(TransitiveAction const &action, std::vector<unsigned> const &extra_primes = {});
// Keys in fixed order; byte-stable for equal verdicts.
std::string verdict_json(Verdict const &v, std::string const &label = "");

bool has_p_subdegree(SuborbitProfile const &profile, unsigned p);
bool has_p_subdegree(TransitiveAction const &action, unsigned p);

std::vector<unsigned> prime_divisors(BigInt n);

struct TripleFactorization {
  bool holds = false;
  // True when N_G(P) was out of reach and the answer was taken from the
  // subdegrees instead (only with allow_derived).
  bool derived = false;
  BigInt sylow_order;
  BigInt normalizer_order;
  std::uint64_t covered = 0; // cosets reached by H N_G(P) H
  std::uint64_t index = 0;
};

// Whether G = H N_G(P) H for P a Sylow p-subgroup of H, by expanding the
// H-orbits of the cosets H n, n in N_G(P). Throws unless p divides |H|.
TripleFactorization triple_factorization(PermGroup const &g, PermGroup const &h, unsigned p,
                                         bool allow_derived = false);
bool triple_factorization_holds(PermGroup const &g, PermGroup const &h, unsigned p);

struct SylowCount {
  bool applies = false;
  BigInt in_group;    // |S^G|
  BigInt in_subgroup; // |S^H|
};
SylowCount sylow_count_criterion(PermGroup const &g, PermGroup const &h, unsigned p);

struct ClassIntersection {
  bool applies = false;
  BigInt class_size;   // |x^G|
  BigInt intersection; // |x^G meet H|
};
// x in H of prime power order.
ClassIntersection class_intersection_criterion(PermGroup const &g, PermGroup const &h,
                                               Permutation const &x);

// Some g with gamma^g disjoint from gamma, scanning elements in chain order.
std::optional<Permutation> separable_translate(PermGroup const &g, std::vector<Point> const &gamma);

// Not three-halves, or primitive, or Frobenius.
bool wielandt_check(Verdict const &v);
bool wielandt_check(TransitiveAction const &action);

} // namespace halftrans
