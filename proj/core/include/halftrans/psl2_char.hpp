#pragma once

#include <cstdint>
#include <vector>

#include "halftrans/action.hpp"

namespace halftrans {

// Characters of PSL_2(2^f) of degree q+1 are indexed by j in {1..q-2} with j
// and q-1-j identified; each class is represented by min(j, q-1-j).
std::vector<unsigned> chi_classes(unsigned q);

// Orbits of the order-m field automorphism group on chi_classes(q): the
// generator multiplies indices by 2^(f/m) mod q-1. Orbits are listed by their
// least member, each orbit sorted.
std::vector<std::vector<unsigned>> galois_orbits(unsigned q, unsigned m);
std::vector<std::uint64_t> galois_orbit_sizes(unsigned q, unsigned m); // sorted

// Subdegrees of PSL_2(q).m on q(q-1)/2 points: 1 and (q+1) times each orbit size.
SuborbitProfile predicted_profile(unsigned q, unsigned m);

// All Galois orbits on the classes have the same size (semiregular action
// for q >= 8).
bool is_strongly_three_halves(unsigned q, unsigned m);

// 2^f - 1 prime. Lucas-Lehmer for odd prime f.
bool is_QI(unsigned q);
bool lucas_lehmer(unsigned f);

// m even.
bool even_subdegree_exists(unsigned q, unsigned m);

} // namespace halftrans
