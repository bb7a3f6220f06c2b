#pragma once

#include <optional>
#include <vector>

#include "halftrans/perm_group.hpp"

namespace halftrans {

struct ConjugacyClass {
  BigInt size;
  std::vector<Permutation> elements; // empty unless requested
};

// Orbit of x under conjugation by the generators of g. Throws InvalidArgument
// if x is not in g and CapExceeded if the class outgrows the enumeration cap.
ConjugacyClass conjugacy_class(PermGroup const &g, Permutation const &x,
                               bool keep_elements = false);

// Sorted element list; identifies a subgroup independently of its generators.
std::vector<Permutation> subgroup_key(PermGroup const &k);

struct SubgroupOrbit {
  std::vector<std::vector<Permutation>> keys; // conjugates K^r, first is K
  std::vector<Permutation> reps;              // K^reps[i] = keys[i]
  PermGroup stabilizer;                       // N_G(K)
};

// Conjugates of k under g, with the normalizer as the stabilizer of k.
SubgroupOrbit conjugate_subgroups(PermGroup const &g, PermGroup const &k);
PermGroup normalizer(PermGroup const &g, PermGroup const &k);

BigInt p_part(BigInt n, unsigned p);
bool is_p_power(BigInt n, unsigned p);

// A Sylow p-subgroup, grown greedily over the elements of g in enumeration order.
PermGroup sylow_subgroup(PermGroup const &g, unsigned p);
// Largest normal p-subgroup: intersection of the Sylow p-subgroups.
PermGroup p_core(PermGroup const &g, unsigned p);

PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> const &gens);
PermGroup derived_subgroup(PermGroup const &g);

// True iff every G-conjugate of h0 lying in h is already an h-conjugate of h0.
bool is_weakly_closed(PermGroup const &g, PermGroup const &h, PermGroup const &h0);

// Greedily extends gens by elements not yet generated; `target` stops early.
PermGroup grow_subgroup(unsigned degree, std::vector<Permutation> const &candidates,
                        std::optional<BigInt> const &target = std::nullopt,
                        std::vector<Permutation> start = {});

} // namespace halftrans
