#pragma once

#include <string>

#include "halftrans/action.hpp"

namespace halftrans {

enum class SymKind { Sym, Alt };

PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup sym_or_alt(SymKind kind, unsigned n);

// Sym needs n >= 2, Alt n >= 3.
TransitiveAction natural_action(SymKind kind, unsigned n);

// k-subsets of {0..n-1} in colexicographic order.
TransitiveAction k_subset_action(SymKind kind, unsigned n, unsigned k);

// Partitions of {0..kl-1} into l parts of size k. A partition is written with
// each part sorted and the parts ordered by their least element; points are
// these forms in lexicographic order.
TransitiveAction partition_action(SymKind kind, unsigned k, unsigned l);

// H Wr top on Delta^k, tuples in row-major order (first coordinate most
// significant). Rejects k < 2 and intransitive top groups.
TransitiveAction product_action(TransitiveAction const &component, unsigned k,
                                PermGroup const &top);

// T x T on the elements of T (sorted), (a, b): x -> a^-1 x b. Only k = 2.
TransitiveAction diagonal_action(PermGroup const &t, unsigned k = 2);

// A_p on the cosets of AGL_1(p) meet A_p.
TransitiveAction agl1_coset_action(unsigned p);

// Dihedral group of order 2n and cyclic group of order n on n points.
TransitiveAction dihedral_action(unsigned n);
TransitiveAction cyclic_action(unsigned n);

// Coset action from two generator files; the subgroup must lie in the group.
TransitiveAction ingest_action(std::string const &group_file, std::string const &subgroup_file);

} // namespace halftrans
