#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.

#include <cstdint>
#include <vector>

#include "halftrans/linear_groups.hpp"

namespace halftrans::oracles {

// Number of i-dimensional subspaces of GF(q)^m for i = 0..m.
std::vector<std::size_t> subspace_counts_brute(unsigned m, unsigned q);

// The matrix whose entries, row by row, are the base-q digits of code.
Matrix matrix_from_code(FieldPtr const &F, unsigned d, unsigned code);

struct UnipotentClass {
  unsigned nu;
  BigInt size;
};
// Classes of elements of order p in PSL_d(q) with their nu, found by running
// over all d x d matrices of determinant 1.
std::vector<UnipotentClass> unipotent_classes(unsigned d, unsigned q);

// Images in PSL_d(q) of the matrices x with x - 1 of rank 1 and square zero.
BigInt transvections_brute(unsigned d, unsigned q);

// Sizes of all conjugacy classes, from the element list.
std::vector<BigInt> class_sizes(PermGroup const &g);

bool prime_by_trial_division(std::uint64_t n);

} // namespace halftrans::oracles
