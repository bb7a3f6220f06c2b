#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "halftrans/bigint.hpp"

namespace halftrans {

using Point = std::uint32_t;

// A bijection of {0..degree-1}. Products are read left to right:
// i^(p*q) = (i^p)^q, matching the right actions used throughout.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(unsigned degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(unsigned degree) { return Permutation(degree); }
  static Permutation from_cycles(unsigned degree,
                                 std::vector<std::vector<Point>> const &cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator[](Point i) const { return images_[i]; }
  std::vector<Point> const &images() const { return images_; }

  bool is_identity() const;
  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs);
  Permutation inverse() const;
  Permutation pow(long long e) const;
  // g^-1 * this * g
  Permutation conjugate(Permutation const &g) const;

  std::vector<Point> support() const;
  // Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  BigInt order() const;
  Point smallest_moved_point() const; // degree() if identity

  // 1-indexed disjoint cycle notation, "()" for the identity.
  std::string str() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &a, Permutation const &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);
Permutation power(Permutation const &p, long long e);
std::vector<Point> support(Permutation const &p);

// Parses 1-indexed cycle notation such as "(1,2,3)(4,5)" or "()".
Permutation parse_permutation(std::string_view text, unsigned degree);

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace halftrans
