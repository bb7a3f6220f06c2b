#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halftrans/perm_group.hpp"

namespace halftrans {

// A transitive permutation group with a distinguished point.
struct TransitiveAction {
  PermGroup group;
  Point basepoint = 0;
  std::string label;
  // Generators of the stabilizer of `basepoint`, when known by construction.
  // Coset actions fill this with the images of the subgroup generators, which
  // spares a stabilizer chain on the (possibly large) action.
  std::optional<std::vector<Permutation>> stabilizer_gens;

  unsigned degree() const { return group.degree(); }
};

// Throws InvalidArgument unless g is transitive.
TransitiveAction make_action(PermGroup g, std::string label, Point basepoint = 0);

class SuborbitProfile {
public:
  SuborbitProfile() = default;
  explicit SuborbitProfile(std::vector<std::uint64_t> const &lengths);
  static SuborbitProfile from_pairs(std::vector<std::pair<std::uint64_t, std::uint64_t>> const &pairs);

  // (length, multiplicity), lengths ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> const &entries() const { return entries_; }
  std::uint64_t degree() const;
  std::uint64_t rank() const;
  // Lengths other than the one trivial suborbit {alpha}.
  std::vector<std::uint64_t> nontrivial() const;
  // "1, 10^2"
  std::string str() const;

  friend bool operator==(SuborbitProfile const &, SuborbitProfile const &) = default;

private:
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_;
};

std::vector<Permutation> stabilizer_generators(TransitiveAction const &a);
// Orbits of the point stabilizer, ordered by smallest point.
std::vector<std::vector<Point>> suborbit_partition(TransitiveAction const &a);
SuborbitProfile suborbits(TransitiveAction const &a);

struct TransitivityReport {
  bool transitive = false;
  bool primitive = false;
  bool regular = false;
  std::uint64_t rank = 0;
};

// Minimal block containing alpha and beta (Atkinson's algorithm).
std::vector<Point> minimal_block(std::vector<Permutation> const &gens, unsigned degree,
                                 Point alpha, Point beta);
bool is_primitive(TransitiveAction const &a);
TransitivityReport transitivity_report(TransitiveAction const &a);
TransitivityReport transitivity_report(PermGroup const &g);

// Right cosets of h in g, numbered in breadth-first order from H itself
// (point 0) under right multiplication by g's generators. A coset is looked
// up by its canonical element: the one whose images of h's base points are
// lexicographically least.
class CosetSpace {
public:
  CosetSpace(PermGroup const &g, PermGroup const &h);

  std::size_t size() const;
  Permutation const &representative(Point i) const;
  // Index of the coset Hx.
  Point point_of(Permutation const &x) const;
  // Permutation induced on the cosets by x in g.
  Permutation image(Permutation const &x) const;
  TransitiveAction action(std::string label) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Right cosets Hx with G acting by right multiplication; point 0 is H itself.
// The images of H's generators become the stabilizer generators of point 0.
TransitiveAction coset_action(PermGroup const &g, PermGroup const &h,
                              std::string label = "coset action");

} // namespace halftrans
