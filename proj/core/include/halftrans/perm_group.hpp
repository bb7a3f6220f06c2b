#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "halftrans/bigint.hpp"
#include "halftrans/permutation.hpp"

namespace halftrans {

struct ChainOptions {
  // Base points forced to the front of the base, in order.
  std::vector<Point> base_prefix;
  // An upper bound for the group order. Once the chain reaches it the
  // construction stops early; this is sound because a partial chain never
  // overcounts. If it is never reached the full deterministic test runs.
  std::optional<BigInt> order_bound;
};

// Base and strong generating set built by deterministic Schreier-Sims.
class StabChain {
public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> inv_gens;
    std::vector<Point> orbit;         // BFS order
    std::vector<std::int32_t> label;  // -1 outside orbit, -2 root, else index into gens
  };

  StabChain() = default;
  StabChain(unsigned degree, std::vector<Permutation> const &gens,
            ChainOptions const &opts);

  unsigned degree() const { return degree_; }
  std::vector<Level> const &levels() const { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;

  // Element u of level i with base^u = point. point must lie in the orbit.
  Permutation transversal(std::size_t level, Point point) const;
  // Replaces x by x * u^-1, u the level-i transversal element with base^u = base^x.
  void strip_level(std::size_t level, Permutation &x) const;
  // Sifts x through the chain from `from`; returns the residue and the level
  // at which sifting stopped (levels().size() if it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation x, std::size_t from = 0) const;
  bool contains(Permutation const &x) const;

  // Calls f on every group element, in the order of the product of transversals.
  void for_each_element(std::function<bool(Permutation const &)> const &f) const;

private:
  unsigned degree_ = 0;
  std::vector<Level> levels_;

  void extend_orbit(Level &lv) const;
  void add_level(Point base);
  void add_generator(std::size_t level, Permutation const &g);
  BigInt partial_order() const;
};

class PermGroup {
public:
  PermGroup() = default;
  PermGroup(unsigned degree, std::vector<Permutation> gens, ChainOptions opts = {});

  unsigned degree() const;
  std::vector<Permutation> const &generators() const;
  StabChain const &chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(Permutation const &x) const { return chain().contains(x); }
  bool is_trivial() const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Throws InvalidArgument on an empty list or unequal degrees.
PermGroup build_group(std::vector<Permutation> const &gens);

std::vector<Point> orbit(PermGroup const &g, Point point);
std::vector<Point> orbit(std::vector<Permutation> const &gens, unsigned degree,
                         Point point);
// Orbit partition of {0..degree-1}, orbits in order of their smallest point.
std::vector<std::vector<Point>> orbits(std::vector<Permutation> const &gens,
                                       unsigned degree);
PermGroup point_stabilizer(PermGroup const &g, Point point);
// Stabilizer of a sequence of points (pointwise).
PermGroup pointwise_stabilizer(PermGroup const &g, std::vector<Point> const &points);
bool is_transitive(PermGroup const &g);

// Subgroup test on generators.
bool is_subgroup(PermGroup const &h, PermGroup const &g);

// Action of g on one of its orbits, points renumbered by position in `orbit`.
PermGroup restrict_to_orbit(PermGroup const &g, std::vector<Point> const &orbit);

// Calls f on each element (stops when f returns false). Enforces the
// enumeration cap.
void for_each_element(PermGroup const &g,
                      std::function<bool(Permutation const &)> const &f);
std::vector<Permutation> elements(PermGroup const &g);

} // namespace halftrans
