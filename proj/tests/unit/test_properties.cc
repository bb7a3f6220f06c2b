// Properties of the permutation-group core over small corpora.
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "halftrans/actions.hpp"
#include "halftrans/error.hpp"
#include "halftrans/genfile.hpp"
#include "halftrans/linear_groups.hpp"
#include "halftrans/recipes.hpp"
#include "halftrans/subgroups.hpp"

using namespace halftrans;

namespace {

std::vector<TransitiveAction> corpus()
{
  std::vector<TransitiveAction> out;
  for (auto r : {"sym:5", "alt:6", "dihedral:6", "cyclic:5", "ksets:7:2:alt", "ksets:6:2",
                 "partitions:2:3", "imprimitive:3:2", "product:sym:3:2", "agl1:7", "psl2:8",
                 "psl2dih:8", "subspace:3:2:1", "subspace:4:2:2", "singer:3:2:graph",
                 "sp2forms:2:minus", "diagonal:alt:5"})
    out.push_back(build_recipe(r));
  return out;
}

Permutation random_permutation(unsigned n, std::mt19937_64 &rng)
{
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Every subdegree of K on the cosets of H occurs for G on the cosets of H.
void check_tower(PermGroup const &g, PermGroup const &k, PermGroup const &h)
{
  REQUIRE(is_subgroup(h, k));
  REQUIRE(is_subgroup(k, g));
  auto small = suborbits(coset_action(k, h));
  auto big = suborbits(coset_action(g, h));
  for (auto [len, mult] : small.entries()) {
    CAPTURE(len);
    CHECK(std::any_of(big.entries().begin(), big.entries().end(),
                      [&](auto const &e) { return e.first == len; }));
  }
}

} // namespace

TEST_CASE("orbit examples")
{
  auto s4 = symmetric_group(4);
  CHECK(orbit(s4, 0).size() == 4);
  auto t = build_group({Permutation::from_cycles(3, {{0, 1}})});
  CHECK(orbit(t, 2) == std::vector<Point>{2});
  auto u = build_group({Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}})});
  CHECK(orbit(u, 3) == std::vector<Point>{3, 4});
  CHECK(point_stabilizer(s4, 0).order() == 6);
  CHECK(point_stabilizer(alternating_group(5), 0).order() == 12);
}

TEST_CASE("transitivity reports")
{
  auto d10 = transitivity_report(dihedral_action(5));
  CHECK(d10.transitive);
  CHECK(d10.primitive);
  CHECK_FALSE(d10.regular);
  CHECK(d10.rank == 3);
  CHECK_FALSE(transitivity_report(build_recipe("imprimitive:3:2")).primitive);
  auto c5 = transitivity_report(cyclic_action(5));
  CHECK(c5.regular);
  CHECK(c5.rank == 5);
  auto split = build_group({Permutation::from_cycles(4, {{0, 1}})});
  CHECK_FALSE(transitivity_report(split).transitive);
}

TEST_CASE("coset action examples")
{
  auto s4 = symmetric_group(4);
  auto a = coset_action(s4, point_stabilizer(s4, 3));
  CHECK(a.degree() == 4);
  CHECK(suborbits(a).rank() == 2);
  auto l8 = psl_on_points(2, 8);
  CHECK(coset_action(l8, dihedral_torus_subgroup(8)).degree() == 28);
  auto not_sub = build_group({Permutation::from_cycles(4, {{0, 1}})});
  CHECK_THROWS_AS(coset_action(alternating_group(4), not_sub), InvalidArgument);
}

TEST_CASE("conjugacy classes")
{
  auto a5 = alternating_group(5);
  CHECK(conjugacy_class(a5, Permutation::from_cycles(5, {{0, 1, 2}})).size == 20);
  CHECK(conjugacy_class(a5, Permutation::from_cycles(5, {{0, 1}, {2, 3}})).size == 15);
  auto l9 = psl_on_points(2, 9);
  std::optional<Permutation> u;
  for_each_element(l9, [&](Permutation const &x) {
    if (x.order() == 3 && x.support().size() == 9)
      u = x;
    return !u;
  });
  REQUIRE(u);
  CHECK(conjugacy_class(l9, *u).size == 40);
  CHECK_THROWS_AS(conjugacy_class(a5, Permutation::from_cycles(5, {{0, 1}})), InvalidArgument);
}

TEST_CASE("weak closure")
{
  auto s4 = symmetric_group(4);
  auto d8 = build_group({Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}})});
  CHECK(d8.order() == 8);
  CHECK(is_weakly_closed(s4, d8, d8));
  auto v4 = build_group({Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(is_weakly_closed(s4, d8, v4));
  // <(02)(13)> is the centre of D8; its S4-conjugates <(01)(23)>, <(03)(12)>
  // also lie in D8 but are not D8-conjugate to it.
  auto z = build_group({Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  bool brute = true;
  for (auto const &g : elements(s4)) {
    auto c = build_group({z.generators()[0].conjugate(g)});
    if (!is_subgroup(c, d8))
      continue;
    bool found = false;
    for (auto const &h : elements(d8))
      found = found || subgroup_key(c) == subgroup_key(build_group({z.generators()[0].conjugate(h)}));
    brute = brute && found;
  }
  CHECK(is_weakly_closed(s4, d8, z) == brute);
  CHECK_FALSE(brute);
}

TEST_CASE("orbit-stabilizer and basepoint independence")
{
  for (auto const &a : corpus()) {
    CAPTURE(a.label);
    auto prof = suborbits(a);
    CHECK(prof.degree() == a.degree());
    for (Point pt : {Point(0), Point(a.degree() / 2), Point(a.degree() - 1)}) {
      CHECK(a.group.order() == point_stabilizer(a.group, pt).order() * orbit(a.group, pt).size());
      CHECK(suborbits(make_action(a.group, a.label, pt)) == prof);
    }
  }
}

TEST_CASE("coset action on a point stabilizer reproduces the profile")
{
  for (auto const &a : corpus()) {
    CAPTURE(a.label);
    auto c = coset_action(a.group, point_stabilizer(a.group, a.basepoint));
    CHECK(c.degree() == a.degree());
    CHECK(suborbits(c) == suborbits(a));
  }
}

TEST_CASE("subdegrees of an intermediate group occur in the whole group")
{
  auto s5 = symmetric_group(5);
  auto s4 = pointwise_stabilizer(s5, {4});
  auto s3 = pointwise_stabilizer(s5, {3, 4});
  auto s2 = pointwise_stabilizer(s5, {2, 3, 4});
  check_tower(s5, s4, s3);
  check_tower(s5, s4, s2);
  check_tower(s4, s3, s2);
  auto a4 = build_group({Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{1, 2, 3}})});
  auto v4 = build_group({Permutation::from_cycles(5, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(5, {{0, 2}, {1, 3}})});
  check_tower(s5, s4, a4);
  check_tower(s5, a4, v4);
  auto l8 = psl_on_points(2, 8);
  auto g8 = projective_line_action(8, LineFlavor::PGammaL).group;
  check_tower(g8, l8, dihedral_torus_subgroup(8));
  check_tower(g8, l8, point_stabilizer(l8, 0));
}

TEST_CASE("a normal p-subgroup in the stabilizer forces a p-subdegree")
{
  unsigned checked = 0;
  for (auto const &a : corpus()) {
    auto h = point_stabilizer(a.group, a.basepoint);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      if (h.order() % p != 0 || p_core(h, p).is_trivial())
        continue;
      CAPTURE(a.label);
      CAPTURE(p);
      ++checked;
      bool found = false;
      for (auto [len, mult] : suborbits(a).entries())
        found = found || len % p == 0;
      CHECK(found);
    }
  }
  CHECK(checked >= 8);
}

TEST_CASE("commutator support is at most twice the support")
{
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_permutation(12, rng);
    auto b = random_permutation(12, rng);
    // Sparse a as well, so the bound is not trivially met.
    if (i % 2) {
      auto c = random_permutation(12, rng);
      a = Permutation::from_cycles(12, {{c[0], c[1]}});
      if (i % 4 == 1)
        a = Permutation::from_cycles(12, {{c[0], c[1], c[2]}});
    }
    auto comm = a.inverse() * b.inverse() * a * b;
    CHECK(comm.support().size() <= 2 * a.support().size());
  }
}

TEST_CASE("construction is deterministic")
{
  for (auto const &a : corpus()) {
    auto again = build_group(a.group.generators());
    CHECK(again.order() == a.group.order());
    CHECK(again.chain().base() == a.group.chain().base());
    CHECK(orbit(again, 0) == orbit(a.group, 0));
    CHECK(suborbit_partition(make_action(again, "x")) == suborbit_partition(make_action(a.group, "x")));
  }
  CHECK(format_generator_file(build_recipe("psl2dih:16").group) ==
        format_generator_file(build_recipe("psl2dih:16").group));
}

TEST_CASE("generator files round-trip")
{
  auto a = build_recipe("psl2dih:8");
  auto text = format_generator_file(a.group, "PSL2(8) on 28");
  auto parsed = parse_generator_file(text);
  CHECK(parsed.degree == 28);
  REQUIRE(parsed.order);
  CHECK(*parsed.order == 504);
  CHECK(build_group(parsed.gens).order() == 504);
  CHECK(suborbits(make_action(build_group(parsed.gens), "again")) == suborbits(a));
  CHECK_THROWS_AS(parse_generator_file("(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_generator_file("degree 3\n(1,4)\n"), ParseError);
}
