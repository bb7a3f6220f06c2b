#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "doctest.h"

#include "halftrans/actions.hpp"
#include "halftrans/error.hpp"
#include "halftrans/formulas.hpp"
#include "halftrans/linear_groups.hpp"
#include "halftrans/subgroups.hpp"

#include "oracles.hpp"

using namespace halftrans;
using namespace halftrans::oracles;

namespace {

BigInt binom(unsigned n, unsigned k)
{
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i)
    r = r * (n - i) / (i + 1);
  return r;
}

} // namespace

TEST_CASE("gaussian coefficient examples")
{
  CHECK(gaussian_coefficient(5, 0, 3) == 1);
  CHECK(gaussian_coefficient(4, 2, 2) == 35);
  CHECK(gaussian_coefficient(3, 1, 3) == 13);
}

TEST_CASE("gaussian coefficient equals brute-force subspace counts")
{
  for (unsigned q : {2u, 3u, 4u})
    for (unsigned m = 1; m <= 5; ++m) {
      auto counts = subspace_counts_brute(m, q);
      for (unsigned i = 0; i <= m; ++i) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(i);
        CHECK(gaussian_coefficient(m, i, q) == counts[i]);
        CHECK(gaussian_coefficient(m, i, q) == gaussian_coefficient(m, m - i, q));
      }
    }
}

TEST_CASE("k-set suborbit sizes")
{
  auto v = k_set_suborbit_sizes(7, 2);
  CHECK(v == std::vector<BigInt>{10, 10, 1});
  CHECK(k_set_suborbit_sizes(6, 2) == std::vector<BigInt>{6, 8, 1});
  CHECK(k_set_suborbit_sizes(9, 1) == std::vector<BigInt>{8, 1});
  for (unsigned n = 2; n <= 20; ++n)
    for (unsigned k = 1; k < n; ++k) {
      BigInt sum = 0;
      for (auto const &x : k_set_suborbit_sizes(n, k))
        sum += x;
      CHECK(sum == binom(n, k));
    }
}

TEST_CASE("subspace action subdegrees")
{
  auto s = subspace_action_subdegrees(4, 2, 2);
  CHECK(s.disjoint == 16);
  REQUIRE(s.codim_one);
  CHECK(*s.codim_one == 18);
  for (unsigned q : {2u, 3u, 4u, 5u})
    CHECK(subspace_action_subdegrees(3, 1, q).disjoint == q * q + q);
  CHECK(subspace_action_subdegrees(6, 3, 2).disjoint == 512);
  // Against constructed actions.
  for (auto [d, q, m] : std::vector<std::array<unsigned, 3>>{{4, 2, 2}, {4, 3, 2}, {5, 2, 2}, {3, 4, 1}}) {
    auto a = subspace_action(d, q, m);
    auto lengths = suborbits(a).entries();
    auto has = [&](BigInt const &x) {
      return std::any_of(lengths.begin(), lengths.end(),
                         [&](auto const &pm) { return BigInt(pm.first) == x; });
    };
    auto f = subspace_action_subdegrees(d, m, q);
    CHECK(BigInt(a.degree()) == gaussian_coefficient(d, m, q));
    CHECK(has(f.disjoint));
    if (f.codim_one)
      CHECK(has(*f.codim_one));
  }
}

TEST_CASE("totally singular subdegrees")
{
  auto v = totally_singular_subdegrees(5, 2);
  std::map<unsigned, BigInt> by_i(v.begin(), v.end());
  CHECK(by_i.at(3) == 155);
  CHECK(by_i.at(1) == 496);
  CHECK_THROWS_AS(totally_singular_subdegrees(4, 2), InvalidArgument);
}

TEST_CASE("transvection counts")
{
  CHECK(transvection_count(ClassicalFamily::PSL, 3, 2) == 21);
  CHECK(transvection_count(ClassicalFamily::PSL, 2, 3) == 8);
  CHECK(transvection_count(ClassicalFamily::PSp, 4, 2) == 15);
  for (auto [d, q] : std::vector<std::array<unsigned, 2>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}})
    CHECK(transvection_count(ClassicalFamily::PSL, d, q) == transvections_brute(d, q));
}

TEST_CASE("torus orders")
{
  auto t = torus_order(TorusFamily::SL, 3, 2);
  CHECK(t.order == 7);
  CHECK(t.ell == 3);
  CHECK(torus_order(TorusFamily::Sp, 4, 2).order == 5);
  CHECK(torus_order(TorusFamily::SU, 3, 2).order == 3);
  // The constructed groups contain such elements.
  for (auto [q, want] : std::vector<std::array<unsigned, 2>>{{2, 7}, {3, 13}}) {
    auto g = psl_on_points(3, q);
    CHECK(torus_order(TorusFamily::SL, 3, q).order == want);
    bool found = false;
    for_each_element(g, [&](Permutation const &x) {
      found = x.order() == BigInt(want);
      return !found;
    });
    CHECK(found);
  }
}

TEST_CASE("unipotent class bound examples")
{
  auto f = unipotent_class_lower_bound({ClassicalFamily::PSL, 2, 9, 1, ""});
  REQUIRE(f.exact());
  CHECK(*f.exact() == Rational(729, 160));
  auto b = unipotent_class_lower_bound({ClassicalFamily::PSp, 4, 2, 1, "b"});
  CHECK(*b.exact() == 8);
  auto t = unipotent_class_lower_bound({ClassicalFamily::PSL, 3, 2, 1, ""});
  CHECK(*t.exact() == Rational(16, 3));
}

TEST_CASE("bound dominance against brute-force class sizes")
{
  for (auto [d, q] : std::vector<std::array<unsigned, 2>>{{2, 4}, {2, 8}, {2, 9}, {3, 2}, {3, 3}}) {
    auto classes = unipotent_classes(d, q);
    CHECK(!classes.empty());
    for (auto const &c : classes) {
      CAPTURE(d);
      CAPTURE(q);
      CAPTURE(c.nu);
      BoundQuery bq{ClassicalFamily::PSL, d, q, c.nu, ""};
      if (q % 2 == 0 && 2 * c.nu > d)
        continue; // only involutions [J2^s, I] are tabulated in characteristic 2
      CHECK(unipotent_class_lower_bound(bq).exceeded_by(c.size));
    }
  }
  // Sp4(2)' = A6 on 6 points: involutions are double transpositions, nu = 2.
  auto a6 = alternating_group(6);
  auto cls = conjugacy_class(a6, Permutation::from_cycles(6, {{0, 1}, {2, 3}}));
  CHECK(cls.size == 45);
  CHECK(unipotent_class_lower_bound({ClassicalFamily::PSp, 4, 2, 2, "a"}).exceeded_by(cls.size));
  CHECK(unipotent_class_lower_bound({ClassicalFamily::PSp, 4, 2, 2, "c"}).exceeded_by(cls.size));
}

TEST_CASE("outer class bound examples")
{
  auto h = outer_class_lower_bound({ClassicalFamily::PSL, 2, 9, 2, "f"});
  CHECK(h.exponent == Rational(1, 2));
  CHECK(h.compare(Rational(3, 2)) == 0);
  CHECK(*outer_class_lower_bound({ClassicalFamily::PSp, 4, 4, 2, "f"}).exact() == 256);
  CHECK(*outer_class_lower_bound({ClassicalFamily::POmegaPlus, 8, 2, 3, "g"}).exact() == 2048);
}

TEST_CASE("row guards reject out-of-table queries")
{
  CHECK_THROWS_AS(unipotent_class_lower_bound({ClassicalFamily::PSp, 3, 3, 1, ""}), InvalidArgument);
  CHECK_THROWS_AS(unipotent_class_lower_bound({ClassicalFamily::PSp, 4, 2, 1, "a"}), InvalidArgument);
  CHECK_THROWS_AS(outer_class_lower_bound({ClassicalFamily::PSL, 3, 4, 4, "f"}), InvalidArgument);
}

TEST_CASE("np threshold, ddivx2, e6 subdegree")
{
  CHECK(np_threshold(1) == 1);
  CHECK(np_threshold(2) == 3);
  CHECK(np_threshold(10) == 91);
  CHECK(ddivx2_check(3, 2, 2, 1));
  CHECK(ddivx2_check(5, 2, 1, 1));
  CHECK(ddivx2_check(3, 7, 1, 1));
  for (unsigned d : {3u, 5u, 7u, 11u})
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
      for (unsigned f = 1; f <= 4; ++f)
        for (int eps : {1, -1}) {
          CAPTURE(d);
          CAPTURE(p);
          CAPTURE(f);
          CAPTURE(eps);
          CHECK(ddivx2_check(d, p, f, eps));
        }
  CHECK(e6_p3_subdegree(2) == BigInt(81264640));
  // 3^19 * 10 * 121
  CHECK(e6_p3_subdegree(3) == BigInt(1162261467) * 10 * 121);
  CHECK(e6_p3_subdegree(3) == BigInt("1406336375070"));
}
