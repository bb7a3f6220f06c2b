#include <algorithm>

#include "doctest.h"

#include "halftrans/error.hpp"
#include "halftrans/linear_groups.hpp"
#include "halftrans/psl2_char.hpp"

#include "oracles.hpp"

using namespace halftrans;
using halftrans::oracles::prime_by_trial_division;

namespace {

std::vector<std::uint64_t> sizes(std::vector<std::vector<unsigned>> const &orbits)
{
  std::vector<std::uint64_t> out;
  for (auto const &o : orbits)
    out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("character classes")
{
  CHECK(chi_classes(4) == std::vector<unsigned>{1});
  CHECK(chi_classes(8) == std::vector<unsigned>{1, 2, 3});
  CHECK(chi_classes(16) == std::vector<unsigned>{1, 2, 3, 4, 5, 6, 7});
  CHECK_THROWS_AS(chi_classes(9), InvalidArgument);
  CHECK_THROWS_AS(chi_classes(2), InvalidArgument);
}

TEST_CASE("galois orbits")
{
  CHECK(galois_orbits(8, 3) == std::vector<std::vector<unsigned>>{{1, 2, 3}});
  CHECK(galois_orbit_sizes(16, 4) == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(galois_orbits(16, 4) == std::vector<std::vector<unsigned>>{{1, 2, 4, 7}, {3, 6}, {5}});
  CHECK(galois_orbit_sizes(32, 5) == std::vector<std::uint64_t>{5, 5, 5});
  CHECK(galois_orbits(16, 2) ==
        std::vector<std::vector<unsigned>>{{1, 4}, {2, 7}, {3}, {5}, {6}});
  CHECK_THROWS_AS(galois_orbits(16, 3), InvalidArgument);
}

TEST_CASE("predicted profiles")
{
  CHECK(predicted_profile(8, 1).str() == "1, 9^3");
  CHECK(predicted_profile(32, 5).str() == "1, 165^3");
  CHECK(predicted_profile(16, 2).str() == "1, 17^3, 34^2");
  CHECK(predicted_profile(8, 3).str() == "1, 27");
  for (unsigned f = 2; f <= 10; ++f)
    for (unsigned m = 1; m <= f; ++m) {
      if (f % m)
        continue;
      unsigned q = 1u << f;
      CHECK(predicted_profile(q, m).degree() == std::uint64_t(q) * (q - 1) / 2);
    }
}

TEST_CASE("predicted profile matches the coset action")
{
  for (unsigned f : {2u, 3u, 4u, 5u})
    for (unsigned m = 1; m <= f; ++m) {
      if (f % m)
        continue;
      unsigned q = 1u << f;
      CAPTURE(q);
      CAPTURE(m);
      auto a = psl2_dihedral_action(q, m);
      auto computed = suborbits(a);
      CHECK(computed == predicted_profile(q, m));
      if (q >= 8) {
        bool even = false;
        for (auto [len, mult] : computed.entries())
          even = even || len % 2 == 0;
        CHECK(even == even_subdegree_exists(q, m));
      }
    }
  // q = 4: PSL2(4).2 = S5 on 6 points is 2-transitive with odd subdegree 5.
  CHECK(suborbits(psl2_dihedral_action(4, 2)).str() == "1, 5");
}

TEST_CASE("strong three-halves")
{
  CHECK(is_strongly_three_halves(8, 3));
  CHECK_FALSE(is_strongly_three_halves(16, 4));
  CHECK_FALSE(is_strongly_three_halves(16, 2));
  CHECK(is_strongly_three_halves(64, 1));
  for (unsigned f = 2; f <= 12; ++f)
    for (unsigned m = 1; m <= f; ++m) {
      if (f % m || !is_strongly_three_halves(1u << f, m))
        continue;
      auto nt = predicted_profile(1u << f, m).nontrivial();
      CHECK(std::all_of(nt.begin(), nt.end(), [&](auto l) { return l == nt.front(); }));
    }
}

TEST_CASE("QI fields")
{
  CHECK(is_QI(8));
  CHECK_FALSE(is_QI(16));
  CHECK(is_QI(8192));
  for (unsigned f = 2; f <= 31; ++f) {
    CAPTURE(f);
    CHECK(lucas_lehmer(f) == prime_by_trial_division((std::uint64_t(1) << f) - 1));
  }
  for (unsigned f : {2u, 3u, 5u, 7u, 13u})
    if (is_QI(1u << f))
      CHECK(is_strongly_three_halves(1u << f, f));
  CHECK(sizes(galois_orbits(8192, 13)) == std::vector<std::uint64_t>(315, 13));
}

TEST_CASE("even subdegree rule")
{
  CHECK_FALSE(even_subdegree_exists(8, 1));
  CHECK(even_subdegree_exists(16, 2));
  CHECK(even_subdegree_exists(4, 2));
}
