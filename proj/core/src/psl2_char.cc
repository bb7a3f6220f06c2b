#include "halftrans/psl2_char.hpp"

#include <algorithm>

#include "halftrans/error.hpp"
#include "halftrans/finite_field.hpp"

namespace halftrans {

namespace {

unsigned log2_exact(unsigned q)
{
  if (q < 4 || (q & (q - 1)))
    throw InvalidArgument("q must be 2^f >= 4");
  unsigned f = 0;
  while ((1u << f) < q)
    ++f;
  return f;
}

void check_m(unsigned f, unsigned m)
{
  if (m == 0 || f % m)
    throw InvalidArgument("m must divide f = " + std::to_string(f));
}

} // namespace

std::vector<unsigned> chi_classes(unsigned q)
{
  log2_exact(q);
  std::vector<unsigned> out;
  for (unsigned j = 1; j <= (q - 2) / 2; ++j)
    out.push_back(j);
  return out;
}

std::vector<std::vector<unsigned>> galois_orbits(unsigned q, unsigned m)
{
  unsigned f = log2_exact(q);
  check_m(f, m);
  unsigned n = q - 1, mult = 1u << (f / m);
  auto canon = [n](unsigned j) { return std::min(j, n - j); };
  std::vector<bool> seen(n, false);
  std::vector<std::vector<unsigned>> out;
  for (unsigned j : chi_classes(q)) {
    if (seen[j])
      continue;
    std::vector<unsigned> orb;
    for (unsigned x = j; !seen[x]; x = canon(static_cast<unsigned>(std::uint64_t(x) * mult % n))) {
      seen[x] = true;
      orb.push_back(x);
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::uint64_t> galois_orbit_sizes(unsigned q, unsigned m)
{
  std::vector<std::uint64_t> out;
  for (auto const &o : galois_orbits(q, m))
    out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

SuborbitProfile predicted_profile(unsigned q, unsigned m)
{
  std::vector<std::uint64_t> lengths{1};
  for (auto s : galois_orbit_sizes(q, m))
    lengths.push_back(std::uint64_t(q + 1) * s);
  return SuborbitProfile(lengths);
}

bool is_strongly_three_halves(unsigned q, unsigned m)
{
  if (m == 1) {
    check_m(log2_exact(q), m);
    return true;
  }
  // Constituents of the permutation character correspond to orbits, of
  // degree (q+1) times the orbit size. For q >= 8 the orbit of class 1 has
  // size m, so this is semiregularity; q = 4 has a single fixed class.
  auto s = galois_orbit_sizes(q, m);
  return std::all_of(s.begin(), s.end(), [&](std::uint64_t x) { return x == s.front(); });
}

bool lucas_lehmer(unsigned f)
{
  if (f == 2)
    return true;
  if (f < 2 || !is_prime(f))
    return false;
  BigInt mp = (BigInt(1) << f) - 1, s = 4;
  for (unsigned i = 0; i + 2 < f; ++i)
    s = (s * s - 2) % mp;
  return s == 0;
}

bool is_QI(unsigned q) { return lucas_lehmer(log2_exact(q)); }

bool even_subdegree_exists(unsigned q, unsigned m)
{
  check_m(log2_exact(q), m);
  return m % 2 == 0;
}

} // namespace halftrans
