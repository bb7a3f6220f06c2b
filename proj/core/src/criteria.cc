#include "halftrans/criteria.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

#include "halftrans/caps.hpp"
#include "halftrans/error.hpp"
#include "halftrans/formulas.hpp"
#include "halftrans/subgroups.hpp"

namespace halftrans {

std::vector<unsigned> prime_divisors(BigInt n)
{
  std::vector<unsigned> out;
  if (n < 0)
    n = -n;
  for (unsigned r = 2; BigInt(r) * r <= n; ++r) {
    if (n % r != 0)
      continue;
    out.push_back(r);
    while (n % r == 0)
      n /= r;
  }
  if (n > 1)
    out.push_back(static_cast<unsigned>(to_u64(n)));
  return out;
}

bool has_p_subdegree(SuborbitProfile const &profile, unsigned p)
{
  for (auto [len, mult] : profile.entries())
    if (len % p == 0)
      return true;
  return false;
}

bool has_p_subdegree(TransitiveAction const &action, unsigned p)
{
  return has_p_subdegree(suborbits(action), p);
}

Verdict classify(TransitiveAction const &action, std::vector<unsigned> const &extra_primes)
{
  Verdict v;
  v.degree = action.degree();
  v.order = action.group.order();
  v.profile = suborbits(action);
  v.rank = v.profile.rank();
  v.transitive = true;
  v.primitive = is_primitive(action);
  BigInt stab = v.order / v.degree;
  v.regular = stab == 1;
  auto nontrivial = v.profile.nontrivial();
  // |G_ab| = |G_a| / |b^(G_a)|, so two-point stabilizers are trivial exactly
  // when every nontrivial suborbit is regular.
  v.frobenius = !v.regular && std::all_of(nontrivial.begin(), nontrivial.end(),
                                          [&](std::uint64_t l) { return BigInt(l) == stab; });
  v.two_transitive = v.degree >= 2 && v.rank == 2;
  if (v.degree == 2)
    v.three_halves = true;
  else
    v.three_halves = v.degree > 2 && nontrivial.front() > 1 &&
                     std::all_of(nontrivial.begin(), nontrivial.end(),
                                 [&](std::uint64_t l) { return l == nontrivial.front(); });
  std::vector<unsigned> primes = prime_divisors(stab);
  for (auto p : prime_divisors(BigInt(v.degree)))
    primes.push_back(p);
  for (auto p : extra_primes)
    primes.push_back(p);
  for (auto p : primes)
    v.p_subdegree[p] = has_p_subdegree(v.profile, p);
  return v;
}

std::string verdict_json(Verdict const &v, std::string const &label)
{
  nlohmann::ordered_json j;
  if (!label.empty())
    j["label"] = label;
  j["degree"] = v.degree;
  j["order"] = to_string(v.order);
  j["rank"] = v.rank;
  auto prof = nlohmann::ordered_json::array();
  for (auto [len, mult] : v.profile.entries())
    prof.push_back({len, mult});
  j["profile"] = prof;
  j["subdegrees"] = v.profile.str();
  j["transitive"] = v.transitive;
  j["primitive"] = v.primitive;
  j["regular"] = v.regular;
  j["frobenius"] = v.frobenius;
  j["two_transitive"] = v.two_transitive;
  j["three_halves"] = v.three_halves;
  j["wielandt"] = wielandt_check(v);
  auto ps = nlohmann::ordered_json::object();
  for (auto [p, has] : v.p_subdegree)
    ps[std::to_string(p)] = has;
  j["p_subdegree"] = ps;
  return j.dump(2);
}

TripleFactorization triple_factorization(PermGroup const &g, PermGroup const &h, unsigned p,
                                         bool allow_derived)
{
  if (h.order() % p != 0)
    throw InvalidArgument("p = " + std::to_string(p) + " does not divide |H| = " +
                          to_string(h.order()));
  TripleFactorization r;
  PermGroup sylow = sylow_subgroup(h, p);
  r.sylow_order = sylow.order();
  CosetSpace cosets(g, h);
  r.index = cosets.size();

  std::optional<PermGroup> norm;
  try {
    norm = normalizer(g, sylow);
  } catch (CapExceeded const &) {
    if (!allow_derived)
      throw;
  }
  if (!norm) {
    r.derived = true;
    r.holds = !has_p_subdegree(cosets.action("derived"), p);
    return r;
  }
  r.normalizer_order = norm->order();

  // Cosets H n for n in N_G(P): the orbit of H under N_G(P).
  std::vector<char> seen(r.index, 0);
  std::deque<Point> todo{0};
  seen[0] = 1;
  std::vector<Point> seeds;
  while (!todo.empty()) {
    Point i = todo.front();
    todo.pop_front();
    seeds.push_back(i);
    for (auto const &n : norm->generators()) {
      Point j = cosets.point_of(cosets.representative(i) * n);
      if (!seen[j]) {
        seen[j] = 1;
        todo.push_back(j);
      }
    }
  }
  // H N H is the union of the H-orbits of those cosets.
  std::vector<Permutation> hgens;
  for (auto const &x : h.generators())
    hgens.push_back(cosets.image(x));
  std::fill(seen.begin(), seen.end(), 0);
  for (Point s : seeds)
    if (!seen[s]) {
      seen[s] = 1;
      todo.push_back(s);
    }
  while (!todo.empty()) {
    Point i = todo.front();
    todo.pop_front();
    for (auto const &x : hgens)
      if (!seen[x[i]]) {
        seen[x[i]] = 1;
        todo.push_back(x[i]);
      }
  }
  r.covered = static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), 1));
  r.holds = r.covered == r.index;
  return r;
}

bool triple_factorization_holds(PermGroup const &g, PermGroup const &h, unsigned p)
{
  return triple_factorization(g, h, p).holds;
}

SylowCount sylow_count_criterion(PermGroup const &g, PermGroup const &h, unsigned p)
{
  if (h.order() % p != 0)
    throw InvalidArgument("p does not divide |H|");
  PermGroup s = sylow_subgroup(h, p);
  SylowCount r;
  r.in_group = g.order() / normalizer(g, s).order();
  r.in_subgroup = h.order() / normalizer(h, s).order();
  r.applies = r.in_group > np_threshold(static_cast<unsigned>(to_u64(r.in_subgroup)));
  return r;
}

ClassIntersection class_intersection_criterion(PermGroup const &g, PermGroup const &h,
                                               Permutation const &x)
{
  if (!h.contains(x))
    throw InvalidArgument("x is not in H");
  if (x.is_identity())
    throw InvalidArgument("x must be nontrivial");
  if (prime_divisors(x.order()).size() != 1)
    throw InvalidArgument("x must have prime power order");
  auto cls = conjugacy_class(g, x, true);
  ClassIntersection r;
  r.class_size = cls.size;
  std::uint64_t inside = 0;
  for (auto const &y : cls.elements)
    inside += h.contains(y);
  r.intersection = inside;
  r.applies = r.class_size > np_threshold(static_cast<unsigned>(inside));
  return r;
}

std::optional<Permutation> separable_translate(PermGroup const &g, std::vector<Point> const &gamma)
{
  std::vector<char> in(g.degree(), 0);
  for (auto pt : gamma) {
    if (pt >= g.degree())
      throw InvalidArgument("point out of range");
    in[pt] = 1;
  }
  std::optional<Permutation> found;
  for_each_element(g, [&](Permutation const &x) {
    for (auto pt : gamma)
      if (in[x[pt]])
        return true;
    found = x;
    return false;
  });
  return found;
}

bool wielandt_check(Verdict const &v) { return !v.three_halves || v.primitive || v.frobenius; }

bool wielandt_check(TransitiveAction const &action) { return wielandt_check(classify(action)); }

} // namespace halftrans
