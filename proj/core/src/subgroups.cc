#include "halftrans/subgroups.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "halftrans/caps.hpp"
#include "halftrans/error.hpp"

namespace halftrans {

ConjugacyClass conjugacy_class(PermGroup const &g, Permutation const &x, bool keep_elements)
{
  if (!g.contains(x))
    throw InvalidArgument("element " + x.str() + " is not in the group");
  std::uint64_t cap = caps().enumeration;
  std::unordered_set<Permutation, PermutationHash> seen{x};
  std::vector<Permutation> queue{x};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &s : g.generators()) {
      Permutation y = queue[i].conjugate(s);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("conjugacy class exceeds enumeration cap " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  ConjugacyClass c;
  c.size = queue.size();
  if (keep_elements)
    c.elements = std::move(queue);
  return c;
}

std::vector<Permutation> subgroup_key(PermGroup const &k)
{
  auto els = elements(k);
  std::sort(els.begin(), els.end());
  return els;
}

namespace {

struct KeyHash {
  std::size_t operator()(std::vector<Permutation> const &v) const noexcept
  {
    PermutationHash h;
    std::size_t r = v.size();
    for (auto const &p : v)
      r = r * 1000003u ^ h(p);
    return r;
  }
};

std::vector<Permutation> conjugate_key(std::vector<Permutation> const &key,
                                       Permutation const &s)
{
  std::vector<Permutation> out;
  out.reserve(key.size());
  for (auto const &x : key)
    out.push_back(x.conjugate(s));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

PermGroup grow_subgroup(unsigned degree, std::vector<Permutation> const &candidates,
                        std::optional<BigInt> const &target,
                        std::vector<Permutation> start)
{
  ChainOptions opts;
  opts.order_bound = target;
  PermGroup cur(degree, start, opts);
  for (auto const &c : candidates) {
    if (target && cur.order() == *target)
      break;
    if (cur.contains(c))
      continue;
    start.push_back(c);
    cur = PermGroup(degree, start, opts);
  }
  return cur;
}

SubgroupOrbit conjugate_subgroups(PermGroup const &g, PermGroup const &k)
{
  if (!is_subgroup(k, g))
    throw InvalidArgument("subgroup is not contained in the group");
  std::uint64_t cap = caps().enumeration;
  BigInt korder = k.order();
  SubgroupOrbit out;
  std::unordered_map<std::vector<Permutation>, std::size_t, KeyHash> index;
  out.keys.push_back(subgroup_key(k));
  out.reps.push_back(Permutation(g.degree()));
  index.emplace(out.keys[0], 0);

  std::vector<Permutation> schreier;
  std::unordered_set<Permutation, PermutationHash> seen_schreier;
  for (std::size_t i = 0; i < out.keys.size(); ++i) {
    for (auto const &s : g.generators()) {
      auto key = conjugate_key(out.keys[i], s);
      auto it = index.find(key);
      if (it == index.end()) {
        if (BigInt(out.keys.size() + 1) * korder > cap)
          throw CapExceeded("conjugate subgroup orbit exceeds enumeration cap");
        index.emplace(key, out.keys.size());
        out.keys.push_back(std::move(key));
        out.reps.push_back(out.reps[i] * s);
      } else {
        Permutation y = out.reps[i] * s * out.reps[it->second].inverse();
        if (!y.is_identity() && seen_schreier.insert(y).second)
          schreier.push_back(std::move(y));
      }
    }
  }
  BigInt target = g.order() / out.keys.size();
  out.stabilizer = grow_subgroup(g.degree(), schreier, target, k.generators());
  if (out.stabilizer.order() != target)
    throw Error("normalizer order mismatch");
  return out;
}

PermGroup normalizer(PermGroup const &g, PermGroup const &k)
{
  return conjugate_subgroups(g, k).stabilizer;
}

BigInt p_part(BigInt n, unsigned p)
{
  BigInt r = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(BigInt n, unsigned p)
{
  if (n < 1)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

PermGroup sylow_subgroup(PermGroup const &g, unsigned p)
{
  BigInt target = p_part(g.order(), p);
  std::vector<Permutation> gens;
  PermGroup cur(g.degree(), gens);
  if (target == 1)
    return cur;
  for_each_element(g, [&](Permutation const &x) {
    if (x.is_identity() || !is_p_power(x.order(), p) || cur.contains(x))
      return true;
    auto trial = gens;
    trial.push_back(x);
    PermGroup cand(g.degree(), trial);
    if (is_p_power(cand.order(), p)) {
      gens = std::move(trial);
      cur = cand;
    }
    return cur.order() != target;
  });
  if (cur.order() != target)
    throw Error("Sylow search failed");
  return cur;
}

PermGroup p_core(PermGroup const &g, unsigned p)
{
  auto sylow = sylow_subgroup(g, p);
  auto orbit = conjugate_subgroups(g, sylow);
  std::vector<Permutation> common = orbit.keys[0];
  for (std::size_t i = 1; i < orbit.keys.size(); ++i) {
    std::vector<Permutation> next;
    std::set_intersection(common.begin(), common.end(), orbit.keys[i].begin(),
                          orbit.keys[i].end(), std::back_inserter(next));
    common = std::move(next);
  }
  return grow_subgroup(g.degree(), common, BigInt(common.size()));
}

PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> const &gens)
{
  ChainOptions opts{{}, g.order()};
  std::vector<Permutation> cur_gens;
  for (auto const &x : gens)
    if (!x.is_identity())
      cur_gens.push_back(x);
  PermGroup cur(g.degree(), cur_gens, opts);
  for (std::size_t i = 0; i < cur_gens.size(); ++i) {
    for (auto const &s : g.generators()) {
      Permutation c = cur_gens[i].conjugate(s);
      if (!cur.contains(c)) {
        cur_gens.push_back(c);
        cur = PermGroup(g.degree(), cur_gens, opts);
      }
    }
  }
  return cur;
}

PermGroup derived_subgroup(PermGroup const &g)
{
  std::vector<Permutation> comms;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(g, comms);
}

bool is_weakly_closed(PermGroup const &g, PermGroup const &h, PermGroup const &h0)
{
  if (!is_subgroup(h, g) || !is_subgroup(h0, h))
    throw InvalidArgument("is_weakly_closed needs h0 <= h <= g");
  auto in_g = conjugate_subgroups(g, h0);
  auto in_h = conjugate_subgroups(h, h0);
  std::vector<std::vector<Permutation>> h_keys = in_h.keys;
  std::sort(h_keys.begin(), h_keys.end());
  for (std::size_t i = 0; i < in_g.keys.size(); ++i) {
    // h0^r lies in h iff its generators do
    bool inside = true;
    for (auto const &x : h0.generators())
      if (!h.contains(x.conjugate(in_g.reps[i]))) {
        inside = false;
        break;
      }
    if (inside && !std::binary_search(h_keys.begin(), h_keys.end(), in_g.keys[i]))
      return false;
  }
  return true;
}

} // namespace halftrans
