#include "halftrans/action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "halftrans/caps.hpp"
#include "halftrans/error.hpp"

namespace halftrans {

TransitiveAction make_action(PermGroup g, std::string label, Point basepoint)
{
  if (!is_transitive(g))
    throw InvalidArgument("action '" + label + "' is not transitive");
  if (basepoint >= g.degree())
    throw InvalidArgument("basepoint out of range");
  TransitiveAction a;
  a.group = std::move(g);
  a.basepoint = basepoint;
  a.label = std::move(label);
  return a;
}

// ---------------------------------------------------------------- profile

SuborbitProfile::SuborbitProfile(std::vector<std::uint64_t> const &lengths)
{
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto l : lengths)
    ++counts[l];
  entries_.assign(counts.begin(), counts.end());
}

SuborbitProfile SuborbitProfile::from_pairs(
  std::vector<std::pair<std::uint64_t, std::uint64_t>> const &pairs)
{
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto [len, mult] : pairs)
    counts[len] += mult;
  SuborbitProfile p;
  p.entries_.assign(counts.begin(), counts.end());
  return p;
}

std::uint64_t SuborbitProfile::degree() const
{
  std::uint64_t d = 0;
  for (auto [len, mult] : entries_)
    d += len * mult;
  return d;
}

std::uint64_t SuborbitProfile::rank() const
{
  std::uint64_t r = 0;
  for (auto [len, mult] : entries_)
    r += mult;
  return r;
}

std::vector<std::uint64_t> SuborbitProfile::nontrivial() const
{
  std::vector<std::uint64_t> out;
  bool skipped = false;
  for (auto [len, mult] : entries_)
    for (std::uint64_t i = 0; i < mult; ++i) {
      if (len == 1 && !skipped) {
        skipped = true;
        continue;
      }
      out.push_back(len);
    }
  return out;
}

std::string SuborbitProfile::str() const
{
  std::string s;
  for (auto [len, mult] : entries_) {
    if (!s.empty())
      s += ", ";
    s += std::to_string(len);
    if (mult > 1)
      s += "^" + std::to_string(mult);
  }
  return s;
}

// ---------------------------------------------------------------- suborbits

std::vector<Permutation> stabilizer_generators(TransitiveAction const &a)
{
  if (a.stabilizer_gens)
    return *a.stabilizer_gens;
  return point_stabilizer(a.group, a.basepoint).generators();
}

std::vector<std::vector<Point>> suborbit_partition(TransitiveAction const &a)
{
  if (!is_transitive(a.group))
    throw InvalidArgument("suborbits of an intransitive group are not defined");
  return orbits(stabilizer_generators(a), a.degree());
}

SuborbitProfile suborbits(TransitiveAction const &a)
{
  std::vector<std::uint64_t> lengths;
  for (auto const &o : suborbit_partition(a))
    lengths.push_back(o.size());
  return SuborbitProfile(lengths);
}

// ---------------------------------------------------------------- blocks

std::vector<Point> minimal_block(std::vector<Permutation> const &gens, unsigned degree,
                                 Point alpha, Point beta)
{
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](Point a, Point b) {
    if (a > b)
      std::swap(a, b);
    parent[b] = a;
  };
  std::deque<std::pair<Point, Point>> queue;
  Point ra = find(alpha), rb = find(beta);
  if (ra != rb) {
    unite(ra, rb);
    queue.emplace_back(alpha, beta);
  }
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (auto const &g : gens) {
      Point c = find(g[a]), d = find(g[b]);
      if (c != d) {
        unite(c, d);
        queue.emplace_back(c, d);
      }
    }
  }
  std::vector<Point> block;
  Point root = find(alpha);
  for (Point x = 0; x < degree; ++x)
    if (find(x) == root)
      block.push_back(x);
  return block;
}

bool is_primitive(TransitiveAction const &a)
{
  if (!is_transitive(a.group))
    return false;
  if (a.degree() <= 2)
    return true;
  // A block through alpha is a union of suborbits, so one beta per suborbit suffices.
  for (auto const &orb : suborbit_partition(a)) {
    Point beta = *std::min_element(orb.begin(), orb.end());
    if (beta == a.basepoint)
      continue;
    auto block = minimal_block(a.group.generators(), a.degree(), a.basepoint, beta);
    if (block.size() < a.degree())
      return false;
  }
  return true;
}

TransitivityReport transitivity_report(TransitiveAction const &a)
{
  TransitivityReport r;
  r.transitive = is_transitive(a.group);
  if (!r.transitive)
    return r;
  auto stab = stabilizer_generators(a);
  r.regular = std::all_of(stab.begin(), stab.end(),
                          [](Permutation const &x) { return x.is_identity(); });
  r.rank = suborbits(a).rank();
  r.primitive = is_primitive(a);
  return r;
}

TransitivityReport transitivity_report(PermGroup const &g)
{
  if (!is_transitive(g))
    return {};
  TransitiveAction a;
  a.group = g;
  return transitivity_report(a);
}

// ---------------------------------------------------------------- cosets

namespace {

// Canonical element of the right coset Hy: the element hy whose images of
// H's base points are lexicographically least.
class CosetCanonizer {
public:
  explicit CosetCanonizer(PermGroup const &h)
  {
    auto const &chain = h.chain();
    for (std::size_t i = 0; i < chain.levels().size(); ++i) {
      auto const &lv = chain.levels()[i];
      Level l;
      l.base = lv.base;
      l.orbit = lv.orbit;
      for (Point b : lv.orbit)
        l.u.push_back(chain.transversal(i, b));
      levels_.push_back(std::move(l));
    }
  }

  Permutation operator()(Permutation cur) const
  {
    for (auto const &l : levels_) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < l.orbit.size(); ++j)
        if (cur[l.orbit[j]] < cur[l.orbit[best]])
          best = j;
      if (best != 0)
        cur = l.u[best] * cur;
    }
    return cur;
  }

private:
  struct Level {
    Point base;
    std::vector<Point> orbit;
    std::vector<Permutation> u;
  };
  std::vector<Level> levels_;
};

} // namespace

struct CosetSpace::Impl {
  PermGroup g, h;
  CosetCanonizer canon;
  std::vector<Permutation> reps;
  std::unordered_map<Permutation, Point, PermutationHash> lookup;
  std::vector<Permutation> gen_images;

  Impl(PermGroup const &g_, PermGroup const &h_) : g(g_), h(h_), canon(h_) {}
};

CosetSpace::CosetSpace(PermGroup const &g, PermGroup const &h)
{
  if (g.degree() != h.degree())
    throw InvalidArgument("group and subgroup have different degrees");
  for (auto const &x : h.generators())
    if (!g.contains(x))
      throw InvalidArgument("subgroup generator " + x.str() + " is not in the group");
  BigInt index = g.order() / h.order();
  check_cap(index, caps().coset_index, "coset index");
  auto n = static_cast<std::size_t>(to_u64(index));

  impl_ = std::make_shared<Impl>(g, h);
  auto &reps = impl_->reps;
  auto &lookup = impl_->lookup;
  auto const &canon = impl_->canon;
  reps.reserve(n);
  reps.emplace_back(g.degree());
  lookup.emplace(canon(reps[0]), 0);

  auto const &gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size(), std::vector<Point>(n));
  for (std::size_t idx = 0; idx < reps.size(); ++idx) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = reps[idx] * gens[k];
      auto [it, inserted] = lookup.emplace(canon(y), static_cast<Point>(reps.size()));
      if (inserted) {
        if (reps.size() == n)
          throw Error("coset enumeration found more cosets than the index");
        reps.push_back(std::move(y));
      }
      images[k][idx] = it->second;
    }
  }
  if (reps.size() != n)
    throw Error("coset enumeration found fewer cosets than the index");
  for (auto &img : images)
    impl_->gen_images.emplace_back(std::move(img));
}

std::size_t CosetSpace::size() const { return impl_->reps.size(); }

Permutation const &CosetSpace::representative(Point i) const { return impl_->reps.at(i); }

Point CosetSpace::point_of(Permutation const &x) const
{
  auto it = impl_->lookup.find(impl_->canon(x));
  if (it == impl_->lookup.end())
    throw InvalidArgument("element is not in the group");
  return it->second;
}

Permutation CosetSpace::image(Permutation const &x) const
{
  std::vector<Point> img(size());
  for (std::size_t idx = 0; idx < img.size(); ++idx)
    img[idx] = point_of(impl_->reps[idx] * x);
  return Permutation(std::move(img));
}

TransitiveAction CosetSpace::action(std::string label) const
{
  std::vector<Permutation> stab;
  for (auto const &x : impl_->h.generators())
    stab.push_back(image(x));
  TransitiveAction a;
  a.group = PermGroup(static_cast<unsigned>(size()), impl_->gen_images,
                      ChainOptions{{}, impl_->g.order()});
  a.basepoint = 0;
  a.label = std::move(label);
  a.stabilizer_gens = std::move(stab);
  return a;
}

TransitiveAction coset_action(PermGroup const &g, PermGroup const &h, std::string label)
{
  return CosetSpace(g, h).action(std::move(label));
}

} // namespace halftrans
