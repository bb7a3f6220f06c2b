#include "halftrans/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "halftrans/caps.hpp"
#include "halftrans/error.hpp"

namespace halftrans {

// ---------------------------------------------------------------- StabChain

StabChain::StabChain(unsigned degree, std::vector<Permutation> const &gens,
                     ChainOptions const &opts)
  : degree_(degree)
{
  std::vector<Permutation> strong;
  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                            " differs from group degree " + std::to_string(degree));
    if (g.is_identity() || std::find(strong.begin(), strong.end(), g) != strong.end())
      continue;
    strong.push_back(g);
  }

  for (Point b : opts.base_prefix) {
    if (b >= degree)
      throw InvalidArgument("base point out of range");
    for (auto const &lv : levels_)
      if (lv.base == b)
        throw InvalidArgument("repeated base point");
    add_level(b);
  }
  for (auto const &s : strong) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](Level const &lv) { return s[lv.base] == lv.base; });
    if (fixes_base)
      add_level(s.smallest_moved_point());
  }
  for (auto const &s : strong) {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      levels_[i].gens.push_back(s);
      levels_[i].inv_gens.push_back(s.inverse());
      if (s[levels_[i].base] != levels_[i].base)
        break;
    }
  }
  for (auto &lv : levels_)
    extend_orbit(lv);

  auto done = [&] { return opts.order_bound && partial_order() >= *opts.order_bound; };
  if (done())
    return;

  // Deterministic Schreier-Sims, processing levels from the bottom up.
  std::size_t i = levels_.size();
  while (i >= 1) {
    std::size_t cur = i - 1;
    bool added = false;
    for (std::size_t oi = 0; oi < levels_[cur].orbit.size() && !added; ++oi) {
      Point beta = levels_[cur].orbit[oi];
      Permutation u = transversal(cur, beta);
      for (std::size_t k = 0; k < levels_[cur].gens.size(); ++k) {
        Permutation y = u * levels_[cur].gens[k];
        strip_level(cur, y);
        if (y.is_identity())
          continue;
        auto [h, j] = sift(std::move(y), cur + 1);
        if (h.is_identity())
          continue;
        if (j == levels_.size())
          add_level(h.smallest_moved_point());
        for (std::size_t l = cur + 1; l <= j; ++l)
          add_generator(l, h);
        i = j + 1;
        added = true;
        break;
      }
    }
    if (added) {
      if (done())
        return;
      continue;
    }
    --i;
  }
}

void StabChain::add_level(Point base)
{
  Level lv;
  lv.base = base;
  lv.label.assign(degree_, -1);
  levels_.push_back(std::move(lv));
}

void StabChain::add_generator(std::size_t level, Permutation const &g)
{
  auto &lv = levels_[level];
  lv.gens.push_back(g);
  lv.inv_gens.push_back(g.inverse());
  extend_orbit(lv);
}

void StabChain::extend_orbit(Level &lv) const
{
  if (lv.orbit.empty()) {
    lv.orbit.push_back(lv.base);
    lv.label[lv.base] = -2;
  }
  for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
    Point x = lv.orbit[idx];
    for (std::size_t k = 0; k < lv.gens.size(); ++k) {
      Point y = lv.gens[k][x];
      if (lv.label[y] == -1) {
        lv.label[y] = static_cast<std::int32_t>(k);
        lv.orbit.push_back(y);
      }
    }
  }
}

std::vector<Point> StabChain::base() const
{
  std::vector<Point> b;
  for (auto const &lv : levels_)
    b.push_back(lv.base);
  return b;
}

BigInt StabChain::partial_order() const
{
  BigInt o = 1;
  for (auto const &lv : levels_)
    o *= lv.orbit.size();
  return o;
}

BigInt StabChain::order() const { return partial_order(); }

Permutation StabChain::transversal(std::size_t level, Point point) const
{
  auto const &lv = levels_[level];
  if (lv.label[point] == -1)
    throw InvalidArgument("point not in basic orbit");
  std::vector<std::int32_t> path;
  for (Point b = point; lv.label[b] != -2;) {
    auto k = lv.label[b];
    path.push_back(k);
    b = lv.inv_gens[k][b];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u *= lv.gens[*it];
  return u;
}

void StabChain::strip_level(std::size_t level, Permutation &x) const
{
  auto const &lv = levels_[level];
  Point b = x[lv.base];
  while (lv.label[b] != -2) {
    auto k = lv.label[b];
    x *= lv.inv_gens[k];
    b = lv.inv_gens[k][b];
  }
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation x, std::size_t from) const
{
  for (std::size_t i = from; i < levels_.size(); ++i) {
    if (levels_[i].label[x[levels_[i].base]] == -1)
      return {std::move(x), i};
    strip_level(i, x);
  }
  return {std::move(x), levels_.size()};
}

bool StabChain::contains(Permutation const &x) const
{
  if (x.degree() != degree_)
    return false;
  return sift(x).first.is_identity();
}

void StabChain::for_each_element(std::function<bool(Permutation const &)> const &f) const
{
  std::vector<std::vector<Permutation>> trans(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i)
    for (Point b : levels_[i].orbit)
      trans[i].push_back(transversal(i, b));
  if (levels_.empty()) {
    f(Permutation(degree_));
    return;
  }
  bool stop = false;
  std::function<void(std::size_t, Permutation const &)> rec =
    [&](std::size_t level, Permutation const &prefix) {
      for (auto const &t : trans[level]) {
        if (stop)
          return;
        Permutation next = prefix * t;
        if (level == 0) {
          if (!f(next))
            stop = true;
        } else {
          rec(level - 1, next);
        }
      }
    };
  rec(levels_.size() - 1, Permutation(degree_));
}

// ---------------------------------------------------------------- PermGroup

struct PermGroup::Impl {
  unsigned degree = 0;
  std::vector<Permutation> gens;
  ChainOptions opts;
  std::once_flag once;
  StabChain chain;
};

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> gens, ChainOptions opts)
  : impl_(std::make_shared<Impl>())
{
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                            " differs from group degree " + std::to_string(degree));
  impl_->degree = degree;
  impl_->gens = std::move(gens);
  impl_->opts = std::move(opts);
}

unsigned PermGroup::degree() const { return impl_ ? impl_->degree : 0; }

std::vector<Permutation> const &PermGroup::generators() const
{
  static std::vector<Permutation> const none;
  return impl_ ? impl_->gens : none;
}

StabChain const &PermGroup::chain() const
{
  if (!impl_)
    throw InvalidArgument("empty PermGroup");
  std::call_once(impl_->once, [this] {
    impl_->chain = StabChain(impl_->degree, impl_->gens, impl_->opts);
  });
  return impl_->chain;
}

bool PermGroup::is_trivial() const
{
  return std::all_of(generators().begin(), generators().end(),
                     [](Permutation const &g) { return g.is_identity(); });
}

PermGroup build_group(std::vector<Permutation> const &gens)
{
  if (gens.empty())
    throw InvalidArgument("build_group needs at least one generator");
  unsigned n = gens.front().degree();
  PermGroup g(n, gens);
  g.chain();
  return g;
}

std::vector<Point> orbit(std::vector<Permutation> const &gens, unsigned degree, Point point)
{
  if (point >= degree)
    throw InvalidArgument("point " + std::to_string(point) + " out of range");
  std::vector<char> seen(degree, 0);
  std::vector<Point> orb{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (auto const &g : gens) {
      Point y = g[orb[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<Point> orbit(PermGroup const &g, Point point)
{
  return orbit(g.generators(), g.degree(), point);
}

std::vector<std::vector<Point>> orbits(std::vector<Permutation> const &gens,
                                       unsigned degree)
{
  std::vector<char> seen(degree, 0);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree; ++p) {
    if (seen[p])
      continue;
    auto orb = orbit(gens, degree, p);
    for (Point x : orb)
      seen[x] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

PermGroup pointwise_stabilizer(PermGroup const &g, std::vector<Point> const &points)
{
  if (points.empty())
    return g;
  BigInt order = g.order();
  PermGroup rebased(g.degree(), g.generators(), ChainOptions{points, order});
  auto const &levels = rebased.chain().levels();
  std::size_t depth = points.size();
  BigInt stab_order = order;
  for (std::size_t i = 0; i < depth; ++i)
    stab_order /= levels[i].orbit.size();
  std::vector<Permutation> gens;
  std::vector<Point> rest;
  if (levels.size() > depth) {
    gens = levels[depth].gens;
    for (std::size_t i = depth; i < levels.size(); ++i)
      rest.push_back(levels[i].base);
  }
  return PermGroup(g.degree(), std::move(gens), ChainOptions{rest, stab_order});
}

PermGroup point_stabilizer(PermGroup const &g, Point point)
{
  if (point >= g.degree())
    throw InvalidArgument("point " + std::to_string(point) + " out of range");
  return pointwise_stabilizer(g, {point});
}

bool is_transitive(PermGroup const &g)
{
  return g.degree() > 0 && orbit(g, 0).size() == g.degree();
}

bool is_subgroup(PermGroup const &h, PermGroup const &g)
{
  if (h.degree() != g.degree())
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](Permutation const &x) { return g.contains(x); });
}

PermGroup restrict_to_orbit(PermGroup const &g, std::vector<Point> const &orb)
{
  std::vector<std::int64_t> pos(g.degree(), -1);
  for (std::size_t i = 0; i < orb.size(); ++i)
    pos[orb[i]] = static_cast<std::int64_t>(i);
  std::vector<Permutation> gens;
  for (auto const &x : g.generators()) {
    std::vector<Point> img(orb.size());
    for (std::size_t i = 0; i < orb.size(); ++i) {
      auto j = pos[x[orb[i]]];
      if (j < 0)
        throw InvalidArgument("point set is not invariant under the group");
      img[i] = static_cast<Point>(j);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<unsigned>(orb.size()), std::move(gens),
                   ChainOptions{{}, g.order()});
}

void for_each_element(PermGroup const &g,
                      std::function<bool(Permutation const &)> const &f)
{
  check_cap(g.order(), caps().enumeration, "element enumeration of group order");
  g.chain().for_each_element(f);
}

std::vector<Permutation> elements(PermGroup const &g)
{
  std::vector<Permutation> out;
  for_each_element(g, [&](Permutation const &x) {
    out.push_back(x);
    return true;
  });
  return out;
}

} // namespace halftrans
