#include "halftrans/actions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "halftrans/caps.hpp"
#include "halftrans/error.hpp"
#include "halftrans/finite_field.hpp"
#include "halftrans/genfile.hpp"

namespace halftrans {

namespace {

Permutation cycle_of(unsigned degree, Point first, Point last)
{
  std::vector<Point> c(last - first + 1);
  std::iota(c.begin(), c.end(), first);
  return Permutation::from_cycles(degree, {c});
}

BigInt factorial(unsigned n)
{
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

std::string kind_name(SymKind kind) { return kind == SymKind::Sym ? "S" : "A"; }

// Induced action of g's generators on a finite family of point sets.
template <class Key, class Image>
PermGroup induced(PermGroup const &g, std::vector<Key> const &keys, Image image)
{
  std::map<Key, Point> index;
  for (Point i = 0; i < keys.size(); ++i)
    index.emplace(keys[i], i);
  std::vector<Permutation> gens;
  for (auto const &x : g.generators()) {
    std::vector<Point> img(keys.size());
    for (Point i = 0; i < keys.size(); ++i)
      img[i] = index.at(image(keys[i], x));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<unsigned>(keys.size()), std::move(gens),
                   ChainOptions{{}, g.order()});
}

} // namespace

PermGroup symmetric_group(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("symmetric group needs n >= 1");
  if (n == 1)
    return PermGroup(1, {Permutation::identity(1)});
  if (n == 2)
    return PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})});
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), cycle_of(n, 0, n - 1)},
                   ChainOptions{{}, factorial(n)});
}

PermGroup alternating_group(unsigned n)
{
  if (n < 3)
    throw InvalidArgument("alternating group needs n >= 3");
  if (n == 3)
    return PermGroup(3, {cycle_of(3, 0, 2)});
  // (0,1,2) with the (n-1)- or n-cycle fixing the right parity.
  Permutation c = (n % 2) ? cycle_of(n, 0, n - 1) : cycle_of(n, 1, n - 1);
  return PermGroup(n, {cycle_of(n, 0, 2), c}, ChainOptions{{}, factorial(n) / 2});
}

PermGroup sym_or_alt(SymKind kind, unsigned n)
{
  return kind == SymKind::Sym ? symmetric_group(n) : alternating_group(n);
}

TransitiveAction natural_action(SymKind kind, unsigned n)
{
  if (n < 2 || (kind == SymKind::Alt && n < 3))
    throw InvalidArgument("natural action needs n >= 2 (Sym) or n >= 3 (Alt)");
  return make_action(sym_or_alt(kind, n), kind_name(kind) + std::to_string(n) + " natural");
}

TransitiveAction k_subset_action(SymKind kind, unsigned n, unsigned k)
{
  if (k < 1 || k >= n)
    throw InvalidArgument("k-subset action needs 1 <= k < n");
  check_cap(binomial(n, k), caps().coset_index, "number of k-subsets");
  // Colex order: successive subsets by the standard colex successor.
  std::vector<std::vector<Point>> sets;
  std::vector<Point> s(k);
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    sets.push_back(s);
    unsigned i = 0;
    while (i + 1 < k && s[i] + 1 == s[i + 1])
      ++i;
    if (s[i] + 1 >= n)
      break;
    ++s[i];
    for (unsigned j = 0; j < i; ++j)
      s[j] = j;
  }
  auto g = sym_or_alt(kind, n);
  auto act = induced(g, sets, [](std::vector<Point> const &set, Permutation const &x) {
    std::vector<Point> out;
    for (auto p : set)
      out.push_back(x[p]);
    std::sort(out.begin(), out.end());
    return out;
  });
  return make_action(act, kind_name(kind) + std::to_string(n) + " on " + std::to_string(k) +
                              "-subsets");
}

TransitiveAction partition_action(SymKind kind, unsigned k, unsigned l)
{
  if (k < 2 || l < 2)
    throw InvalidArgument("partition action needs k, l >= 2");
  unsigned n = k * l;
  check_cap(factorial(n) / (ipow(factorial(k), l) * factorial(l)), caps().coset_index,
            "number of partitions");
  using Part = std::vector<std::vector<Point>>;
  std::vector<Part> parts;
  // The least unused point always opens the next part.
  Part cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto &&self) -> void {
    if (cur.size() == l) {
      parts.push_back(cur);
      return;
    }
    Point first = 0;
    while (used[first])
      ++first;
    used[first] = true;
    std::vector<Point> block{first};
    auto fill = [&](auto &&fillself, Point from) -> void {
      if (block.size() == k) {
        cur.push_back(block);
        self(self);
        cur.pop_back();
        return;
      }
      for (Point p = from; p < n; ++p) {
        if (used[p])
          continue;
        used[p] = true;
        block.push_back(p);
        fillself(fillself, p + 1);
        block.pop_back();
        used[p] = false;
      }
    };
    fill(fill, first + 1);
    used[first] = false;
  };
  rec(rec);
  std::sort(parts.begin(), parts.end());
  auto g = sym_or_alt(kind, n);
  auto act = induced(g, parts, [](Part const &p, Permutation const &x) {
    Part out;
    for (auto const &b : p) {
      std::vector<Point> nb;
      for (auto pt : b)
        nb.push_back(x[pt]);
      std::sort(nb.begin(), nb.end());
      out.push_back(std::move(nb));
    }
    std::sort(out.begin(), out.end());
    return out;
  });
  return make_action(act, kind_name(kind) + std::to_string(n) + " on partitions into " +
                              std::to_string(l) + " parts of size " + std::to_string(k));
}

TransitiveAction product_action(TransitiveAction const &component, unsigned k,
                                PermGroup const &top)
{
  if (k < 2)
    throw InvalidArgument("product action needs k >= 2");
  if (top.degree() != k || !is_transitive(top))
    throw InvalidArgument("top group must be transitive on k points");
  unsigned m = component.degree();
  BigInt size = ipow(BigInt(m), k);
  check_cap(size, caps().coset_index, "product action degree");
  unsigned n = static_cast<unsigned>(to_u64(size));

  auto digits = [&](Point x) {
    std::vector<Point> t(k);
    for (unsigned i = k; i-- > 0; x /= m)
      t[i] = x % m;
    return t;
  };
  auto number = [&](std::vector<Point> const &t) {
    Point x = 0;
    for (unsigned i = 0; i < k; ++i)
      x = x * m + t[i];
    return x;
  };
  std::vector<Permutation> gens;
  for (auto const &h : component.group.generators()) {
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x) {
      auto t = digits(x);
      t[0] = h[t[0]];
      img[x] = number(t);
    }
    gens.emplace_back(std::move(img));
  }
  for (auto const &s : top.generators()) {
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x) {
      auto t = digits(x);
      std::vector<Point> u(k);
      for (unsigned i = 0; i < k; ++i)
        u[s[i]] = t[i];
      img[x] = number(u);
    }
    gens.emplace_back(std::move(img));
  }
  BigInt bound = ipow(component.group.order(), k) * top.order();
  return make_action(PermGroup(n, std::move(gens), ChainOptions{{}, bound}),
                     "(" + component.label + ") wr top group of degree " + std::to_string(k) +
                         " in product action");
}

TransitiveAction diagonal_action(PermGroup const &t, unsigned k)
{
  if (k != 2)
    throw InvalidArgument("diagonal action implemented for k = 2 only");
  check_cap(t.order(), caps().coset_index, "diagonal action degree");
  auto elts = elements(t);
  std::sort(elts.begin(), elts.end());
  std::map<Permutation, Point> index;
  for (Point i = 0; i < elts.size(); ++i)
    index.emplace(elts[i], i);
  std::vector<Permutation> gens;
  for (auto const &a : t.generators()) {
    auto ainv = a.inverse();
    std::vector<Point> left(elts.size()), right(elts.size());
    for (Point i = 0; i < elts.size(); ++i) {
      left[i] = index.at(ainv * elts[i]);
      right[i] = index.at(elts[i] * a);
    }
    gens.emplace_back(std::move(left));
    gens.emplace_back(std::move(right));
  }
  BigInt bound = t.order() * t.order();
  return make_action(PermGroup(static_cast<unsigned>(elts.size()), std::move(gens),
                               ChainOptions{{}, bound}),
                     "diagonal action of T x T, |T| = " + to_string(t.order()));
}

TransitiveAction agl1_coset_action(unsigned p)
{
  if (p < 5 || !is_prime(p))
    throw InvalidArgument("agl1 action needs a prime p >= 5");
  auto g = alternating_group(p);
  // Least primitive root mod p.
  unsigned w = 2;
  for (;; ++w) {
    unsigned x = 1, ord = 0;
    do {
      x = x * w % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1)
      break;
  }
  std::vector<Point> shift(p), square(p);
  for (Point x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    square[x] = static_cast<Point>(static_cast<std::uint64_t>(x) * w * w % p);
  }
  PermGroup h(p, {Permutation(shift), Permutation(square)},
              ChainOptions{{}, BigInt(p) * (p - 1) / 2});
  return coset_action(g, h, "A" + std::to_string(p) + " on cosets of AGL1(" + std::to_string(p) +
                                ") meet A" + std::to_string(p));
}

TransitiveAction dihedral_action(unsigned n)
{
  if (n < 3)
    throw InvalidArgument("dihedral action needs n >= 3");
  std::vector<Point> r(n), s(n);
  for (Point x = 0; x < n; ++x) {
    r[x] = (x + 1) % n;
    s[x] = (n - x) % n;
  }
  return make_action(PermGroup(n, {Permutation(r), Permutation(s)}),
                     "D" + std::to_string(2 * n) + " on " + std::to_string(n));
}

TransitiveAction cyclic_action(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("cyclic action needs n >= 1");
  std::vector<Point> r(n);
  for (Point x = 0; x < n; ++x)
    r[x] = (x + 1) % n;
  return make_action(PermGroup(n, {Permutation(r)}), "C" + std::to_string(n) + " regular");
}

TransitiveAction ingest_action(std::string const &group_file, std::string const &subgroup_file)
{
  auto g = ingest_group(group_file);
  auto h = ingest_group(subgroup_file);
  if (h.degree() != g.degree())
    throw InvalidArgument("subgroup file has degree " + std::to_string(h.degree()) +
                          ", group file " + std::to_string(g.degree()));
  return coset_action(g, h, group_file + " on cosets of " + subgroup_file);
}

} // namespace halftrans
