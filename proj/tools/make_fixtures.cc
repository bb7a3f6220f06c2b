// Regenerates fixtures/<group>/{G.gens, H_<label>.gens}. Every search below
// walks elements in chain enumeration order, so output is reproducible.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "halftrans/finite_field.hpp"
#include "halftrans/genfile.hpp"
#include "halftrans/linear_groups.hpp"
#include "halftrans/subgroups.hpp"

using namespace halftrans;
namespace fs = std::filesystem;

namespace {

fs::path out_root = "fixtures";

void require(bool ok, std::string const &what)
{
  if (!ok) {
    std::cerr << "make_fixtures: " << what << '\n';
    std::exit(1);
  }
}

void write(std::string const &dir, std::string const &name, PermGroup const &g,
           std::string const &comment)
{
  fs::create_directories(out_root / dir);
  std::ofstream out(out_root / dir / name);
  out << format_generator_file(g, comment);
  std::cout << dir << "/" << name << ": degree " << g.degree() << ", order " << g.order().str()
            << '\n';
}

// Stabilizer of a point set, from Schreier generators on its orbit.
PermGroup set_stabilizer(PermGroup const &g, std::vector<Point> set)
{
  std::sort(set.begin(), set.end());
  auto image = [](std::vector<Point> const &s, Permutation const &x) {
    std::vector<Point> t;
    for (auto p : s)
      t.push_back(x[p]);
    std::sort(t.begin(), t.end());
    return t;
  };
  std::map<std::vector<Point>, Permutation> rep{{set, Permutation(g.degree())}};
  std::vector<std::vector<Point>> queue{set};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &x : g.generators()) {
      auto t = image(queue[i], x);
      if (!rep.count(t)) {
        rep.emplace(t, rep.at(queue[i]) * x);
        queue.push_back(t);
      }
    }
  std::vector<Permutation> schreier;
  for (auto const &s : queue)
    for (auto const &x : g.generators()) {
      auto y = rep.at(s) * x * rep.at(image(s, x)).inverse();
      if (!y.is_identity())
        schreier.push_back(y);
    }
  return grow_subgroup(g.degree(), schreier, g.order() / queue.size());
}

// First element x (enumeration order) with |<k, x>| = target, optionally
// also requiring <k, x> to be transitive.
PermGroup extend_to_order(PermGroup const &g, PermGroup const &k, BigInt const &target,
                          bool transitive = false)
{
  std::optional<PermGroup> found;
  for_each_element(g, [&](Permutation const &x) {
    if (k.contains(x))
      return true;
    auto gens = k.generators();
    gens.push_back(x);
    PermGroup h(g.degree(), gens);
    if (h.order() == target && (!transitive || is_transitive(h))) {
      found = h;
      return false;
    }
    return true;
  });
  require(found.has_value(), "no subgroup of order " + target.str() + " found");
  return *found;
}

PermGroup centralizer_of_involution(PermGroup const &g, bool fixed_point_free)
{
  std::optional<Permutation> t;
  for_each_element(g, [&](Permutation const &x) {
    if (x.order() != 2 || (fixed_point_free && x.support().size() != g.degree()))
      return true;
    t = x;
    return false;
  });
  require(t.has_value(), "no involution of the requested type");
  return normalizer(g, PermGroup(g.degree(), {*t}));
}

// M12 on GF(11) u {inf} (point 11 = inf): PSL(2,11) and the map fixing 0 and
// inf with x -> x^3 on squares, x -> 9 x^3 on non-squares.
PermGroup mathieu12()
{
  auto field = FiniteField::get(11);
  auto const &F = *field;
  auto make = [&](auto f) {
    std::vector<Point> img(12);
    for (Point i = 0; i < 12; ++i)
      img[i] = f(i);
    return Permutation(img);
  };
  Point const inf = 11;
  auto shift = make([&](Point x) { return x == inf ? inf : F.add(x, 1); });
  auto invert = make([&](Point x) -> Point {
    if (x == inf)
      return 0;
    if (x == 0)
      return inf;
    return F.neg(F.inv(x));
  });
  auto is_square = [&](Point x) { return F.log(x) % 2 == 0; };
  auto delta = make([&](Point x) -> Point {
    if (x == inf || x == 0)
      return x;
    auto cube = F.pow(x, 3);
    return is_square(x) ? cube : F.mul(cube, 9);
  });
  PermGroup m12(12, {shift, invert, delta});
  require(m12.order() == 95040, "M12 construction has order " + m12.order().str());
  return m12;
}

PermGroup psl2_11_on_12()
{
  auto field = FiniteField::get(11);
  auto const &F = *field;
  std::vector<Point> a(12), b(12);
  for (Point x = 0; x < 11; ++x) {
    a[x] = F.add(x, 1);
    b[x] = x == 0 ? 11 : F.neg(F.inv(x));
  }
  a[11] = 11;
  b[11] = 0;
  return PermGroup(12, {Permutation(a), Permutation(b)});
}

void mathieu()
{
  auto m12 = mathieu12();
  auto l = psl2_11_on_12();
  require(l.order() == 660 && is_subgroup(l, m12), "PSL(2,11) not inside M12");

  write("M12", "G.gens", m12, "M12 on 12 points");
  write("M12", "H_M11.gens", point_stabilizer(m12, 0), "M11, a point stabilizer");
  write("M12", "H_A6_2_2.gens", set_stabilizer(m12, {0, 1}), "A6.2^2, a 2-set stabilizer");
  write("M12", "H_L2_11.gens", l, "L2(11), transitive on the 12 points");
  write("M12", "H_3_2_2S4.gens", set_stabilizer(m12, {0, 1, 2}), "3^2:2S4, a 3-set stabilizer");
  write("M12", "H_2xS5.gens", centralizer_of_involution(m12, true),
        "2 x S5, centralizer of a fixed-point-free involution");
  write("M12", "H_tetrad.gens", set_stabilizer(m12, {0, 1, 2, 3}),
        "order 192, a 4-set stabilizer");

  auto m11_on_11 = restrict_to_orbit(point_stabilizer(m12, 11), orbit(point_stabilizer(m12, 11), 0));
  require(m11_on_11.degree() == 11 && m11_on_11.order() == 7920, "M11 on 11 points");
  write("M11", "G.gens", m11_on_11, "M11 on 11 points");
  write("M11", "H_M10.gens", point_stabilizer(m11_on_11, 0), "M10, a point stabilizer");
  write("M11", "H_M9_2.gens", set_stabilizer(m11_on_11, {0, 1}), "M9:2, a 2-set stabilizer");

  // The L2(11) inside M11 = Stab(inf) lies in a second, transitive class of M11.
  auto stab = point_stabilizer(m12, 11);
  auto l_fixing = extend_to_order(stab, normalizer(stab, sylow_subgroup(stab, 11)), BigInt(660));
  auto m11_on_12 = extend_to_order(m12, l_fixing, BigInt(7920), true);
  write("M11_12", "G.gens", m11_on_12, "M11 on 12 points");
  write("M11_12", "H_L2_11.gens", l_fixing, "L2(11), a point stabilizer");
  write("M11_12", "H_S5.gens", set_stabilizer(m11_on_12, {0, 1}), "S5, a 2-set stabilizer");
}

// PSU(3,3) = G2(2)' on the 28 isotropic points of the hermitian form
// x1^4 + x2^4 + x3^4 over GF(9).
void unitary33()
{
  auto su = form_subgroup("su", 3, 9);
  require(su.order() == 6048, "SU(3,3) has order " + su.order().str());
  auto field = FiniteField::get(9);
  ProjectiveSpace ps(field, 3);
  std::optional<Point> iso;
  for (Point i = 0; i < ps.size() && !iso; ++i) {
    auto const &v = ps.point(i);
    FiniteField::Elem s = 0;
    for (auto c : v)
      s = field->add(s, field->pow(c, 4));
    if (s == 0)
      iso = i;
  }
  require(iso.has_value(), "no isotropic point");
  auto g = restrict_to_orbit(su, orbit(su, *iso));
  require(g.degree() == 28 && g.order() == 6048, "PSU(3,3) on isotropic points");
  write("PSU3_3", "G.gens", g, "PSU(3,3) = G2(2)' on 28 isotropic points");
  write("PSU3_3", "H_3_1_2_8.gens", point_stabilizer(g, 0), "3^(1+2):8, a point stabilizer");
  auto n7 = normalizer(g, sylow_subgroup(g, 7));
  write("PSU3_3", "H_L3_2.gens", extend_to_order(g, n7, BigInt(168)), "L3(2)");
}

// Hoffman-Singleton graph: pentagons P_h and pentagrams Q_i, h, i in Z/5.
// P_h[j] ~ P_h[j+1], Q_i[j] ~ Q_i[j+2], P_h[j] ~ Q_i[h i + j].
std::vector<std::vector<char>> hoffman_singleton()
{
  std::vector<std::vector<char>> adj(50, std::vector<char>(50, 0));
  auto P = [](int h, int j) { return 5 * h + ((j % 5) + 5) % 5; };
  auto Q = [](int i, int j) { return 25 + 5 * i + ((j % 5) + 5) % 5; };
  auto join = [&](int a, int b) { adj[a][b] = adj[b][a] = 1; };
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      join(P(h, j), P(h, j + 1));
      join(Q(h, j), Q(h, j + 2));
      for (int i = 0; i < 5; ++i)
        join(P(h, j), Q(i, h * i + j));
    }
  for (int a = 0; a < 50; ++a) {
    int deg = 0;
    for (int b = 0; b < 50; ++b) {
      deg += adj[a][b];
      if (a == b)
        continue;
      int common = 0;
      for (int c = 0; c < 50; ++c)
        common += adj[a][c] && adj[b][c];
      require(common == (adj[a][b] ? 0 : 1), "not strongly regular (50,7,0,1)");
    }
    require(deg == 7, "not 7-regular");
  }
  return adj;
}

// An automorphism extending v_i -> img_i (i < prefix.size()), if one exists.
std::optional<Permutation> find_automorphism(std::vector<std::vector<char>> const &adj,
                                             std::vector<Point> const &order,
                                             std::vector<Point> const &prefix)
{
  unsigned n = static_cast<unsigned>(adj.size());
  std::vector<Point> img(n, n);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t k, Point c) {
    if (used[c])
      return false;
    for (std::size_t j = 0; j < k; ++j)
      if (adj[order[k]][order[j]] != adj[c][img[order[j]]])
        return false;
    return true;
  };
  auto rec = [&](auto &&self, std::size_t k) -> bool {
    if (k == n)
      return true;
    auto try_c = [&](Point c) {
      if (!consistent(k, c))
        return false;
      img[order[k]] = c;
      used[c] = 1;
      if (self(self, k + 1))
        return true;
      used[c] = 0;
      img[order[k]] = n;
      return false;
    };
    if (k < prefix.size())
      return try_c(prefix[k]);
    for (Point c = 0; c < n; ++c)
      if (try_c(c))
        return true;
    return false;
  };
  if (!rec(rec, 0))
    return std::nullopt;
  return Permutation(img);
}

void unitary35()
{
  auto adj = hoffman_singleton();
  unsigned n = 50;
  // Breadth-first vertex order, so each vertex after the first has a placed neighbour.
  std::vector<Point> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Point b = 0; b < n; ++b)
      if (adj[order[i]][b] && !seen[b]) {
        seen[b] = 1;
        order.push_back(b);
      }
  std::vector<Permutation> gens;
  std::vector<Point> prefix;
  for (std::size_t level = 0; level < 6; ++level) {
    for (Point c = 0; c < n; ++c) {
      auto p = prefix;
      p.push_back(c);
      if (auto x = find_automorphism(adj, order, p); x && !x->is_identity())
        gens.push_back(*x);
    }
    prefix.push_back(order[level]);
  }
  PermGroup aut = grow_subgroup(n, gens);
  require(aut.order() == 252000, "Aut(Hoffman-Singleton) has order " + aut.order().str());
  auto g = derived_subgroup(aut);
  require(g.order() == 126000, "derived subgroup has order " + g.order().str());
  g = grow_subgroup(n, g.generators());
  write("PSU3_5", "G.gens", g, "PSU(3,5) on the 50 vertices of the Hoffman-Singleton graph");
  write("PSU3_5", "H_A7.gens", point_stabilizer(g, 0), "A7, a vertex stabilizer");
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"regenerate the generator-file fixtures"};
  std::string root = out_root.string();
  app.add_option("dir", root, "output directory (default: fixtures)");
  CLI11_PARSE(app, argc, argv);
  out_root = root;
  mathieu();
  unitary33();
  unitary35();
  return 0;
}
