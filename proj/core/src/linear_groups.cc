#include "halftrans/linear_groups.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "halftrans/error.hpp"
#include "halftrans/subgroups.hpp"

namespace halftrans {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= n; ++r) {
    if (n % r)
      continue;
    out.push_back(r);
    while (n % r == 0)
      n /= r;
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool has_order(Matrix const &m, std::uint64_t n)
{
  if (!m.pow(static_cast<long long>(n)).is_identity())
    return false;
  for (auto r : prime_divisors(n))
    if (m.pow(static_cast<long long>(n / r)).is_identity())
      return false;
  return true;
}

FieldPtr field_or_throw(unsigned q)
{
  if (!FiniteField::supported(q))
    throw InvalidArgument("unsupported field size " + std::to_string(q));
  return FiniteField::get(q);
}

std::vector<Permutation> to_perms(ProjectiveSpace const &ps, std::vector<Matrix> const &ms)
{
  std::vector<Permutation> out;
  for (auto const &m : ms) {
    auto p = ps.permutation(m);
    if (!p.is_identity())
      out.push_back(std::move(p));
  }
  if (out.empty())
    out.push_back(Permutation::identity(ps.size()));
  return out;
}

std::string qstr(unsigned q) { return std::to_string(q); }

} // namespace

ProjectiveSpace::ProjectiveSpace(FieldPtr field, unsigned dim)
  : field_(std::move(field)), dim_(dim)
{
  if (dim == 0)
    throw InvalidArgument("projective space of dimension 0");
  unsigned q = field_->q();
  Vec v(dim, 0);
  // Counting with coordinate 0 most significant gives lexicographic order.
  for (;;) {
    unsigned k = dim;
    while (k > 0 && v[k - 1] == q - 1)
      v[--k] = 0;
    if (k == 0)
      break;
    ++v[k - 1];
    auto first = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (*first == 1) {
      index_.emplace(v, static_cast<Point>(points_.size()));
      points_.push_back(v);
    }
  }
}

Point ProjectiveSpace::index(Vec const &v) const
{
  auto it = index_.find(normalize_projective(*field_, v));
  if (it == index_.end())
    throw InvalidArgument("zero vector has no projective point");
  return it->second;
}

Permutation ProjectiveSpace::permutation(Matrix const &g) const
{
  std::vector<Point> img(points_.size());
  for (Point i = 0; i < img.size(); ++i)
    img[i] = index(row_times(points_[i], g));
  return Permutation(std::move(img));
}

Permutation ProjectiveSpace::frobenius_permutation(unsigned k) const
{
  std::vector<Point> img(points_.size());
  for (Point i = 0; i < img.size(); ++i) {
    Vec v = points_[i];
    for (auto &x : v)
      for (unsigned j = 0; j < k; ++j)
        x = field_->frobenius(x);
    img[i] = index(v);
  }
  return Permutation(std::move(img));
}

BigInt psl_order(unsigned d, unsigned q)
{
  BigInt n = ipow(BigInt(q), d * (d - 1) / 2);
  for (unsigned i = 2; i <= d; ++i)
    n *= ipow(BigInt(q), i) - 1;
  return n / gcd(BigInt(d), BigInt(q - 1));
}

std::vector<Matrix> sl_generators(FieldPtr const &field, unsigned d)
{
  auto const &F = *field;
  std::vector<Matrix> gens;
  Matrix a = Matrix::identity(field, d);
  a.at(0, 1) = 1;
  gens.push_back(a);
  Matrix h = Matrix::identity(field, d);
  h.at(0, 0) = F.primitive();
  h.at(1, 1) = F.inv(F.primitive());
  if (!h.is_identity())
    gens.push_back(h);
  Matrix w(field, d);
  for (unsigned i = 0; i + 1 < d; ++i)
    w.at(i, i + 1) = 1;
  w.at(d - 1, 0) = (d % 2 == 0) ? F.neg(1) : 1;
  gens.push_back(w);
  return gens;
}

PermGroup psl_on_points(unsigned d, unsigned q)
{
  if (d < 2)
    throw InvalidArgument("PSL needs dimension >= 2");
  auto field = field_or_throw(q);
  ProjectiveSpace ps(field, d);
  ChainOptions opts;
  opts.order_bound = psl_order(d, q);
  return PermGroup(ps.size(), to_perms(ps, sl_generators(field, d)), opts);
}

TransitiveAction projective_line_action(unsigned q, LineFlavor flavor)
{
  auto field = field_or_throw(q);
  auto const &F = *field;
  ProjectiveSpace ps(field, 2);
  auto gens = to_perms(ps, sl_generators(field, 2));
  BigInt bound = psl_order(2, q);
  std::string label = "PSL(2," + qstr(q) + ")";
  if (flavor != LineFlavor::PSL) {
    Matrix dg = Matrix::identity(field, 2);
    dg.at(0, 0) = F.primitive();
    gens.push_back(ps.permutation(dg));
    bound *= gcd(BigInt(2), BigInt(q - 1));
    label = "PGL(2," + qstr(q) + ")";
  }
  if (flavor == LineFlavor::PGammaL) {
    if (F.f() > 1)
      gens.push_back(ps.frobenius_permutation(1));
    bound *= F.f();
    label = "PGammaL(2," + qstr(q) + ")";
  }
  ChainOptions opts;
  opts.order_bound = bound;
  return make_action(PermGroup(ps.size(), gens, opts), label + " on the projective line");
}

TransitiveAction subspace_action(unsigned d, unsigned q, unsigned m)
{
  if (m == 0 || m >= d)
    throw InvalidArgument("subspace dimension must lie strictly between 0 and d");
  auto field = field_or_throw(q);
  auto const &F = *field;

  // Enumerate reduced echelon matrices: pivot columns, then free entries.
  std::vector<Vec> spaces;
  std::vector<unsigned> piv(m);
  for (unsigned i = 0; i < m; ++i)
    piv[i] = i;
  for (;;) {
    std::vector<std::pair<unsigned, unsigned>> free_slots;
    for (unsigned r = 0; r < m; ++r)
      for (unsigned c = piv[r] + 1; c < d; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
          free_slots.emplace_back(r, c);
    std::vector<Elem> vals(free_slots.size(), 0);
    for (;;) {
      Vec flat(static_cast<std::size_t>(m) * d, 0);
      for (unsigned r = 0; r < m; ++r)
        flat[r * d + piv[r]] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        flat[free_slots[s].first * d + free_slots[s].second] = vals[s];
      spaces.push_back(std::move(flat));
      std::size_t k = 0;
      while (k < vals.size() && vals[k] == q - 1)
        vals[k++] = 0;
      if (k == vals.size())
        break;
      ++vals[k];
    }
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && piv[i] == d - m + i)
      --i;
    if (i < 0)
      break;
    ++piv[i];
    for (unsigned j = i + 1; j < m; ++j)
      piv[j] = piv[j - 1] + 1;
  }
  std::sort(spaces.begin(), spaces.end());
  std::map<Vec, Point> index;
  for (Point i = 0; i < spaces.size(); ++i)
    index.emplace(spaces[i], i);

  std::vector<Permutation> gens;
  for (auto const &g : sl_generators(field, d)) {
    std::vector<Point> img(spaces.size());
    for (Point i = 0; i < spaces.size(); ++i) {
      std::vector<Vec> rows;
      for (unsigned r = 0; r < m; ++r)
        rows.push_back(row_times(Vec(spaces[i].begin() + r * d, spaces[i].begin() + (r + 1) * d), g));
      Vec flat;
      for (auto const &row : rref(F, rows))
        flat.insert(flat.end(), row.begin(), row.end());
      img[i] = index.at(flat);
    }
    Permutation p(std::move(img));
    if (!p.is_identity())
      gens.push_back(std::move(p));
  }
  ChainOptions opts;
  opts.order_bound = psl_order(d, q);
  return make_action(PermGroup(static_cast<unsigned>(spaces.size()), gens, opts),
                     "PSL(" + std::to_string(d) + "," + qstr(q) + ") on " + std::to_string(m) +
                         "-subspaces");
}

DihedralTorus dihedral_torus(unsigned q)
{
  auto field = field_or_throw(q);
  auto const &F = *field;
  if (F.p() != 2 || q < 4)
    throw InvalidArgument("dihedral torus needs q = 2^f >= 4");
  std::optional<Matrix> t;
  for (Elem a = 0; a < q && !t; ++a) {
    Matrix c = Matrix::from_rows(field, {{0, 1}, {1, a}});
    if (has_order(c, q + 1))
      t = c;
  }
  if (!t)
    throw Error("no torus generator found");
  Matrix tinv = t->inverse();
  std::optional<Matrix> w;
  for (Elem a = 0; a < q && !w; ++a)
    for (Elem b = 0; b < q && !w; ++b)
      for (Elem c = 0; c < q && !w; ++c)
        for (Elem d = 0; d < q && !w; ++d) {
          if (F.sub(F.mul(a, d), F.mul(b, c)) != 1)
            continue;
          Matrix m = Matrix::from_rows(field, {{a, b}, {c, d}});
          if (m.is_identity() || !(m * m).is_identity())
            continue;
          if (m * *t * m == tinv)
            w = m;
        }
  if (!w)
    throw Error("no inverting involution found");
  ProjectiveSpace ps(field, 2);
  ChainOptions opts;
  opts.order_bound = BigInt(2 * (q + 1));
  PermGroup g(ps.size(), {ps.permutation(*t), ps.permutation(*w)}, opts);
  return DihedralTorus{*t, *w, g};
}

PermGroup dihedral_torus_subgroup(unsigned q) { return dihedral_torus(q).group; }

PermGroup psl2_extension(unsigned q, unsigned m)
{
  auto field = field_or_throw(q);
  auto const &F = *field;
  if (m == 0 || F.f() % m)
    throw InvalidArgument("extension degree must divide f");
  ProjectiveSpace ps(field, 2);
  auto gens = to_perms(ps, sl_generators(field, 2));
  if (m > 1)
    gens.push_back(ps.frobenius_permutation(F.f() / m));
  ChainOptions opts;
  opts.order_bound = psl_order(2, q) * m;
  return PermGroup(ps.size(), gens, opts);
}

TransitiveAction psl2_dihedral_action(unsigned q, unsigned m)
{
  PermGroup g = psl2_extension(q, m);
  PermGroup h = normalizer(g, dihedral_torus_subgroup(q));
  std::string name = "PSL(2," + qstr(q) + ")";
  if (m > 1)
    name += "." + std::to_string(m);
  return coset_action(g, h, name + " on cosets of N(D" + std::to_string(2 * (q + 1)) + ")");
}

namespace {

struct SingerData {
  std::vector<Matrix> elements; // det 1 elements of the normalizer
  BigInt image_order;           // order of the image in PSL
};

SingerData singer_data(unsigned d, unsigned q)
{
  auto field = field_or_throw(q);
  auto const &F = *field;
  if (!is_prime(d))
    throw InvalidArgument("Singer normalizer needs prime dimension");
  std::uint64_t n = to_u64(ipow(BigInt(q), d) - 1);

  std::optional<Matrix> comp;
  Poly g;
  std::uint64_t count = to_u64(ipow(BigInt(q), d));
  for (std::uint64_t code = 0; code < count && !comp; ++code) {
    Poly c(d + 1, 0);
    std::uint64_t x = code;
    for (unsigned i = 0; i < d; ++i, x /= q)
      c[i] = static_cast<Elem>(x % q);
    c[d] = 1;
    if (c[0] == 0)
      continue;
    Matrix m(field, d);
    for (unsigned i = 0; i + 1 < d; ++i)
      m.at(i, i + 1) = 1;
    for (unsigned j = 0; j < d; ++j)
      m.at(d - 1, j) = F.neg(c[j]);
    if (has_order(m, n)) {
      comp = m;
      g = c;
    }
  }
  if (!comp)
    throw Error("no primitive polynomial found");

  Matrix phi(field, d);
  for (unsigned i = 0; i < d; ++i) {
    Poly r = poly_powmod(F, Poly{0, 1}, static_cast<unsigned long long>(i) * q, g);
    for (unsigned j = 0; j < r.size(); ++j)
      phi.at(i, j) = r[j];
  }

  SingerData out;
  Matrix ci = Matrix::identity(field, d);
  for (std::uint64_t i = 0; i < n; ++i, ci = ci * *comp) {
    Matrix e = ci;
    for (unsigned j = 0; j < d; ++j, e = e * phi)
      if (e.det() == 1)
        out.elements.push_back(e);
  }
  out.image_order = BigInt(n) * d / ((q - 1) * gcd(BigInt(d), BigInt(q - 1)));
  return out;
}

} // namespace

PermGroup singer_normalizer_subgroup(unsigned d, unsigned q)
{
  auto data = singer_data(d, q);
  ProjectiveSpace ps(FiniteField::get(q), d);
  return grow_subgroup(ps.size(), to_perms(ps, data.elements), data.image_order);
}

TransitiveAction singer_normalizer_action(unsigned d, unsigned q, bool graph)
{
  std::string name = "PSL(" + std::to_string(d) + "," + qstr(q) + ")";
  if (!graph)
    return coset_action(psl_on_points(d, q), singer_normalizer_subgroup(d, q),
                        name + " on cosets of a Singer normalizer");

  auto field = field_or_throw(q);
  ProjectiveSpace ps(field, d);
  unsigned n = ps.size();
  // Points 0..n-1, hyperplanes n..2n-1 labelled by their normal vectors.
  auto ext = [&](Matrix const &g) {
    Matrix dual = g.inverse().transpose();
    std::vector<Point> img(2 * n);
    for (Point i = 0; i < n; ++i) {
      img[i] = ps.index(row_times(ps.point(i), g));
      img[n + i] = n + ps.index(row_times(ps.point(i), dual));
    }
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (auto const &g : sl_generators(field, d))
    gens.push_back(ext(g));
  std::vector<Point> tau(2 * n);
  for (Point i = 0; i < n; ++i) {
    tau[i] = n + i;
    tau[n + i] = i;
  }
  gens.emplace_back(std::move(tau));
  ChainOptions opts;
  opts.order_bound = psl_order(d, q) * 2;
  PermGroup big(2 * n, gens, opts);

  auto data = singer_data(d, q);
  std::vector<Permutation> cand;
  for (auto const &m : data.elements)
    cand.push_back(ext(m));
  PermGroup k = grow_subgroup(2 * n, cand, data.image_order);
  return coset_action(big, normalizer(big, k), name + ".2 on cosets of a Singer normalizer");
}

PermGroup form_subgroup(std::string const &kind, unsigned d, unsigned q)
{
  auto field = field_or_throw(q);
  auto const &F = *field;
  unsigned twist = 0; // B(u, v) = sum u_k v_k^(p^twist)
  std::vector<Elem> lambdas{1};
  if (kind == "su") {
    if (F.f() % 2)
      throw InvalidArgument("unitary form needs a square field size");
    twist = F.f() / 2;
  } else if (kind == "so") {
    if (F.p() == 2)
      throw InvalidArgument("orthogonal form needs odd characteristic");
  } else if (kind == "gso") {
    if (F.p() == 2)
      throw InvalidArgument("orthogonal form needs odd characteristic");
    lambdas.clear();
    for (Elem x = 1; x < q; ++x)
      lambdas.push_back(x);
  } else {
    throw InvalidArgument("unknown form kind '" + kind + "'");
  }
  auto tw = [&](Elem x) {
    for (unsigned i = 0; i < twist; ++i)
      x = F.frobenius(x);
    return x;
  };
  auto form = [&](Vec const &u, Vec const &v) {
    Elem s = 0;
    for (unsigned k = 0; k < d; ++k)
      s = F.add(s, F.mul(u[k], tw(v[k])));
    return s;
  };

  std::vector<Vec> all;
  {
    Vec v(d, 0);
    for (;;) {
      unsigned k = d;
      while (k > 0 && v[k - 1] == q - 1)
        v[--k] = 0;
      if (k == 0)
        break;
      ++v[k - 1];
      all.push_back(v);
    }
  }

  ProjectiveSpace ps(field, d);
  std::set<Permutation> perms;
  for (Elem lambda : lambdas) {
    std::vector<Vec> norm;
    for (auto const &v : all)
      if (form(v, v) == lambda)
        norm.push_back(v);
    std::vector<Vec> rows;
    auto rec = [&](auto &&self) -> void {
      if (rows.size() == d) {
        Matrix m = Matrix::from_rows(field, rows);
        if (m.det() == 1)
          perms.insert(ps.permutation(m));
        return;
      }
      for (auto const &v : norm) {
        bool ok = true;
        for (auto const &r : rows)
          if (form(v, r) != 0) {
            ok = false;
            break;
          }
        if (!ok)
          continue;
        rows.push_back(v);
        self(self);
        rows.pop_back();
      }
    };
    rec(rec);
  }
  return grow_subgroup(ps.size(), std::vector<Permutation>(perms.begin(), perms.end()));
}

TransitiveAction form_subgroup_action(std::string const &kind, unsigned d, unsigned q)
{
  return coset_action(psl_on_points(d, q), form_subgroup(kind, d, q),
                      "PSL(" + std::to_string(d) + "," + qstr(q) + ") on cosets of the " +
                          kind + " form stabilizer");
}

namespace {

// V = GF(2)^{2n} as bitmasks: bit i is the e_i coordinate, bit n+i the f_i one.
struct SymplecticSpace {
  unsigned n;
  unsigned dim() const { return 2 * n; }
  std::uint32_t size() const { return 1u << (2 * n); }
  unsigned lo(std::uint32_t x) const { return x & ((1u << n) - 1); }
  unsigned hi(std::uint32_t x) const { return x >> n; }
  unsigned bilinear(std::uint32_t x, std::uint32_t y) const
  {
    return std::popcount((lo(x) & hi(y)) ^ (hi(x) & lo(y))) & 1u;
  }
  // Q_a(x) = sum x_{e_i} x_{f_i} + a.x
  unsigned quadratic(std::uint32_t a, std::uint32_t x) const
  {
    return (std::popcount(lo(x) & hi(x)) + std::popcount(x & a)) & 1u;
  }
  bool is_plus(std::uint32_t a) const
  {
    std::uint32_t zeros = 0;
    for (std::uint32_t x = 0; x < size(); ++x)
      zeros += quadratic(a, x) == 0;
    return zeros == (1u << (2 * n - 1)) + (1u << (n - 1));
  }
  std::uint32_t transvect(std::uint32_t v, std::uint32_t x) const
  {
    return bilinear(x, v) ? x ^ v : x;
  }
};

// Sp_{2n}(2) on nonzero vectors (points 0..2^{2n}-2) and on quadratic forms
// Q_a (points 2^{2n}-1+a), generated by transvections.
PermGroup symplectic_vectors_and_forms(SymplecticSpace const &s)
{
  std::uint32_t nv = s.size() - 1;
  std::vector<Permutation> cand;
  for (std::uint32_t v = 1; v < s.size(); ++v) {
    std::vector<Point> img(nv + s.size());
    for (std::uint32_t x = 1; x < s.size(); ++x)
      img[x - 1] = s.transvect(v, x) - 1;
    for (std::uint32_t a = 0; a < s.size(); ++a) {
      // Q_a o t_v has linear part given by its values on the basis.
      std::uint32_t b = 0;
      for (unsigned i = 0; i < s.dim(); ++i)
        b |= s.quadratic(a, s.transvect(v, 1u << i)) << i;
      img[nv + a] = nv + b;
    }
    cand.emplace_back(std::move(img));
  }
  BigInt order = ipow(BigInt(2), s.n * s.n);
  for (unsigned i = 1; i <= s.n; ++i)
    order *= ipow(BigInt(4), i) - 1;
  return grow_subgroup(nv + s.size(), cand, order);
}

std::uint32_t first_form(SymplecticSpace const &s, bool plus)
{
  for (std::uint32_t a = 0; a < s.size(); ++a)
    if (s.is_plus(a) == plus)
      return a;
  throw Error("no quadratic form of the requested type");
}

} // namespace

TransitiveAction symplectic_forms_action(unsigned n, bool plus, bool derived)
{
  if (n < 1 || n > 4)
    throw InvalidArgument("symplectic forms action supports 1 <= n <= 4");
  SymplecticSpace s{n};
  PermGroup g = symplectic_vectors_and_forms(s);
  Point pt = s.size() - 1 + first_form(s, plus);
  PermGroup r = restrict_to_orbit(g, orbit(g, pt));
  if (derived)
    r = derived_subgroup(r);
  std::string name = "Sp(" + std::to_string(2 * n) + ",2)";
  if (derived)
    name += "'";
  return make_action(r, name + " on " + (plus ? "plus" : "minus") + " type forms");
}

TransitiveAction orthogonal_singular_action(unsigned n, bool plus, bool omega)
{
  if (n < 2 || n > 4)
    throw InvalidArgument("singular vector action supports 2 <= n <= 4");
  SymplecticSpace s{n};
  PermGroup g = symplectic_vectors_and_forms(s);
  std::uint32_t a = first_form(s, plus);
  PermGroup o = point_stabilizer(g, s.size() - 1 + a);
  std::uint32_t x0 = 1;
  while (s.quadratic(a, x0) != 0)
    ++x0;
  auto orb = orbit(o, x0 - 1);
  std::uint32_t singular = 0;
  for (std::uint32_t x = 1; x < s.size(); ++x)
    singular += s.quadratic(a, x) == 0;
  if (orb.size() != singular)
    throw Error("singular vectors do not form one orbit");
  std::sort(orb.begin(), orb.end());
  PermGroup r = restrict_to_orbit(o, orb);
  if (omega)
    r = derived_subgroup(r);
  std::string name = std::string(plus ? "O+" : "O-") + "(" + std::to_string(2 * n) + ",2)";
  if (omega)
    name = std::string(plus ? "Omega+" : "Omega-") + "(" + std::to_string(2 * n) + ",2)";
  return make_action(r, name + " on nonzero singular vectors");
}

} // namespace halftrans
