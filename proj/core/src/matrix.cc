#include "halftrans/matrix.hpp"

#include <algorithm>

#include "halftrans/error.hpp"

namespace halftrans {

Matrix::Matrix(FieldPtr field, unsigned dim)
  : field_(std::move(field)), dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0)
{}

Matrix Matrix::identity(FieldPtr field, unsigned dim)
{
  Matrix m(std::move(field), dim);
  for (unsigned i = 0; i < dim; ++i)
    m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::vector<Vec> const &rows)
{
  Matrix m(std::move(field), static_cast<unsigned>(rows.size()));
  for (unsigned i = 0; i < m.dim_; ++i) {
    if (rows[i].size() != m.dim_)
      throw InvalidArgument("matrix rows must be square");
    for (unsigned j = 0; j < m.dim_; ++j) {
      if (rows[i][j] >= m.field_->q())
        throw InvalidArgument("matrix entry outside the field");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Vec Matrix::row(unsigned i) const
{
  return Vec(a_.begin() + i * dim_, a_.begin() + (i + 1) * dim_);
}

Matrix Matrix::operator*(Matrix const &rhs) const
{
  if (dim_ != rhs.dim_)
    throw InvalidArgument("matrix dimension mismatch");
  auto const &F = *field_;
  Matrix r(field_, dim_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned k = 0; k < dim_; ++k) {
      Elem a = (*this)(i, k);
      if (!a)
        continue;
      for (unsigned j = 0; j < dim_; ++j)
        r.at(i, j) = F.add(r(i, j), F.mul(a, rhs(k, j)));
    }
  return r;
}

Matrix Matrix::operator+(Matrix const &rhs) const
{
  Matrix r(field_, dim_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_->add(a_[i], rhs.a_[i]);
  return r;
}

Matrix Matrix::operator-(Matrix const &rhs) const
{
  Matrix r(field_, dim_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_->sub(a_[i], rhs.a_[i]);
  return r;
}

Matrix Matrix::scaled(Elem c) const
{
  Matrix r(field_, dim_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_->mul(a_[i], c);
  return r;
}

Matrix Matrix::transpose() const
{
  Matrix r(field_, dim_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      r.at(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::inverse() const
{
  auto const &F = *field_;
  unsigned n = dim_;
  Matrix a = *this, inv = identity(field_, n);
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && a(piv, c) == 0)
      ++piv;
    if (piv == n)
      throw InvalidArgument("matrix is singular");
    if (piv != c)
      for (unsigned j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Elem s = F.inv(a(c, c));
    for (unsigned j = 0; j < n; ++j) {
      a.at(c, j) = F.mul(a(c, j), s);
      inv.at(c, j) = F.mul(inv(c, j), s);
    }
    for (unsigned i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0)
        continue;
      Elem t = a(i, c);
      for (unsigned j = 0; j < n; ++j) {
        a.at(i, j) = F.sub(a(i, j), F.mul(t, a(c, j)));
        inv.at(i, j) = F.sub(inv(i, j), F.mul(t, inv(c, j)));
      }
    }
  }
  return inv;
}

Matrix Matrix::pow(long long e) const
{
  Matrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? 0ull - static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(e);
  Matrix r = identity(field_, dim_);
  while (k) {
    if (k & 1ull)
      r = r * base;
    k >>= 1ull;
    if (k)
      base = base * base;
  }
  return r;
}

Matrix Matrix::frobenius(unsigned k) const
{
  Matrix r(field_, dim_);
  long long e = 1;
  for (unsigned i = 0; i < k; ++i)
    e *= field_->p();
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_->pow(a_[i], e);
  return r;
}

Elem Matrix::det() const
{
  auto const &F = *field_;
  unsigned n = dim_;
  Matrix a = *this;
  Elem d = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && a(piv, c) == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      for (unsigned j = 0; j < n; ++j)
        std::swap(a.at(piv, j), a.at(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, a(c, c));
    Elem s = F.inv(a(c, c));
    for (unsigned i = c + 1; i < n; ++i) {
      if (a(i, c) == 0)
        continue;
      Elem t = F.mul(a(i, c), s);
      for (unsigned j = c; j < n; ++j)
        a.at(i, j) = F.sub(a(i, j), F.mul(t, a(c, j)));
    }
  }
  return d;
}

unsigned Matrix::rank() const
{
  std::vector<Vec> rows;
  for (unsigned i = 0; i < dim_; ++i)
    rows.push_back(row(i));
  return static_cast<unsigned>(rref(*field_, rows).size());
}

bool Matrix::is_identity() const
{
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u))
        return false;
  return true;
}

bool Matrix::is_scalar() const
{
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      if ((*this)(i, j) != (i == j ? (*this)(0, 0) : 0u))
        return false;
  return true;
}

Vec row_times(Vec const &v, Matrix const &m)
{
  auto const &F = *m.field();
  Vec r(m.dim(), 0);
  for (unsigned i = 0; i < m.dim(); ++i) {
    if (!v[i])
      continue;
    for (unsigned j = 0; j < m.dim(); ++j)
      r[j] = F.add(r[j], F.mul(v[i], m(i, j)));
  }
  return r;
}

Vec normalize_projective(FiniteField const &F, Vec v)
{
  for (auto x : v)
    if (x) {
      Elem s = F.inv(x);
      for (auto &y : v)
        y = F.mul(y, s);
      return v;
    }
  throw InvalidArgument("zero vector has no projective point");
}

std::vector<Vec> rref(FiniteField const &F, std::vector<Vec> rows)
{
  if (rows.empty())
    return rows;
  std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    Elem s = F.inv(rows[r][c]);
    for (auto &x : rows[r])
      x = F.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      Elem t = rows[i][c];
      for (std::size_t j = 0; j < n; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(t, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// ---------------------------------------------------------------- polynomials

Poly poly_trim(Poly a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
  return a;
}

Poly poly_mul(FiniteField const &F, Poly const &a, Poly const &b)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return poly_trim(r);
}

Poly poly_sub(FiniteField const &F, Poly const &a, Poly const &b)
{
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return poly_trim(r);
}

std::pair<Poly, Poly> poly_divmod(FiniteField const &F, Poly const &a, Poly const &b)
{
  Poly bt = poly_trim(b);
  if (bt.empty())
    throw InvalidArgument("polynomial division by zero");
  Poly r = poly_trim(a);
  if (r.size() < bt.size())
    return {{}, r};
  Poly q(r.size() - bt.size() + 1, 0);
  Elem lead_inv = F.inv(bt.back());
  while (r.size() >= bt.size()) {
    std::size_t shift = r.size() - bt.size();
    Elem c = F.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < bt.size(); ++i)
      r[i + shift] = F.sub(r[i + shift], F.mul(c, bt[i]));
    r = poly_trim(r);
  }
  return {poly_trim(q), r};
}

Poly poly_gcd(FiniteField const &F, Poly a, Poly b)
{
  a = poly_trim(a);
  b = poly_trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Elem s = F.inv(a.back());
    for (auto &x : a)
      x = F.mul(x, s);
  }
  return a;
}

Poly poly_powmod(FiniteField const &F, Poly const &base, unsigned long long e,
                 Poly const &mod)
{
  Poly r{1};
  r = poly_divmod(F, r, mod).second;
  Poly b = poly_divmod(F, base, mod).second;
  while (e) {
    if (e & 1ull)
      r = poly_divmod(F, poly_mul(F, r, b), mod).second;
    e >>= 1ull;
    if (e)
      b = poly_divmod(F, poly_mul(F, b, b), mod).second;
  }
  return r;
}

Elem poly_eval(FiniteField const &F, Poly const &a, Elem x)
{
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    r = F.add(F.mul(r, x), a[i]);
  return r;
}

Matrix poly_eval(Poly const &a, Matrix const &m)
{
  Matrix r(m.field(), m.dim());
  Matrix id = Matrix::identity(m.field(), m.dim());
  for (std::size_t i = a.size(); i-- > 0;)
    r = r * m + id.scaled(a[i]);
  return r;
}

Poly characteristic_polynomial(Matrix const &m)
{
  auto const &F = *m.field();
  unsigned n = m.dim();
  Matrix h = m;
  // Reduce to upper Hessenberg form by similarity transformations.
  for (unsigned c = 0; c + 2 < n; ++c) {
    unsigned i = c + 1;
    while (i < n && h(i, c) == 0)
      ++i;
    if (i == n)
      continue;
    if (i != c + 1) {
      for (unsigned j = 0; j < n; ++j)
        std::swap(h.at(i, j), h.at(c + 1, j));
      for (unsigned j = 0; j < n; ++j)
        std::swap(h.at(j, i), h.at(j, c + 1));
    }
    Elem t = F.inv(h(c + 1, c));
    for (unsigned r = c + 2; r < n; ++r) {
      Elem u = F.mul(h(r, c), t);
      if (!u)
        continue;
      for (unsigned j = 0; j < n; ++j)
        h.at(r, j) = F.sub(h(r, j), F.mul(u, h(c + 1, j)));
      for (unsigned j = 0; j < n; ++j)
        h.at(j, c + 1) = F.add(h(j, c + 1), F.mul(u, h(j, r)));
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (unsigned k = 1; k <= n; ++k) {
    Poly cur = poly_mul(F, Poly{F.neg(h(k - 1, k - 1)), 1}, p[k - 1]);
    Elem t = 1;
    for (unsigned i = k - 1; i >= 1; --i) {
      t = F.mul(t, h(i, i - 1));
      Elem c = F.mul(h(i - 1, k - 1), t);
      if (c)
        cur = poly_sub(F, cur, poly_mul(F, Poly{c}, p[i - 1]));
    }
    p[k] = cur;
  }
  return p[n];
}

unsigned nu(Matrix const &m)
{
  auto const &F = *m.field();
  unsigned d = m.dim();
  if (d == 0)
    return 0;
  Matrix id = Matrix::identity(m.field(), d);
  Poly rest = characteristic_polynomial(m);
  unsigned best = 0;

  for (Elem lambda = 0; lambda < F.q() && rest.size() > 1; ++lambda) {
    if (poly_eval(F, rest, lambda) != 0)
      continue;
    best = std::max(best, d - (m - id.scaled(lambda)).rank());
    Poly lin{F.neg(lambda), 1};
    while (rest.size() > 1 && poly_eval(F, rest, lambda) == 0)
      rest = poly_divmod(F, rest, lin).first;
  }

  // Remaining factors have degree >= 2; distinct-degree factorization.
  Poly x{0, 1};
  Poly frob = x;
  for (unsigned e = 1; rest.size() > 1; ++e) {
    frob = poly_powmod(F, frob, F.q(), rest);
    if (e < 2)
      continue;
    Poly g = poly_gcd(F, rest, poly_sub(F, frob, x));
    if (g.size() <= 1)
      continue;
    unsigned factors = static_cast<unsigned>(g.size() - 1) / e;
    unsigned kernel = d - poly_eval(g, m).rank();
    if (kernel % (e * factors) != 0 || (factors > 1 && kernel != e * factors))
      throw Error("nu: eigenvalue pattern outside the supported dimension range");
    best = std::max(best, kernel / (e * factors));
    for (Poly c = poly_gcd(F, rest, g); c.size() > 1; c = poly_gcd(F, rest, g))
      rest = poly_divmod(F, rest, c).first;
    frob = poly_divmod(F, frob, rest.empty() ? Poly{1} : rest).second;
  }
  return d - best;
}

} // namespace halftrans
