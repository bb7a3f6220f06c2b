#include "halftrans/finite_field.hpp"

#include <map>
#include <mutex>

#include "halftrans/error.hpp"

namespace halftrans {

namespace {

struct PolyRow {
  unsigned p, f;
  std::vector<unsigned> coeffs;
};

// clang-format off
PolyRow const table[] = {
  {2, 1, {1}},
  {2, 2, {1, 1}},
  {2, 3, {1, 1, 0}},
  {2, 4, {1, 1, 0, 0}},
  {2, 5, {1, 0, 1, 0, 0}},
  {2, 6, {1, 1, 0, 0, 0, 0}},
  {2, 7, {1, 1, 0, 0, 0, 0, 0}},
  {2, 8, {1, 0, 1, 1, 1, 0, 0, 0}},
  {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0}},
  {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
  {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0}},
  {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {2, 14, {1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
  {2, 15, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
  {2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
  {3, 1, {1}},
  {3, 2, {2, 2}},
  {3, 3, {1, 2, 0}},
  {3, 4, {2, 1, 0, 0}},
  {3, 5, {1, 2, 0, 0, 0}},
  {3, 6, {2, 1, 0, 0, 0, 0}},
  {3, 7, {1, 2, 1, 0, 0, 0, 0}},
  {3, 8, {2, 0, 0, 1, 0, 0, 0, 0}},
  {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0}},
  {3, 10, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
  {5, 1, {2}},
  {5, 2, {2, 1}},
  {5, 3, {2, 3, 0}},
  {5, 4, {2, 2, 1, 0}},
  {5, 5, {2, 4, 0, 0, 0}},
  {5, 6, {2, 1, 0, 0, 0, 0}},
  {7, 1, {2}},
  {7, 2, {3, 1}},
  {7, 3, {2, 3, 0}},
  {7, 4, {5, 3, 1, 0}},
  {7, 5, {4, 1, 0, 0, 0}},
};
// clang-format on

bool is_primitive_root(unsigned g, unsigned p)
{
  unsigned long long x = 1;
  for (unsigned k = 1; k < p - 1; ++k) {
    x = x * g % p;
    if (x == 1)
      return false;
  }
  return p == 2 || x * g % p == 1;
}

PolyRow const *find_row(unsigned p, unsigned f)
{
  for (auto const &r : table)
    if (r.p == p && r.f == f)
      return &r;
  return nullptr;
}

} // namespace

bool is_prime(unsigned long long n)
{
  if (n < 2)
    return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long q)
{
  if (q < 2)
    return std::nullopt;
  unsigned long long p = 2;
  while (q % p != 0)
    ++p;
  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1)
    return std::nullopt;
  return std::make_pair(static_cast<unsigned>(p), f);
}

bool FiniteField::supported(unsigned q)
{
  auto pf = prime_power(q);
  return pf && (find_row(pf->first, pf->second) != nullptr || (pf->second == 1 && q < 65536));
}

FieldPtr FiniteField::get(unsigned q)
{
  auto pf = prime_power(q);
  if (!pf)
    throw InvalidArgument("field size " + std::to_string(q) + " is not a prime power");
  return get(pf->first, pf->second);
}

FieldPtr FiniteField::get(unsigned p, unsigned f)
{
  static std::mutex m;
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find({p, f});
  if (it != cache.end())
    return it->second;
  auto row = find_row(p, f);
  std::vector<unsigned> coeffs;
  if (row) {
    coeffs = row->coeffs;
  } else if (f == 1 && is_prime(p) && p < 65536) {
    // Same rule as the table: least c with x + c primitive, i.e. -c a primitive root.
    for (unsigned c = 1; c < p && coeffs.empty(); ++c)
      if (is_primitive_root(p - c, p))
        coeffs = {c};
  }
  if (coeffs.empty())
    throw InvalidArgument("unsupported field GF(" + std::to_string(p) + "^" +
                          std::to_string(f) + ")");
  FieldPtr field(new FiniteField(p, f, coeffs));
  cache.emplace(std::make_pair(p, f), field);
  return field;
}

FiniteField::FiniteField(unsigned p, unsigned f, std::vector<unsigned> poly)
  : p_(p), f_(f), q_(1), poly_(std::move(poly))
{
  for (unsigned i = 0; i < f; ++i)
    q_ *= p;
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::vector<unsigned> cur(f, 0);
  cur[0] = 1;
  auto encode = [&](std::vector<unsigned> const &c) {
    Elem v = 0;
    for (unsigned i = f; i-- > 0;)
      v = v * p + c[i];
    return v;
  };
  std::vector<char> seen(q_, 0);
  for (unsigned k = 0; k + 1 < q_; ++k) {
    Elem v = encode(cur);
    if (seen[v])
      throw Error("defining polynomial is not primitive");
    seen[v] = 1;
    exp_[k] = v;
    log_[v] = k;
    // cur *= x modulo the defining polynomial
    unsigned top = cur[f - 1];
    for (unsigned i = f - 1; i > 0; --i)
      cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < f; ++i)
      cur[i] = (cur[i] + (p - poly_[i]) * top) % p;
  }
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const
{
  if (p_ == 2)
    return a ^ b;
  Elem r = 0, scale = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const
{
  if (p_ == 2)
    return a;
  Elem r = 0, scale = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const
{
  if (a == 0 || b == 0)
    return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const
{
  if (a == 0)
    throw InvalidArgument("division by zero in GF(" + std::to_string(q_) + ")");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, long long e) const
{
  if (a == 0) {
    if (e < 0)
      throw InvalidArgument("division by zero in GF(" + std::to_string(q_) + ")");
    return e == 0 ? 1 : 0;
  }
  long long n = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
  if (k < 0)
    k += n;
  return exp_[static_cast<std::size_t>(k)];
}

unsigned FiniteField::log(Elem a) const
{
  if (a == 0)
    throw InvalidArgument("logarithm of zero");
  return log_[a];
}

FiniteField::Elem FiniteField::from_int(long long v) const
{
  long long r = v % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return static_cast<Elem>(r);
}

std::vector<unsigned> FiniteField::coefficients(Elem a) const
{
  std::vector<unsigned> c(f_);
  for (unsigned i = 0; i < f_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::string FiniteField::str(Elem a) const
{
  if (f_ == 1)
    return std::to_string(a);
  auto c = coefficients(a);
  std::string s;
  for (unsigned i = f_; i-- > 0;) {
    if (!c[i])
      continue;
    if (!s.empty())
      s += "+";
    if (i == 0 || c[i] != 1)
      s += std::to_string(c[i]);
    if (i >= 1)
      s += "x";
    if (i >= 2)
      s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

} // namespace halftrans
