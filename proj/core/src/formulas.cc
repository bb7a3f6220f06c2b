#include "halftrans/formulas.hpp"

#include <algorithm>

#include "halftrans/error.hpp"
#include "halftrans/finite_field.hpp"

namespace halftrans {

namespace {

BigInt qpow(unsigned q, unsigned e) { return ipow(BigInt(q), e); }

Rational rpow(Rational const &x, unsigned e)
{
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= x;
  return r;
}

std::pair<unsigned, unsigned> char_and_degree(unsigned q)
{
  auto pf = prime_power(q);
  if (!pf)
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return *pf;
}

void require(bool ok, std::string const &what)
{
  if (!ok)
    throw InvalidArgument(what);
}

int eps_of(ClassicalFamily f)
{
  return f == ClassicalFamily::PSU || f == ClassicalFamily::POmegaMinus ? -1 : 1;
}

PowerBound make_bound(Rational coeff, unsigned q, Rational exponent)
{
  PowerBound b;
  b.coeff = std::move(coeff);
  b.q = q;
  b.exponent = std::move(exponent);
  return b;
}

} // namespace

BigInt gaussian_coefficient(unsigned m, unsigned i, unsigned q)
{
  require(q >= 2, "gaussian coefficient needs q >= 2");
  require(i <= m, "gaussian coefficient needs i <= m");
  BigInt num = 1, den = 1;
  for (unsigned j = 0; j < i; ++j) {
    num *= qpow(q, m - j) - 1;
    den *= qpow(q, i - j) - 1;
  }
  return num / den;
}

std::vector<BigInt> k_set_suborbit_sizes(unsigned n, unsigned k)
{
  require(k < n, "k-set suborbits need k < n");
  std::vector<BigInt> out;
  for (unsigned i = 0; i <= k; ++i)
    out.push_back(k - i <= n - k ? binomial(k, i) * binomial(n - k, k - i) : BigInt(0));
  return out;
}

SubspaceSubdegrees subspace_action_subdegrees(unsigned d, unsigned m, unsigned q)
{
  char_and_degree(q);
  require(m >= 1 && 2 * m <= d, "subspace subdegrees need 1 <= m <= d/2");
  SubspaceSubdegrees s;
  s.disjoint = qpow(q, m * m) * gaussian_coefficient(d - m, m, q);
  if (m >= 2)
    s.codim_one = (qpow(q, m) - 1) * q * (qpow(q, d - m) - 1) / ((q - 1) * (q - 1));
  return s;
}

std::vector<std::pair<unsigned, BigInt>> totally_singular_subdegrees(unsigned m, unsigned q)
{
  char_and_degree(q);
  require(m >= 5 && m % 2 == 1, "totally singular subdegrees need m odd >= 5");
  std::vector<std::pair<unsigned, BigInt>> out;
  for (unsigned i = 0; i < m; ++i)
    if ((m - i) % 2 == 0)
      out.emplace_back(i, qpow(q, (m - i) * (m - i - 2) / 2) * gaussian_coefficient(m, i, q));
  return out;
}

ClassicalFamily parse_family(std::string const &name)
{
  if (name == "PSL")
    return ClassicalFamily::PSL;
  if (name == "PSU")
    return ClassicalFamily::PSU;
  if (name == "PSp")
    return ClassicalFamily::PSp;
  if (name == "POmega+")
    return ClassicalFamily::POmegaPlus;
  if (name == "POmega-")
    return ClassicalFamily::POmegaMinus;
  if (name == "POmega")
    return ClassicalFamily::POmegaOdd;
  throw InvalidArgument("unknown family '" + name + "' (PSL, PSU, PSp, POmega+, POmega-, POmega)");
}

std::string family_name(ClassicalFamily f)
{
  switch (f) {
  case ClassicalFamily::PSL: return "PSL";
  case ClassicalFamily::PSU: return "PSU";
  case ClassicalFamily::PSp: return "PSp";
  case ClassicalFamily::POmegaPlus: return "POmega+";
  case ClassicalFamily::POmegaMinus: return "POmega-";
  case ClassicalFamily::POmegaOdd: return "POmega";
  }
  return "?";
}

BigInt transvection_count(ClassicalFamily family, unsigned d, unsigned q)
{
  char_and_degree(q);
  switch (family) {
  case ClassicalFamily::PSL:
    require(d >= 2, "PSL transvections need d >= 2");
    return (qpow(q, d) - 1) * (qpow(q, d - 1) - 1) / (q - 1);
  case ClassicalFamily::PSU: {
    require(d >= 3, "PSU transvections need d >= 3");
    BigInt a = qpow(q, d) - (d % 2 ? -1 : 1);
    BigInt b = qpow(q, d - 1) - ((d - 1) % 2 ? -1 : 1);
    return a * b / (q + 1);
  }
  case ClassicalFamily::PSp:
    require(d >= 2 && d % 2 == 0, "PSp transvections need even d");
    return qpow(q, d) - 1;
  default:
    throw InvalidArgument("transvection counts are tabulated for PSL, PSU, PSp only");
  }
}

TorusFamily parse_torus_family(std::string const &name)
{
  if (name == "SL")
    return TorusFamily::SL;
  if (name == "SU")
    return TorusFamily::SU;
  if (name == "Sp")
    return TorusFamily::Sp;
  if (name == "Omega")
    return TorusFamily::OmegaOdd;
  if (name == "Omega-")
    return TorusFamily::OmegaMinus;
  if (name == "Omega+")
    return TorusFamily::OmegaPlus;
  throw InvalidArgument("unknown torus family '" + name + "' (SL, SU, Sp, Omega, Omega-, Omega+)");
}

TorusOrder torus_order(TorusFamily family, unsigned d, unsigned q)
{
  char_and_degree(q);
  BigInt g2 = gcd(BigInt(2), BigInt(q + 1));
  switch (family) {
  case TorusFamily::SL:
    require(d >= 2, "SL torus needs d >= 2");
    return {(qpow(q, d) - 1) / (q - 1), d};
  case TorusFamily::SU:
    require(d >= 3, "SU torus needs d >= 3");
    if (d % 2)
      return {(qpow(q, d) + 1) / (q + 1), d};
    return {(qpow(q, d - 1) + 1) / (q + 1), d - 1};
  case TorusFamily::Sp:
    require(d >= 4 && d % 2 == 0, "Sp torus needs even d >= 4");
    return {qpow(q, d / 2) + 1, d};
  case TorusFamily::OmegaOdd:
    require(d >= 3 && d % 2 == 1, "Omega torus needs odd d >= 3");
    return {(qpow(q, (d - 1) / 2) + 1) / g2, d - 1};
  case TorusFamily::OmegaMinus:
    require(d >= 4 && d % 2 == 0, "Omega- torus needs even d >= 4");
    return {(qpow(q, d / 2) + 1) / g2, d};
  case TorusFamily::OmegaPlus:
    require(d >= 4 && d % 2 == 0, "Omega+ torus needs even d >= 4");
    return {(qpow(q, d / 2 - 1) + 1) / g2, d - 2};
  }
  throw InvalidArgument("unknown torus family");
}

int PowerBound::compare(Rational const &x) const
{
  BigInt a = numerator(exponent);
  unsigned b = static_cast<unsigned>(to_u64(denominator(exponent)));
  // c q^(a/b) vs x  <=>  c^b q^a vs x^b, everything positive.
  Rational lhs = rpow(coeff, b), rhs = rpow(x, b);
  if (a >= 0)
    lhs *= Rational(ipow(BigInt(q), static_cast<unsigned>(to_u64(a))));
  else
    rhs *= Rational(ipow(BigInt(q), static_cast<unsigned>(to_u64(-a))));
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::optional<Rational> PowerBound::exact() const
{
  auto [p, f] = char_and_degree(q);
  // q^(a/b) = p^(f a / b)
  Rational e = exponent * f;
  if (denominator(e) != 1)
    return std::nullopt;
  BigInt n = numerator(e);
  Rational pw = Rational(ipow(BigInt(p), static_cast<unsigned>(to_u64(n < 0 ? BigInt(-n) : n))));
  return n < 0 ? Rational(coeff / pw) : Rational(coeff * pw);
}

std::string PowerBound::str() const
{
  if (auto v = exact())
    return to_string(*v);
  return to_string(coeff) + "*" + std::to_string(q) + "^(" + to_string(exponent) + ")";
}

PowerBound unipotent_class_lower_bound(BoundQuery const &query)
{
  auto [p, f] = char_and_degree(query.q);
  (void)f;
  unsigned d = query.d, s = query.s, q = query.q;
  int eps = eps_of(query.family);
  require(d >= 2 && s >= 1 && s < d, "class bound needs d >= 2 and 1 <= s < d");
  Rational qq(q);
  auto mx = [](long a, long b) { return Rational(std::max(a, b)); };
  long D = d, S = s;

  if (p % 2 == 1) {
    require(query.label.empty(), "odd characteristic classes carry no label");
    switch (query.family) {
    case ClassicalFamily::PSL:
    case ClassicalFamily::PSU:
      return make_bound(qq / (2 * (qq - eps) * (qq + 1)), q, mx(2 * S * (D - S), D * S));
    case ClassicalFamily::PSp:
      require(d % 2 == 0, "PSp needs even d");
      return make_bound(qq / (4 * (qq + 1)), q, mx(S * (D - S), D * S / 2));
    case ClassicalFamily::POmegaPlus:
    case ClassicalFamily::POmegaMinus:
      require(d % 2 == 0, "POmega+- needs even d");
      return make_bound(qq / (8 * (qq + 1)), q, mx(S * (D - S - 1), D * (S - 1) / 2));
    case ClassicalFamily::POmegaOdd: {
      require(d % 2 == 1, "POmega needs odd d");
      // The second exponent d(s-1)/2 may be a half-integer here.
      Rational e1(S * (D - S - 1)), e2 = Rational(D * (S - 1)) / 2;
      return make_bound(Rational(1, 4), q, std::max(e1, e2));
    }
    }
  }

  std::string const &lab = query.label;
  switch (query.family) {
  case ClassicalFamily::PSL:
  case ClassicalFamily::PSU:
    require(lab.empty() || lab == "J", "PSL/PSU involutions carry no class label");
    require(2 * s <= d, "involution [J2^s, I] needs 2s <= d");
    return make_bound(qq / (2 * (qq - eps) * (qq + 1)), q, Rational(2 * S * (D - S)));
  case ClassicalFamily::PSp:
    require(d % 2 == 0 && 2 * s <= d, "PSp involutions need even d and s <= d/2");
    if (lab == "a") {
      require(s % 2 == 0, "class a_s needs s even");
      return make_bound(Rational(1, 2), q, Rational(S * (D - S)));
    }
    if (lab == "b" || lab == "c") {
      require(lab == "b" ? s % 2 == 1 : s % 2 == 0, "class b_s needs s odd, c_s s even");
      return make_bound(Rational(1, 2), q, Rational(S * (D - S + 1)));
    }
    throw InvalidArgument("PSp involution class label must be a, b or c");
  case ClassicalFamily::POmegaPlus:
  case ClassicalFamily::POmegaMinus: {
    require(d % 2 == 0 && 2 * s <= d && s % 2 == 0,
            "POmega involutions need even d and even s <= d/2");
    bool top = eps == 1 && 2 * s == d;
    if (!top) {
      if (lab == "a")
        return make_bound(Rational(1, 4), q, Rational(S * (D - S - 1)));
      if (lab == "c")
        return make_bound(Rational(1, 4), q, Rational(S * (D - S)));
      throw InvalidArgument("POmega involution class label must be a or c");
    }
    if (lab == "a" || lab == "a'")
      return make_bound(Rational(1, 4), q, Rational(D * (D - 2), 4));
    if (lab == "c")
      return make_bound(Rational(1, 4), q, Rational(D * D, 4));
    throw InvalidArgument("POmega+ class label for s = d/2 must be a, a' or c");
  }
  case ClassicalFamily::POmegaOdd:
    break;
  }
  throw InvalidArgument("no even characteristic bound for odd-dimensional POmega");
}

PowerBound outer_class_lower_bound(BoundQuery const &query)
{
  auto [p, f] = char_and_degree(query.q);
  unsigned d = query.d, r = query.s, q = query.q;
  require(r >= 2 && is_prime(r), "automorphism order r must be prime");
  require(d >= 2, "outer bound needs d >= 2");
  std::string const &type = query.label;
  Rational qq(q), one_minus = 1 - Rational(1, r);
  long D = d;
  int eps = eps_of(query.family);

  switch (query.family) {
  case ClassicalFamily::PSL:
  case ClassicalFamily::PSU: {
    Rational pre = eps == 1 ? Rational(1, 2) : Rational(1, 2) * qq / (qq + 1);
    if (type == "f") {
      require(f % r == 0, "field automorphism needs q = q0^r");
      require(eps == 1 || r > 2, "unitary field automorphism needs r > 2");
      return make_bound(pre, q, Rational(D * D - 1) * one_minus - 1);
    }
    if (type == "g") {
      require(r == 2, "graph automorphism has order 2");
      if (d % 2)
        return make_bound(pre, q, Rational(D * D + D - 4, 2));
      require(d > 2, "graph automorphism for even d needs d > 2");
      return make_bound(pre, q, Rational(D * D - D - 4, 2));
    }
    if (type == "gf") {
      require(eps == 1 && r == 2 && f % 2 == 0 && d > 2,
              "graph-field automorphism needs PSL, r = 2, q = q0^2, d > 2");
      return make_bound(Rational(1, 2), q, Rational(D * D - 3, 2));
    }
    break;
  }
  case ClassicalFamily::PSp:
    require(d % 2 == 0, "PSp needs even d");
    if (type == "f") {
      require(f % r == 0, "field automorphism needs q = q0^r");
      return make_bound(Rational(1, 4), q, Rational(D * (D + 1), 2) * one_minus);
    }
    if (type == "gf") {
      require(d == 4 && r == 2 && p == 2 && f % 2 == 1,
              "PSp graph-field automorphism needs (d, r, p) = (4, 2, 2), f odd");
      return make_bound(Rational(1), q, Rational(5));
    }
    break;
  case ClassicalFamily::POmegaPlus:
  case ClassicalFamily::POmegaMinus:
    require(d % 2 == 0, "POmega+- needs even d");
    if (type == "f") {
      require(f % r == 0, "field automorphism needs q = q0^r");
      return make_bound(Rational(1, 4), q, Rational(D * (D - 1), 2) * one_minus);
    }
    if (type == "gf" && eps == 1 && r == 2) {
      require(f % 2 == 0, "graph-field automorphism needs q = q0^2");
      return make_bound(Rational(1, 4), q, Rational(D * (D - 1), 4));
    }
    if (type == "gf" && eps == 1 && r == 3) {
      require(d == 8 && f % 3 == 0, "triality graph-field needs d = 8, q = q0^3");
      return make_bound(Rational(1, 4), q, Rational(56, 3));
    }
    if (type == "g" && eps == 1 && r == 3) {
      require(d == 8, "triality needs d = 8");
      return make_bound(Rational(1, 8), q, Rational(14));
    }
    break;
  case ClassicalFamily::POmegaOdd:
    require(d % 2 == 1 && q % 2 == 1, "POmega needs d q odd");
    if (type == "f") {
      require(f % r == 0, "field automorphism needs q = q0^r");
      return make_bound(Rational(1, 4), q, Rational(D * (D - 1), 2) * one_minus);
    }
    break;
  }
  throw InvalidArgument("no outer automorphism bound for " + family_name(query.family) +
                        " type '" + type + "' r = " + std::to_string(r));
}

BigInt np_threshold(unsigned k)
{
  require(k >= 1, "threshold needs k >= 1");
  BigInt K(k);
  return K * K - K + 1;
}

bool ddivx2_check(unsigned d, unsigned p, unsigned f, int eps)
{
  require(d % 2 == 1 && is_prime(d), "d must be an odd prime");
  require(is_prime(p) && f >= 1, "q must be a prime power");
  require(eps == 1 || eps == -1, "eps must be +1 or -1");
  BigInt q = ipow(BigInt(p), f);
  BigInt top = ipow(q, d) - eps, qe = q - eps;
  BigInt y = top / (qe * gcd(qe, BigInt(d)));
  return y % d != 0;
}

BigInt e6_p3_subdegree(unsigned q)
{
  char_and_degree(q);
  return qpow(q, 19) * (qpow(q, 2) + 1) * (qpow(q, 5) - 1) / (q - 1);
}

} // namespace halftrans
