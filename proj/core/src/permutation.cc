#include "halftrans/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "halftrans/error.hpp"

namespace halftrans {

Permutation::Permutation(unsigned degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<char> seen(images_.size(), 0);
  for (Point i : images_) {
    if (i >= images_.size() || seen[i])
      throw InvalidArgument("image list is not a bijection");
    seen[i] = 1;
  }
}

Permutation Permutation::from_cycles(unsigned degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  Permutation p(degree);
  std::vector<char> used(degree, 0);
  for (auto const &c : cycles) {
    for (Point x : c) {
      if (x >= degree)
        throw InvalidArgument("cycle point " + std::to_string(x + 1) +
                              " exceeds degree " + std::to_string(degree));
      if (used[x])
        throw InvalidArgument("cycles are not disjoint at point " +
                              std::to_string(x + 1));
      used[x] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p.images_[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

bool Permutation::is_identity() const
{
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(degree()) +
                          " vs " + std::to_string(rhs.degree()));
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  if (degree() != rhs.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(degree()) +
                          " vs " + std::to_string(rhs.degree()));
  for (auto &x : images_)
    x = rhs.images_[x];
  return *this;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r.images_.resize(images_.size());
  for (Point i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::pow(long long e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? 0ull - static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (k) {
    if (k & 1ull)
      result *= base;
    k >>= 1ull;
    if (k)
      base = base * base;
  }
  return result;
}

Permutation Permutation::conjugate(Permutation const &g) const
{
  Permutation r;
  r.images_.resize(images_.size());
  // g^-1 x g maps i^g to (i^x)^g
  for (Point i = 0; i < images_.size(); ++i)
    r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

std::vector<Point> Permutation::support() const
{
  std::vector<Point> s;
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      s.push_back(i);
  return s;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(images_.size(), 0);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> c;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

BigInt Permutation::order() const
{
  BigInt o = 1;
  for (auto const &c : cycles()) {
    BigInt len = c.size();
    o = o / gcd(o, len) * len;
  }
  return o;
}

Point Permutation::smallest_moved_point() const
{
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return degree();
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (auto const &c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation compose(Permutation const &p, Permutation const &q) { return p * q; }
Permutation inverse(Permutation const &p) { return p.inverse(); }
Permutation power(Permutation const &p, long long e) { return p.pow(e); }
std::vector<Point> support(Permutation const &p) { return p.support(); }

Permutation parse_permutation(std::string_view text, unsigned degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](std::string const &why) -> ParseError {
    return ParseError("bad permutation '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (i == text.size())
    throw fail("empty string");
  while (true) {
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != '(')
      throw fail("expected '('");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw fail("expected a point");
      unsigned long v = std::stoul(std::string(text.substr(start, i - start)));
      if (v == 0 || v > degree)
        throw fail("point " + std::to_string(v) + " out of range 1.." +
                   std::to_string(degree));
      cycle.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i == text.size())
        throw fail("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw fail(std::string("unexpected character '") + text[i] + "'");
    }
    cycles.push_back(std::move(cycle));
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (InvalidArgument const &e) {
    throw fail(e.what());
  }
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point x : p.images())
    h = (h ^ x) * 0x100000001b3ull;
  return h;
}

} // namespace halftrans
