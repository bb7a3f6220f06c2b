#include "halftrans/genfile.hpp"

#include <fstream>
#include <sstream>

#include "halftrans/error.hpp"

namespace halftrans {

namespace {

std::string trim(std::string s)
{
  auto hash = s.find('#');
  if (hash != std::string::npos)
    s.erase(hash);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool take_keyword(std::string const &line, char const *kw, std::string &rest)
{
  std::string k(kw);
  if (line.compare(0, k.size(), k) != 0 || line.size() == k.size() ||
      (line[k.size()] != ' ' && line[k.size()] != '\t'))
    return false;
  rest = trim(line.substr(k.size()));
  return true;
}

} // namespace

GeneratorFile parse_generator_file(std::string const &text, std::string const &source)
{
  GeneratorFile f;
  std::istringstream in(text);
  std::string raw;
  bool have_degree = false;
  unsigned lineno = 0;
  auto fail = [&](std::string const &why) {
    return ParseError(source + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty())
      continue;
    std::string rest;
    if (!have_degree) {
      if (!take_keyword(line, "degree", rest) ||
          rest.find_first_not_of("0123456789") != std::string::npos || rest.empty())
        throw fail("expected 'degree N' as the first line");
      f.degree = static_cast<unsigned>(std::stoul(rest));
      if (f.degree == 0)
        throw fail("degree must be positive");
      have_degree = true;
      continue;
    }
    if (f.order)
      throw fail("nothing may follow the order trailer");
    if (take_keyword(line, "order", rest)) {
      if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
        throw fail("bad order value");
      f.order = BigInt(rest);
      continue;
    }
    try {
      f.gens.push_back(parse_permutation(line, f.degree));
    } catch (ParseError const &e) {
      throw fail(e.what());
    }
  }
  if (!have_degree)
    throw ParseError(source + ": missing 'degree N' line");
  return f;
}

GeneratorFile read_generator_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open generator file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generator_file(ss.str(), path);
}

std::string format_generator_file(PermGroup const &g, std::string const &comment,
                                  bool with_order)
{
  std::string s;
  if (!comment.empty())
    s += "# " + comment + "\n";
  s += "degree " + std::to_string(g.degree()) + "\n";
  for (auto const &x : g.generators())
    s += x.str() + "\n";
  if (with_order)
    s += "order " + g.order().str() + "\n";
  return s;
}

PermGroup ingest_group(std::string const &path)
{
  auto f = read_generator_file(path);
  PermGroup g(f.degree, f.gens);
  if (f.order && g.order() != *f.order)
    throw Error(path + ": order trailer " + f.order->str() + " but computed order " +
                g.order().str());
  return g;
}

} // namespace halftrans
