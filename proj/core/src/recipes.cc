#include "halftrans/recipes.hpp"

#include <charconv>

#include "halftrans/actions.hpp"
#include "halftrans/error.hpp"
#include "halftrans/linear_groups.hpp"

namespace halftrans {

namespace {

unsigned num(Recipe const &r, std::size_t i)
{
  if (i >= r.args.size())
    throw ParseError("recipe '" + r.text + "': missing argument " + std::to_string(i + 1));
  auto const &s = r.args[i];
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("recipe '" + r.text + "': '" + s + "' is not a number");
  return v;
}

std::string opt(Recipe const &r, std::size_t i, std::string const &def = "")
{
  return i < r.args.size() ? r.args[i] : def;
}

void arity(Recipe const &r, std::size_t lo, std::size_t hi)
{
  if (r.args.size() < lo || r.args.size() > hi)
    throw ParseError("recipe '" + r.text + "': expected " + std::to_string(lo) +
                     (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments");
}

SymKind kind(Recipe const &r, std::string const &s)
{
  if (s == "sym" || s.empty())
    return SymKind::Sym;
  if (s == "alt")
    return SymKind::Alt;
  throw ParseError("recipe '" + r.text + "': expected 'sym' or 'alt', got '" + s + "'");
}

bool flag(Recipe const &r, std::size_t i, std::string const &word)
{
  auto s = opt(r, i);
  if (s.empty())
    return false;
  if (s != word)
    throw ParseError("recipe '" + r.text + "': expected '" + word + "', got '" + s + "'");
  return true;
}

bool plus_minus(Recipe const &r, std::size_t i)
{
  auto s = opt(r, i);
  if (s == "plus")
    return true;
  if (s == "minus")
    return false;
  throw ParseError("recipe '" + r.text + "': expected 'plus' or 'minus'");
}

struct Entry {
  char const *usage;
  char const *description;
  TransitiveAction (*build)(Recipe const &);
};

Entry const kRecipes[] = {
  {"sym:n", "S_n on n points",
   [](Recipe const &r) { arity(r, 1, 1); return natural_action(SymKind::Sym, num(r, 0)); }},
  {"alt:n", "A_n on n points",
   [](Recipe const &r) { arity(r, 1, 1); return natural_action(SymKind::Alt, num(r, 0)); }},
  {"cyclic:n", "C_n regular on n points",
   [](Recipe const &r) { arity(r, 1, 1); return cyclic_action(num(r, 0)); }},
  {"dihedral:n", "D_2n on n points",
   [](Recipe const &r) { arity(r, 1, 1); return dihedral_action(num(r, 0)); }},
  {"ksets:n:k[:sym|alt]", "S_n or A_n on k-subsets",
   [](Recipe const &r) {
     arity(r, 2, 3);
     return k_subset_action(kind(r, opt(r, 2)), num(r, 0), num(r, 1));
   }},
  {"partitions:k:l[:sym|alt]", "S_kl or A_kl on partitions into l parts of size k",
   [](Recipe const &r) {
     arity(r, 2, 3);
     return partition_action(kind(r, opt(r, 2)), num(r, 0), num(r, 1));
   }},
  {"product:sym|alt:n:k[:cyclic]", "(S_n or A_n) wr S_k (or C_k) in product action on n^k points",
   [](Recipe const &r) {
     arity(r, 3, 4);
     auto comp = natural_action(kind(r, r.args[0]), num(r, 1));
     unsigned k = num(r, 2);
     if (k < 2)
       throw InvalidArgument("product action needs k >= 2");
     PermGroup top = flag(r, 3, "cyclic") ? cyclic_action(k).group : symmetric_group(k);
     return product_action(comp, k, top);
   }},
  {"imprimitive:n:k", "S_n wr S_k on n*k points (imprimitive)",
   [](Recipe const &r) {
     arity(r, 2, 2);
     unsigned n = num(r, 0), k = num(r, 1);
     if (n < 2 || k < 2)
       throw InvalidArgument("imprimitive wreath product needs n, k >= 2");
     unsigned deg = n * k;
     std::vector<Permutation> gens;
     PermGroup const base = symmetric_group(n), top = symmetric_group(k);
     for (auto const &x : base.generators()) {
       std::vector<Point> img(deg);
       for (Point i = 0; i < deg; ++i)
         img[i] = i < n ? x[i] : i;
       gens.emplace_back(std::move(img));
     }
     for (auto const &s : top.generators()) {
       std::vector<Point> img(deg);
       for (Point i = 0; i < deg; ++i)
         img[i] = s[i / n] * n + i % n;
       gens.emplace_back(std::move(img));
     }
     return make_action(PermGroup(deg, gens), "S" + std::to_string(n) + " wr S" +
                                                  std::to_string(k) + " imprimitive");
   }},
  {"diagonal:alt:n | diagonal:psl2:q", "T x T on T for T = A_n or PSL_2(q)",
   [](Recipe const &r) {
     arity(r, 2, 2);
     if (r.args[0] == "alt")
       return diagonal_action(alternating_group(num(r, 1)));
     if (r.args[0] == "psl2")
       return diagonal_action(psl_on_points(2, num(r, 1)));
     throw ParseError("recipe '" + r.text + "': diagonal needs 'alt' or 'psl2'");
   }},
  {"agl1:p", "A_p on cosets of AGL_1(p) meet A_p",
   [](Recipe const &r) { arity(r, 1, 1); return agl1_coset_action(num(r, 0)); }},
  {"psl2:q[:pgl|pgaml]", "PSL_2(q), PGL_2(q) or PGammaL_2(q) on the projective line",
   [](Recipe const &r) {
     arity(r, 1, 2);
     auto f = opt(r, 1);
     LineFlavor fl = LineFlavor::PSL;
     if (f == "pgl")
       fl = LineFlavor::PGL;
     else if (f == "pgaml")
       fl = LineFlavor::PGammaL;
     else if (!f.empty() && f != "psl")
       throw ParseError("recipe '" + r.text + "': flavor must be psl, pgl or pgaml");
     return projective_line_action(num(r, 0), fl);
   }},
  {"psl2dih:q[:m]", "PSL_2(q).m, q even, on cosets of the dihedral torus normalizer",
   [](Recipe const &r) {
     arity(r, 1, 2);
     return psl2_dihedral_action(num(r, 0), r.args.size() > 1 ? num(r, 1) : 1);
   }},
  {"subspace:d:q:m", "PSL_d(q) on m-subspaces",
   [](Recipe const &r) { arity(r, 3, 3); return subspace_action(num(r, 0), num(r, 1), num(r, 2)); }},
  {"singer:d:q[:graph]", "PSL_d(q) (or PSL_d(q).2) on cosets of a Singer cycle normalizer",
   [](Recipe const &r) {
     arity(r, 2, 3);
     return singer_normalizer_action(num(r, 0), num(r, 1), flag(r, 2, "graph"));
   }},
  {"formsub:su|so|gso:d:q", "PSL_d(q) on cosets of a form stabilizer (identity Gram matrix)",
   [](Recipe const &r) {
     arity(r, 3, 3);
     return form_subgroup_action(r.args[0], num(r, 1), num(r, 2));
   }},
  {"sp2forms:n:plus|minus[:derived]", "Sp_2n(2) (or its derived group) on quadratic forms of one type",
   [](Recipe const &r) {
     arity(r, 2, 3);
     return symplectic_forms_action(num(r, 0), plus_minus(r, 1), flag(r, 2, "derived"));
   }},
  {"singular:n:plus|minus[:omega]", "O_2n(2) (or Omega) on nonzero singular vectors",
   [](Recipe const &r) {
     arity(r, 2, 3);
     return orthogonal_singular_action(num(r, 0), plus_minus(r, 1), flag(r, 2, "omega"));
   }},
};

} // namespace

Recipe parse_recipe(std::string const &text)
{
  Recipe r;
  r.text = text;
  std::size_t start = 0;
  std::vector<std::string> fields;
  for (;;) {
    auto pos = text.find(':', start);
    fields.push_back(text.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos)
      break;
    start = pos + 1;
  }
  for (auto const &f : fields)
    if (f.empty())
      throw ParseError("recipe '" + text + "' has an empty field");
  r.name = fields[0];
  r.args.assign(fields.begin() + 1, fields.end());
  return r;
}

TransitiveAction build_recipe(Recipe const &r)
{
  for (auto const &e : kRecipes) {
    std::string usage = e.usage;
    if (usage.substr(0, usage.find(':')) == r.name) {
      auto a = e.build(r);
      a.label = r.text + " (" + a.label + ")";
      return a;
    }
  }
  throw ParseError("unknown recipe '" + r.name + "'");
}

TransitiveAction build_recipe(std::string const &text) { return build_recipe(parse_recipe(text)); }

std::vector<std::string> recipe_help()
{
  std::vector<std::string> out;
  for (auto const &e : kRecipes)
    out.push_back(std::string(e.usage) + "  " + e.description);
  return out;
}

} // namespace halftrans
