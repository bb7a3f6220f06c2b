#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "halftrans/actions.hpp"
#include "halftrans/caps.hpp"
#include "halftrans/catalog.hpp"
#include "halftrans/criteria.hpp"
#include "halftrans/error.hpp"
#include "halftrans/formulas.hpp"
#include "halftrans/genfile.hpp"
#include "halftrans/psl2_char.hpp"
#include "halftrans/recipes.hpp"

#ifndef HALFTRANS_DEFAULT_FIXTURE_DIR
#define HALFTRANS_DEFAULT_FIXTURE_DIR ""
#endif

using namespace halftrans;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct ActionSpec {
  std::string recipe, group, subgroup;

  void add_to(CLI::App *cmd)
  {
    auto *r = cmd->add_option("--recipe", recipe, "recipe name:arg:...");
    auto *g = cmd->add_option("--group", group, "generator file of the group");
    cmd->add_option("--subgroup", subgroup, "generator file of the point stabilizer")->needs(g);
    r->excludes(g);
  }

  TransitiveAction build() const
  {
    if (!recipe.empty())
      return build_recipe(recipe);
    if (group.empty())
      throw ParseError("an action needs --recipe or --group");
    if (!subgroup.empty())
      return ingest_action(group, subgroup);
    return make_action(ingest_group(group), group);
  }
};

unsigned to_unsigned(std::string const &s)
{
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (std::exception const &) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-')
    throw ParseError("'" + s + "' is not a nonnegative integer");
  return static_cast<unsigned>(v);
}

int to_sign(std::string const &s)
{
  if (s == "+" || s == "1" || s == "+1")
    return 1;
  if (s == "-" || s == "-1")
    return -1;
  throw ParseError("expected + or -, got '" + s + "'");
}

std::string bound_value(PowerBound const &b)
{
  auto x = b.exact();
  return x ? to_string(*x) : b.str();
}

struct Formula {
  char const *usage;
  std::size_t min_args, max_args;
  std::string (*eval)(std::vector<std::string> const &);
};

std::map<std::string, Formula> const &formulas()
{
  static std::map<std::string, Formula> const table = {
    {"gaussian", {"gaussian m k q", 3, 3, [](auto const &a) {
       return to_string(gaussian_coefficient(to_unsigned(a[0]), to_unsigned(a[1]), to_unsigned(a[2])));
     }}},
    {"ksets", {"ksets n k  (suborbit sizes by intersection size)", 2, 2, [](auto const &a) {
       std::string out;
       for (auto const &x : k_set_suborbit_sizes(to_unsigned(a[0]), to_unsigned(a[1])))
         out += (out.empty() ? "" : " ") + to_string(x);
       return out;
     }}},
    {"subspace", {"subspace d m q  (disjoint and codimension-one suborbits)", 3, 3, [](auto const &a) {
       auto s = subspace_action_subdegrees(to_unsigned(a[0]), to_unsigned(a[1]), to_unsigned(a[2]));
       std::string out = to_string(s.disjoint);
       if (s.codim_one)
         out += " " + to_string(*s.codim_one);
       return out;
     }}},
    {"singular", {"singular m q  (totally singular m-space suborbits, by meet dimension)", 2, 2,
                  [](auto const &a) {
       std::string out;
       for (auto const &[i, n] : totally_singular_subdegrees(to_unsigned(a[0]), to_unsigned(a[1])))
         out += (out.empty() ? "" : " ") + std::to_string(i) + ":" + to_string(n);
       return out;
     }}},
    {"transvections", {"transvections PSL|PSU|PSp d q", 3, 3, [](auto const &a) {
       return to_string(transvection_count(parse_family(a[0]), to_unsigned(a[1]), to_unsigned(a[2])));
     }}},
    {"torus", {"torus SL|SU|Sp|Omega|Omega-|Omega+ d q", 3, 3, [](auto const &a) {
       auto t = torus_order(parse_torus_family(a[0]), to_unsigned(a[1]), to_unsigned(a[2]));
       return to_string(t.order) + " " + std::to_string(t.ell);
     }}},
    {"unipotent-bound", {"unipotent-bound family d q nu [a|b|c|a']", 4, 5, [](auto const &a) {
       BoundQuery b{parse_family(a[0]), to_unsigned(a[1]), to_unsigned(a[2]), to_unsigned(a[3]),
                    a.size() > 4 ? a[4] : ""};
       return bound_value(unipotent_class_lower_bound(b));
     }}},
    {"outer-bound", {"outer-bound family d q r f|g|gf", 5, 5, [](auto const &a) {
       BoundQuery b{parse_family(a[0]), to_unsigned(a[1]), to_unsigned(a[2]), to_unsigned(a[3]), a[4]};
       return bound_value(outer_class_lower_bound(b));
     }}},
    {"np-threshold", {"np-threshold k", 1, 1, [](auto const &a) {
       return to_string(np_threshold(to_unsigned(a[0])));
     }}},
    {"ddivx2", {"ddivx2 d p f +|-", 4, 4, [](auto const &a) {
       return std::string(ddivx2_check(to_unsigned(a[0]), to_unsigned(a[1]), to_unsigned(a[2]),
                                       to_sign(a[3]))
                              ? "true"
                              : "false");
     }}},
    {"e6-subdegree", {"e6-subdegree q", 1, 1, [](auto const &a) {
       return to_string(e6_p3_subdegree(to_unsigned(a[0])));
     }}},
    {"psl2-profile", {"psl2-profile q m", 2, 2, [](auto const &a) {
       return predicted_profile(to_unsigned(a[0]), to_unsigned(a[1])).str();
     }}},
  };
  return table;
}

std::string fixture_dir_default()
{
  if (char const *env = std::getenv("HALFTRANS_FIXTURES"))
    return env;
  return HALFTRANS_DEFAULT_FIXTURE_DIR;
}

void write_text(std::string const &path, std::string const &text)
{
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InvalidArgument("cannot write " + path);
  out << text;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Subdegrees and three-halves transitivity of permutation groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine readable output");
  app.fallthrough();

  // construct
  auto *construct = app.add_subcommand("construct", "write a generator file for a recipe");
  std::string c_recipe, c_out, c_sub_out;
  construct->add_option("recipe", c_recipe, "recipe name:arg:...")->required();
  construct->add_option("-o,--output", c_out, "group file (default stdout)");
  construct->add_option("--subgroup-output", c_sub_out, "also write the point stabilizer");

  auto *subdeg = app.add_subcommand("subdegrees", "print the suborbit lengths");
  ActionSpec s_spec;
  s_spec.add_to(subdeg);

  auto *classify_cmd = app.add_subcommand("classify", "transitivity verdict as JSON");
  ActionSpec c_spec;
  c_spec.add_to(classify_cmd);
  std::vector<unsigned> c_primes;
  classify_cmd->add_option("--p", c_primes, "extra primes to test for p-subdegrees");

  auto *triple = app.add_subcommand("triple", "compare G = H N_G(P) H with the absence of p-subdegrees");
  triple->alias("check-equivalence");
  std::string t_g, t_h;
  unsigned t_p = 0;
  bool t_derived = false;
  triple->add_option("group", t_g, "G.gens")->required();
  triple->add_option("subgroup", t_h, "H.gens")->required();
  triple->add_option("p", t_p, "prime dividing |H|")->required();
  triple->add_flag("--allow-derived", t_derived,
                   "decide from the subdegrees when N_G(P) exceeds the caps");

  auto *psl2 = app.add_subcommand("psl2", "PSL_2(q).m, q even, on cosets of the dihedral torus normalizer");
  unsigned q_q = 0, q_m = 1;
  bool q_check = false;
  psl2->add_option("q", q_q, "q = 2^f")->required();
  psl2->add_option("--ext", q_m, "order of the field automorphism extension");
  psl2->add_flag("--check", q_check, "also build the action and compare");

  auto *formula = app.add_subcommand("formula", "evaluate a closed formula");
  std::string f_name;
  std::vector<std::string> f_args;
  formula->add_option("name", f_name, "formula name; 'list' shows all")->required();
  formula->add_option("args", f_args, "arguments");

  auto *verify = app.add_subcommand("verify", "replay the catalog");
  std::string v_filter, v_catalog, v_fixtures = fixture_dir_default();
  verify->add_option("--filter", v_filter, "comma separated: native, fixture, data or id substrings");
  verify->add_option("--catalog", v_catalog, "catalog JSON (default: embedded)");
  verify->add_option("--fixtures", v_fixtures, "fixture directory");

  auto *recipes = app.add_subcommand("recipes", "list recipe names");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    // Read once so a malformed value is reported before any work.
    (void)caps();

    if (*construct) {
      auto a = build_recipe(c_recipe);
      write_text(c_out, format_generator_file(a.group, a.label));
      if (!c_sub_out.empty())
        write_text(c_sub_out, format_generator_file(build_group(stabilizer_generators(a)),
                                                    "point stabilizer of " + a.label));
      return kOk;
    }

    if (*subdeg) {
      auto a = s_spec.build();
      auto p = suborbits(a);
      if (as_json) {
        json j;
        j["degree"] = a.degree();
        auto prof = json::array();
        for (auto [len, mult] : p.entries())
          prof.push_back({len, mult});
        j["profile"] = prof;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << p.str() << '\n';
      }
      return kOk;
    }

    if (*classify_cmd) {
      auto a = c_spec.build();
      std::cout << verdict_json(classify(a, c_primes), a.label) << '\n';
      return kOk;
    }

    if (*triple) {
      auto g = ingest_group(t_g);
      auto h = ingest_group(t_h);
      for (auto const &x : h.generators())
        if (x.degree() != g.degree() || !g.contains(x))
          throw InvalidArgument("subgroup generator " + x.str() + " is not in G");
      auto tf = triple_factorization(g, h, t_p, t_derived);
      auto a = coset_action(g, h);
      bool has_p = has_p_subdegree(a, t_p);
      bool agree = tf.holds == !has_p;
      if (as_json) {
        json j;
        j["p"] = t_p;
        j["index"] = tf.index;
        j["sylow_order"] = to_string(tf.sylow_order);
        if (!tf.derived) {
          j["normalizer_order"] = to_string(tf.normalizer_order);
          j["covered"] = tf.covered;
        }
        j["derived"] = tf.derived;
        j["triple_factorization"] = tf.holds;
        j["subdegrees"] = suborbits(a).str();
        j["p_subdegree"] = has_p;
        j["equivalent"] = agree;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "index " << tf.index << ", |P| = " << to_string(tf.sylow_order);
        if (tf.derived)
          std::cout << ", N_G(P) out of reach (derived from subdegrees)\n";
        else
          std::cout << ", |N_G(P)| = " << to_string(tf.normalizer_order) << ", H N_G(P) H covers "
                    << tf.covered << " of " << tf.index << " cosets\n";
        std::cout << "G = H N_G(P) H: " << (tf.holds ? "yes" : "no") << '\n'
                  << "subdegrees: " << suborbits(a).str() << '\n'
                  << "p-subdegree: " << (has_p ? "yes" : "no") << '\n'
                  << "equivalence: " << (agree ? "consistent" : "VIOLATED") << '\n';
      }
      return agree ? kOk : kFail;
    }

    if (*psl2) {
      auto classes = chi_classes(q_q);
      auto orbits = galois_orbits(q_q, q_m);
      auto predicted = predicted_profile(q_q, q_m);
      std::optional<SuborbitProfile> built;
      if (q_check)
        built = suborbits(build_recipe("psl2dih:" + std::to_string(q_q) + ":" + std::to_string(q_m)));
      bool strongly = is_strongly_three_halves(q_q, q_m);
      bool qi = is_QI(q_q);
      bool even = even_subdegree_exists(q_q, q_m);
      if (as_json) {
        json j;
        j["q"] = q_q;
        j["m"] = q_m;
        j["k"] = classes.size();
        j["galois_orbits"] = orbits;
        j["profile"] = predicted.str();
        if (built) {
          j["constructed"] = built->str();
          j["match"] = *built == predicted;
        }
        j["strongly_three_halves"] = strongly;
        j["qi"] = qi;
        j["even_subdegree"] = even;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "k = " << classes.size() << '\n' << "galois orbits:";
        for (auto const &o : orbits) {
          std::cout << " {";
          for (std::size_t i = 0; i < o.size(); ++i)
            std::cout << (i ? "," : "") << o[i];
          std::cout << '}';
        }
        std::cout << '\n' << "profile: " << predicted.str() << '\n';
        if (built)
          std::cout << "constructed: " << built->str() << (*built == predicted ? " (match)" : " (MISMATCH)")
                    << '\n';
        std::cout << "strongly three-halves: " << (strongly ? "true" : "false") << '\n'
                  << "QI: " << (qi ? "true" : "false") << '\n'
                  << "even subdegree: " << (even ? "true" : "false") << '\n';
      }
      return built && *built != predicted ? kFail : kOk;
    }

    if (*formula) {
      if (f_name == "list") {
        for (auto const &[name, f] : formulas())
          std::cout << f.usage << '\n';
        return kOk;
      }
      auto it = formulas().find(f_name);
      if (it == formulas().end())
        throw ParseError("unknown formula '" + f_name + "'");
      auto const &f = it->second;
      if (f_args.size() < f.min_args || f_args.size() > f.max_args)
        throw ParseError(std::string("usage: formula ") + f.usage);
      std::cout << f.eval(f_args) << '\n';
      return kOk;
    }

    if (*verify) {
      auto entries = v_catalog.empty() ? embedded_catalog() : load_catalog(v_catalog);
      auto report = run_suite(entries, v_filter, v_fixtures);
      std::cout << (as_json ? report_json(report) + "\n" : format_report(report));
      return report.ok() ? kOk : kFail;
    }

    if (*recipes) {
      for (auto const &line : recipe_help())
        std::cout << line << '\n';
      return kOk;
    }
  } catch (ParseError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (InvalidArgument const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (CapExceeded const &e) {
    std::cerr << "error: " << e.what() << " (raise with HALFTRANS_CAPS)\n";
    return kFail;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
