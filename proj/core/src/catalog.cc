#include "halftrans/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "halftrans/actions.hpp"
#include "halftrans/criteria.hpp"
#include "halftrans/error.hpp"
#include "halftrans/recipes.hpp"

namespace halftrans {

extern char const *const embedded_catalog_json;

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(std::string const &source, std::string const &id, std::string const &msg)
{
  throw ParseError(source + (id.empty() ? "" : ": entry '" + id + "'") + ": " + msg);
}

void check_keys(json const &j, std::set<std::string> const &allowed, std::string const &source,
                std::string const &id, char const *what)
{
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      bad(source, id, std::string("unknown ") + what + " key '" + it.key() + "'");
}

std::vector<unsigned> prime_list(json const &j, std::string const &source, std::string const &id)
{
  if (!j.is_array())
    bad(source, id, "prime list must be an array");
  std::vector<unsigned> out;
  for (auto const &p : j) {
    if (!p.is_number_unsigned() || p.get<unsigned>() < 2)
      bad(source, id, "prime list entries must be integers >= 2");
    out.push_back(p.get<unsigned>());
  }
  return out;
}

CatalogEntry parse_entry(json const &j, std::string const &source)
{
  if (!j.is_object())
    bad(source, "", "entries must be objects");
  CatalogEntry e;
  if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty())
    bad(source, "", "entry without a string id");
  e.id = j["id"].get<std::string>();
  check_keys(j, {"id", "socle", "ext", "degree", "profile", "flags", "construction", "cite"}, source,
             e.id, "entry");
  for (char const *k : {"socle", "degree", "profile", "construction"})
    if (!j.contains(k))
      bad(source, e.id, std::string("missing '") + k + "'");
  auto str = [&](char const *k) {
    if (!j.contains(k))
      return std::string();
    if (!j[k].is_string())
      bad(source, e.id, std::string("'") + k + "' must be a string");
    return j[k].get<std::string>();
  };
  e.socle = str("socle");
  e.ext = str("ext");
  e.cite = str("cite");
  if (!j["degree"].is_number_unsigned() || j["degree"].get<std::uint64_t>() == 0)
    bad(source, e.id, "'degree' must be a positive integer");
  e.degree = j["degree"].get<std::uint64_t>();

  auto const &prof = j["profile"];
  if (!prof.is_array() || prof.empty())
    bad(source, e.id, "'profile' must be a nonempty array of [length, multiplicity]");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (auto const &pm : prof) {
    if (!pm.is_array() || pm.size() != 2 || !pm[0].is_number_unsigned() ||
        !pm[1].is_number_unsigned() || pm[0].get<std::uint64_t>() == 0 ||
        pm[1].get<std::uint64_t>() == 0)
      bad(source, e.id, "profile items must be [length, multiplicity] with positive integers");
    pairs.emplace_back(pm[0].get<std::uint64_t>(), pm[1].get<std::uint64_t>());
  }
  e.profile = SuborbitProfile::from_pairs(pairs);
  if (e.profile.degree() != e.degree)
    bad(source, e.id, "profile sums to " + std::to_string(e.profile.degree()) + ", not degree " +
                          std::to_string(e.degree));
  if (e.profile.entries().front() != std::pair<std::uint64_t, std::uint64_t>{1, 1} &&
      e.degree > 1)
    bad(source, e.id, "profile must contain the trivial suborbit exactly once as its only length 1");

  if (j.contains("flags")) {
    auto const &f = j["flags"];
    if (!f.is_object())
      bad(source, e.id, "'flags' must be an object");
    check_keys(f, {"two_transitive", "three_halves", "primitive", "p_subdegree", "no_p_subdegree",
                   "type"},
               source, e.id, "flags");
    auto boolean = [&](char const *k) -> std::optional<bool> {
      if (!f.contains(k))
        return std::nullopt;
      if (!f[k].is_boolean())
        bad(source, e.id, std::string("flag '") + k + "' must be boolean");
      return f[k].get<bool>();
    };
    e.flags.two_transitive = boolean("two_transitive");
    e.flags.three_halves = boolean("three_halves");
    e.flags.primitive = boolean("primitive");
    if (f.contains("p_subdegree"))
      e.flags.p_subdegree = prime_list(f["p_subdegree"], source, e.id);
    if (f.contains("no_p_subdegree"))
      e.flags.no_p_subdegree = prime_list(f["no_p_subdegree"], source, e.id);
    if (f.contains("type")) {
      if (!f["type"].is_string())
        bad(source, e.id, "flag 'type' must be a string");
      e.flags.type = f["type"].get<std::string>();
    }
  }

  auto const &c = j["construction"];
  if (!c.is_object() || c.size() != 1)
    bad(source, e.id, "'construction' must be an object with exactly one of recipe, fixture, data_only");
  if (c.contains("recipe") && c["recipe"].is_string()) {
    e.kind = ConstructionKind::Recipe;
    e.recipe = c["recipe"].get<std::string>();
    parse_recipe(e.recipe);
  } else if (c.contains("fixture") && c["fixture"].is_string()) {
    e.kind = ConstructionKind::Fixture;
    e.fixture = c["fixture"].get<std::string>();
    auto slash = e.fixture.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == e.fixture.size() ||
        e.fixture.find('/', slash + 1) != std::string::npos)
      bad(source, e.id, "fixture must be '<group>/<subgroup label>'");
  } else if (c.contains("data_only") && c["data_only"] == true) {
    e.kind = ConstructionKind::DataOnly;
  } else {
    bad(source, e.id, "'construction' must be {\"recipe\": s}, {\"fixture\": s} or {\"data_only\": true}");
  }
  return e;
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

std::vector<CatalogEntry> parse_catalog(std::string const &json_text, std::string const &source)
{
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (json::parse_error const &e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError(source + ": expected an object with an 'entries' array");
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  for (auto const &j : doc["entries"]) {
    auto e = parse_entry(j, source);
    if (!ids.insert(e.id).second)
      bad(source, e.id, "duplicate id");
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](CatalogEntry const &a, CatalogEntry const &b) { return a.id < b.id; });
  return out;
}

std::vector<CatalogEntry> load_catalog(std::string const &path)
{
  return parse_catalog(read_file(path), path);
}

std::vector<CatalogEntry> embedded_catalog()
{
  return parse_catalog(embedded_catalog_json, "<embedded catalog>");
}

std::string fixture_group_path(std::string const &fixture_dir, std::string const &fixture)
{
  auto group = fixture.substr(0, fixture.find('/'));
  return (std::filesystem::path(fixture_dir) / group / "G.gens").string();
}

std::string fixture_subgroup_path(std::string const &fixture_dir, std::string const &fixture)
{
  auto slash = fixture.find('/');
  return (std::filesystem::path(fixture_dir) / fixture.substr(0, slash) /
          ("H_" + fixture.substr(slash + 1) + ".gens"))
      .string();
}

char const *status_name(EntryStatus s)
{
  switch (s) {
  case EntryStatus::Pass: return "PASS";
  case EntryStatus::Fail: return "FAIL";
  case EntryStatus::Skip: return "SKIP";
  case EntryStatus::Data: return "DATA";
  }
  return "?";
}

std::optional<TransitiveAction> construct_entry(CatalogEntry const &e,
                                                std::string const &fixture_dir)
{
  switch (e.kind) {
  case ConstructionKind::Recipe:
    return build_recipe(e.recipe);
  case ConstructionKind::Fixture: {
    auto g = fixture_group_path(fixture_dir, e.fixture);
    auto h = fixture_subgroup_path(fixture_dir, e.fixture);
    if (fixture_dir.empty() || !std::filesystem::exists(g) || !std::filesystem::exists(h))
      return std::nullopt;
    return ingest_action(g, h);
  }
  case ConstructionKind::DataOnly:
    break;
  }
  return std::nullopt;
}

EntryReport verify_entry(CatalogEntry const &e, std::string const &fixture_dir)
{
  EntryReport r;
  r.id = e.id;
  r.expected = e.profile;
  if (e.kind == ConstructionKind::DataOnly) {
    r.status = EntryStatus::Data;
    return r;
  }
  std::optional<TransitiveAction> action;
  try {
    action = construct_entry(e, fixture_dir);
  } catch (Error const &err) {
    r.status = EntryStatus::Fail;
    r.note = err.what();
    return r;
  }
  if (!action) {
    r.status = EntryStatus::Skip;
    r.note = "fixture " + e.fixture + " not present";
    return r;
  }
  std::vector<unsigned> primes = e.flags.p_subdegree;
  primes.insert(primes.end(), e.flags.no_p_subdegree.begin(), e.flags.no_p_subdegree.end());
  Verdict v;
  try {
    v = classify(*action, primes);
  } catch (Error const &err) {
    r.status = EntryStatus::Fail;
    r.note = err.what();
    return r;
  }
  r.computed = v.profile;
  r.profile_match = v.profile == e.profile && v.degree == e.degree;
  auto add = [&](std::string name, std::optional<bool> want, bool got) {
    if (want)
      r.flags.push_back({std::move(name), *want, got});
  };
  add("two_transitive", e.flags.two_transitive, v.two_transitive);
  add("three_halves", e.flags.three_halves, v.three_halves);
  add("primitive", e.flags.primitive, v.primitive);
  for (auto p : e.flags.p_subdegree)
    add(std::to_string(p) + "-subdegree", true, v.p_subdegree.at(p));
  for (auto p : e.flags.no_p_subdegree)
    add(std::to_string(p) + "-subdegree", false, v.p_subdegree.at(p));
  bool flags_ok = std::all_of(r.flags.begin(), r.flags.end(), [](FlagCheck const &f) { return f.ok(); });
  r.status = r.profile_match && flags_ok ? EntryStatus::Pass : EntryStatus::Fail;
  if (!r.profile_match)
    r.note = "profile mismatch";
  else if (!flags_ok)
    r.note = "flag mismatch";
  return r;
}

std::vector<CatalogEntry> select_entries(std::vector<CatalogEntry> const &entries,
                                         std::string const &filter)
{
  if (filter.empty())
    return entries;
  std::vector<std::string> tokens;
  std::stringstream ss(filter);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty())
      tokens.push_back(t);
  if (tokens.empty())
    return entries;
  auto matches = [](CatalogEntry const &e, std::string const &t) {
    if (t == "native")
      return e.kind == ConstructionKind::Recipe;
    if (t == "fixture")
      return e.kind == ConstructionKind::Fixture;
    if (t == "data")
      return e.kind == ConstructionKind::DataOnly;
    return e.id.find(t) != std::string::npos;
  };
  for (auto const &t : tokens)
    if (std::none_of(entries.begin(), entries.end(),
                     [&](CatalogEntry const &e) { return matches(e, t); }))
      throw InvalidArgument("filter '" + t + "' matches no catalog entry");
  std::vector<CatalogEntry> out;
  for (auto const &e : entries)
    if (std::any_of(tokens.begin(), tokens.end(), [&](std::string const &t) { return matches(e, t); }))
      out.push_back(e);
  return out;
}

SuiteReport run_suite(std::vector<CatalogEntry> const &entries, std::string const &filter,
                      std::string const &fixture_dir)
{
  auto selected = select_entries(entries, filter);
  std::sort(selected.begin(), selected.end(),
            [](CatalogEntry const &a, CatalogEntry const &b) { return a.id < b.id; });
  SuiteReport r;
  for (auto const &e : selected) {
    r.entries.push_back(verify_entry(e, fixture_dir));
    switch (r.entries.back().status) {
    case EntryStatus::Pass: ++r.pass; break;
    case EntryStatus::Fail: ++r.fail; break;
    case EntryStatus::Skip: ++r.skip; break;
    case EntryStatus::Data: ++r.data; break;
    }
  }
  return r;
}

std::string format_report(SuiteReport const &r)
{
  std::size_t width = 0;
  for (auto const &e : r.entries)
    width = std::max(width, e.id.size());
  std::ostringstream out;
  for (auto const &e : r.entries) {
    out << status_name(e.status) << "  " << e.id << std::string(width - e.id.size(), ' ')
        << "  degree " << e.expected.degree() << "  ";
    switch (e.status) {
    case EntryStatus::Pass:
    case EntryStatus::Data:
      out << e.expected.str();
      break;
    case EntryStatus::Skip:
      out << e.note;
      break;
    case EntryStatus::Fail:
      out << e.note << "; expected " << e.expected.str();
      if (e.computed)
        out << ", computed " << e.computed->str();
      for (auto const &f : e.flags)
        if (!f.ok())
          out << "; " << f.name << " expected " << (f.expected ? "true" : "false");
      break;
    }
    out << '\n';
  }
  out << "summary: " << r.pass << " pass, " << r.fail << " fail, " << r.skip << " skip, " << r.data
      << " data-only\n";
  return out.str();
}

std::string report_json(SuiteReport const &r)
{
  auto profile = [](SuborbitProfile const &p) {
    auto a = json::array();
    for (auto [len, mult] : p.entries())
      a.push_back({len, mult});
    return a;
  };
  json j;
  auto entries = json::array();
  for (auto const &e : r.entries) {
    json x;
    x["id"] = e.id;
    x["status"] = status_name(e.status);
    x["expected"] = profile(e.expected);
    if (e.computed)
      x["computed"] = profile(*e.computed);
    if (e.status == EntryStatus::Pass || e.status == EntryStatus::Fail)
      x["match"] = e.profile_match;
    auto flags = json::array();
    for (auto const &f : e.flags)
      flags.push_back({{"name", f.name}, {"expected", f.expected}, {"actual", f.actual}});
    if (!flags.empty())
      x["flags"] = flags;
    if (!e.note.empty())
      x["note"] = e.note;
    entries.push_back(x);
  }
  j["entries"] = entries;
  j["summary"] = {{"pass", r.pass}, {"fail", r.fail}, {"skip", r.skip}, {"data", r.data}};
  return j.dump(2);
}

} // namespace halftrans
