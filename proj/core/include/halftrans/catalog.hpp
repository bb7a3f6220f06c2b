#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halftrans/action.hpp"

namespace halftrans {

enum class ConstructionKind { Recipe, Fixture, DataOnly };

struct EntryFlags {
  std::optional<bool> two_transitive;
  std::optional<bool> three_halves;
  std::optional<bool> primitive;
  std::vector<unsigned> p_subdegree;    // primes that must divide some subdegree
  std::vector<unsigned> no_p_subdegree; // primes that must divide none
  std::string type;                     // "almost_simple", "affine", "product", ...
};

struct CatalogEntry {
  std::string id;
  std::string socle;
  std::string ext;
  std::uint64_t degree = 0;
  SuborbitProfile profile;
  EntryFlags flags;
  ConstructionKind kind = ConstructionKind::DataOnly;
  std::string recipe;  // kind == Recipe
  std::string fixture; // kind == Fixture: "<group>/<subgroup label>"
  std::string cite;
};

// Throws ParseError on malformed JSON or schema violations (unknown keys,
// duplicate ids, a profile that does not sum to the degree, ...).
std::vector<CatalogEntry> parse_catalog(std::string const &json_text,
                                        std::string const &source = "<catalog>");
std::vector<CatalogEntry> load_catalog(std::string const &path);
std::vector<CatalogEntry> embedded_catalog();

// fixtures/<group>/G.gens and fixtures/<group>/H_<label>.gens for "<group>/<label>".
std::string fixture_group_path(std::string const &fixture_dir, std::string const &fixture);
std::string fixture_subgroup_path(std::string const &fixture_dir, std::string const &fixture);

enum class EntryStatus { Pass, Fail, Skip, Data };
char const *status_name(EntryStatus s);

struct FlagCheck {
  std::string name;
  bool expected = false;
  bool actual = false;
  bool ok() const { return expected == actual; }
};

struct EntryReport {
  std::string id;
  EntryStatus status = EntryStatus::Data;
  SuborbitProfile expected;
  std::optional<SuborbitProfile> computed;
  bool profile_match = false;
  std::vector<FlagCheck> flags;
  std::string note; // skip or failure reason
};

// Builds the action for a constructible entry; nullopt for data-only entries
// and for fixtures whose files are absent.
std::optional<TransitiveAction> construct_entry(CatalogEntry const &e,
                                                std::string const &fixture_dir);

EntryReport verify_entry(CatalogEntry const &e, std::string const &fixture_dir);

struct SuiteReport {
  std::vector<EntryReport> entries; // ordered by id
  std::size_t pass = 0, fail = 0, skip = 0, data = 0;
  bool ok() const { return fail == 0; }
};

// Comma-separated filter tokens; each is "native", "fixture", "data" or a
// substring of entry ids. An empty filter selects everything. A token that
// selects nothing throws InvalidArgument.
std::vector<CatalogEntry> select_entries(std::vector<CatalogEntry> const &entries,
                                         std::string const &filter);

SuiteReport run_suite(std::vector<CatalogEntry> const &entries, std::string const &filter,
                      std::string const &fixture_dir);

// Plain text, one line per entry then a summary line. Contains no timings
// or paths, so repeated runs are byte-identical.
std::string format_report(SuiteReport const &r);
std::string report_json(SuiteReport const &r);

} // namespace halftrans
