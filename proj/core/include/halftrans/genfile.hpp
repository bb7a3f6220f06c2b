#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halftrans/perm_group.hpp"

namespace halftrans {

// Text format:
//   degree N
//   (1,2,3)(4,5)      one permutation per line, 1-indexed cycles, "()" = identity
//   order M           optional trailer, checked against the computed order
// '#' starts a comment.
struct GeneratorFile {
  unsigned degree = 0;
  std::vector<Permutation> gens;
  std::optional<BigInt> order;
};

GeneratorFile parse_generator_file(std::string const &text,
                                   std::string const &source = "<input>");
GeneratorFile read_generator_file(std::string const &path);
std::string format_generator_file(PermGroup const &g, std::string const &comment = "",
                                  bool with_order = true);

// Reads a file and builds the group; an order trailer must match.
PermGroup ingest_group(std::string const &path);

} // namespace halftrans
