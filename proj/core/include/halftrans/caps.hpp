#pragma once

#include <cstdint>
#include <string>

#include "halftrans/bigint.hpp"

namespace halftrans {

struct Caps {
  std::uint64_t coset_index = 500000;
  std::uint64_t enumeration = 10000000;

  // Parses "index=N,enum=M" (either key optional). Throws ParseError.
  static Caps parse(std::string const &spec);
};

// Process-wide caps. Initialised from $HALFTRANS_CAPS on first use.
Caps const &caps();
void set_caps(Caps c);

void check_cap(BigInt const &value, std::uint64_t cap, char const *what);

} // namespace halftrans
