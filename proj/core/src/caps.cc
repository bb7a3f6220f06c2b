#include "halftrans/caps.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

#include "halftrans/error.hpp"

namespace halftrans {

namespace {

std::mutex caps_mutex;
Caps *active = nullptr;

std::uint64_t parse_count(std::string const &text)
{
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad cap value '" + text + "'");
  return std::stoull(text);
}

} // namespace

Caps Caps::parse(std::string const &spec)
{
  Caps c;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("bad cap entry '" + item + "', expected key=value");
    auto key = item.substr(0, eq);
    auto value = parse_count(item.substr(eq + 1));
    if (key == "index")
      c.coset_index = value;
    else if (key == "enum")
      c.enumeration = value;
    else
      throw ParseError("unknown cap '" + key + "'");
  }
  return c;
}

Caps const &caps()
{
  std::lock_guard<std::mutex> lock(caps_mutex);
  if (!active) {
    char const *env = std::getenv("HALFTRANS_CAPS");
    active = new Caps(env ? Caps::parse(env) : Caps{});
  }
  return *active;
}

void set_caps(Caps c)
{
  std::lock_guard<std::mutex> lock(caps_mutex);
  if (!active)
    active = new Caps(c);
  else
    *active = c;
}

void check_cap(BigInt const &value, std::uint64_t cap, char const *what)
{
  if (value > cap)
    throw CapExceeded(std::string(what) + " " + value.str() + " exceeds cap " +
                      std::to_string(cap));
}

} // namespace halftrans
