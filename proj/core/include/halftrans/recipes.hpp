#pragma once

#include <string>
#include <vector>

#include "halftrans/action.hpp"

namespace halftrans {

struct Recipe {
  std::string name;
  std::vector<std::string> args;
  std::string text;
};

// "name:arg:arg..." Throws ParseError on an empty name or empty field.
Recipe parse_recipe(std::string const &text);

// Builds the action named by a recipe. Throws ParseError for unknown names or
// malformed arguments and InvalidArgument for out-of-range parameters.
TransitiveAction build_recipe(Recipe const &r);
TransitiveAction build_recipe(std::string const &text);

// One line per recipe: "name:args  description".
std::vector<std::string> recipe_help();

} // namespace halftrans
