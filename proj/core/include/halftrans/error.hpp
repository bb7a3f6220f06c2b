#pragma once

#include <stdexcept>
#include <string>

namespace halftrans {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: generator files, cycle strings, recipes, catalog JSON.
class ParseError : public Error {
public:
  using Error::Error;
};

// A configured size cap (coset index, element enumeration) would be exceeded.
class CapExceeded : public Error {
public:
  using Error::Error;
};

// Violated precondition of an operation (degree mismatch, not a subgroup, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace halftrans
