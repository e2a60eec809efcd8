#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xorpb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (OPB, CNF, or proof lines).
struct ParseError : Error {
  ParseError(size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  size_t line;
};

// Stack discipline or operand errors in reverse-polish proof expressions.
struct RpnError : Error {
  using Error::Error;
};

// evaluate() met a variable the assignment does not cover.
struct UnassignedVariable : Error {
  using Error::Error;
};

// A substitution domain variable was bound twice.
struct DuplicateWitnessVar : Error {
  using Error::Error;
};

// The CNF->PB translation could not complete (encoding not actually present).
struct EncodingError : Error {
  using Error::Error;
};

}  // namespace xorpb
