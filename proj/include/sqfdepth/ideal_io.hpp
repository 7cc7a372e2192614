#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "sqfdepth/ideal.hpp"

namespace sqfdepth {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Ideal text format:
//
//   n <ground_size>
//   1 2
//   2 3 4
//
// One generator per line as space-separated 1-based indices. A line holding
// only "-" is the empty generator (the unit ideal). Lines starting with '#'
// and blank lines are skipped. No generator lines means the zero ideal.
SquarefreeIdeal parse_ideal(std::istream& in);
SquarefreeIdeal parse_ideal(const std::string& text);
SquarefreeIdeal read_ideal_file(const std::string& path);

std::string format_ideal(const SquarefreeIdeal& ideal);

} // namespace sqfdepth
