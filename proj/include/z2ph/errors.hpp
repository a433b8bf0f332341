#pragma once

#include <stdexcept>
#include <string>

namespace z2ph {

// Malformed text input (FCX, SPX, BCX, CSV, vertex-value files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input that parses but breaks a structural invariant (complex, vertex
// function, bifiltration, point cloud, parameters).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace z2ph
