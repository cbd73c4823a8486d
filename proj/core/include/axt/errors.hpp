#pragma once

#include <stdexcept>
#include <string>

namespace axt {

/// Rejected input: a precondition or format violation the caller can fix.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact search refused because the instance exceeds the configured budget.
/// Refusal is deliberate: the oracles never return approximate answers.
class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File parse failure; carries the 1-based line number of the offending line.
class parse_error : public input_error {
public:
  parse_error(int line, const std::string& what)
      : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

}  // namespace axt
