#pragma once

#include <stdexcept>
#include <string>

namespace gstab {

/// A caller broke a documented precondition of an internal procedure.
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A forced measurement outcome contradicts a deterministic one.
class ForcedOutcomeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

}  // namespace gstab
