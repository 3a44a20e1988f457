#pragma once

#include <stdexcept>
#include <string>

namespace gradex {

/// Raised when input data violates a structural invariant. `invariant()`
/// names the rule that failed so the CLI can report it verbatim.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Raised when an enumeration or search would exceed its configured cap.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Three-valued answer for predicates that are not always decidable.
enum class Truth { no, yes, undecided };

inline Truth to_truth(bool b) { return b ? Truth::yes : Truth::no; }

inline const char* to_string(Truth t) {
  switch (t) {
    case Truth::no: return "false";
    case Truth::yes: return "true";
    default: return "undecided";
  }
}

}  // namespace gradex
