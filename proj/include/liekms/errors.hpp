#pragma once

#include <stdexcept>
#include <string>

namespace liekms {

/// Raised when an analysis cannot be carried out exactly (e.g. a spectrum
/// with irrational eigenvalues, or a series that does not terminate in
/// exact arithmetic). Distinct from invalid arguments: the request was
/// well-formed but outside the exact engine's reach.
class capability_error : public std::runtime_error {
public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation's mathematical precondition fails
/// (e.g. asking for the KMS temperature of a non-essential element).
class precondition_error : public std::runtime_error {
public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure with a byte offset into the offending input.
class parse_error : public std::invalid_argument {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace liekms
