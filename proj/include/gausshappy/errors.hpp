#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gausshappy {

/// A requested computation exceeds the configured resource limits.
/// Results are never silently truncated; callers either get the full
/// answer or this error.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error while parsing a Gaussian-integer literal.
class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

inline void require_base(long base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2, got " + std::to_string(base));
}

}  // namespace gausshappy
