#ifndef APOLLONIAN_ERRORS_HPP
#define APOLLONIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apollonian {

/// Bad arguments or flag combinations. CLI exit code 2.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation was refused because it exceeds a size guard. CLI exit code 3.
class size_guard_error : public std::runtime_error {
 public:
  explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed; signals an arithmetic or wiring bug,
/// never a user mistake. CLI exit code 1.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace apollonian

#endif  // APOLLONIAN_ERRORS_HPP
