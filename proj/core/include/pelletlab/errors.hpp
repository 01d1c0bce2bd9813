#pragma once

#include <stdexcept>
#include <string>

namespace pelletlab {

/// Invalid input or violated operation precondition. The CLI maps this to
/// exit code 2.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Consistency tripwire: a step that is guaranteed by theory failed anyway.
/// Always indicates an implementation bug, never bad user input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pelletlab
