#pragma once

#include <string>

namespace pelletlab {

/// Outcome of a single identity check. `inconclusive` is reserved for
/// numerical evidence that neither confirms nor refutes (numerical proximity
/// does not refute algebraic distinctness).
struct CheckResult {
  enum class Status { pass, fail, inconclusive };

  Status status = Status::pass;
  std::string name;
  std::string detail;  // on failure: both sides of the identity

  bool passed() const { return status == Status::pass; }
};

}  // namespace pelletlab
