#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pelletlab/check.hpp"
#include "pelletlab/fqpoly.hpp"

namespace pelletlab {

/// mu values live in {-1, 0, +1}; 0 exactly on non-squarefree input.
using MuValue = int;

/// mu by the factor-count definition: 0 if f is not squarefree, else (-1)^r
/// where r is the number of irreducible factors. Monic input required.
MuValue mu_definition(const FqPoly& f);

/// Sign of the q-power Frobenius acting on the roots of a monic squarefree
/// polynomial: one cycle of length d per irreducible factor of degree d, so
/// the sign is (-1)^{deg f - r}.
int frobenius_sign(const FqPoly& f);

/// mu via the Frobenius sign: (-1)^{deg f} * frobenius_sign(f). Defined only
/// for squarefree input (error otherwise, deliberately not extended by 0).
MuValue mu_proto(const FqPoly& f);

/// mu via the discriminant and the quadratic character:
/// (-1)^{deg f} * chi(disc f). Monic input required; 0 exactly when disc = 0.
MuValue mu_pellet(const FqPoly& f);

/// Pointwise identity check: frobenius_sign(f) == chi(disc f) for monic
/// squarefree f; both sides recorded on failure.
CheckResult check_cor_frob_disc(const FqPoly& f);

enum class SweepCheck { pellet, proto, corollary, disc_vanish };

const char* sweep_check_name(SweepCheck c);
SweepCheck sweep_check_from_name(std::string_view name);

struct SweepOptions {
  unsigned max_deg = 0;
  std::set<SweepCheck> checks = {SweepCheck::pellet, SweepCheck::proto, SweepCheck::corollary,
                                 SweepCheck::disc_vanish};
  /// Refuse sweeps that would enumerate more polynomials than this.
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
  std::size_t mismatch_cap = 100;
  /// Echoed into the report; the exhaustive sweep itself draws no randomness.
  std::uint64_t seed = 0;
};

struct SweepMismatch {
  unsigned degree = 0;
  std::string poly;
  std::string check;
  std::string lhs;
  std::string rhs;
};

struct DegreeTally {
  std::uint64_t total = 0;
  std::uint64_t squarefree = 0;
  std::uint64_t mu_minus = 0;
  std::uint64_t mu_zero = 0;
  std::uint64_t mu_plus = 0;
  std::int64_t mertens = 0;  // sum of mu over the degree
};

struct SweepReport {
  FieldSpec field;
  SweepOptions options;
  std::vector<DegreeTally> per_degree;  // index = degree, size max_deg + 1
  std::vector<SweepMismatch> mismatches;
  bool mismatches_truncated = false;
  std::uint64_t polynomials_checked = 0;
  double elapsed_seconds = 0.0;

  bool passed() const { return mismatches.empty() && !mismatches_truncated; }
};

/// Enumerates every monic f with 0 <= deg f <= max_deg in lexicographic
/// coefficient order and runs the selected identity checks; squarefree-only
/// identities skip non-squarefree f. Deterministic for fixed options; with
/// jobs > 1 the coefficient space is partitioned and partial tallies merge
/// associatively, so the merged report does not depend on thread timing.
SweepReport sweep(const FieldCtxPtr& ctx, const SweepOptions& options);

/// Full JSON report document; everything outside the "volatile" section is
/// byte-deterministic for a fixed configuration.
std::string sweep_report_to_json(const SweepReport& report);

}  // namespace pelletlab
