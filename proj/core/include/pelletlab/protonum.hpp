#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pelletlab/check.hpp"
#include "pelletlab/cyclosub.hpp"

namespace pelletlab {

struct PrimeEntry {
  std::string label;
  unsigned nu = 0;

  friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

/// Ordered list of abstract prime labels with their additive values. The
/// list order plays the role of the norm order on prime ideals; it is fixed
/// at creation. Labels must be distinct and every nu >= 1.
class PrimeTable {
public:
  PrimeTable() = default;
  explicit PrimeTable(std::vector<PrimeEntry> entries);

  /// Convenience instantiation over the first `count` rational primes
  /// (labels "2", "3", "5", ...), with nu chosen per prime.
  static PrimeTable rational_primes(std::size_t count,
                                    const std::function<unsigned(std::uint64_t)>& nu);

  /// JSON document {"schema_version":1,"primes":[{"label":...,"nu":...}]}.
  static PrimeTable from_json_text(std::string_view text);
  std::string to_json_text() const;

  std::size_t size() const { return entries_.size(); }
  const PrimeEntry& entry(std::size_t i) const { return entries_.at(i); }
  const std::vector<PrimeEntry>& entries() const { return entries_; }
  /// Index of a label, or a DomainError naming the unknown label.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const;

private:
  std::vector<PrimeEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Finite multiset of prime labels: an element of the free commutative
/// monoid standing in for the nonzero-ideal monoid. The empty multiset is
/// the unit ideal.
class AbstractIdeal {
public:
  AbstractIdeal() = default;  // unit ideal
  /// Merges duplicate labels additively; zero multiplicities are rejected.
  static AbstractIdeal from_factors(
      const std::vector<std::pair<std::string, unsigned>>& factors);

  /// JSON document {"schema_version":1,"ideal":[{"label":...,"multiplicity":...}]}.
  static AbstractIdeal from_json_text(std::string_view text);
  std::string to_json_text() const;

  bool is_unit() const { return factors_.empty(); }
  bool is_squarefree() const;
  const std::map<std::string, unsigned>& factors() const { return factors_; }
  std::size_t distinct_count() const { return factors_.size(); }
  std::string to_string() const;  // "1" or "p1*p2^2"

  /// Monoid product: multiplicities add.
  AbstractIdeal operator*(const AbstractIdeal& rhs) const;
  friend bool operator==(const AbstractIdeal&, const AbstractIdeal&) = default;

private:
  std::map<std::string, unsigned> factors_;
};

/// Additive value nu(I) = sum of multiplicity * nu over the prime factors.
/// Unknown labels are DomainErrors.
std::uint64_t nu_of(const AbstractIdeal& ideal, const PrimeTable& table);

/// 0 if any multiplicity >= 2, else (-1)^{number of distinct labels};
/// the unit ideal gives +1.
int mu_A(const AbstractIdeal& ideal);

struct AssignedQ {
  std::string label;
  unsigned nu = 0;
  std::uint64_t q = 0;
};

/// Minimal-prime assignment in table order (see assign_q_values); the
/// assignment is injective across labels.
std::vector<AssignedQ> assign_q(const PrimeTable& table,
                                std::uint64_t search_cap = kDefaultDirichletCap);

using GadgetSet = std::map<std::string, PeriodGadget>;

/// assign_q followed by gadget construction for every label.
GadgetSet build_gadgets(const PrimeTable& table,
                        std::uint64_t search_cap = kDefaultDirichletCap);

/// Product of the gadget polynomials raised to their multiplicities; the
/// degree equals nu(I). Non-squarefree ideals are accepted (their product
/// has a repeated factor, so zero discriminant).
IntPoly assemble_f_I(const AbstractIdeal& ideal, const GadgetSet& gadgets);

/// Factorwise sign of the compositum generator on the roots of the product
/// polynomial: prod over distinct labels of (-1)^{nu-1} = (-1)^{nu(I) - r}.
/// Defined only for squarefree ideals.
int sigma_nu_sign(const AbstractIdeal& ideal, const PrimeTable& table);

/// Checks mu_A(I) = (-1)^{nu(I)} * sigma_nu_sign(I) exactly, and that the
/// assembled product polynomial has degree nu(I). Squarefree input required.
CheckResult verify_theorem3(const AbstractIdeal& ideal, const PrimeTable& table,
                            const GadgetSet& gadgets);

/// Numerical evidence for linear disjointness of two gadget subfields: all
/// n1*n2 conjugate sums eta_i + eta_j' evaluated at the requested precision
/// (MPFR bits; 53 = double-equivalent) must be pairwise separated by more
/// than the tolerance. Distinct assigned primes are a precondition. A
/// near-collision yields an inconclusive result carrying the minimum gap;
/// this is evidence, not proof, either way.
CheckResult disjointness_evidence(const PeriodGadget& a, const PeriodGadget& b,
                                  unsigned precision_bits = 53, double tolerance = 1e-9);

/// Deterministic seeded ideal sampling. Squarefree mode picks a random
/// subset of at most max_primes labels; general mode assigns each picked
/// label a multiplicity in [1, 3]. The subset draws are identical in both
/// modes for a fixed seed.
AbstractIdeal random_ideal(const PrimeTable& table, std::uint64_t seed,
                           std::size_t max_primes, bool squarefree);

/// The documented per-batch seed derivation rule: splitmix64(seed ^ index).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace pelletlab
