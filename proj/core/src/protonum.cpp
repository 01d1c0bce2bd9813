#include "pelletlab/protonum.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "pelletlab/errors.hpp"
#include "pelletlab/ffield.hpp"

namespace pelletlab {

PrimeTable::PrimeTable(std::vector<PrimeEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.label.empty()) {
      throw DomainError("prime-table entry " + std::to_string(i) + " has an empty label");
    }
    if (e.nu < 1) {
      throw DomainError("prime-table entry '" + e.label + "' has nu = " +
                        std::to_string(e.nu) + "; nu must be >= 1");
    }
    if (!index_.emplace(e.label, i).second) {
      throw DomainError("duplicate prime label '" + e.label + "'");
    }
  }
}

PrimeTable PrimeTable::rational_primes(std::size_t count,
                                       const std::function<unsigned(std::uint64_t)>& nu) {
  std::vector<PrimeEntry> entries;
  entries.reserve(count);
  std::uint64_t p = 2;
  while (entries.size() < count) {
    if (is_prime_u64(p)) entries.push_back({std::to_string(p), nu(p)});
    ++p;
  }
  return PrimeTable(std::move(entries));
}

std::size_t PrimeTable::index_of(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw DomainError("unknown prime label '" + std::string(label) + "'");
  }
  return it->second;
}

bool PrimeTable::contains(std::string_view label) const {
  return index_.find(label) != index_.end();
}

AbstractIdeal AbstractIdeal::from_factors(
    const std::vector<std::pair<std::string, unsigned>>& factors) {
  AbstractIdeal ideal;
  for (const auto& [label, mult] : factors) {
    if (mult < 1) throw DomainError("ideal factor '" + label + "' has multiplicity 0");
    ideal.factors_[label] += mult;
  }
  return ideal;
}

bool AbstractIdeal::is_squarefree() const {
  for (const auto& [label, mult] : factors_) {
    if (mult > 1) return false;
  }
  return true;
}

std::string AbstractIdeal::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, mult] : factors_) {
    if (!first) os << '*';
    os << label;
    if (mult > 1) os << '^' << mult;
    first = false;
  }
  return os.str();
}

AbstractIdeal AbstractIdeal::operator*(const AbstractIdeal& rhs) const {
  AbstractIdeal out = *this;
  for (const auto& [label, mult] : rhs.factors_) out.factors_[label] += mult;
  return out;
}

std::uint64_t nu_of(const AbstractIdeal& ideal, const PrimeTable& table) {
  std::uint64_t total = 0;
  for (const auto& [label, mult] : ideal.factors()) {
    total += std::uint64_t(mult) * table.entry(table.index_of(label)).nu;
  }
  return total;
}

int mu_A(const AbstractIdeal& ideal) {
  if (!ideal.is_squarefree()) return 0;
  return (ideal.distinct_count() % 2 == 0) ? +1 : -1;
}

std::vector<AssignedQ> assign_q(const PrimeTable& table, std::uint64_t search_cap) {
  std::vector<unsigned> nus;
  nus.reserve(table.size());
  for (const auto& e : table.entries()) nus.push_back(e.nu);
  const auto qs = assign_q_values(nus, search_cap);
  std::vector<AssignedQ> out;
  out.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    out.push_back({table.entry(i).label, table.entry(i).nu, qs[i]});
  }
  return out;
}

GadgetSet build_gadgets(const PrimeTable& table, std::uint64_t search_cap) {
  GadgetSet gadgets;
  for (const auto& a : assign_q(table, search_cap)) {
    gadgets.emplace(a.label, build_gadget(a.label, a.nu, a.q));
  }
  return gadgets;
}

IntPoly assemble_f_I(const AbstractIdeal& ideal, const GadgetSet& gadgets) {
  IntPoly product = IntPoly::constant(1);
  for (const auto& [label, mult] : ideal.factors()) {
    auto it = gadgets.find(label);
    if (it == gadgets.end()) {
      throw DomainError("no gadget built for prime label '" + label + "'");
    }
    product = product * it->second.f.pow(mult);
  }
  return product;
}

int sigma_nu_sign(const AbstractIdeal& ideal, const PrimeTable& table) {
  if (!ideal.is_squarefree()) {
    throw DomainError("sigma_nu_sign is defined only for squarefree ideals");
  }
  int sign = +1;
  for (const auto& [label, mult] : ideal.factors()) {
    const unsigned nu = table.entry(table.index_of(label)).nu;
    if ((nu - 1) % 2 == 1) sign = -sign;  // factorwise (-1)^{nu-1}
  }
  return sign;
}

CheckResult verify_theorem3(const AbstractIdeal& ideal, const PrimeTable& table,
                            const GadgetSet& gadgets) {
  if (!ideal.is_squarefree()) {
    throw DomainError("verify_theorem3 requires a squarefree ideal");
  }
  CheckResult result;
  result.name = "mu_from_factorwise_sign";

  const int lhs = mu_A(ideal);
  const std::uint64_t nu = nu_of(ideal, table);
  const int rhs = ((nu % 2 == 0) ? +1 : -1) * sigma_nu_sign(ideal, table);
  const IntPoly f = assemble_f_I(ideal, gadgets);
  const std::uint64_t deg = f.is_zero() ? 0 : std::uint64_t(f.degree());

  if (lhs != rhs || deg != nu) {
    result.status = CheckResult::Status::fail;
    std::ostringstream os;
    os << "I = " << ideal.to_string() << ": mu_A = " << lhs << ", (-1)^nu * sign = " << rhs
       << ", nu = " << nu << ", deg f_I = " << deg;
    result.detail = os.str();
  }
  return result;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = master_seed ^ index;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Unbiased bounded draw by rejection; deterministic for a fixed engine state.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace

AbstractIdeal random_ideal(const PrimeTable& table, std::uint64_t seed,
                           std::size_t max_primes, bool squarefree) {
  if (table.size() == 0) throw DomainError("random_ideal requires a nonempty table");
  std::mt19937_64 rng(seed);

  const std::size_t cap = std::min(max_primes, table.size());
  const std::size_t count = std::size_t(bounded(rng, cap + 1));

  // Partial Fisher-Yates; the subset draws are identical in both modes.
  std::vector<std::size_t> indices(table.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + std::size_t(bounded(rng, indices.size() - i));
    std::swap(indices[i], indices[j]);
  }
  std::vector<std::size_t> chosen(indices.begin(), indices.begin() + count);
  std::sort(chosen.begin(), chosen.end());

  std::vector<std::pair<std::string, unsigned>> factors;
  factors.reserve(count);
  for (std::size_t idx : chosen) {
    const unsigned mult = squarefree ? 1u : 1u + unsigned(bounded(rng, 3));
    factors.emplace_back(table.entry(idx).label, mult);
  }
  return AbstractIdeal::from_factors(factors);
}

}  // namespace pelletlab
