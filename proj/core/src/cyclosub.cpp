#include "pelletlab/cyclosub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "pelletlab/errors.hpp"
#include "pelletlab/ffield.hpp"

namespace pelletlab {

namespace {

// Desk-scale guards for exact period computations (CycloElem products cost
// O(q^2) big-integer operations each).
constexpr std::uint64_t kMaxPeriodQ = 10'000;
constexpr unsigned kMaxPeriodDegree = 64;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (unsigned __int128)(a)*b % m;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void validate_period_args(std::uint64_t q, unsigned n) {
  if (!is_prime_u64(q)) throw DomainError("q must be prime, got " + std::to_string(q));
  if (n < 1) throw DomainError("period degree n must be >= 1");
  if ((q - 1) % n != 0) {
    throw DomainError("n = " + std::to_string(n) + " does not divide q-1 = " +
                      std::to_string(q - 1));
  }
  if (q > kMaxPeriodQ) {
    throw DomainError("q = " + std::to_string(q) + " exceeds the exact-period bound q <= " +
                      std::to_string(kMaxPeriodQ));
  }
  if (n > kMaxPeriodDegree) {
    throw DomainError("n = " + std::to_string(n) + " exceeds the period-degree bound n <= " +
                      std::to_string(kMaxPeriodDegree));
  }
}

// Exponent sets of the n periods: row i holds {g^i h mod q : h in H}.
std::vector<std::vector<std::uint64_t>> period_exponents(std::uint64_t q, unsigned n,
                                                         std::uint64_t g) {
  const std::uint64_t m = (q - 1) / n;
  std::vector<std::uint64_t> subgroup;
  subgroup.reserve(m);
  const std::uint64_t gn = powmod(g, n, q);
  std::uint64_t h = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    subgroup.push_back(h);
    h = mulmod(h, gn, q);
  }
  std::vector<std::vector<std::uint64_t>> rows(n);
  std::uint64_t coset = 1;  // g^i
  for (unsigned i = 0; i < n; ++i) {
    rows[i].reserve(m);
    for (std::uint64_t e : subgroup) rows[i].push_back(mulmod(coset, e, q));
    coset = mulmod(coset, g, q);
  }
  return rows;
}

}  // namespace

CycloElem::CycloElem(std::uint32_t q) : coeffs_(q, BigInt(0)) {
  if (q < 2) throw DomainError("cyclotomic order q must be >= 2");
}

CycloElem CycloElem::zeta_pow(std::uint32_t q, std::uint64_t e) {
  CycloElem out(q);
  out.coeffs_[e % q] = 1;
  return out;
}

CycloElem CycloElem::integer(std::uint32_t q, BigInt value) {
  CycloElem out(q);
  out.coeffs_[0] = std::move(value);
  return out;
}

CycloElem CycloElem::operator+(const CycloElem& rhs) const {
  if (q() != rhs.q()) throw DomainError("cyclotomic orders differ");
  CycloElem out(q());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
  return out;
}

CycloElem CycloElem::operator-(const CycloElem& rhs) const {
  if (q() != rhs.q()) throw DomainError("cyclotomic orders differ");
  CycloElem out(q());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
  return out;
}

CycloElem CycloElem::operator*(const CycloElem& rhs) const {
  if (q() != rhs.q()) throw DomainError("cyclotomic orders differ");
  const std::size_t m = coeffs_.size();
  CycloElem out(q());
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= m) k -= m;
      out.coeffs_[k] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

CycloElem CycloElem::operator-() const {
  CycloElem out(q());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

CycloElem CycloElem::galois_apply(std::uint64_t t) const {
  t %= q();
  if (std::gcd(t, std::uint64_t(q())) != 1) {
    throw DomainError("exponent map t must be invertible mod q");
  }
  CycloElem out(q());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[(i * t) % q()] += coeffs_[i];
  }
  return out;
}

bool CycloElem::is_rational_integer(BigInt* value) const {
  for (std::size_t i = 2; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != coeffs_[1]) return false;
  }
  if (value) *value = coeffs_[0] - coeffs_[1];
  return true;
}

bool CycloElem::same_element(const CycloElem& rhs) const {
  if (q() != rhs.q()) return false;
  const BigInt d0 = coeffs_[0] - rhs.coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] - rhs.coeffs_[i] != d0) return false;
  }
  return true;
}

std::uint64_t find_generator(std::uint64_t q) {
  if (q == 2) return 1;  // trivial unit group
  if (!is_prime_u64(q)) throw DomainError("find_generator: q must be prime");
  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool primitive = true;
    for (std::uint64_t l : factors) {
      if (powmod(g, order / l, q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw InternalError("no primitive root found for prime " + std::to_string(q));
}

std::uint64_t minimal_admissible_q(unsigned n, std::uint64_t search_cap) {
  if (n < 1) throw DomainError("nu must be >= 1");
  for (std::uint64_t j = 1;; ++j) {
    const std::uint64_t m = j * n + 1;
    if (m > search_cap) {
      throw DomainError("no prime = 1 mod " + std::to_string(n) + " found up to " +
                        std::to_string(search_cap));
    }
    if (is_prime_u64(m)) return m;
  }
}

std::vector<std::uint64_t> assign_q_values(std::span<const unsigned> nus,
                                           std::uint64_t search_cap) {
  std::vector<std::uint64_t> out;
  out.reserve(nus.size());
  std::set<std::uint64_t> used;
  for (std::size_t i = 0; i < nus.size(); ++i) {
    const unsigned nu = nus[i];
    if (nu < 1) throw DomainError("nu must be >= 1 (entry " + std::to_string(i) + ")");
    std::uint64_t assigned = 0;
    for (std::uint64_t j = 1;; ++j) {
      const std::uint64_t m = j * std::uint64_t(nu) + 1;
      if (m > search_cap) {
        std::ostringstream os;
        os << "prime search cap " << search_cap << " exceeded while assigning q for entry " << i
           << " (nu = " << nu << "); raise the cap";
        throw DomainError(os.str());
      }
      if (is_prime_u64(m) && !used.count(m)) {
        assigned = m;
        break;
      }
    }
    used.insert(assigned);
    out.push_back(assigned);
  }
  return out;
}

std::vector<CycloElem> gaussian_periods(std::uint64_t q, unsigned n) {
  validate_period_args(q, n);
  const std::uint64_t g = find_generator(q);
  const auto rows = period_exponents(q, n, g);
  std::vector<CycloElem> periods;
  periods.reserve(n);
  for (const auto& row : rows) {
    CycloElem eta{std::uint32_t(q)};
    for (std::uint64_t e : row) eta = eta + CycloElem::zeta_pow(std::uint32_t(q), e);
    periods.push_back(std::move(eta));
  }
  return periods;
}

namespace {

IntPoly expand_period_polynomial(std::uint64_t q, const std::vector<CycloElem>& periods) {
  // prod_i (x - eta_i) with CycloElem coefficients, expanded incrementally.
  std::vector<CycloElem> pc;
  pc.push_back(CycloElem::integer(std::uint32_t(q), 1));
  for (const auto& eta : periods) {
    std::vector<CycloElem> next(pc.size() + 1, CycloElem(std::uint32_t(q)));
    for (std::size_t j = 0; j < pc.size(); ++j) {
      next[j + 1] = next[j + 1] + pc[j];
      next[j] = next[j] - eta * pc[j];
    }
    pc = std::move(next);
  }
  std::vector<BigInt> coeffs(pc.size());
  for (std::size_t j = 0; j < pc.size(); ++j) {
    if (!pc[j].is_rational_integer(&coeffs[j])) {
      throw InternalError("elementary symmetric function of the periods is not a rational "
                          "integer (coefficient " +
                          std::to_string(j) + ")");
    }
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly period_polynomial(std::uint64_t q, unsigned n) {
  return expand_period_polynomial(q, gaussian_periods(q, n));
}

bool cyclic_shift_check(std::uint64_t q, unsigned n) {
  validate_period_args(q, n);
  const std::uint64_t g = find_generator(q);
  const auto periods = gaussian_periods(q, n);
  for (unsigned i = 0; i < n; ++i) {
    if (!periods[i].galois_apply(g).same_element(periods[(i + 1) % n])) return false;
  }
  return true;
}

std::vector<std::complex<double>> approx_periods(std::uint64_t q, unsigned n) {
  validate_period_args(q, n);
  const std::uint64_t g = find_generator(q);
  const auto rows = period_exponents(q, n, g);
  std::vector<std::complex<double>> out;
  out.reserve(n);
  for (const auto& row : rows) {
    std::complex<double> sum = 0.0;
    for (std::uint64_t e : row) {
      sum += std::polar(1.0, 2.0 * std::numbers::pi * double(e) / double(q));
    }
    out.push_back(sum);
  }
  return out;
}

PeriodGadget build_gadget(std::string label, unsigned n, std::uint64_t q) {
  validate_period_args(q, n);

  PeriodGadget gadget;
  gadget.label = std::move(label);
  gadget.n = n;
  gadget.q = q;
  gadget.generator = find_generator(q);

  const auto rows = period_exponents(q, n, gadget.generator);
  gadget.subgroup = rows[0];
  std::sort(gadget.subgroup.begin(), gadget.subgroup.end());

  gadget.periods.reserve(n);
  for (const auto& row : rows) {
    CycloElem eta{std::uint32_t(q)};
    for (std::uint64_t e : row) eta = eta + CycloElem::zeta_pow(std::uint32_t(q), e);
    gadget.periods.push_back(std::move(eta));
  }

  CycloElem sum{std::uint32_t(q)};
  for (const auto& eta : gadget.periods) sum = sum + eta;
  BigInt sum_value;
  if (!sum.is_rational_integer(&sum_value) || sum_value != -1) {
    throw InternalError("period sum is not -1 for (q, n) = (" + std::to_string(q) + ", " +
                        std::to_string(n) + ")");
  }

  for (unsigned i = 0; i < n; ++i) {
    if (!gadget.periods[i].galois_apply(gadget.generator)
             .same_element(gadget.periods[(i + 1) % n])) {
      throw InternalError("exponent map does not shift the periods cyclically for (q, n) = (" +
                          std::to_string(q) + ", " + std::to_string(n) + ")");
    }
  }
  gadget.shift_certified = true;

  gadget.f = expand_period_polynomial(q, gadget.periods);
  if (gadget.f.degree() != int(n) || !gadget.f.is_monic()) {
    throw InternalError("period polynomial is not monic of degree n");
  }

  gadget.disc = int_poly_disc(gadget.f);
  if (gadget.disc == 0) throw InternalError("period polynomial has zero discriminant");
  if (!rational_gcd_is_one(gadget.f, gadget.f.derivative())) {
    throw InternalError("period polynomial is not squarefree over Q");
  }
  gadget.squarefree_certified = true;

  return gadget;
}

CheckResult check_alt_disc(const PeriodGadget& gadget) {
  CheckResult result;
  result.name = "alt_disc_parity";
  const bool odd = (gadget.n % 2) == 1;
  const bool square = is_perfect_square(gadget.disc);
  if (odd != square) {
    result.status = CheckResult::Status::fail;
    std::ostringstream os;
    os << "n = " << gadget.n << " (" << (odd ? "odd" : "even") << ") but disc = "
       << gadget.disc.get_str() << (square ? " is" : " is not") << " a perfect square";
    result.detail = os.str();
  }
  return result;
}

}  // namespace pelletlab
