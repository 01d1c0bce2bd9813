#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pelletlab/check.hpp"
#include "pelletlab/intpoly.hpp"

namespace pelletlab {

/// Element of Z[x]/(x^q - 1) standing in for an algebraic integer in the
/// q-th cyclotomic field: a length-q coefficient vector with exponents
/// reduced mod q. Two vectors represent the same cyclotomic number exactly
/// when they differ by a constant vector (a multiple of 1 + zeta + ... +
/// zeta^{q-1} = 0), so an element is a rational integer iff coefficients
/// 1..q-1 are all equal, with value c_0 - c_1.
class CycloElem {
public:
  explicit CycloElem(std::uint32_t q);  // zero
  static CycloElem zeta_pow(std::uint32_t q, std::uint64_t e);
  static CycloElem integer(std::uint32_t q, BigInt value);

  std::uint32_t q() const { return std::uint32_t(coeffs_.size()); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  CycloElem operator+(const CycloElem& rhs) const;
  CycloElem operator-(const CycloElem& rhs) const;
  CycloElem operator*(const CycloElem& rhs) const;
  CycloElem operator-() const;

  /// Ring map zeta -> zeta^t; a Galois automorphism when gcd(t, q) = 1.
  CycloElem galois_apply(std::uint64_t t) const;

  /// Rational-integer normal form; on success stores c_0 - c_1 in *value
  /// when value is non-null.
  bool is_rational_integer(BigInt* value = nullptr) const;

  /// Equality as cyclotomic numbers (difference is a constant vector).
  bool same_element(const CycloElem& rhs) const;

private:
  std::vector<BigInt> coeffs_;
};

/// Least primitive root modulo a prime q (order checked against the prime
/// factorization of q-1); q = 2 returns 1 for the trivial unit group.
std::uint64_t find_generator(std::uint64_t q);

/// Minimal prime q = j*n + 1 (so q = 1 mod n); search capped.
std::uint64_t minimal_admissible_q(unsigned n, std::uint64_t search_cap);

inline constexpr std::uint64_t kDefaultDirichletCap = 1'000'000;

/// Assigns each additive value nu, in order, the minimal prime q with
/// q = 1 (mod nu) not previously assigned. Injective and deterministic;
/// exceeding the search cap is a DomainError with diagnostics.
std::vector<std::uint64_t> assign_q_values(std::span<const unsigned> nus,
                                           std::uint64_t search_cap = kDefaultDirichletCap);

/// The n Gaussian periods eta_i = sum_{h in H} zeta^{g^i h} for the index-n
/// subgroup H = <g^n> of (Z/qZ)^x. Requires n | q-1; their sum is -1.
std::vector<CycloElem> gaussian_periods(std::uint64_t q, unsigned n);

/// Monic integer minimal polynomial prod_i (x - eta_i) of the degree-n
/// period, expanded exactly in the CycloElem ring; every elementary
/// symmetric function must pass the rational-integer normal form (an
/// InternalError otherwise; this is the correctness tripwire).
IntPoly period_polynomial(std::uint64_t q, unsigned n);

/// True iff zeta -> zeta^g sends eta_i exactly to eta_{(i+1) mod n} for all
/// i, certifying that the subfield Galois generator acts as an n-cycle on
/// the roots (hence has sign (-1)^{n-1}).
bool cyclic_shift_check(std::uint64_t q, unsigned n);

/// Floating-point approximations of the periods, for numeric sanity bridges.
std::vector<std::complex<double>> approx_periods(std::uint64_t q, unsigned n);

/// One prime label's constructed data: assigned prime q, generator, subgroup,
/// exact periods, integer period polynomial, its discriminant, certificates.
struct PeriodGadget {
  std::string label;
  unsigned n = 0;        // additive value nu at this prime
  std::uint64_t q = 0;   // assigned prime, q = 1 mod n
  std::uint64_t generator = 0;
  std::vector<std::uint64_t> subgroup;  // H = <g^n>, ascending
  std::vector<CycloElem> periods;       // eta_0 .. eta_{n-1}
  IntPoly f;                            // monic, degree n
  BigInt disc;                          // nonzero
  bool shift_certified = false;
  bool squarefree_certified = false;

  /// Sign of the order-n generator on the roots of f: (-1)^{n-1}.
  int generator_sign() const { return (n % 2 == 1) ? +1 : -1; }
};

/// Assembles a gadget and verifies every certificate (cyclic shift, period
/// sum -1, gcd(f, f') = 1 over Q, disc != 0). Certificate failures are
/// InternalErrors: the construction is theory-guaranteed.
PeriodGadget build_gadget(std::string label, unsigned n, std::uint64_t q);

/// Parity law: the cyclic Galois image lies in the alternating group iff n
/// is odd iff disc f is a perfect square.
CheckResult check_alt_disc(const PeriodGadget& gadget);

}  // namespace pelletlab
