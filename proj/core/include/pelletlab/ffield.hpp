#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pelletlab {

bool is_prime_u64(std::uint64_t n);

/// Descriptor of an odd prime-power field F_{p^k}.
///
/// When no modulus is supplied and k >= 2, field construction picks the
/// lexicographically smallest monic irreducible of degree k over F_p,
/// comparing coefficient vectors from the highest degree down. For k = 1 the
/// implied modulus is T, so arithmetic is plain mod-p arithmetic.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  /// Ascending coefficients, size k+1, monic. Optional; resolved at
  /// construction when absent.
  std::optional<std::vector<std::uint32_t>> modulus;

  /// Accepts "p" or "p^k", e.g. "3" or "3^2".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// One field element in canonical encoding: code = sum_i c_i * p^i where
/// (c_0, ..., c_{k-1}) is the residue vector of the element. Codes enumerate
/// the whole field as 0 .. q-1.
struct FqElem {
  std::uint32_t code = 0;

  friend bool operator==(FqElem, FqElem) = default;
  friend auto operator<=>(FqElem, FqElem) = default;
};

/// An odd prime-power field F_q with fixed modulus and element tables.
/// Immutable after construction and safe to share across threads; every
/// operation is a pure function of its inputs.
class FieldCtx {
public:
  /// Largest supported field size (exp/log tables are materialized).
  static constexpr std::uint64_t kMaxQ = std::uint64_t(1) << 22;

  /// Validates the spec, resolves the default modulus if needed, builds
  /// multiplication tables. Rejects p = 2, composite p, reducible moduli.
  static std::shared_ptr<const FieldCtx> make(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t k() const { return spec_.k; }
  std::uint64_t q() const { return q_; }
  /// Resolved modulus, ascending coefficients, size k+1, monic.
  const std::vector<std::uint32_t>& modulus() const { return *spec_.modulus; }

  FqElem zero() const { return FqElem{0}; }
  FqElem one() const { return FqElem{1}; }
  bool is_zero(FqElem a) const { return a.code == 0; }

  /// Constant embed of an integer (reduced mod p).
  FqElem from_uint(std::uint64_t n) const { return FqElem{std::uint32_t(n % spec_.p)}; }
  /// Element with the given canonical code; validated.
  FqElem element(std::uint64_t code) const;
  /// Residue vector (c_0, ..., c_{k-1}) of an element.
  std::vector<std::uint32_t> coeffs_of(FqElem a) const;
  FqElem from_coeffs(std::span<const std::uint32_t> coeffs) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  /// Multiplicative inverse; inv(0) is a DomainError.
  FqElem inv(FqElem a) const;
  /// Square-and-multiply power with nonnegative exponent; pow(0, 0) = 1.
  FqElem pow(FqElem a, std::uint64_t e) const;

  /// Quadratic character by Euler's criterion: 0 at 0, else +-1 according to
  /// a^((q-1)/2).
  int quad_char(FqElem a) const;

  /// Same mathematical field: equal p, k and resolved modulus.
  bool same_field(const FieldCtx& other) const;

  /// Comma-separated residues, ascending, k entries.
  std::string format_elem(FqElem a) const;
  FqElem parse_elem(std::string_view text) const;

private:
  FieldCtx() = default;

  std::uint32_t digit(std::uint32_t code, std::uint32_t i) const;

  FieldSpec spec_;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> pow_p_;  // p^0 .. p^k
  std::vector<std::uint32_t> exp_;    // exp_[i] = code of g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;    // log_[code] for nonzero codes
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Convenience: build a field from a spec string and optional modulus CSV
/// ("c0,c1,...,ck", ascending, decimal).
FieldCtxPtr make_field(std::string_view spec_text, std::string_view modulus_csv = {});

}  // namespace pelletlab
