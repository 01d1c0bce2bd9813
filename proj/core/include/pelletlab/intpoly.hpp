#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pelletlab {

using BigInt = mpz_class;

/// Dense polynomial over Z, coefficients ascending, trailing zeros trimmed.
class IntPoly {
public:
  IntPoly() = default;  // zero
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(BigInt c);
  static IntPoly x();

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient of x^i (zero beyond the degree).
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator-() const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly derivative() const;
  BigInt evaluate(const BigInt& at) const;
  IntPoly pow(unsigned e) const;

  /// Decimal coefficients ascending, comma-separated.
  std::string to_string() const;
  static IntPoly parse(std::string_view text);

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact resultant over Z via the fraction-free subresultant PRS.
/// Res(c, g) = c^{deg g} for constants; a zero argument gives 0 against
/// positive degree and is a DomainError against a constant.
BigInt int_resultant(IntPoly a, IntPoly b);

/// Exact integer discriminant (-1)^{n(n-1)/2} Res(f, f') of a monic f;
/// 1 for deg <= 1.
BigInt int_poly_disc(const IntPoly& f);

/// Gcd over Z up to sign, computed with the primitive pseudo-remainder
/// sequence; result is primitive with positive leading coefficient times the
/// gcd of the contents. gcd(0, 0) is a DomainError.
IntPoly int_poly_gcd(IntPoly a, IntPoly b);

/// True iff the gcd of f and g over Q is trivial (an independent route from
/// resultant != 0).
bool rational_gcd_is_one(const IntPoly& f, const IntPoly& g);

/// True iff n >= 0 and isqrt(n)^2 = n, via exact integer square root.
bool is_perfect_square(const BigInt& n);

}  // namespace pelletlab
