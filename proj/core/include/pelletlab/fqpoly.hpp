#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pelletlab/ffield.hpp"

namespace pelletlab {

/// Multiset of irreducible-factor degrees of a squarefree monic polynomial:
/// the cycle structure of the q-power Frobenius on its roots, one cycle of
/// length d per irreducible factor of degree d.
struct CycleType {
  std::map<unsigned, unsigned> multiplicity;  // degree -> count

  /// Number of irreducible factors r.
  unsigned factor_count() const;
  /// Sum of d * m_d; equals deg f.
  unsigned total_degree() const;
  /// "{1:3,2:1}" with degrees ascending; "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Dense polynomial over F_q, coefficients ascending, trailing zeros trimmed
/// (the zero polynomial has an empty coefficient vector). Immutable value
/// semantics; all operations are pure.
class FqPoly {
public:
  FqPoly() = default;
  explicit FqPoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
  FqPoly(FieldCtxPtr ctx, std::vector<FqElem> coeffs);

  static FqPoly zero(FieldCtxPtr ctx) { return FqPoly(std::move(ctx)); }
  static FqPoly one(FieldCtxPtr ctx);
  static FqPoly x(FieldCtxPtr ctx);
  /// Coefficients given as canonical element codes, ascending.
  static FqPoly from_codes(FieldCtxPtr ctx, std::span<const std::uint32_t> codes);
  /// The index-th monic polynomial of the given degree: coefficient c_j is
  /// the element whose code is digit j of index in base q (digit 0 least
  /// significant). Ascending index enumerates lexicographically on
  /// (c_{n-1}, ..., c_0).
  static FqPoly monic_by_index(FieldCtxPtr ctx, unsigned degree, std::uint64_t index);

  /// External format: coefficients ascending; prime fields use decimal
  /// residues joined by ','; extension fields join coefficients with ';' and
  /// residues within a coefficient with ','.
  static FqPoly parse(FieldCtxPtr ctx, std::string_view text);
  std::string to_string() const;

  const FieldCtxPtr& ctx() const { return ctx_; }
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  int degree() const { return int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  /// Coefficient of T^i (zero beyond the degree).
  FqElem coeff(std::size_t i) const;
  FqElem leading() const;

  FqPoly operator+(const FqPoly& rhs) const;
  FqPoly operator-(const FqPoly& rhs) const;
  FqPoly operator*(const FqPoly& rhs) const;
  /// Quotient and remainder with deg r < deg g; division by zero is a
  /// DomainError.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& g) const;
  FqPoly operator/(const FqPoly& g) const { return divmod(g).first; }
  FqPoly operator%(const FqPoly& g) const { return divmod(g).second; }
  friend bool operator==(const FqPoly&, const FqPoly&);

  FqPoly derivative() const;
  FqPoly make_monic() const;
  FqElem evaluate(FqElem at) const;

  /// True iff gcd(f, f') = 1. Requires monic input; degree 0 is squarefree,
  /// and a vanishing derivative with deg >= 1 means a p-th power.
  bool is_squarefree() const;

private:
  void trim();
  FieldCtxPtr ctx_;
  std::vector<FqElem> coeffs_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) is a DomainError.
FqPoly poly_gcd(FqPoly f, FqPoly g);

/// base^e mod m, square-and-multiply.
FqPoly poly_powmod(FqPoly base, std::uint64_t e, const FqPoly& m);

/// Euclidean resultant. Res(f, c) = c^{deg f} for constants; a zero argument
/// gives 0 against positive degree and is a DomainError against a constant.
FqElem resultant(FqPoly f, FqPoly g);

/// disc f = (-1)^{n(n-1)/2} Res(f, f') for monic f of degree n >= 2;
/// 1 for deg <= 1 (empty root-difference product); 0 when f' vanishes with
/// deg f >= 1. Requires monic input.
FqElem discriminant(const FqPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: the list
/// of (d, product of all monic irreducible factors of degree d), degrees
/// ascending, computed by iterating h <- h^q mod f from h = T and extracting
/// gcd with h - T at each stage.
std::vector<std::pair<unsigned, FqPoly>> ddf(const FqPoly& f);

/// Cycle type of Frobenius on the roots, from the distinct-degree split.
/// Degree 0 gives the empty cycle type.
CycleType cycle_type(const FqPoly& f);

}  // namespace pelletlab
