#include "pelletlab/intpoly.hpp"

#include <sstream>

#include "pelletlab/errors.hpp"

namespace pelletlab {

namespace {

const BigInt kZero = 0;

BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt exact_div(const BigInt& n, const BigInt& d) {
  if (d == 0) throw InternalError("exact division by zero");
  if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
    throw InternalError("division expected to be exact was not");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Positive gcd of all coefficients; 0 for the zero polynomial.
BigInt content(const IntPoly& f) {
  BigInt c = 0;
  for (const auto& a : f.coeffs()) {
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  }
  return c;
}

IntPoly divide_scalar(const IntPoly& f, const BigInt& d) {
  std::vector<BigInt> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.push_back(exact_div(a, d));
  return IntPoly(std::move(out));
}

IntPoly scale(const IntPoly& f, const BigInt& s) {
  std::vector<BigInt> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.push_back(a * s);
  return IntPoly(std::move(out));
}

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a mod b, no fractions.
// Requires deg a >= deg b >= 0 and b nonzero.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
  const int da = a.degree();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  IntPoly r = a;
  long e = da - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    std::vector<BigInt> mono(std::size_t(shift) + 1, BigInt(0));
    mono.back() = r.leading();
    r = scale(r, lb) - IntPoly(std::move(mono)) * b;
    --e;
  }
  if (e > 0) r = scale(r, pow_big(lb, static_cast<unsigned long>(e)));
  return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
  std::vector<BigInt> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

const BigInt& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<BigInt> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * long(i));
  return IntPoly(std::move(out));
}

BigInt IntPoly::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].get_str();
  }
  return os.str();
}

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<BigInt> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(',', start);
    std::string piece(pos == std::string_view::npos ? text.substr(start)
                                                    : text.substr(start, pos - start));
    try {
      out.emplace_back(piece);
    } catch (const std::invalid_argument&) {
      throw DomainError("invalid integer coefficient '" + piece + "'");
    }
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return IntPoly(std::move(out));
}

BigInt int_resultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) {
    const IntPoly& other = a.is_zero() ? b : a;
    if (other.degree() >= 1) return 0;  // shared-root convention
    throw DomainError("resultant undefined for a zero polynomial against a constant");
  }
  if (a.degree() == 0 && b.degree() == 0) return 1;
  if (a.degree() == 0) return pow_big(a.coeff(0), static_cast<unsigned long>(b.degree()));
  if (b.degree() == 0) return pow_big(b.coeff(0), static_cast<unsigned long>(a.degree()));

  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    std::swap(a, b);
  }

  // Fraction-free subresultant PRS on primitive parts; contents re-enter at
  // the end through t.
  const BigInt ca = content(a);
  const BigInt cb = content(b);
  a = divide_scalar(a, ca);
  b = divide_scalar(b, cb);
  BigInt t = pow_big(ca, static_cast<unsigned long>(b.degree())) *
             pow_big(cb, static_cast<unsigned long>(a.degree()));

  BigInt g = 1, h = 1;
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    const unsigned long delta = static_cast<unsigned long>(da - db);
    if ((da & 1) && (db & 1)) sign = -sign;
    IntPoly r = prem(a, b);
    if (r.is_zero()) return 0;  // common factor of positive degree
    a = std::move(b);
    b = divide_scalar(r, g * pow_big(h, delta));
    g = a.leading();
    if (delta > 0) h = exact_div(pow_big(g, delta), pow_big(h, delta - 1));
    if (b.degree() == 0) break;
  }

  BigInt res = exact_div(pow_big(b.leading(), static_cast<unsigned long>(a.degree())),
                         pow_big(h, static_cast<unsigned long>(a.degree() - 1)));
  if (sign < 0) res = -res;
  return t * res;
}

BigInt int_poly_disc(const IntPoly& f) {
  if (!f.is_monic()) throw DomainError("int_poly_disc: monic polynomial required");
  const int n = f.degree();
  if (n <= 1) return 1;
  BigInt res = int_resultant(f, f.derivative());
  if (((std::uint64_t(n) * (n - 1)) / 2) & 1) res = -res;
  return res;
}

IntPoly int_poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  auto primitive_abs = [](IntPoly f) {
    if (f.is_zero()) return f;
    BigInt c = content(f);
    if (f.leading() < 0) c = -c;
    return divide_scalar(f, c);
  };
  if (a.is_zero()) return primitive_abs(std::move(b));
  if (b.is_zero()) return primitive_abs(std::move(a));

  BigInt c;
  mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  a = primitive_abs(std::move(a));
  b = primitive_abs(std::move(b));
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_abs(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return scale(primitive_abs(std::move(a)), c);
}

bool rational_gcd_is_one(const IntPoly& f, const IntPoly& g) {
  return int_poly_gcd(f, g).degree() == 0;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt root = sqrt(n);
  return root * root == n;
}

}  // namespace pelletlab
