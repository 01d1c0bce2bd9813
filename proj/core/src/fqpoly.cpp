#include "pelletlab/fqpoly.hpp"

#include <sstream>

#include "pelletlab/errors.hpp"

namespace pelletlab {

namespace {

void require_ctx(const FieldCtxPtr& ctx) {
  if (!ctx) throw DomainError("polynomial has no field context");
}

void require_same_ctx(const FqPoly& f, const FqPoly& g) {
  require_ctx(f.ctx());
  require_ctx(g.ctx());
  if (!f.ctx()->same_field(*g.ctx())) {
    throw DomainError("polynomials belong to different fields");
  }
}

void require_monic(const FqPoly& f, const char* op) {
  if (!f.is_monic()) throw DomainError(std::string(op) + ": monic polynomial required");
}

}  // namespace

unsigned CycleType::factor_count() const {
  unsigned r = 0;
  for (const auto& [d, m] : multiplicity) r += m;
  return r;
}

unsigned CycleType::total_degree() const {
  unsigned n = 0;
  for (const auto& [d, m] : multiplicity) n += d * m;
  return n;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, m] : multiplicity) {
    if (!first) os << ',';
    os << d << ':' << m;
    first = false;
  }
  os << '}';
  return os.str();
}

FqPoly::FqPoly(FieldCtxPtr ctx, std::vector<FqElem> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  require_ctx(ctx_);
  trim();
}

void FqPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

FqPoly FqPoly::one(FieldCtxPtr ctx) {
  auto e = ctx->one();
  return FqPoly(std::move(ctx), {e});
}

FqPoly FqPoly::x(FieldCtxPtr ctx) {
  auto z = ctx->zero();
  auto e = ctx->one();
  return FqPoly(std::move(ctx), {z, e});
}

FqPoly FqPoly::from_codes(FieldCtxPtr ctx, std::span<const std::uint32_t> codes) {
  require_ctx(ctx);
  std::vector<FqElem> coeffs;
  coeffs.reserve(codes.size());
  for (auto c : codes) coeffs.push_back(ctx->element(c));
  return FqPoly(std::move(ctx), std::move(coeffs));
}

FqPoly FqPoly::monic_by_index(FieldCtxPtr ctx, unsigned degree, std::uint64_t index) {
  require_ctx(ctx);
  const std::uint64_t q = ctx->q();
  std::vector<FqElem> coeffs(degree + 1);
  for (unsigned j = 0; j < degree; ++j) {
    coeffs[j] = FqElem{std::uint32_t(index % q)};
    index /= q;
  }
  if (index != 0) throw DomainError("monic polynomial index out of range");
  coeffs[degree] = ctx->one();
  return FqPoly(std::move(ctx), std::move(coeffs));
}

bool FqPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == ctx_->one();
}

FqElem FqPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FqElem{0};
}

FqElem FqPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FqPoly FqPoly::operator+(const FqPoly& rhs) const {
  require_same_ctx(*this, rhs);
  std::vector<FqElem> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx_->add(coeff(i), rhs.coeff(i));
  return FqPoly(ctx_, std::move(out));
}

FqPoly FqPoly::operator-(const FqPoly& rhs) const {
  require_same_ctx(*this, rhs);
  std::vector<FqElem> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx_->sub(coeff(i), rhs.coeff(i));
  return FqPoly(ctx_, std::move(out));
}

FqPoly FqPoly::operator*(const FqPoly& rhs) const {
  require_same_ctx(*this, rhs);
  if (is_zero() || rhs.is_zero()) return FqPoly(ctx_);
  std::vector<FqElem> out(coeffs_.size() + rhs.coeffs_.size() - 1, FqElem{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].code == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = ctx_->add(out[i + j], ctx_->mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  return FqPoly(ctx_, std::move(out));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& g) const {
  require_same_ctx(*this, g);
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < g.degree()) return {FqPoly(ctx_), *this};

  const FqElem inv_lead = ctx_->inv(g.leading());
  std::vector<FqElem> rem = coeffs_;
  std::vector<FqElem> quot(degree() - g.degree() + 1, FqElem{0});
  for (int d = degree(); d >= g.degree(); --d) {
    FqElem top = rem[d];
    if (top.code == 0) continue;
    FqElem factor = ctx_->mul(top, inv_lead);
    const std::size_t shift = std::size_t(d - g.degree());
    quot[shift] = factor;
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
      rem[shift + i] = ctx_->sub(rem[shift + i], ctx_->mul(factor, g.coeffs_[i]));
    }
  }
  return {FqPoly(ctx_, std::move(quot)), FqPoly(ctx_, std::move(rem))};
}

bool operator==(const FqPoly& a, const FqPoly& b) {
  if (a.ctx_ && b.ctx_ && !a.ctx_->same_field(*b.ctx_)) return false;
  return a.coeffs_ == b.coeffs_;
}

FqPoly FqPoly::derivative() const {
  if (coeffs_.size() <= 1) return FqPoly(ctx_);
  std::vector<FqElem> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = ctx_->mul(coeffs_[i], ctx_->from_uint(i));
  }
  return FqPoly(ctx_, std::move(out));
}

FqPoly FqPoly::make_monic() const {
  if (is_zero() || is_monic()) return *this;
  const FqElem s = ctx_->inv(leading());
  std::vector<FqElem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = ctx_->mul(coeffs_[i], s);
  return FqPoly(ctx_, std::move(out));
}

FqElem FqPoly::evaluate(FqElem at) const {
  FqElem acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = ctx_->add(ctx_->mul(acc, at), coeffs_[i]);
  }
  return acc;
}

bool FqPoly::is_squarefree() const {
  require_monic(*this, "is_squarefree");
  if (degree() == 0) return true;
  FqPoly d = derivative();
  if (d.is_zero()) return false;  // p-th power
  return poly_gcd(*this, std::move(d)).degree() == 0;
}

FqPoly poly_gcd(FqPoly f, FqPoly g) {
  require_same_ctx(f, g);
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    FqPoly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.make_monic();
}

FqPoly poly_powmod(FqPoly base, std::uint64_t e, const FqPoly& m) {
  require_same_ctx(base, m);
  FqPoly result = FqPoly::one(base.ctx()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

FqElem resultant(FqPoly f, FqPoly g) {
  require_same_ctx(f, g);
  const auto& ctx = *f.ctx();
  if (f.is_zero() || g.is_zero()) {
    const FqPoly& other = f.is_zero() ? g : f;
    if (other.degree() >= 1) return ctx.zero();  // shared-root convention
    throw DomainError("resultant undefined for a zero polynomial against a constant");
  }

  bool negate = false;
  FqElem acc = ctx.one();
  while (true) {
    if (f.degree() == 0) {
      acc = ctx.mul(acc, ctx.pow(f.coeff(0), std::uint64_t(g.degree())));
      break;
    }
    if (g.degree() == 0) {
      acc = ctx.mul(acc, ctx.pow(g.coeff(0), std::uint64_t(f.degree())));
      break;
    }
    if (f.degree() < g.degree()) {
      negate ^= ((std::uint64_t(f.degree()) * std::uint64_t(g.degree())) & 1) != 0;
      std::swap(f, g);
    }
    FqPoly r = f % g;
    if (r.is_zero()) return ctx.zero();
    // Res(f, g) = (-1)^{deg g (deg f + deg r)} lc(g)^{deg f - deg r} Res(r, g)
    negate ^= ((std::uint64_t(g.degree()) * std::uint64_t(f.degree() + r.degree())) & 1) != 0;
    acc = ctx.mul(acc, ctx.pow(g.leading(), std::uint64_t(f.degree() - r.degree())));
    f = std::move(r);
  }
  return negate ? ctx.neg(acc) : acc;
}

FqElem discriminant(const FqPoly& f) {
  require_monic(f, "discriminant");
  const auto& ctx = *f.ctx();
  const int n = f.degree();
  if (n <= 1) return ctx.one();
  FqPoly d = f.derivative();
  if (d.is_zero()) return ctx.zero();
  FqElem res = resultant(f, std::move(d));
  const bool negate = ((std::uint64_t(n) * (n - 1)) / 2) & 1;
  return negate ? ctx.neg(res) : res;
}

std::vector<std::pair<unsigned, FqPoly>> ddf(const FqPoly& f) {
  require_monic(f, "ddf");
  if (!f.is_squarefree()) throw DomainError("ddf: squarefree polynomial required");
  std::vector<std::pair<unsigned, FqPoly>> out;
  if (f.degree() < 1) return out;

  const auto& ctx = f.ctx();
  const std::uint64_t q = ctx->q();
  FqPoly remaining = f;
  FqPoly h = FqPoly::x(ctx) % f;  // tracks T^{q^d} mod f
  for (unsigned d = 1; 2 * d <= unsigned(remaining.degree()); ++d) {
    h = poly_powmod(std::move(h), q, f);
    FqPoly g = poly_gcd(remaining, h - FqPoly::x(ctx));
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      remaining = remaining / g;
    }
  }
  if (remaining.degree() > 0) {
    out.emplace_back(unsigned(remaining.degree()), remaining);
  }
  return out;
}

CycleType cycle_type(const FqPoly& f) {
  require_monic(f, "cycle_type");
  CycleType ct;
  if (f.degree() == 0) return ct;
  for (const auto& [d, g] : ddf(f)) {
    if (unsigned(g.degree()) % d != 0) {
      throw InternalError("distinct-degree factor has degree not divisible by its stage");
    }
    ct.multiplicity[d] = unsigned(g.degree()) / d;
  }
  return ct;
}

std::string FqPoly::to_string() const {
  std::ostringstream os;
  const char coeff_sep = ctx_ && ctx_->k() > 1 ? ';' : ',';
  if (coeffs_.empty()) return ctx_ ? ctx_->format_elem(FqElem{0}) : std::string("0");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << coeff_sep;
    os << ctx_->format_elem(coeffs_[i]);
  }
  return os.str();
}

FqPoly FqPoly::parse(FieldCtxPtr ctx, std::string_view text) {
  require_ctx(ctx);
  const char coeff_sep = ctx->k() > 1 ? ';' : ',';
  std::vector<FqElem> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(coeff_sep, start);
    std::string_view piece =
        pos == std::string_view::npos ? text.substr(start) : text.substr(start, pos - start);
    coeffs.push_back(ctx->parse_elem(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return FqPoly(std::move(ctx), std::move(coeffs));
}

}  // namespace pelletlab
