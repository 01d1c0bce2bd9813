#include "pelletlab/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pelletlab/errors.hpp"

namespace pelletlab {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t parse_u64_field(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw DomainError(std::string(what) + ": expected a decimal integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = (unsigned __int128)(r)*base % m;
    base = (unsigned __int128)(base)*base % m;
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

// Polynomial helpers over F_p on raw ascending coefficient vectors. Only used
// while building a field context (modulus validation and default search).
using PVec = std::vector<std::uint32_t>;

void fp_trim(PVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int fp_deg(const PVec& v) { return int(v.size()) - 1; }

PVec fp_mul(const PVec& a, const PVec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = std::uint32_t((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  fp_trim(out);
  return out;
}

// Remainder of a by monic m.
PVec fp_mod_monic(PVec a, const PVec& m, std::uint64_t p) {
  const int dm = fp_deg(m);
  while (fp_deg(a) >= dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t sub = (lead * m[i]) % p;
      a[shift + i] = std::uint32_t((a[shift + i] + p - sub) % p);
    }
    fp_trim(a);
  }
  return a;
}

PVec fp_make_monic(PVec a, std::uint64_t p) {
  if (a.empty() || a.back() == 1) return a;
  std::uint64_t s = powmod_u64(a.back(), p - 2, p);  // inverse of the lead
  for (auto& c : a) c = std::uint32_t((std::uint64_t(c) * s) % p);
  return a;
}

PVec fp_gcd(PVec a, PVec b, std::uint64_t p) {
  while (!b.empty()) {
    b = fp_make_monic(std::move(b), p);
    PVec r = fp_mod_monic(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_make_monic(std::move(a), p);
}

PVec fp_powmod(PVec base, std::uint64_t e, const PVec& m, std::uint64_t p) {
  PVec result{1};
  base = fp_mod_monic(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = fp_mod_monic(fp_mul(result, base, p), m, p);
    base = fp_mod_monic(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

PVec fp_sub(PVec a, const PVec& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = std::uint32_t((a[i] + p - b[i]) % p);
  }
  fp_trim(a);
  return a;
}

// Monic f of degree k >= 1 is irreducible over F_p iff T^{p^k} = T (mod f)
// and gcd(T^{p^{k/l}} - T, f) = 1 for every prime l dividing k.
bool fp_is_irreducible(const PVec& f, std::uint64_t p) {
  const int k = fp_deg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const PVec x{0, 1};
  std::vector<PVec> frob(k + 1);  // frob[j] = T^{p^j} mod f
  frob[0] = x;
  for (int j = 1; j <= k; ++j) frob[j] = fp_powmod(frob[j - 1], p, f, p);
  if (frob[k] != fp_mod_monic(x, f, p)) return false;
  for (std::uint64_t l : prime_factors(std::uint64_t(k))) {
    PVec d = fp_sub(frob[k / l], x, p);
    if (fp_deg(fp_gcd(f, std::move(d), p)) != 0) return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree k over F_p,
// comparing coefficient vectors from the highest degree down. Candidate
// index i encodes lower coefficients as base-p digits, so ascending i is
// exactly that order.
PVec fp_default_modulus(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return PVec{0, 1};  // T
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PVec f(k + 1, 0);
    f[k] = 1;
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = std::uint32_t(rest % p);
      rest /= p;
    }
    if (fp_is_irreducible(f, p)) return f;
  }
  throw InternalError("no monic irreducible of the requested degree found");
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view text) {
  FieldSpec spec;
  auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    spec.p = std::uint32_t(parse_u64_field(text, "field spec"));
    spec.k = 1;
  } else {
    spec.p = std::uint32_t(parse_u64_field(text.substr(0, caret), "field spec base"));
    spec.k = std::uint32_t(parse_u64_field(text.substr(caret + 1), "field spec exponent"));
  }
  return spec;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << p;
  if (k != 1) os << '^' << k;
  return os.str();
}

std::shared_ptr<const FieldCtx> FieldCtx::make(const FieldSpec& spec) {
  if (spec.p == 2) throw DomainError("odd prime power required: p = 2 is out of scope");
  if (!is_prime_u64(spec.p)) {
    throw DomainError("field characteristic must be an odd prime, got " +
                      std::to_string(spec.p));
  }
  if (spec.k < 1) throw DomainError("extension degree k must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    q *= spec.p;
    if (q > kMaxQ) {
      throw DomainError("field size " + spec.to_string() + " exceeds the supported bound q <= " +
                        std::to_string(kMaxQ));
    }
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->spec_ = spec;
  ctx->q_ = q;

  if (spec.modulus) {
    const auto& m = *spec.modulus;
    if (m.size() != spec.k + 1 || m.back() != 1) {
      throw DomainError("modulus must be monic of degree k = " + std::to_string(spec.k));
    }
    for (auto c : m) {
      if (c >= spec.p) throw DomainError("modulus coefficients must lie in [0, p)");
    }
    if (!fp_is_irreducible(m, spec.p)) {
      throw DomainError("supplied modulus is reducible over F_" + std::to_string(spec.p));
    }
  } else {
    ctx->spec_.modulus = fp_default_modulus(spec.p, spec.k);
  }

  ctx->pow_p_.resize(spec.k + 1);
  ctx->pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= spec.k; ++i) ctx->pow_p_[i] = ctx->pow_p_[i - 1] * spec.p;

  // exp/log tables over a deterministic generator of F_q^x.
  const auto& mod = *ctx->spec_.modulus;
  const std::uint64_t p = spec.p;
  auto decode = [&](std::uint32_t code) {
    PVec v(spec.k, 0);
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      v[i] = std::uint32_t(code % p);
      code = std::uint32_t(code / p);
    }
    fp_trim(v);
    return v;
  };
  auto encode = [&](const PVec& v) {
    std::uint32_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = std::uint32_t(code * p + v[i]);
    return code;
  };
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
    return encode(fp_mod_monic(fp_mul(decode(a), decode(b), p), mod, p));
  };
  auto raw_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1, base = a;
    while (e > 0) {
      if (e & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 2; cand < q; ++cand) {
    bool ok = true;
    for (std::uint64_t l : factors) {
      if (raw_pow(cand, order / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen == 0 && order > 1) throw InternalError("no multiplicative generator found");

  ctx->exp_.resize(order);
  ctx->log_.assign(q, 0);
  std::uint32_t acc = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    ctx->exp_[i] = acc;
    ctx->log_[acc] = std::uint32_t(i);
    acc = raw_mul(acc, gen);
  }
  if (acc != 1) throw InternalError("generator order mismatch while building tables");

  return ctx;
}

std::uint32_t FieldCtx::digit(std::uint32_t code, std::uint32_t i) const {
  return (code / pow_p_[i]) % spec_.p;
}

FqElem FieldCtx::element(std::uint64_t code) const {
  if (code >= q_) throw DomainError("element code out of range");
  return FqElem{std::uint32_t(code)};
}

std::vector<std::uint32_t> FieldCtx::coeffs_of(FqElem a) const {
  std::vector<std::uint32_t> out(spec_.k);
  for (std::uint32_t i = 0; i < spec_.k; ++i) out[i] = digit(a.code, i);
  return out;
}

FqElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != spec_.k) {
    throw DomainError("element needs exactly k = " + std::to_string(spec_.k) + " residues");
  }
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= spec_.p) throw DomainError("element residue out of range [0, p)");
    code = code * spec_.p + coeffs[i];
  }
  return FqElem{code};
}

FqElem FieldCtx::add(FqElem a, FqElem b) const {
  if (spec_.k == 1) return FqElem{std::uint32_t((a.code + b.code) % spec_.p)};
  std::uint32_t code = 0;
  for (std::uint32_t i = spec_.k; i-- > 0;) {
    code = code * spec_.p + (digit(a.code, i) + digit(b.code, i)) % spec_.p;
  }
  return FqElem{code};
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const {
  if (spec_.k == 1) return FqElem{std::uint32_t((a.code + spec_.p - b.code) % spec_.p)};
  std::uint32_t code = 0;
  for (std::uint32_t i = spec_.k; i-- > 0;) {
    code = code * spec_.p + (digit(a.code, i) + spec_.p - digit(b.code, i)) % spec_.p;
  }
  return FqElem{code};
}

FqElem FieldCtx::neg(FqElem a) const { return sub(zero(), a); }

FqElem FieldCtx::mul(FqElem a, FqElem b) const {
  if (a.code == 0 || b.code == 0) return FqElem{0};
  std::uint64_t e = std::uint64_t(log_[a.code]) + log_[b.code];
  if (e >= q_ - 1) e -= q_ - 1;
  return FqElem{exp_[e]};
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a.code == 0) throw DomainError("division by zero in F_q");
  std::uint64_t e = (q_ - 1 - log_[a.code]) % (q_ - 1);
  return FqElem{exp_[e]};
}

FqElem FieldCtx::pow(FqElem a, std::uint64_t e) const {
  FqElem result = one();
  FqElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FieldCtx::quad_char(FqElem a) const {
  if (a.code == 0) return 0;
  return pow(a, (q_ - 1) / 2) == one() ? +1 : -1;
}

bool FieldCtx::same_field(const FieldCtx& other) const {
  return spec_ == other.spec_;
}

std::string FieldCtx::format_elem(FqElem a) const {
  std::ostringstream os;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    if (i) os << ',';
    os << digit(a.code, i);
  }
  return os.str();
}

FqElem FieldCtx::parse_elem(std::string_view text) const {
  auto parts = split(text, ',');
  std::vector<std::uint32_t> coeffs;
  coeffs.reserve(parts.size());
  for (auto part : parts) {
    std::uint64_t v = parse_u64_field(part, "element residue");
    if (v >= spec_.p) throw DomainError("element residue out of range [0, p)");
    coeffs.push_back(std::uint32_t(v));
  }
  if (coeffs.size() != spec_.k) {
    throw DomainError("element needs exactly k = " + std::to_string(spec_.k) + " residues");
  }
  return from_coeffs(coeffs);
}

FieldCtxPtr make_field(std::string_view spec_text, std::string_view modulus_csv) {
  FieldSpec spec = FieldSpec::parse(spec_text);
  if (!modulus_csv.empty()) {
    std::vector<std::uint32_t> mod;
    for (auto part : split(modulus_csv, ',')) {
      mod.push_back(std::uint32_t(parse_u64_field(part, "modulus coefficient")));
    }
    spec.modulus = std::move(mod);
  }
  return FieldCtx::make(spec);
}

}  // namespace pelletlab
