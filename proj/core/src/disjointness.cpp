#include <mpfr.h>

#include <sstream>
#include <vector>

#include "pelletlab/errors.hpp"
#include "pelletlab/protonum.hpp"

namespace pelletlab {

namespace {

// Minimal RAII wrapper around mpfr_t; arithmetic stays C-style at call sites.
class Real {
public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real& operator=(const Real&) = delete;
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

private:
  mpfr_t v_;
};

// Real and imaginary parts of the n periods of a gadget, each the sum of
// cos/sin(2*pi*e/q) over the period's exponent set.
void eval_periods(const PeriodGadget& g, mpfr_prec_t prec, std::vector<Real>& re,
                  std::vector<Real>& im) {
  Real two_pi(prec), angle(prec), tmp(prec);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);

  std::uint64_t coset = 1;
  for (unsigned i = 0; i < g.n; ++i) {
    Real sum_re(prec), sum_im(prec);
    mpfr_set_zero(sum_re.get(), 1);
    mpfr_set_zero(sum_im.get(), 1);
    for (std::uint64_t h : g.subgroup) {
      const std::uint64_t e = (unsigned __int128)(coset)*h % g.q;
      mpfr_mul_ui(angle.get(), two_pi.get(), (unsigned long)(e), MPFR_RNDN);
      mpfr_div_ui(angle.get(), angle.get(), (unsigned long)(g.q), MPFR_RNDN);
      mpfr_cos(tmp.get(), angle.get(), MPFR_RNDN);
      mpfr_add(sum_re.get(), sum_re.get(), tmp.get(), MPFR_RNDN);
      mpfr_sin(tmp.get(), angle.get(), MPFR_RNDN);
      mpfr_add(sum_im.get(), sum_im.get(), tmp.get(), MPFR_RNDN);
    }
    re.push_back(sum_re);
    im.push_back(sum_im);
    coset = (unsigned __int128)(coset)*g.generator % g.q;
  }
}

}  // namespace

CheckResult disjointness_evidence(const PeriodGadget& a, const PeriodGadget& b,
                                  unsigned precision_bits, double tolerance) {
  if (a.q == b.q) {
    throw DomainError("disjointness evidence requires gadgets with distinct assigned primes");
  }
  if (precision_bits < 10 || precision_bits > 100000) {
    throw DomainError("precision must be between 10 and 100000 bits");
  }
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");

  const mpfr_prec_t prec = mpfr_prec_t(precision_bits);
  std::vector<Real> re_a, im_a, re_b, im_b;
  eval_periods(a, prec, re_a, im_a);
  eval_periods(b, prec, re_b, im_b);

  // All n_a * n_b conjugate sums eta_i + eta_j'.
  std::vector<Real> sum_re, sum_im;
  for (unsigned i = 0; i < a.n; ++i) {
    for (unsigned j = 0; j < b.n; ++j) {
      Real sr(prec), si(prec);
      mpfr_add(sr.get(), re_a[i].get(), re_b[j].get(), MPFR_RNDN);
      mpfr_add(si.get(), im_a[i].get(), im_b[j].get(), MPFR_RNDN);
      sum_re.push_back(sr);
      sum_im.push_back(si);
    }
  }

  CheckResult result;
  result.name = "disjointness_evidence";
  const std::size_t count = sum_re.size();
  if (count <= 1) {
    std::ostringstream os;
    os << "q = " << a.q << " vs " << b.q << ": single conjugate sum, vacuously distinct";
    result.detail = os.str();
    return result;
  }

  Real dx(prec), dy(prec), dist2(prec), min2(prec);
  bool have_min = false;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      mpfr_sub(dx.get(), sum_re[i].get(), sum_re[j].get(), MPFR_RNDN);
      mpfr_sub(dy.get(), sum_im[i].get(), sum_im[j].get(), MPFR_RNDN);
      mpfr_sqr(dx.get(), dx.get(), MPFR_RNDN);
      mpfr_sqr(dy.get(), dy.get(), MPFR_RNDN);
      mpfr_add(dist2.get(), dx.get(), dy.get(), MPFR_RNDN);
      if (!have_min || mpfr_cmp(dist2.get(), min2.get()) < 0) {
        mpfr_set(min2.get(), dist2.get(), MPFR_RNDN);
        have_min = true;
      }
    }
  }

  Real min_gap(prec);
  mpfr_sqrt(min_gap.get(), min2.get(), MPFR_RNDN);
  const double gap = mpfr_get_d(min_gap.get(), MPFR_RNDN);

  std::ostringstream os;
  os << "q = " << a.q << " vs " << b.q << ": " << count
     << " conjugate sums, min pairwise gap " << gap << " at " << precision_bits
     << " bits (tolerance " << tolerance << ")";
  result.detail = os.str();

  if (mpfr_cmp_d(min_gap.get(), tolerance) > 0) {
    result.status = CheckResult::Status::pass;
  } else {
    result.status = CheckResult::Status::inconclusive;
  }
  return result;
}

}  // namespace pelletlab
