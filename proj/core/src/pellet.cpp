#include "pelletlab/pellet.hpp"

#include <chrono>
#include <sstream>
#include <thread>

#include "pelletlab/errors.hpp"

namespace pelletlab {

namespace {

int parity_sign(std::uint64_t n) { return (n & 1) ? -1 : +1; }

void require_squarefree_monic(const FqPoly& f, const char* op) {
  if (!f.is_monic()) throw DomainError(std::string(op) + ": monic polynomial required");
  if (!f.is_squarefree()) {
    throw DomainError(std::string(op) + ": squarefree polynomial required");
  }
}

}  // namespace

MuValue mu_definition(const FqPoly& f) {
  if (!f.is_monic()) throw DomainError("mu_definition: monic polynomial required");
  if (!f.is_squarefree()) return 0;
  return parity_sign(cycle_type(f).factor_count());
}

int frobenius_sign(const FqPoly& f) {
  require_squarefree_monic(f, "frobenius_sign");
  int sign = +1;
  for (const auto& [d, m] : cycle_type(f).multiplicity) {
    if (((d - 1) * m) & 1) sign = -sign;  // each length-d cycle contributes (-1)^{d-1}
  }
  return sign;
}

MuValue mu_proto(const FqPoly& f) {
  require_squarefree_monic(f, "mu_proto");
  return parity_sign(std::uint64_t(f.degree())) * frobenius_sign(f);
}

MuValue mu_pellet(const FqPoly& f) {
  if (!f.is_monic()) throw DomainError("mu_pellet: monic polynomial required");
  return parity_sign(std::uint64_t(f.degree())) * f.ctx()->quad_char(discriminant(f));
}

CheckResult check_cor_frob_disc(const FqPoly& f) {
  require_squarefree_monic(f, "check_cor_frob_disc");
  const int lhs = frobenius_sign(f);
  const int rhs = f.ctx()->quad_char(discriminant(f));
  CheckResult result;
  result.name = "corollary";
  if (lhs != rhs) {
    result.status = CheckResult::Status::fail;
    std::ostringstream os;
    os << "frobenius_sign = " << lhs << ", chi(disc) = " << rhs << " for " << f.to_string();
    result.detail = os.str();
  }
  return result;
}

const char* sweep_check_name(SweepCheck c) {
  switch (c) {
    case SweepCheck::pellet: return "pellet";
    case SweepCheck::proto: return "proto";
    case SweepCheck::corollary: return "corollary";
    case SweepCheck::disc_vanish: return "disc_vanish";
  }
  throw InternalError("unknown sweep check");
}

SweepCheck sweep_check_from_name(std::string_view name) {
  if (name == "pellet") return SweepCheck::pellet;
  if (name == "proto") return SweepCheck::proto;
  if (name == "corollary") return SweepCheck::corollary;
  if (name == "disc_vanish") return SweepCheck::disc_vanish;
  throw DomainError("unknown check '" + std::string(name) +
                    "' (expected pellet, proto, corollary or disc_vanish)");
}

namespace {

struct PartialReport {
  DegreeTally tally;
  std::vector<SweepMismatch> mismatches;
  bool truncated = false;
};

// Runs every selected check on one polynomial, updating the partial report.
// r (the factor count) is computed once and shared by the mu routes.
void check_one(const FqPoly& f, const std::set<SweepCheck>& checks, std::size_t cap,
               PartialReport& out) {
  const auto& ctx = *f.ctx();
  const unsigned deg = unsigned(f.degree());
  const bool squarefree = f.is_squarefree();
  unsigned r = 0;
  if (squarefree) r = cycle_type(f).factor_count();
  const int mu_def = squarefree ? parity_sign(r) : 0;

  out.tally.total += 1;
  if (squarefree) out.tally.squarefree += 1;
  if (mu_def < 0) out.tally.mu_minus += 1;
  if (mu_def == 0) out.tally.mu_zero += 1;
  if (mu_def > 0) out.tally.mu_plus += 1;
  out.tally.mertens += mu_def;

  const FqElem disc = discriminant(f);
  const int chi = ctx.quad_char(disc);

  auto record = [&](SweepCheck which, int lhs, int rhs) {
    if (lhs == rhs) return;
    if (out.mismatches.size() >= cap) {
      out.truncated = true;
      return;
    }
    SweepMismatch m;
    m.degree = deg;
    m.poly = f.to_string();
    m.check = sweep_check_name(which);
    m.lhs = std::to_string(lhs);
    m.rhs = std::to_string(rhs);
    out.mismatches.push_back(std::move(m));
  };

  if (checks.count(SweepCheck::pellet)) {
    record(SweepCheck::pellet, mu_def, parity_sign(deg) * chi);
  }
  if (checks.count(SweepCheck::disc_vanish)) {
    record(SweepCheck::disc_vanish, disc == ctx.zero() ? 1 : 0, squarefree ? 0 : 1);
  }
  if (squarefree) {
    const int fsign = parity_sign(deg - r);
    if (checks.count(SweepCheck::proto)) {
      record(SweepCheck::proto, mu_def, parity_sign(deg) * fsign);
    }
    if (checks.count(SweepCheck::corollary)) {
      record(SweepCheck::corollary, fsign, chi);
    }
  }
}

std::uint64_t pow_u64_checked(std::uint64_t base, unsigned e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

SweepReport sweep(const FieldCtxPtr& ctx, const SweepOptions& options) {
  if (!ctx) throw DomainError("sweep: field context required");
  const std::uint64_t q = ctx->q();

  unsigned __int128 estimate = 0;
  {
    unsigned __int128 qn = 1;
    for (unsigned n = 0; n <= options.max_deg; ++n) {
      estimate += qn;
      qn *= q;
      if (estimate > (unsigned __int128)(1) << 100) break;  // saturate the estimate
    }
  }
  if (estimate > options.budget) {
    std::ostringstream os;
    os << "sweep budget exceeded: enumerating monic polynomials of degree <= "
       << options.max_deg << " over F_" << q << " takes ";
    if (estimate > (unsigned __int128)(1) << 100) {
      os << "more than 2^100";
    } else {
      os << std::uint64_t(estimate > ~std::uint64_t(0) ? ~std::uint64_t(0)
                                                       : std::uint64_t(estimate));
    }
    os << " polynomials (budget " << options.budget << ")";
    throw DomainError(os.str());
  }

  SweepReport report;
  report.field = ctx->spec();
  report.options = options;
  report.per_degree.resize(options.max_deg + 1);

  const auto started = std::chrono::steady_clock::now();
  const unsigned jobs = std::max(1u, options.jobs);

  for (unsigned n = 0; n <= options.max_deg; ++n) {
    const std::uint64_t count = pow_u64_checked(q, n, options.budget);
    const unsigned workers = unsigned(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(count, 1)));
    std::vector<PartialReport> parts(workers);

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, PartialReport& part) {
      for (std::uint64_t index = lo; index < hi; ++index) {
        FqPoly f = FqPoly::monic_by_index(ctx, n, index);
        check_one(f, options.checks, options.mismatch_cap, part);
      }
    };

    if (workers == 1) {
      run_range(0, count, parts[0]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      const std::uint64_t chunk = count / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = (w + 1 == workers) ? count : lo + chunk;
        pool.emplace_back(run_range, lo, hi, std::ref(parts[w]));
      }
      for (auto& t : pool) t.join();
    }

    // Merge in worker order so the result is independent of thread timing.
    DegreeTally& tally = report.per_degree[n];
    for (const auto& part : parts) {
      tally.total += part.tally.total;
      tally.squarefree += part.tally.squarefree;
      tally.mu_minus += part.tally.mu_minus;
      tally.mu_zero += part.tally.mu_zero;
      tally.mu_plus += part.tally.mu_plus;
      tally.mertens += part.tally.mertens;
      for (const auto& m : part.mismatches) {
        if (report.mismatches.size() >= options.mismatch_cap) {
          report.mismatches_truncated = true;
          break;
        }
        report.mismatches.push_back(m);
      }
      report.mismatches_truncated |= part.truncated;
    }
    report.polynomials_checked += count;
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace pelletlab
