#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "pelletlab/errors.hpp"
#include "pelletlab/pellet.hpp"

using namespace pelletlab;

namespace {

FqPoly P(const FieldCtxPtr& ctx, std::initializer_list<std::uint32_t> codes) {
  std::vector<std::uint32_t> v(codes);
  return FqPoly::from_codes(ctx, v);
}

}  // namespace

TEST_CASE("mu by definition") {
  auto f3 = make_field("3");
  CHECK(mu_definition(FqPoly::one(f3)) == +1);     // empty product
  CHECK(mu_definition(P(f3, {1, 0, 1})) == -1);    // irreducible quadratic
  CHECK(mu_definition(P(f3, {0, 2, 0, 1})) == -1); // T^3 - T, r = 3
  CHECK(mu_definition(P(f3, {0, 0, 1})) == 0);     // T^2
  CHECK_THROWS_AS(mu_definition(P(f3, {1, 2})), DomainError);  // not monic
}

TEST_CASE("frobenius sign") {
  auto f3 = make_field("3");
  CHECK(frobenius_sign(P(f3, {1, 0, 1})) == -1);     // one 2-cycle
  CHECK(frobenius_sign(P(f3, {0, 2, 0, 1})) == +1);  // three fixed points
  CHECK(frobenius_sign(P(f3, {1, 2, 0, 1})) == +1);  // rootless cubic: one 3-cycle
  CHECK(frobenius_sign(P(f3, {0, 1})) == +1);        // single fixed point
  CHECK_THROWS_AS(frobenius_sign(P(f3, {0, 0, 1})), DomainError);  // not squarefree
}

TEST_CASE("mu via the frobenius sign") {
  auto f3 = make_field("3");
  CHECK(mu_proto(P(f3, {1, 0, 1})) == -1);
  CHECK(mu_proto(P(f3, {0, 1})) == -1);
  CHECK(mu_proto(P(f3, {0, 2, 0, 1})) == -1);
  CHECK_THROWS_AS(mu_proto(P(f3, {0, 0, 1})), DomainError);
}

TEST_CASE("mu via discriminant and character") {
  auto f3 = make_field("3");
  CHECK(mu_pellet(P(f3, {1, 0, 1})) == -1);  // disc 2, chi = -1
  CHECK(mu_pellet(P(f3, {0, 0, 1})) == 0);   // disc 0
  CHECK(mu_pellet(P(f3, {0, 1})) == -1);     // disc 1 by the deg <= 1 convention
  CHECK(mu_pellet(FqPoly::one(f3)) == +1);
  CHECK_THROWS_AS(mu_pellet(P(f3, {1, 2})), DomainError);
}

TEST_CASE("frobenius sign equals chi of the discriminant, pointwise") {
  auto f3 = make_field("3");
  CHECK(check_cor_frob_disc(P(f3, {1, 0, 1})).passed());
  CHECK(check_cor_frob_disc(P(f3, {0, 2, 0, 1})).passed());
  CHECK_THROWS_AS(check_cor_frob_disc(P(f3, {0, 0, 1})), DomainError);
}

TEST_CASE("mu agrees with the trial-division oracle, exhaustive small") {
  for (const char* spec : {"3", "5"}) {
    auto ctx = make_field(spec);
    const std::uint64_t q = ctx->q();
    const unsigned max_deg = q == 3 ? 4 : 3;
    for (unsigned d = 0; d <= max_deg; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= q;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const FqPoly f = FqPoly::monic_by_index(ctx, d, idx);
        CHECK(mu_definition(f) == oracles::naive_mu(f));
      }
    }
  }
}

TEST_CASE("sweep on q = 3 up to degree 2 matches the worked example") {
  auto ctx = make_field("3");
  SweepOptions options;
  options.max_deg = 2;
  const SweepReport report = sweep(ctx, options);

  CHECK(report.polynomials_checked == 13);  // 1 + 3 + 9
  CHECK(report.passed());
  CHECK(report.mismatches.empty());
  REQUIRE(report.per_degree.size() == 3);
  CHECK(report.per_degree[0].mertens == 1);
  CHECK(report.per_degree[1].mertens == -3);
  CHECK(report.per_degree[2].mertens == 0);
  CHECK(report.per_degree[2].squarefree == 6);  // q^2 - q
}

TEST_CASE("sweep squarefree count for q = 5 at degree 3") {
  auto ctx = make_field("5");
  SweepOptions options;
  options.max_deg = 3;
  const SweepReport report = sweep(ctx, options);
  CHECK(report.passed());
  CHECK(report.per_degree[3].squarefree == 100);  // 5^3 - 5^2
  CHECK(report.per_degree[3].total == 125);
}

TEST_CASE("sweep identities hold exhaustively on small fields") {
  for (const char* spec : {"3", "5", "3^2"}) {
    auto ctx = make_field(spec);
    SweepOptions options;
    options.max_deg = 4;
    const SweepReport report = sweep(ctx, options);
    CAPTURE(spec);
    CHECK(report.passed());
    const std::uint64_t q = ctx->q();
    std::uint64_t qn = 1;
    for (std::size_t n = 0; n < report.per_degree.size(); ++n) {
      const auto& t = report.per_degree[n];
      CHECK(t.total == qn);  // tallies per degree sum to q^n
      CHECK(t.mu_minus + t.mu_zero + t.mu_plus == t.total);
      if (n >= 2) {
        CHECK(t.mertens == 0);
        CHECK(t.squarefree == qn - qn / q);  // q^n - q^{n-1}
      }
      qn *= q;
    }
    CHECK(report.per_degree[1].mertens == -std::int64_t(q));
  }
}

TEST_CASE("frobenius sign decomposes as (-1)^{deg - r}, exhaustive small") {
  auto ctx = make_field("3");
  for (unsigned d = 1; d <= 4; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= 3;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const FqPoly f = FqPoly::monic_by_index(ctx, d, idx);
      if (!f.is_squarefree()) continue;
      const unsigned r = cycle_type(f).factor_count();
      CHECK(frobenius_sign(f) == (((d - r) % 2 == 0) ? +1 : -1));
    }
  }
}

TEST_CASE("sweep refuses to exceed its enumeration budget") {
  auto ctx = make_field("11");
  SweepOptions options;
  options.max_deg = 8;
  options.budget = 1000;
  CHECK_THROWS_AS(sweep(ctx, options), DomainError);
  try {
    sweep(ctx, options);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("parallel sweeps merge to the identical report") {
  auto ctx = make_field("5");
  SweepOptions serial;
  serial.max_deg = 4;
  SweepOptions parallel = serial;
  parallel.jobs = 4;
  const std::string a = sweep_report_to_json(sweep(ctx, serial));
  const std::string b = sweep_report_to_json(sweep(ctx, parallel));
  auto ja = nlohmann::json::parse(a);
  auto jb = nlohmann::json::parse(b);
  ja.erase("volatile");
  jb.erase("volatile");
  ja["config"].erase("jobs");
  jb["config"].erase("jobs");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("sweep report serialization is deterministic outside the volatile section") {
  auto ctx = make_field("3");
  SweepOptions options;
  options.max_deg = 3;
  auto ja = nlohmann::json::parse(sweep_report_to_json(sweep(ctx, options)));
  auto jb = nlohmann::json::parse(sweep_report_to_json(sweep(ctx, options)));
  CHECK(ja.contains("volatile"));
  ja.erase("volatile");
  jb.erase("volatile");
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["results"]["passed"] == true);
  CHECK(ja["schema_version"] == 1);
}

TEST_CASE("check selection names round-trip and reject junk") {
  CHECK(sweep_check_from_name("pellet") == SweepCheck::pellet);
  CHECK(sweep_check_from_name("disc_vanish") == SweepCheck::disc_vanish);
  CHECK(std::string(sweep_check_name(SweepCheck::proto)) == "proto");
  CHECK_THROWS_AS(sweep_check_from_name("bogus"), DomainError);
}
