#include <doctest.h>

#include <random>

#include "pelletlab/errors.hpp"
#include "pelletlab/protonum.hpp"

using namespace pelletlab;

namespace {

PrimeTable table_from_nus(const std::vector<unsigned>& nus) {
  std::vector<PrimeEntry> entries;
  for (std::size_t i = 0; i < nus.size(); ++i) {
    entries.push_back({"p" + std::to_string(i + 1), nus[i]});
  }
  return PrimeTable(std::move(entries));
}

AbstractIdeal ideal_of(std::initializer_list<std::pair<const char*, unsigned>> factors) {
  std::vector<std::pair<std::string, unsigned>> v;
  for (const auto& [label, mult] : factors) v.emplace_back(label, mult);
  return AbstractIdeal::from_factors(v);
}

AbstractIdeal subset_ideal(const PrimeTable& table, std::uint64_t mask) {
  std::vector<std::pair<std::string, unsigned>> factors;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (mask & (std::uint64_t(1) << i)) factors.emplace_back(table.entry(i).label, 1);
  }
  return AbstractIdeal::from_factors(factors);
}

}  // namespace

TEST_CASE("prime table validation") {
  CHECK_THROWS_AS(PrimeTable({{"a", 1}, {"a", 2}}), DomainError);  // duplicate label
  CHECK_THROWS_AS(PrimeTable({{"a", 0}}), DomainError);            // nu = 0 flagged
  CHECK_THROWS_AS(PrimeTable({{"", 1}}), DomainError);

  const PrimeTable t = table_from_nus({2, 3});
  CHECK(t.size() == 2);
  CHECK(t.index_of("p2") == 1);
  CHECK_THROWS_AS(t.index_of("nope"), DomainError);

  const PrimeTable rq = PrimeTable::rational_primes(4, [](std::uint64_t) { return 1u; });
  CHECK(rq.size() == 4);
  CHECK(rq.entry(0).label == "2");
  CHECK(rq.entry(3).label == "7");
}

TEST_CASE("nu is additive and mu_A follows the definition") {
  const PrimeTable t = table_from_nus({2, 3, 2});
  CHECK(nu_of(AbstractIdeal(), t) == 0);
  CHECK(nu_of(ideal_of({{"p1", 1}, {"p2", 1}}), t) == 5);
  CHECK(nu_of(ideal_of({{"p1", 2}}), t) == 4);
  CHECK_THROWS_AS(nu_of(ideal_of({{"zz", 1}}), t), DomainError);

  CHECK(mu_A(AbstractIdeal()) == +1);
  CHECK(mu_A(ideal_of({{"p1", 1}, {"p2", 1}, {"p3", 1}})) == -1);
  CHECK(mu_A(ideal_of({{"p1", 2}})) == 0);

  // additivity over random products
  std::mt19937_64 rng(5);
  const PrimeTable big = table_from_nus({1, 2, 3, 4, 5, 2, 3});
  for (int trial = 0; trial < 1000; ++trial) {
    const AbstractIdeal a = random_ideal(big, rng(), big.size(), false);
    const AbstractIdeal b = random_ideal(big, rng(), big.size(), false);
    CHECK(nu_of(a * b, big) == nu_of(a, big) + nu_of(b, big));
  }
}

TEST_CASE("ideal multiset semantics") {
  const AbstractIdeal a = ideal_of({{"x", 1}, {"x", 1}, {"y", 1}});
  CHECK(a.factors().at("x") == 2);  // merged additively
  CHECK_FALSE(a.is_squarefree());
  CHECK(a.to_string() == "x^2*y");
  CHECK(AbstractIdeal().to_string() == "1");
  CHECK(AbstractIdeal().is_unit());
  CHECK_THROWS_AS(ideal_of({{"x", 0}}), DomainError);
}

TEST_CASE("product polynomial assembly") {
  const PrimeTable t = table_from_nus({2, 3});
  const GadgetSet gadgets = build_gadgets(t);  // q = 3 then 7

  CHECK(assemble_f_I(AbstractIdeal(), gadgets) == IntPoly::constant(1));

  const IntPoly f1 = gadgets.at("p1").f;
  const IntPoly f2 = gadgets.at("p2").f;
  const IntPoly both = assemble_f_I(ideal_of({{"p1", 1}, {"p2", 1}}), gadgets);
  CHECK(both == f1 * f2);
  CHECK(both.degree() == 5);

  const IntPoly squared = assemble_f_I(ideal_of({{"p1", 2}}), gadgets);
  CHECK(squared == f1 * f1);
  CHECK(squared.degree() == 4);
  CHECK(int_poly_disc(squared) == 0);  // repeated factor kills the discriminant

  CHECK_THROWS_AS(assemble_f_I(ideal_of({{"zz", 1}}), gadgets), DomainError);
}

TEST_CASE("factorwise sign of the compositum generator") {
  const PrimeTable t = table_from_nus({2, 3, 1, 1, 1});
  CHECK(sigma_nu_sign(AbstractIdeal(), t) == +1);
  CHECK(sigma_nu_sign(ideal_of({{"p1", 1}, {"p2", 1}}), t) == -1);  // (-1)^1 * (-1)^2
  CHECK(sigma_nu_sign(ideal_of({{"p3", 1}, {"p4", 1}, {"p5", 1}}), t) == +1);  // all nu = 1
  CHECK_THROWS_AS(sigma_nu_sign(ideal_of({{"p1", 2}}), t), DomainError);
}

TEST_CASE("mu from the factorwise sign, exhaustively on a small table") {
  const PrimeTable t = table_from_nus({1, 2, 3, 4, 5});
  const GadgetSet gadgets = build_gadgets(t);

  CHECK(verify_theorem3(AbstractIdeal(), t, gadgets).passed());
  CHECK(verify_theorem3(ideal_of({{"p2", 1}, {"p3", 1}}), t, gadgets).passed());

  for (std::uint64_t mask = 0; mask < (1u << t.size()); ++mask) {
    const AbstractIdeal ideal = subset_ideal(t, mask);
    CHECK(verify_theorem3(ideal, t, gadgets).passed());
    CHECK(std::uint64_t(assemble_f_I(ideal, gadgets).degree()) == nu_of(ideal, t));
  }
  CHECK_THROWS_AS(verify_theorem3(ideal_of({{"p1", 2}}), t, gadgets), DomainError);
}

TEST_CASE("the identity also holds on random ideals of a larger table") {
  std::vector<unsigned> nus;
  for (int rep = 0; rep < 2; ++rep) {
    for (unsigned v = 1; v <= 7; ++v) nus.push_back(v);
  }
  const PrimeTable t = table_from_nus(nus);  // 14 primes
  const GadgetSet gadgets = build_gadgets(t);
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const AbstractIdeal ideal = random_ideal(t, derive_seed(31337, trial), t.size(), true);
    CHECK(verify_theorem3(ideal, t, gadgets).passed());
  }
}

TEST_CASE("sigma sign restates as (-1)^{nu(I) - r}") {
  const PrimeTable t = table_from_nus({1, 2, 3, 4, 5, 3, 2});
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const AbstractIdeal ideal = random_ideal(t, rng(), t.size(), true);
    const std::uint64_t nu = nu_of(ideal, t);
    const std::uint64_t r = ideal.distinct_count();
    CHECK(sigma_nu_sign(ideal, t) == (((nu - r) % 2 == 0) ? +1 : -1));
  }
}

TEST_CASE("with nu = 1 everywhere the identity is the definition of mu_A") {
  const PrimeTable t = table_from_nus({1, 1, 1, 1, 1, 1});
  for (std::uint64_t mask = 0; mask < (1u << t.size()); ++mask) {
    const AbstractIdeal ideal = subset_ideal(t, mask);
    CHECK(sigma_nu_sign(ideal, t) == +1);
    const std::uint64_t omega = nu_of(ideal, t);
    CHECK(mu_A(ideal) == ((omega % 2 == 0) ? +1 : -1));
  }
}

TEST_CASE("discriminant bridge: zero exactly on repeats or colliding nu=1 roots") {
  // two nu = 1 labels share the root -1 of x + 1
  const PrimeTable t = table_from_nus({1, 2, 3, 1});
  const GadgetSet gadgets = build_gadgets(t);
  const std::size_t one_a = 0, one_b = 3;

  for (std::uint64_t mask = 0; mask < (1u << t.size()); ++mask) {
    const AbstractIdeal ideal = subset_ideal(t, mask);
    const bool collision =
        (mask & (1u << one_a)) && (mask & (1u << one_b));
    const BigInt disc = int_poly_disc(assemble_f_I(ideal, gadgets));
    CAPTURE(mask);
    CHECK((disc == 0) == collision);  // squarefree ideals: zero only on the collision
  }

  // non-squarefree ideals always hit zero
  CHECK(int_poly_disc(assemble_f_I(ideal_of({{"p2", 2}}), gadgets)) == 0);
  CHECK(int_poly_disc(assemble_f_I(ideal_of({{"p2", 1}, {"p3", 3}}), gadgets)) == 0);
}

TEST_CASE("random ideals are deterministic and mode-consistent") {
  const PrimeTable t = table_from_nus({1, 2, 3, 4, 5, 6, 7});

  const AbstractIdeal a = random_ideal(t, 12345, 5, true);
  const AbstractIdeal b = random_ideal(t, 12345, 5, true);
  CHECK(a == b);

  CHECK(random_ideal(t, 7, 0, true).is_unit());  // max_primes = 0

  // general mode with multiplicities forced to 1 = squarefree mode output
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const AbstractIdeal sf = random_ideal(t, seed, t.size(), true);
    const AbstractIdeal gen = random_ideal(t, seed, t.size(), false);
    std::vector<std::pair<std::string, unsigned>> forced;
    for (const auto& [label, mult] : gen.factors()) forced.emplace_back(label, 1);
    CHECK(AbstractIdeal::from_factors(forced) == sf);
    for (const auto& [label, mult] : gen.factors()) {
      CHECK(mult >= 1);
      CHECK(mult <= 3);
    }
  }

  CHECK_THROWS_AS(random_ideal(PrimeTable(), 1, 3, true), DomainError);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("disjointness evidence") {
  const PeriodGadget g52 = build_gadget("a", 2, 5);
  const PeriodGadget g73 = build_gadget("b", 3, 7);
  const PeriodGadget g12 = build_gadget("c", 1, 2);
  const PeriodGadget g13 = build_gadget("d", 1, 3);

  const CheckResult r = disjointness_evidence(g52, g73);
  CHECK(r.passed());  // 6 conjugate sums, pairwise distinct

  const CheckResult single = disjointness_evidence(g12, g13);
  CHECK(single.passed());  // single sum -2, vacuously distinct

  CHECK_THROWS_AS(disjointness_evidence(g52, g52), DomainError);  // same assigned prime

  // an absurdly large tolerance cannot be met: inconclusive, not fail
  const CheckResult inconclusive = disjointness_evidence(g52, g73, 53, 10.0);
  CHECK(inconclusive.status == CheckResult::Status::inconclusive);
  CHECK_FALSE(inconclusive.passed());

  // higher precision agrees with the default verdict
  CHECK(disjointness_evidence(g52, g73, 256, 1e-9).passed());
  CHECK_THROWS_AS(disjointness_evidence(g52, g73, 1, 1e-9), DomainError);
  CHECK_THROWS_AS(disjointness_evidence(g52, g73, 53, -1.0), DomainError);
}

TEST_CASE("table and ideal documents round-trip with field-naming errors") {
  const PrimeTable t = table_from_nus({1, 2, 3});
  const PrimeTable back = PrimeTable::from_json_text(t.to_json_text());
  CHECK(back.entries() == t.entries());

  const AbstractIdeal ideal = ideal_of({{"p1", 1}, {"p3", 2}});
  CHECK(AbstractIdeal::from_json_text(ideal.to_json_text()) == ideal);

  CHECK_THROWS_AS(PrimeTable::from_json_text("not json"), DomainError);
  CHECK_THROWS_AS(PrimeTable::from_json_text("{}"), DomainError);
  CHECK_THROWS_AS(PrimeTable::from_json_text(R"({"primes":[{"label":"a"}]})"), DomainError);
  CHECK_THROWS_AS(PrimeTable::from_json_text(R"({"primes":[{"label":"a","nu":0}]})"),
                  DomainError);
  try {
    PrimeTable::from_json_text(R"({"primes":[{"label":"a","nu":1},{"label":"b","nu":-3}]})");
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("primes[1].nu") != std::string::npos);
  }
  CHECK_THROWS_AS(AbstractIdeal::from_json_text(R"({"ideal":[{"label":"a"}]})"), DomainError);
}
