#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pelletlab/errors.hpp"
#include "pelletlab/fqpoly.hpp"

using namespace pelletlab;

namespace {

FqPoly P(const FieldCtxPtr& ctx, std::initializer_list<std::uint32_t> codes) {
  std::vector<std::uint32_t> v(codes);
  return FqPoly::from_codes(ctx, v);
}

// Deterministic random monic polynomial of exact degree.
FqPoly random_monic(const FieldCtxPtr& ctx, unsigned degree, std::mt19937_64& rng) {
  std::uint64_t index = rng();
  std::uint64_t range = 1;
  for (unsigned i = 0; i < degree; ++i) range *= ctx->q();
  return FqPoly::monic_by_index(ctx, degree, index % range);
}

}  // namespace

TEST_CASE("ring arithmetic fixtures over F_3") {
  auto f3 = make_field("3");
  const FqPoly t_plus_1 = P(f3, {1, 1});
  const FqPoly t_plus_2 = P(f3, {2, 1});
  CHECK(t_plus_1 * t_plus_2 == P(f3, {2, 0, 1}));  // T^2 + 2

  auto [quot, rem] = P(f3, {0, 0, 0, 1}).divmod(P(f3, {1, 0, 1}));
  CHECK(quot == P(f3, {0, 1}));  // T
  CHECK(rem == P(f3, {0, 2}));   // -T = 2T

  const FqPoly f = P(f3, {1, 2, 1});
  CHECK(f + FqPoly::zero(f3) == f);
  CHECK(f - f == FqPoly::zero(f3));

  CHECK_THROWS_AS(f.divmod(FqPoly::zero(f3)), DomainError);
}

TEST_CASE("mixing fields is rejected") {
  auto f3 = make_field("3");
  auto f5 = make_field("5");
  CHECK_THROWS_AS(P(f3, {1, 1}) * P(f5, {1, 1}), DomainError);
  CHECK_THROWS_AS(P(f3, {1, 1}) + P(f5, {1, 1}), DomainError);
}

TEST_CASE("gcd fixtures") {
  auto f3 = make_field("3");
  auto f5 = make_field("5");
  // gcd(T^2 - 1, T - 1) = T - 1 = T + 2
  CHECK(poly_gcd(P(f3, {2, 0, 1}), P(f3, {2, 1})) == P(f3, {2, 1}));
  CHECK(poly_gcd(P(f3, {1, 2, 0, 1}), FqPoly::one(f3)) == FqPoly::one(f3));
  CHECK(poly_gcd(P(f5, {0, 0, 1}), P(f5, {0, 0, 0, 1})) == P(f5, {0, 0, 1}));
  CHECK(poly_gcd(P(f3, {1, 1}), FqPoly::zero(f3)) == P(f3, {1, 1}));
  CHECK_THROWS_AS(poly_gcd(FqPoly::zero(f3), FqPoly::zero(f3)), DomainError);
}

TEST_CASE("derivative fixtures in characteristic 3") {
  auto f3 = make_field("3");
  CHECK(P(f3, {1, 0, 1}).derivative() == P(f3, {0, 2}));        // (T^2+1)' = 2T
  CHECK(P(f3, {1, 0, 0, 1}).derivative() == FqPoly::zero(f3));  // (T^3+1)' = 0
  CHECK(P(f3, {0, 1, 0, 0, 1}).derivative() == P(f3, {1, 0, 0, 1}));  // (T^4+T)' = T^3+1
}

TEST_CASE("squarefreeness fixtures") {
  auto f3 = make_field("3");
  CHECK(P(f3, {1, 0, 1}).is_squarefree());
  CHECK_FALSE(P(f3, {0, 0, 1}).is_squarefree());     // T^2
  CHECK_FALSE(P(f3, {0, 0, 0, 1}).is_squarefree());  // T^3, derivative vanishes
  CHECK(FqPoly::one(f3).is_squarefree());
  CHECK_THROWS_AS(P(f3, {1, 2}).is_squarefree(), DomainError);  // not monic
}

TEST_CASE("resultant fixtures") {
  auto f3 = make_field("3");
  auto f5 = make_field("5");

  CHECK(resultant(P(f3, {1, 0, 1}), P(f3, {0, 2})) == f3->one());  // Res(T^2+1, 2T) = 1

  const FqPoly monic_cubic = P(f3, {1, 2, 0, 1});
  CHECK(resultant(monic_cubic, FqPoly::one(f3)) == f3->one());

  // Res(T-a, T-b) = a-b; swapped arguments flip the sign.
  CHECK(resultant(P(f5, {4, 1}), P(f5, {3, 1})) == f5->from_uint(4));  // 1-2 = -1
  CHECK(resultant(P(f5, {3, 1}), P(f5, {4, 1})) == f5->one());

  // zero-argument conventions
  CHECK(resultant(FqPoly::zero(f3), P(f3, {1, 0, 1})) == f3->zero());
  CHECK(resultant(P(f3, {1, 0, 1}), FqPoly::zero(f3)) == f3->zero());
  CHECK_THROWS_AS(resultant(FqPoly::zero(f3), FqPoly::one(f3)), DomainError);
  CHECK_THROWS_AS(resultant(FqPoly::zero(f3), FqPoly::zero(f3)), DomainError);
}

TEST_CASE("resultant symmetry, exhaustive small sweep") {
  for (const char* spec : {"3", "5", "7"}) {
    auto ctx = make_field(spec);
    const std::uint64_t q = ctx->q();
    std::vector<FqPoly> all;
    for (unsigned d = 0; d <= 4; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= q;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        all.push_back(FqPoly::monic_by_index(ctx, d, idx));
      }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        const FqElem ab = resultant(all[i], all[j]);
        const FqElem ba = resultant(all[j], all[i]);
        const bool odd = (all[i].degree() * all[j].degree()) % 2 == 1;
        CHECK(ab == (odd ? ctx->neg(ba) : ba));
      }
    }
  }
}

TEST_CASE("resultant agrees with the Sylvester-determinant oracle") {
  std::mt19937_64 rng(0x5eedf00dULL);
  for (const char* spec : {"3", "7", "3^2", "5^2"}) {
    auto ctx = make_field(spec);
    for (int trial = 0; trial < 300; ++trial) {
      const unsigned da = 1 + unsigned(rng() % 5);
      const unsigned db = 1 + unsigned(rng() % 5);
      const FqPoly f = random_monic(ctx, da, rng);
      const FqPoly g = random_monic(ctx, db, rng);
      CHECK(resultant(f, g) == oracles::sylvester_resultant(f, g));
    }
  }
}

TEST_CASE("resultant is multiplicative in the second argument") {
  std::mt19937_64 rng(42);
  auto ctx = make_field("7");
  for (int trial = 0; trial < 1000; ++trial) {
    const FqPoly f = random_monic(ctx, 1 + unsigned(rng() % 4), rng);
    const FqPoly g1 = random_monic(ctx, 1 + unsigned(rng() % 3), rng);
    const FqPoly g2 = random_monic(ctx, 1 + unsigned(rng() % 3), rng);
    CHECK(resultant(f, g1 * g2) == ctx->mul(resultant(f, g1), resultant(f, g2)));
  }
}

TEST_CASE("discriminant fixtures") {
  auto f3 = make_field("3");
  CHECK(discriminant(P(f3, {0, 1})) == f3->one());            // deg <= 1 convention
  CHECK(discriminant(FqPoly::one(f3)) == f3->one());
  CHECK(discriminant(P(f3, {1, 0, 1})) == f3->from_uint(2));  // b^2 - 4c = -4 = 2
  CHECK(discriminant(P(f3, {0, 0, 1})) == f3->zero());        // T^2, repeated root
  CHECK(discriminant(P(f3, {0, 2, 0, 1})) == f3->one());      // T^3 - T: disc 4 = 1
  CHECK_THROWS_AS(discriminant(P(f3, {1, 2})), DomainError);  // not monic
}

TEST_CASE("discriminant product rule for coprime monic polynomials") {
  std::mt19937_64 rng(7);
  auto ctx = make_field("5");
  int used = 0;
  while (used < 400) {
    const FqPoly f = random_monic(ctx, 1 + unsigned(rng() % 3), rng);
    const FqPoly g = random_monic(ctx, 1 + unsigned(rng() % 3), rng);
    if (poly_gcd(f, g).degree() != 0) continue;
    ++used;
    const FqElem res = resultant(f, g);
    const FqElem lhs = discriminant(f * g);
    const FqElem rhs = ctx->mul(ctx->mul(discriminant(f), discriminant(g)),
                                ctx->mul(res, res));
    CHECK(lhs == rhs);
    if (res != ctx->zero()) {
      CHECK(ctx->quad_char(lhs) == ctx->quad_char(discriminant(f)) *
                                       ctx->quad_char(discriminant(g)));
    }
  }
}

TEST_CASE("disc vanishes exactly on non-squarefree polynomials, exhaustive") {
  for (const char* spec : {"3", "3^2"}) {
    auto ctx = make_field(spec);
    const std::uint64_t q = ctx->q();
    const unsigned max_deg = q == 3 ? 5 : 3;
    for (unsigned d = 1; d <= max_deg; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= q;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const FqPoly f = FqPoly::monic_by_index(ctx, d, idx);
        CHECK((discriminant(f) == ctx->zero()) == !f.is_squarefree());
      }
    }
  }
}

TEST_CASE("ddf fixtures") {
  auto f3 = make_field("3");
  auto f7 = make_field("7");

  auto r1 = ddf(P(f3, {1, 0, 1}));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].first == 2);
  CHECK(r1[0].second == P(f3, {1, 0, 1}));

  auto r2 = ddf(P(f3, {0, 2, 0, 1}));  // T^3 - T splits completely
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].first == 1);
  CHECK(r2[0].second == P(f3, {0, 2, 0, 1}));

  auto r3 = ddf(P(f7, {0, 1}));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].first == 1);
  CHECK(r3[0].second == P(f7, {0, 1}));

  CHECK_THROWS_AS(ddf(P(f3, {0, 0, 1})), DomainError);  // not squarefree
}

TEST_CASE("cycle type fixtures") {
  auto f3 = make_field("3");
  CHECK(cycle_type(P(f3, {1, 0, 1})) == CycleType{{{2, 1}}});
  CHECK(cycle_type(P(f3, {0, 2, 0, 1})) == CycleType{{{1, 3}}});
  CHECK(cycle_type(FqPoly::one(f3)) == CycleType{});
  CHECK(cycle_type(P(f3, {1, 0, 1})).factor_count() == 1);
  CHECK(cycle_type(P(f3, {0, 2, 0, 1})).factor_count() == 3);
  CHECK(CycleType{{{1, 3}, {2, 1}}}.to_string() == "{1:3,2:1}");
  CHECK_THROWS_AS(cycle_type(P(f3, {0, 0, 1})), DomainError);
}

TEST_CASE("ddf reconstructs its input and stages divide their degrees") {
  for (const char* spec : {"3", "5", "3^2"}) {
    auto ctx = make_field(spec);
    const std::uint64_t q = ctx->q();
    const unsigned max_deg = q <= 5 ? 5 : 4;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < max_deg; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const FqPoly f = FqPoly::monic_by_index(ctx, max_deg, idx);
      if (!f.is_squarefree()) continue;
      FqPoly prod = FqPoly::one(ctx);
      for (const auto& [d, g] : ddf(f)) {
        CHECK(unsigned(g.degree()) % d == 0);
        prod = prod * g;
      }
      CHECK(prod == f);
      CHECK(cycle_type(f).total_degree() == unsigned(f.degree()));
    }
  }
}

TEST_CASE("factor counts agree with trial-division factorization, exhaustive small") {
  for (const char* spec : {"3", "5"}) {
    auto ctx = make_field(spec);
    const std::uint64_t q = ctx->q();
    const unsigned max_deg = q == 3 ? 4 : 3;
    for (unsigned d = 1; d <= max_deg; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= q;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const FqPoly f = FqPoly::monic_by_index(ctx, d, idx);
        if (!f.is_squarefree()) continue;
        const auto factors = oracles::naive_factor(f);
        CHECK(cycle_type(f).factor_count() == unsigned(factors.size()));
        CycleType expected;
        for (const auto& p : factors) expected.multiplicity[unsigned(p.degree())] += 1;
        CHECK(cycle_type(f) == expected);
      }
    }
  }
}

TEST_CASE("polynomial strings round-trip in both field shapes") {
  auto f3 = make_field("3");
  const FqPoly f = P(f3, {1, 0, 1});
  CHECK(f.to_string() == "1,0,1");
  CHECK(FqPoly::parse(f3, "1,0,1") == f);

  auto f9 = make_field("3^2");
  const FqPoly g = FqPoly::parse(f9, "1,0;0,0;0,1");  // 1 + t*T^2
  CHECK(g.degree() == 2);
  CHECK(g.to_string() == "1,0;0,0;0,1");
  CHECK(FqPoly::parse(f9, g.to_string()) == g);

  CHECK_THROWS_AS(FqPoly::parse(f3, "1,x"), DomainError);
  CHECK_THROWS_AS(FqPoly::parse(f3, ""), DomainError);
}

TEST_CASE("monic enumeration is a bijection onto monic polynomials") {
  auto ctx = make_field("5");
  std::set<std::string> seen;
  for (std::uint64_t idx = 0; idx < 125; ++idx) {
    const FqPoly f = FqPoly::monic_by_index(ctx, 3, idx);
    CHECK(f.degree() == 3);
    CHECK(f.is_monic());
    seen.insert(f.to_string());
  }
  CHECK(seen.size() == 125);
  CHECK_THROWS_AS(FqPoly::monic_by_index(ctx, 3, 125), DomainError);
}
