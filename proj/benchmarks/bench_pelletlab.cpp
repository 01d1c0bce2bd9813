#include <benchmark/benchmark.h>

#include "pelletlab/pellet.hpp"
#include "pelletlab/protonum.hpp"

using namespace pelletlab;

namespace {

void BM_sweep(benchmark::State& state, const char* spec, unsigned max_deg) {
  auto ctx = make_field(spec);
  SweepOptions options;
  options.max_deg = max_deg;
  std::uint64_t polys = 0;
  for (auto _ : state) {
    const SweepReport report = sweep(ctx, options);
    benchmark::DoNotOptimize(report.polynomials_checked);
    polys += report.polynomials_checked;
  }
  state.SetItemsProcessed(std::int64_t(polys));
}

void BM_ddf_degree5(benchmark::State& state) {
  auto ctx = make_field("11");
  std::vector<FqPoly> squarefree;
  for (std::uint64_t idx = 0; squarefree.size() < 64; ++idx) {
    FqPoly f = FqPoly::monic_by_index(ctx, 5, idx * 2654435761u % 161051);
    if (f.is_squarefree()) squarefree.push_back(std::move(f));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddf(squarefree[i++ % squarefree.size()]));
  }
}

void BM_discriminant_fq(benchmark::State& state) {
  auto ctx = make_field("3^2");
  std::vector<FqPoly> polys;
  for (std::uint64_t idx = 0; idx < 128; ++idx) {
    polys.push_back(FqPoly::monic_by_index(ctx, 6, idx * 977 % 531441));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(discriminant(polys[i++ % polys.size()]));
  }
}

void BM_period_polynomial(benchmark::State& state) {
  const std::uint64_t q = std::uint64_t(state.range(0));
  const unsigned n = unsigned(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(period_polynomial(q, n));
  }
}

void BM_int_poly_disc_product(benchmark::State& state) {
  // degree-30 product of the ten-prime table's gadget polynomials
  std::vector<PrimeEntry> entries;
  const unsigned nus[10] = {1, 2, 3, 4, 5, 1, 2, 3, 4, 5};
  for (int i = 0; i < 10; ++i) entries.push_back({"p" + std::to_string(i + 1), nus[i]});
  const PrimeTable table{std::move(entries)};
  const GadgetSet gadgets = build_gadgets(table);
  std::vector<std::pair<std::string, unsigned>> all;
  for (const auto& e : table.entries()) all.emplace_back(e.label, 1);
  const IntPoly f = assemble_f_I(AbstractIdeal::from_factors(all), gadgets);
  for (auto _ : state) {
    benchmark::DoNotOptimize(int_poly_disc(f));
  }
}

void BM_verify_theorem3_exhaustive(benchmark::State& state) {
  std::vector<PrimeEntry> entries;
  const unsigned nus[10] = {1, 2, 3, 4, 5, 1, 2, 3, 4, 5};
  for (int i = 0; i < 10; ++i) entries.push_back({"p" + std::to_string(i + 1), nus[i]});
  const PrimeTable table{std::move(entries)};
  const GadgetSet gadgets = build_gadgets(table);
  for (auto _ : state) {
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
      std::vector<std::pair<std::string, unsigned>> factors;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (mask & (std::uint64_t(1) << i)) factors.emplace_back(table.entry(i).label, 1);
      }
      benchmark::DoNotOptimize(
          verify_theorem3(AbstractIdeal::from_factors(factors), table, gadgets));
    }
  }
  state.SetItemsProcessed(std::int64_t(state.iterations()) * 1024);
}

BENCHMARK_CAPTURE(BM_sweep, q3_deg5, "3", 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sweep, q11_deg4, "11", 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sweep, q9_deg4, "3^2", 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ddf_degree5);
BENCHMARK(BM_discriminant_fq);
BENCHMARK(BM_period_polynomial)->Args({31, 5})->Args({199, 6})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_int_poly_disc_product)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_theorem3_exhaustive)->Unit(benchmark::kMillisecond);

}  // namespace
