#include "eqcell/chains.hpp"
#include "eqcell/document.hpp"
#include "eqcell/lefschetz.hpp"
#include "eqcell/smith.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

eqcell::Document fixture(const char* name, int subdivisions) {
  auto doc = eqcell::load_document(std::string(EQCELL_FIXTURE_DIR) + "/" + name);
  return eqcell::subdivide_document(doc, subdivisions);
}

void BM_SmithRandomSparse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> value(-3, 3);
  std::bernoulli_distribution present(0.05);
  eqcell::SparseMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (present(rng)) m.add(r, c, value(rng));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(eqcell::smith_invariants(m));
}
BENCHMARK(BM_SmithRandomSparse)->Arg(50)->Arg(100)->Arg(200);

void BM_IsotropyRing(benchmark::State& state) {
  const auto doc = fixture("j_zigzag.json", 0);
  for (auto _ : state) benchmark::DoNotOptimize(eqcell::IsotropyRing(doc.orbits));
}
BENCHMARK(BM_IsotropyRing);

void BM_HomologyIsotropy(benchmark::State& state) {
  const auto doc = fixture("j_zigzag.json", static_cast<int>(state.range(0)));
  auto ring = std::make_shared<const eqcell::IsotropyRing>(doc.orbits);
  auto m = std::make_shared<const eqcell::CoefficientSystem>(eqcell::CoefficientSystem::isotropy(ring));
  for (auto _ : state) {
    const auto c = eqcell::build_chain_complex(doc.space, m);
    benchmark::DoNotOptimize(eqcell::homology(c));
  }
}
BENCHMARK(BM_HomologyIsotropy)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HomologyConstantCircle(benchmark::State& state) {
  const auto doc = fixture("circle_rotation.json", static_cast<int>(state.range(0)));
  auto m = std::make_shared<const eqcell::CoefficientSystem>(eqcell::CoefficientSystem::constant(doc.orbits));
  for (auto _ : state) {
    const auto c = eqcell::build_chain_complex(doc.space, m);
    benchmark::DoNotOptimize(eqcell::homology(c));
  }
}
BENCHMARK(BM_HomologyConstantCircle)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LefschetzEndSwap(benchmark::State& state) {
  const auto doc = fixture("j_end_swap.json", static_cast<int>(state.range(0)));
  auto ring = std::make_shared<const eqcell::IsotropyRing>(doc.orbits);
  for (auto _ : state) benchmark::DoNotOptimize(eqcell::lefschetz_number(*doc.map, ring));
}
BENCHMARK(BM_LefschetzEndSwap)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
