#include <benchmark/benchmark.h>

#include <dunkl_forge/calculus.hpp>

#include "io.hpp"

using namespace dforge;

namespace {

io::json corpus(const char* name) { return io::read_json_file(std::string(DUNKL_FORGE_CORPUS_DIR) + "/" + name); }

void BM_BuildGroup(benchmark::State& state) {
  const auto spec = corpus("g312.json").at("group");
  for (auto _ : state) benchmark::DoNotOptimize(io::parse_group(spec)->order());
}
BENCHMARK(BM_BuildGroup);

void BM_Commutator(benchmark::State& state) {
  const DunklConfig cfg = io::parse_dunkl(corpus("a2.json"));
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(commutator_check(cfg, {.degree = degree}).passed());
}
BENCHMARK(BM_Commutator)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_CommutatorCyclotomic(benchmark::State& state) {
  const DunklConfig cfg = io::parse_dunkl(corpus("g312.json"));
  for (auto _ : state) benchmark::DoNotOptimize(commutator_check(cfg, {.degree = 5}).passed());
}
BENCHMARK(BM_CommutatorCyclotomic)->Unit(benchmark::kMillisecond);

void BM_BraidCheck(benchmark::State& state) {
  const auto g = io::parse_group(corpus("g312.json").at("group"));
  const SubsetS S(*g, complex_reflections(*g));
  for (auto _ : state) benchmark::DoNotOptimize(braid_check(*g, S, 4).passed());
}
BENCHMARK(BM_BraidCheck)->Unit(benchmark::kMillisecond);

void BM_CyclicAxioms(benchmark::State& state) {
  const CyclicSpace fano = fano_space();
  for (auto _ : state) benchmark::DoNotOptimize(verify_cyclic_axioms(fano).passed());
}
BENCHMARK(BM_CyclicAxioms);

void BM_DisplacementChecks(benchmark::State& state) {
  const DisplacementConfig cfg = io::parse_displacement(corpus("b2.json"));
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(displacement_checks(cfg, {.samples = samples, .seed = 1}).passed());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DisplacementChecks)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
