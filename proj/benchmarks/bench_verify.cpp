#include <benchmark/benchmark.h>

#include "braceblock/catalog.hpp"
#include "braceblock/isoclass.hpp"
#include "braceblock/worked_blocks.hpp"
#include "braceblock/ybe.hpp"

using namespace braceblock;

namespace {

const char* const kGroups[] = {"quaternion8", "symmetric(4)", "gl(2,3)", "symmetric(5)"};

// Dot table and a sign/det circle table on one of kGroups.
std::pair<BinaryOpTable, BinaryOpTable> brace_pair(int which) {
  const auto g = make_catalog_group(kGroups[which]);
  const auto one = EndoWord::integer(g, 1);
  GMap psi = identity_map(g);
  if (which == 1 || which == 3) psi = sign_map(g, *g.find("(12)"));
  if (which == 2) psi = det_row_map(g, 1);
  return {dot_table(g), circle_table(g, psi, one)};
}

void BM_VerifyBrace(benchmark::State& state) {
  const auto [dot, circ] = brace_pair(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_brace(dot, circ, threads));
  const auto n = static_cast<int64_t>(dot.order());
  state.SetItemsProcessed(state.iterations() * n * n * n);
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_VerifyBrace)->ArgsProduct({{0, 1, 2, 3}, {1, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMicrosecond);

void BM_CheckBraid(benchmark::State& state) {
  const auto [dot, circ] = brace_pair(static_cast<int>(state.range(0)));
  const auto r = ybe_map(dot, circ);
  for (auto _ : state) benchmark::DoNotOptimize(check_braid(r));
  const auto n = static_cast<int64_t>(dot.order());
  state.SetItemsProcessed(state.iterations() * n * n * n);
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_CheckBraid)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_CircleTable(benchmark::State& state) {
  const auto g = make_catalog_group(kGroups[state.range(0)]);
  const auto psi = state.range(0) == 2 ? det_row_map(g, 1) : zero_map(g);
  const auto w = EndoWord::integer(g, -1);
  for (auto _ : state) benchmark::DoNotOptimize(circle_table(g, psi, w));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_CircleTable)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_EnumerateEndomorphisms(benchmark::State& state) {
  const auto g = make_catalog_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_endomorphisms(g));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_EnumerateEndomorphisms)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Identify(benchmark::State& state) {
  const auto g = make_catalog_group("gl(2,3)");
  const auto op = circle_table(g, det_row_map(g, 1), EndoWord::integer(g, -1));
  for (auto _ : state) benchmark::DoNotOptimize(identify(op));
}
BENCHMARK(BM_Identify)->Unit(benchmark::kMillisecond);

void BM_QuaternionReproduction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_quaternion_block());
}
BENCHMARK(BM_QuaternionReproduction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
