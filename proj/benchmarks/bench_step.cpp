#include <benchmark/benchmark.h>

#include "lbshock/equilibrium.hpp"
#include "lbshock/sod.hpp"
#include "lbshock/streaming.hpp"

using namespace lbshock;

namespace {

// One step of the Sod tube after the waves have developed.
void BM_SodStep(benchmark::State& state) {
  const int ny = static_cast<int>(state.range(0));
  const GasModel g(ny == 1 ? 1 : 2);
  cases::SodSetup setup;
  setup.ny = ny;
  StepConfig cfg;
  cfg.max_steps = 40;
  const FlowField f = run(cases::sod_field(g, setup), g, cfg).field;
  for (auto _ : state) {
    StepResult r = step(f, g, {});
    benchmark::DoNotOptimize(r.field.states().data());
  }
  state.SetItemsProcessed(state.iterations() * f.interior_size());
}
BENCHMARK(BM_SodStep)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_NodeEquilibrium(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const GasModel g(dim);
  const NodeState s{0.42, {0.9, dim == 2 ? 0.3 : 0.0}, 2.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(node_equilibrium(s, g));
  }
}
BENCHMARK(BM_NodeEquilibrium)->Arg(1)->Arg(2);

void BM_EmitPackets(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const GasModel g(dim);
  const DirectionSet& dirs = DirectionSet::for_dim(dim);
  const NodeState s{0.42, {0.9, dim == 2 ? 0.3 : 0.0}, 2.3};
  for (auto _ : state) {
    auto p = emit_packets(s, g, dirs);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_EmitPackets)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
