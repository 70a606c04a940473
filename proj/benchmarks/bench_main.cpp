#include <benchmark/benchmark.h>

#include <dqcsim/aggregate.hpp>
#include <dqcsim/bath.hpp>
#include <dqcsim/eigensolver.hpp>
#include <dqcsim/polariton.hpp>
#include <dqcsim/protocol.hpp>
#include <dqcsim/signal.hpp>

#include <string>

using namespace dqcsim;

namespace {

const std::string data_dir = DQCSIM_BENCH_DATA_DIR;

AggregateSpec aggregate() { return load_aggregate_file(data_dir + "/aggregate_placeholder.json"); }
SpectralDensity phonons() { return load_phonon_file(data_dir + "/phonon_placeholder.json"); }

const MatterModel& model() {
    static const MatterModel m = build_matter_model(aggregate(), CavitySpec{}, phonons());
    return m;
}

}  // namespace

static void BM_JacobiTwoPolaritonBlock(benchmark::State& state) {
    const auto ops = build_site_operators(aggregate());
    const Eigen::MatrixXcd h = build_polariton_hamiltonian(ops, CavitySpec{}, 2).cast<std::complex<double>>();
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize_hermitian(h));
}
BENCHMARK(BM_JacobiTwoPolaritonBlock)->Unit(benchmark::kMillisecond);

static void BM_SolvePolaritons(benchmark::State& state) {
    const auto ops = build_site_operators(aggregate());
    for (auto _ : state) benchmark::DoNotOptimize(solve_polaritons(ops, CavitySpec{}));
}
BENCHMARK(BM_SolvePolaritons)->Unit(benchmark::kMillisecond);

static void BM_BathAssemble(benchmark::State& state) {
    auto sd = phonons();
    sd.n_matsubara = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ExponentialSumCorrelation::assemble(sd));
}
BENCHMARK(BM_BathAssemble)->Arg(20)->Arg(200);

static void BM_BathAtTime(benchmark::State& state) {
    const auto c = ExponentialSumCorrelation::assemble(phonons());
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(c.at_time(t));
        t += 0.5;
        if (t > 500.0) t = 0.0;
    }
}
BENCHMARK(BM_BathAtTime);

static void BM_EnumeratePathways(benchmark::State& state) {
    const auto& m = model();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_pathways(m.operators, m.table));
}
BENCHMARK(BM_EnumeratePathways)->Unit(benchmark::kMillisecond);

static void BM_PanelSpectrum(benchmark::State& state) {
    const auto& m = model();
    ProtocolGrid g;
    g.n = static_cast<int>(state.range(0));
    g.signal.workers = static_cast<int>(state.range(1));
    const std::vector<PanelSpec> panels{sweep_panel('a')};
    for (auto _ : state) benchmark::DoNotOptimize(run_panel_sweep(m, panels, g));
}
BENCHMARK(BM_PanelSpectrum)->Args({64, 1})->Args({256, 1})->Args({256, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
