#include <benchmark/benchmark.h>

#include <cstdint>

#include "annular/diagram.hpp"
#include "annular/generator.hpp"
#include "annular/skein.hpp"
#include "annular/verify.hpp"

using namespace annular;

namespace {

// One fixed diagram per size so timings are comparable across runs.
AnnularDiagram sample(int n, std::uint64_t seed = 1) {
    GeneratorConfig cfg;
    cfg.min_crossings = n;
    cfg.max_crossings = n;
    cfg.policy = PuncturePolicy::uniform_random_face;
    cfg.seed = seed;
    return DiagramGenerator(cfg).next();
}

}  // namespace

static void bm_bracket(benchmark::State& state) {
    const AnnularDiagram d = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bracket(d));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_bracket)->DenseRange(4, 16, 4)->Complexity(benchmark::oNLogN);

static void bm_bracket_threads(benchmark::State& state) {
    const AnnularDiagram d = sample(18);
    BracketOptions opt;
    opt.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bracket(d, opt));
}
BENCHMARK(bm_bracket_threads)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void bm_resolve_state(benchmark::State& state) {
    const AnnularDiagram d = sample(static_cast<int>(state.range(0)));
    const CutPath cp = cut_path(d);
    const int n = d.crossing_count();
    std::uint64_t bits = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(resolve_state(d, KauffmanState{bits, n}, cp));
        bits = (bits + 1) & ((std::uint64_t{1} << n) - 1);
    }
}
BENCHMARK(bm_resolve_state)->Arg(8)->Arg(16);

static void bm_recursive(benchmark::State& state) {
    const AnnularDiagram d = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_recursive(d));
}
BENCHMARK(bm_recursive)->Arg(8)->Arg(10);

static void bm_verify(benchmark::State& state) {
    const AnnularDiagram d = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_diagram(d, "bench"));
}
BENCHMARK(bm_verify)->Arg(8)->Arg(12);

static void bm_generate(benchmark::State& state) {
    GeneratorConfig cfg;
    cfg.min_crossings = 1;
    cfg.max_crossings = 10;
    cfg.policy = PuncturePolicy::adversarial_inner;
    cfg.seed = 5;
    DiagramGenerator gen(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(gen.next());
}
BENCHMARK(bm_generate);

BENCHMARK_MAIN();
