// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "gtop/covering.hpp"
#include "gtop/obstruct.hpp"

using namespace gtop;

namespace {

GraphMap double_cover(const Graph& g) {
    Graph k = product(make_family("complete", {2}), g);
    std::vector<int> f(k.size());
    for (int v = 0; v < k.size(); ++v) f[v] = v % g.size();
    return GraphMap(k, g, f);
}

const GraphMap& big_cover() {
    static GraphMap p = double_cover(make_family("torus67", {5, 9, 8}));
    return p;
}

void BM_cover_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_r_covering_serial(big_cover(), static_cast<int>(st.range(0))));
}
void BM_cover_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_r_covering(big_cover(), static_cast<int>(st.range(0))));
}
BENCHMARK(BM_cover_serial)->Arg(2)->Arg(4);
BENCHMARK(BM_cover_parallel)->Arg(2)->Arg(4);

void BM_action_serial(benchmark::State& st) {
    auto a = xn_cover_action(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(verify_covering_action_serial(a, 2));
}
void BM_action_parallel(benchmark::State& st) {
    auto a = xn_cover_action(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(verify_covering_action(a, 2));
}
BENCHMARK(BM_action_serial)->Arg(7)->Arg(11);
BENCHMARK(BM_action_parallel)->Arg(7)->Arg(11);

void BM_hom_serial(benchmark::State& st) {
    Graph g = make_family("torus67", {3, 5, 4}), c5 = make_family("cycle", {5});
    for (auto _ : st) benchmark::DoNotOptimize(find_hom_serial(g, c5));
}
void BM_hom_parallel(benchmark::State& st) {
    Graph g = make_family("torus67", {3, 5, 4}), c5 = make_family("cycle", {5});
    for (auto _ : st) benchmark::DoNotOptimize(find_hom(g, c5));
}
BENCHMARK(BM_hom_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hom_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
