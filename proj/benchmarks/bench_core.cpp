#include <benchmark/benchmark.h>

#include "canclab/corpus.hpp"
#include "canclab/quadric.hpp"
#include "canclab/search.hpp"
#include "canclab/smallcancel.hpp"

using namespace canclab;

namespace {

void BM_compute_pieces_grid(benchmark::State& state) {
    auto grid = make_grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_pieces(grid));
    }
}
BENCHMARK(BM_compute_pieces_grid)->Arg(2)->Arg(3)->Arg(4);

void BM_classify_fin(benchmark::State& state) {
    auto fin = make_fin(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(fin));
    }
}
BENCHMARK(BM_classify_fin)->Arg(12)->Arg(16);

void BM_quadrize_grid(benchmark::State& state) {
    auto grid = make_grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadrize(grid));
    }
}
BENCHMARK(BM_quadrize_grid)->Arg(3)->Arg(5);

void BM_gauss_bonnet_random(benchmark::State& state) {
    Rng rng(7);
    std::vector<DiscDiagram> diagrams;
    for (int i = 0; i < 64; ++i) diagrams.push_back(random_square_diagram(rng.next(), 20));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_bonnet_audit(diagrams[i++ % diagrams.size()]));
    }
}
BENCHMARK(BM_gauss_bonnet_random);

void BM_modified_cut_tree(benchmark::State& state) {
    auto chain = make_pita_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(modified_cut_tree(chain));
    }
}
BENCHMARK(BM_modified_cut_tree)->Arg(4)->Arg(12);

void BM_minimal_diagram_search(benchmark::State& state) {
    auto grid = make_grid(2, 3);
    auto se = [&](const char* name, bool rev) { return SignedEdge{*grid.find_edge(name), rev}; };
    std::vector<SignedEdge> rect{se("h0_0", false), se("h0_1", false), se("u0_2", false),
                                 se("h1_1", true),  se("h1_0", true),  se("u0_0", true)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_minimal_diagram(grid, rect, 6));
    }
}
BENCHMARK(BM_minimal_diagram_search);

void BM_falsify_tq(benchmark::State& state) {
    auto cube = make_cube_corner();
    for (auto _ : state) {
        benchmark::DoNotOptimize(falsify_Tq_by_diagrams(cube, 4, 3));
    }
}
BENCHMARK(BM_falsify_tq);

}  // namespace

BENCHMARK_MAIN();
