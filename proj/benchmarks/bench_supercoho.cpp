#include "supercoho/cohomology.hpp"
#include "supercoho/io.hpp"
#include "supercoho/varieties.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace supercoho;

// Dense random integer matrix of rank about n/2, so the kernel is large.
Mat low_rank_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vec> basis(n / 2, Vec(n));
    for (auto& row : basis)
        for (auto& x : row) x = Rat(static_cast<long>(rng() % 11) - 5);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vec r(n);
        for (const auto& b : basis) {
            Rat c(static_cast<long>(rng() % 7) - 3);
            for (std::size_t j = 0; j < n; ++j) r[j] += c * b[j];
        }
        rows.push_back(std::move(r));
    }
    return Mat::from_dense(rows);
}

void BM_Rank(benchmark::State& state) {
    auto m = low_rank_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64);

void BM_Kernel(benchmark::State& state) {
    auto m = low_rank_matrix(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(16)->Arg(32)->Arg(64);

void BM_GoldenTableGl11(benchmark::State& state) {
    auto g = build_gl(1, 1);
    auto g0 = even_subalgebra(g);
    for (auto _ : state) {
        for (int k = 0; k <= 6; ++k) {
            auto m = parse_module_expr("dualkac:" + std::to_string(-k) + "," + std::to_string(k), g);
            benchmark::DoNotOptimize(cohomology(build_relative_complex(g, g0, m, 7)).dims);
        }
    }
}
BENCHMARK(BM_GoldenTableGl11)->Unit(benchmark::kMillisecond);

void BM_RelativeComplexGl22(benchmark::State& state) {
    auto g = build_gl(2, 2);
    auto g0 = even_subalgebra(g);
    auto m = parse_module_expr(state.range(0) ? "natural*dual" : "trivial", g);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(build_relative_complex(g, g0, m, 5)).dims);
    state.SetLabel(state.range(0) ? "natural*dual" : "trivial");
}
BENCHMARK(BM_RelativeComplexGl22)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RestrictionToF(benchmark::State& state) {
    auto g = build_gl(2, 2);
    auto g0 = even_subalgebra(g);
    auto f = detecting_f(g);
    auto f0 = Subalgebra::from_basis_indices(f.own(), f.even_indices());
    auto m = parse_module_expr("natural", g);
    for (auto _ : state) benchmark::DoNotOptimize(restriction(g0, f, f0, m, 4).injective);
}
BENCHMARK(BM_RestrictionToF)->Unit(benchmark::kMillisecond);

void BM_InvariantRingGl22(benchmark::State& state) {
    auto g = build_gl(2, 2);
    std::vector<SparseVec> odd, even;
    for (std::size_t i = 0; i < g->dim(); ++i) (g->parity(i) == Parity::Odd ? odd : even).push_back(SparseVec::unit(i));
    auto lie = adjoint_action(*g, even, odd);
    const int dmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(invariant_ring_dims(odd.size(), lie, nullptr, dmax));
}
BENCHMARK(BM_InvariantRingGl22)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RankVarietyGrid(benchmark::State& state) {
    auto g = build_gl(2, 2);
    auto fbar = detecting_fbar(g);
    auto m = parse_module_expr("natural*dual", g);
    auto pts = probe_points(fbar.odd_indices().size(), "grid");
    for (auto _ : state) benchmark::DoNotOptimize(rank_variety_probe(m, fbar, pts).members);
}
BENCHMARK(BM_RankVarietyGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
