#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "mlc/coloring.hpp"
#include "mlc/exchange.hpp"
#include "mlc/oracle.hpp"
#include "mlc/partition.hpp"
#include "mlc/uncross.hpp"

namespace {

using namespace mlc;

std::vector<std::pair<int, int>> complete_graph_edges(int vertices) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
    return edges;
}

void bm_graphic_rank_queries(benchmark::State& state) {
    for (auto _ : state) {
        // Fresh matroid each round, so every rank is computed, not cached.
        const Matroid k5 = make_graphic(5, complete_graph_edges(5));
        int sum = 0;
        for (std::uint64_t bits = 0; bits < 1024; ++bits)
            sum += k5.rank(Subset::from_bits(bits));
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(bm_graphic_rank_queries);

void bm_chromatic_number_k5(benchmark::State& state) {
    const Matroid k5 = make_graphic(5, complete_graph_edges(5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_number(k5));
    }
}
BENCHMARK(bm_chromatic_number_k5);

void bm_partition_three_forests_k5(benchmark::State& state) {
    const Matroid k5 = make_graphic(5, complete_graph_edges(5));
    const PartitionProblem problem{{k5, k5, k5}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition(problem));
    }
}
BENCHMARK(bm_partition_three_forests_k5);

void bm_multi_exchange_u36(benchmark::State& state) {
    const Matroid u36 = make_uniform(3, 6);
    const Subset b1 = Subset::of({0, 1, 2});
    const Subset b2 = Subset::of({3, 4, 5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(multi_symmetric_exchange(u36, b1, b2, Subset::of({0, 1})));
    }
}
BENCHMARK(bm_multi_exchange_u36);

void bm_partition_exchange_into_k4(benchmark::State& state) {
    const Matroid k4 = make_graphic(4, complete_graph_edges(4));
    const Subset a = Subset::of({0, 3, 5});
    const std::vector<Subset> parts = {Subset::of({1, 4}), Subset::of({2})};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition_exchange_into(k4, a, parts));
    }
}
BENCHMARK(bm_partition_exchange_into_k4);

void bm_uncross_star(benchmark::State& state) {
    const Matroid u36 = make_uniform(3, 6);
    const std::vector<Subset> family = {Subset::of({0, 1}), Subset::of({1, 2}),
                                        Subset::of({2, 3}), Subset::of({3, 4}),
                                        Subset::of({4, 5}), Subset::of({5, 0})};
    const std::vector<Subset> chain = {Subset::of({0, 1, 2, 3, 4, 5}),
                                       Subset::of({0, 1, 2, 3, 4, 5}),
                                       Subset{}, Subset{}, Subset{}, Subset{}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(uncross_verify(u36, family, chain, u36.full_set()));
    }
}
BENCHMARK(bm_uncross_star);

void bm_bf_coloring_k4(benchmark::State& state) {
    const Matroid k4 = make_graphic(4, complete_graph_edges(4));
    const ListAssignment lists = constant_lists(6, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bf_color_from_lists(k4, lists));
    }
}
BENCHMARK(bm_bf_coloring_k4);

}  // namespace

BENCHMARK_MAIN();
