#include <benchmark/benchmark.h>

#include <random>

#include "kingsim/experiment.hpp"
#include "kingsim/kings.hpp"
#include "kingsim/strategy.hpp"
#include "kingsim/template_graph.hpp"
#include "kingsim/tournament.hpp"

namespace {

using namespace kingsim;

void BM_GenerateTournament(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto t = generate_tournament(TournamentKind::UniformRandom, n, seed++);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_GenerateTournament)->Arg(64)->Arg(216)->Arg(512);

void BM_GenerateTemplate(benchmark::State& state) {
    TemplateParams params;
    params.n = static_cast<int>(state.range(0));
    params.kappa = Rational(1, 2);
    for (auto _ : state) {
        auto g = generate_template(params);
        benchmark::DoNotOptimize(g);
        ++params.seed;
    }
}
BENCHMARK(BM_GenerateTemplate)->Arg(216)->Arg(512)->Arg(1000);

void BM_AuditTemplate(benchmark::State& state) {
    TemplateParams params;
    params.n = 1000;
    params.kappa = Rational(1, 2);
    params.seed = 7;
    auto g = generate_template(params);
    for (auto _ : state) {
        auto report = audit_template(g, params.kappa, static_cast<std::size_t>(state.range(0)), 11);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_AuditTemplate)->Arg(100)->Arg(1000);

void BM_RunSeeker(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StrategyParams params;
    Tournament truth = generate_tournament(TournamentKind::UniformRandom, n, 3);
    for (auto _ : state) {
        ArcOracle oracle(truth);
        std::mt19937_64 rng(9);
        auto outcome = run_seeker(oracle, params, rng);
        benchmark::DoNotOptimize(outcome);
    }
}
BENCHMARK(BM_RunSeeker)->Arg(27)->Arg(64)->Arg(125)->Arg(216);

void BM_BaselineFullReveal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Tournament truth = generate_tournament(TournamentKind::UniformRandom, n, 3);
    for (auto _ : state) {
        ArcOracle oracle(truth);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) oracle.query(u, v);
        benchmark::DoNotOptimize(mod_vertex(truth));
    }
}
BENCHMARK(BM_BaselineFullReveal)->Arg(64)->Arg(216);

}  // namespace

BENCHMARK_MAIN();
