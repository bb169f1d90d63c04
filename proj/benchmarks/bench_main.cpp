// Microbenchmarks for the hot paths: BFS, candidate enumeration, the
// per-candidate detector step, and the exponential reference oracle.

#include <benchmark/benchmark.h>

#include <doily/detector.hpp>
#include <doily/frame.hpp>
#include <doily/gen.hpp>
#include <doily/graph.hpp>
#include <doily/recognition.hpp>

using namespace doily;

namespace {

Graph bench_graph(int n, double avg_degree, uint32_t seed) {
  double p = avg_degree / static_cast<double>(n - 1);
  return gnp(n, p, seed);
}

void BM_BfsShortestPath(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = bench_graph(n, 5.0, 17);
  VertexSet forbidden(n);
  for (auto _ : state) {
    auto path = bfs_shortest_path(g, 0, n - 1, forbidden);
    benchmark::DoNotOptimize(path);
  }
}
BENCHMARK(BM_BfsShortestPath)->Arg(64)->Arg(256)->Arg(1024);

void BM_CandidateStream(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto planted = planted_doily(n, {0, n / 3, 2 * n / 3}, n, 5.0 / n, 23);
  for (auto _ : state) {
    CandidateStream stream(planted.graph);
    uint64_t pairs = 0;
    while (stream.next()) ++pairs;
    benchmark::DoNotOptimize(pairs);
  }
}
BENCHMARK(BM_CandidateStream)->Arg(12)->Arg(24)->Arg(48);

void BM_DetectFromCandidate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto planted = planted_doily(n, {0, n / 3, 2 * n / 3}, n, 5.0 / n, 29);
  CandidateStream stream(planted.graph);
  std::vector<CandidatePair> pairs;
  while (auto pair = stream.next()) pairs.push_back(*pair);
  if (pairs.empty()) {
    state.SkipWithError("no candidate pairs for benchmark graph");
    return;
  }
  size_t i = 0;
  for (auto _ : state) {
    auto out = detect_from_candidate(pairs[i]);
    benchmark::DoNotOptimize(out);
    i = (i + 1) % pairs.size();
  }
}
BENCHMARK(BM_DetectFromCandidate)->Arg(12)->Arg(24)->Arg(48);

void BM_RunFull(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto planted = planted_doily(n, {0, n / 3, 2 * n / 3}, n, 5.0 / n, 31);
  for (auto _ : state) {
    auto out = run_full(planted.graph);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_RunFull)->Arg(12)->Arg(24)->Arg(48);

void BM_OracleReport(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = bench_graph(n, 4.0, 41);
  for (auto _ : state) {
    auto report = oracle_report(g, false);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_OracleReport)->Arg(10)->Arg(14)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
