#include "doily/detector.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace doily {

std::optional<DoilyCertificate> detect_from_candidate(const CandidatePair& pair, DetectStats* stats) {
  const Graph& g = pair.part.graph;
  const Frame& f = pair.frame;

  VertexSet forbidden(g.vertex_count());
  std::vector<char> take(static_cast<size_t>(g.vertex_count()), 0);
  for (size_t i = 0; i < 3; ++i) {
    forbidden.add(f.a[i]);
    forbidden.add(f.b[i]);
    take[static_cast<size_t>(f.a[i])] = 1;
    take[static_cast<size_t>(f.b[i])] = 1;
  }

  for (int i = 0; i < 3; ++i) {
    Vertex s = f.a_prime[static_cast<size_t>(prev3(i))];
    Vertex t = f.a_dprime[static_cast<size_t>(next3(i))];
    // Endpoint pinned to an attachment vertex: the a[i-1]a[i+1] edge plays
    // the role of this piece of the cycle, no path wanted.
    if (forbidden.contains(s) || forbidden.contains(t)) continue;
    if (stats) ++stats->bfs_calls;
    auto q = bfs_shortest_path(g, s, t, forbidden);
    if (!q) continue;
    for (Vertex v : q->vertices) take[static_cast<size_t>(v)] = 1;
  }

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (take[static_cast<size_t>(v)]) keep.push_back(v);
  Subgraph assembled = induced_subgraph(g, keep);
  auto cert = is_doily(assembled.graph);
  if (!cert) return std::nullopt;
  return cert->relabeled(assembled.to_host).relabeled(pair.part.to_host);
}

namespace {

DetectorOutcome run_sequential(const Graph& g, const RunOptions& opt) {
  DetectorOutcome out;
  CandidateStream stream(g);
  std::uint64_t index = 0;
  while (auto pair = stream.next()) {
    ++out.stats.candidates_tried;
    auto cert = detect_from_candidate(*pair, &out.stats);
    if (cert) {
      out.certificate = std::move(cert);
      out.step = DetectorOutcome::Step::candidate;
      out.candidate_index = index;
      break;
    }
    ++index;
  }
  out.stats.stream = stream.stats();
  (void)opt;
  return out;
}

DetectorOutcome run_parallel(const Graph& g, const RunOptions& opt) {
  DetectorOutcome out;
  std::atomic<bool> found{false};
  std::mutex mu;
  std::vector<std::thread> workers;
  int threads = opt.threads;

  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w]() {
      CandidateStream stream(g, {.a0_offset = w, .a0_stride = threads});
      DetectStats local;
      std::uint64_t index = 0;
      while (!found.load(std::memory_order_relaxed)) {
        auto pair = stream.next();
        if (!pair) break;
        ++local.candidates_tried;
        auto cert = detect_from_candidate(*pair, &local);
        if (cert) {
          std::lock_guard<std::mutex> lock(mu);
          if (!out.certificate) {
            out.certificate = std::move(cert);
            out.step = DetectorOutcome::Step::candidate;
            out.candidate_index = index;  // position within this worker's share
          }
          found.store(true, std::memory_order_relaxed);
          break;
        }
        ++index;
      }
      std::lock_guard<std::mutex> lock(mu);
      out.stats.candidates_tried += local.candidates_tried;
      out.stats.bfs_calls += local.bfs_calls;
      const StreamStats& s = stream.stats();
      out.stats.stream.triples += s.triples;
      out.stats.stream.tuples_passed += s.tuples_passed;
      out.stats.stream.tuples_dead += s.tuples_dead;
      out.stats.stream.pairs_emitted += s.pairs_emitted;
      out.stats.stream.vertices_deleted += s.vertices_deleted;
    });
  }
  for (auto& t : workers) t.join();
  return out;
}

}  // namespace

DetectorOutcome run_full(const Graph& g, const RunOptions& opt) {
  if (opt.threads < 1) throw std::invalid_argument("run_full: thread count must be positive");

  if (auto small = find_doily_upto(g, opt.small_max)) {
    DetectorOutcome out;
    out.certificate = std::move(small);
    out.step = DetectorOutcome::Step::small_search;
    return out;
  }
  return opt.threads == 1 ? run_sequential(g, opt) : run_parallel(g, opt);
}

const char* step_name(DetectorOutcome::Step step) {
  switch (step) {
    case DetectorOutcome::Step::small_search:
      return "small-search";
    case DetectorOutcome::Step::candidate:
      return "candidate";
    default:
      return "none";
  }
}

}  // namespace doily
