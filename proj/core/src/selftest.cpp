#include "doily/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

#include "doily/frame.hpp"
#include "doily/gen.hpp"
#include "doily/io.hpp"
#include "doily/jsonio.hpp"
#include "doily/probes.hpp"
#include "doily/recognition.hpp"

namespace doily {

namespace {

using Detect = std::function<DetectorOutcome(const Graph&)>;

void report(const AcceptanceOptions& opts, std::vector<CriterionResult>& out,
            int number, std::string name, bool passed, std::string detail) {
  if (opts.log) {
    (*opts.log) << "[" << (number < 10 ? " " : "") << number << "/11] " << name << " ... "
                << (passed ? "pass" : "FAIL") << " (" << detail << ")\n";
    opts.log->flush();
  }
  out.push_back({number, std::move(name), passed, std::move(detail)});
}

// The shared random corpus: n in 6..11 crossed with three densities.
std::vector<Graph> random_corpus(bool quick) {
  int seeds = quick ? 5 : 30;
  const double ps[] = {0.15, 0.3, 0.5};
  std::vector<Graph> out;
  for (int n = 6; n <= 11; ++n)
    for (int pi = 0; pi < 3; ++pi)
      for (int s = 0; s < seeds; ++s)
        out.push_back(gnp(n, ps[pi], static_cast<std::uint32_t>(n * 10000 + pi * 100 + s)));
  return out;
}

// Extra guaranteed-positive instances for the harvesting criteria: bare
// doilies and small planted ones, all on at most 11 vertices so every doily
// in them has at least 9 vertices.
std::vector<Graph> harvest_extras() {
  std::vector<Graph> out;
  for (int cyc = 6; cyc <= 8; ++cyc)
    out.push_back(planted_doily(cyc, {0, cyc / 3, 2 * cyc / 3}, 0, 0.0, 0).graph);
  for (int cyc = 6; cyc <= 8; ++cyc)
    for (int extra = 1; cyc + 3 + extra <= 11; ++extra)
      out.push_back(
          planted_doily(cyc, {0, cyc / 3, 2 * cyc / 3}, extra, 0.25,
                        static_cast<std::uint32_t>(500 + 10 * cyc + extra))
              .graph);
  return out;
}

bool certificate_ok(const Graph& g, const DoilyCertificate& cert) {
  if (!cert.validate(g).empty()) return false;
  Subgraph sub = induced_subgraph(g, cert.vertex_list());
  return is_doily(sub.graph).has_value();
}

// 1. Existence answers match the exhaustive oracle on the random corpus and
//    every returned certificate is a real doily.
void criterion_oracle_equivalence(const AcceptanceOptions& opts, const Detect& detect,
                                  const std::vector<Graph>& corpus,
                                  std::vector<CriterionResult>& out) {
  int disagreements = 0, bad_certs = 0;
  for (const Graph& g : corpus) {
    bool truth = oracle_report(g).exists;
    DetectorOutcome got = detect(g);
    if (got.found() != truth) ++disagreements;
    if (got.found() && !certificate_ok(g, *got.certificate)) ++bad_certs;
  }
  std::ostringstream detail;
  detail << corpus.size() << " graphs, " << disagreements << " disagreements, " << bad_certs
         << " bad certificates";
  report(opts, out, 1, "oracle-equivalence", disagreements == 0 && bad_certs == 0, detail.str());
}

// 2. Every net subdivision up to the size bound is detected.
void criterion_subdivisions(const AcceptanceOptions& opts, const Detect& detect,
                            std::vector<CriterionResult>& out) {
  int max_n = opts.quick ? 10 : 12;
  int misses = 0, total = 0;
  for (const Graph& g : net_subdivisions_upto(max_n)) {
    ++total;
    if (!detect(g).found()) ++misses;
  }
  std::ostringstream detail;
  detail << total << " subdivisions with at most " << max_n << " vertices, " << misses
         << " misses";
  report(opts, out, 2, "subdivision-completeness", misses == 0, detail.str());
}

// 3. Planted doilies are always found.
void criterion_planted(const AcceptanceOptions& opts, const Detect& detect,
                       std::vector<CriterionResult>& out) {
  int total = opts.quick ? 48 : 200;
  int misses = 0;
  for (int idx = 0; idx < total; ++idx) {
    int cyc = 3 + idx % 8;
    int extra = idx % 9;
    int p1 = 1 + idx % (cyc - 2);
    int p2 = p1 + 1 + (idx / 7) % (cyc - 1 - p1);
    PlantedDoily inst = planted_doily(cyc, {0, p1, p2}, extra, 0.3,
                                      static_cast<std::uint32_t>(9000 + idx));
    if (!detect(inst.graph).found()) ++misses;
  }
  std::ostringstream detail;
  detail << total << " planted instances, " << misses << " misses";
  report(opts, out, 3, "planted-positives", misses == 0, detail.str());
}

// 4. Families that contain no doily: cliques, complete bipartite graphs,
//    paths, cycles, trees.  Cross-checked against the oracle.
void criterion_negatives(const AcceptanceOptions& opts, const Detect& detect,
                         std::vector<CriterionResult>& out) {
  std::vector<Graph> family;
  for (int n = 1; n <= 9; ++n) {  // cliques
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    family.push_back(Graph::from_edge_list(n, e));
  }
  for (int a = 1; a <= 5; ++a)  // complete bipartite
    for (int b = a; b <= 5; ++b) {
      std::vector<Edge> e;
      for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
      family.push_back(Graph::from_edge_list(a + b, e));
    }
  for (int n = 1; n <= 15; ++n) {  // paths
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    family.push_back(Graph::from_edge_list(n, e));
  }
  for (int n = 3; n <= 15; ++n) {  // cycles
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) e.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
    family.push_back(Graph::from_edge_list(n, e));
  }
  for (int n = 2; n <= 15; ++n)  // random trees, three per size
    for (int t = 0; t < 3; ++t) {
      std::mt19937 rng(static_cast<std::uint32_t>(7000 + 10 * n + t));
      std::vector<Edge> e;
      for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % static_cast<std::uint32_t>(v)), v);
      family.push_back(Graph::from_edge_list(n, e));
    }

  int false_positives = 0, oracle_mismatches = 0;
  for (const Graph& g : family) {
    if (detect(g).found()) ++false_positives;
    if (oracle_report(g).exists) ++oracle_mismatches;
  }
  std::ostringstream detail;
  detail << family.size() << " graphs, " << false_positives << " false positives, "
         << oracle_mismatches << " oracle mismatches";
  report(opts, out, 4, "negative-families", false_positives == 0 && oracle_mismatches == 0,
         detail.str());
}

struct Harvest {
  std::vector<CandidatePair> pairs;
  std::uint64_t graphs = 0;
};

Harvest harvest_pairs(const std::vector<Graph>& corpus) {
  Harvest h;
  for (const Graph& g : corpus) {
    ++h.graphs;
    CandidateStream stream(g);
    while (auto pair = stream.next()) h.pairs.push_back(std::move(*pair));
  }
  return h;
}

// 5. Every cleaned pair satisfies the frame degree invariants and is free of
//    star-cutset centres.
void criterion_cleaning(const AcceptanceOptions& opts, const Harvest& harvest,
                        std::vector<CriterionResult>& out) {
  std::uint64_t violations = 0;
  for (const CandidatePair& pair : harvest.pairs) {
    const Graph& pg = pair.part.graph;
    if (!is_frame_in(pg, pair.frame)) {
      ++violations;
      continue;
    }
    bool centre = false;
    for (Vertex v = 0; v < pg.vertex_count() && !centre; ++v) {
      if (v == pair.frame.a[0] || v == pair.frame.a[1] || v == pair.frame.a[2]) continue;
      for (int j = 0; j < 3 && !centre; ++j)
        if (is_star_cutset_centre(pg, v, pair.frame.a, j)) centre = true;
    }
    if (centre) ++violations;
  }
  std::ostringstream detail;
  detail << harvest.pairs.size() << " pairs from " << harvest.graphs << " graphs, " << violations
         << " violations";
  report(opts, out, 5, "cleaning-invariants", violations == 0, detail.str());
}

// 6. On every trackable harvested pair, all vertices outside each framed
//    minimum doily are minor.
void criterion_all_minor(const AcceptanceOptions& opts, const Harvest& harvest,
                         std::vector<size_t>& trackable, std::vector<CriterionResult>& out) {
  std::uint64_t violations = 0, untrackable = 0;
  for (size_t idx = 0; idx < harvest.pairs.size(); ++idx) {
    const CandidatePair& pair = harvest.pairs[idx];
    try {
      if (no_major_check(pair.part.graph, pair.frame))
        trackable.push_back(idx);
      else
        ++violations;
    } catch (const std::invalid_argument&) {
      ++untrackable;
    }
  }
  std::ostringstream detail;
  detail << trackable.size() << " trackable pairs (" << untrackable << " not trackable), "
         << violations << " violations";
  report(opts, out, 6, "minor-only-vertices", violations == 0 && !trackable.empty(),
         detail.str());
}

// 7 and 8 share the per-pair enumeration of framed minimum doilies.
// 7: shortest alternative routes around each attach point are never shorter
//    than the doily's own path, with clean interiors on ties.
// 8: replacing a doily path by a shortest path yields a same-size doily with
//    the same frame.
void criteria_path_lemmas(const AcceptanceOptions& opts, const Harvest& harvest,
                          const std::vector<size_t>& trackable,
                          std::vector<CriterionResult>& out) {
  std::uint64_t checked = 0, jump_violations = 0, replace_violations = 0;
  for (size_t idx : trackable) {
    const CandidatePair& pair = harvest.pairs[idx];
    const Graph& pg = pair.part.graph;
    OracleReport rep = oracle_report(pg, /*enumerate_all=*/true);
    if (!rep.exists) continue;
    for (const DoilyCertificate& k : *rep.min_doilies) {
      if (!is_frame_for(pg, k, pair.frame)) continue;
      ++checked;
      for (int i = 0; i < 3; ++i) {
        try {
          if (!nojumps_check(pg, k, i)) ++jump_violations;
        } catch (const std::invalid_argument&) {
          ++jump_violations;
        }
        auto q = bfs_shortest_path(
            pg, k.attach[static_cast<size_t>(next3(i))], k.attach[static_cast<size_t>(prev3(i))],
            VertexSet::of(pg.vertex_count(), {k.attach[static_cast<size_t>(i)]}));
        if (!q) {
          ++replace_violations;
          continue;
        }
        std::vector<Vertex> replaced = replace_path_vertices(k, i, *q);
        if (static_cast<int>(replaced.size()) != k.size()) {
          ++replace_violations;
          continue;
        }
        Subgraph sub = induced_subgraph(pg, replaced);
        auto cert = is_doily(sub.graph);
        if (!cert || !is_frame_for(pg, cert->relabeled(sub.to_host), pair.frame))
          ++replace_violations;
      }
    }
  }
  std::ostringstream d7;
  d7 << checked << " framed minimum doilies, " << jump_violations << " violations";
  report(opts, out, 7, "no-shorter-jumps", jump_violations == 0, d7.str());
  std::ostringstream d8;
  d8 << checked << " framed minimum doilies, " << replace_violations << " violations";
  report(opts, out, 8, "path-replacement", replace_violations == 0, d8.str());
}

// 9. On a bare doily with its canonical frame, the detector returns exactly
//    the whole vertex set.
void criterion_detector_identity(const AcceptanceOptions& opts,
                                 std::vector<CriterionResult>& out) {
  std::uint64_t total = 0, failures = 0;
  for (int cyc = 3; cyc <= 13; ++cyc) {
    std::vector<std::array<int, 3>> positions = {{0, 1, 2}, {0, cyc / 3, 2 * cyc / 3}};
    if (cyc >= 4) positions.push_back({0, 1, cyc - 1});
    if (cyc >= 5) positions.push_back({0, 2, 4});
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (const auto& pos : positions) {
      if (pos[0] == pos[1] || pos[1] == pos[2] || pos[0] == pos[2]) continue;
      Graph g = planted_doily(cyc, pos, 0, 0.0, 0).graph;
      ++total;
      auto cert = is_doily(g);
      if (!cert) {
        ++failures;
        continue;
      }
      std::vector<Vertex> identity(static_cast<size_t>(g.vertex_count()));
      for (Vertex v = 0; v < g.vertex_count(); ++v) identity[static_cast<size_t>(v)] = v;
      CandidatePair pair{Subgraph{g, identity, std::vector<int>(identity.begin(), identity.end())},
                         frame_for_certificate(*cert)};
      auto got = detect_from_candidate(pair);
      if (!got || got->vertex_list() != identity) ++failures;
    }
  }
  std::ostringstream detail;
  detail << total << " bare doilies up to 16 vertices, " << failures << " failures";
  report(opts, out, 9, "detector-identity", failures == 0, detail.str());
}

// 10. Doubling the instance size at fixed average degree must not blow up
//     the candidate detector's median runtime by more than 2.5x.
void criterion_performance(const AcceptanceOptions& opts, std::vector<CriterionResult>& out) {
  auto make_pair = [](int cyc) {
    int extra = cyc;
    double p = 6.0 / (2.0 * cyc);  // constant expected degree
    PlantedDoily inst = planted_doily(cyc, {0, cyc / 3, 2 * cyc / 3}, extra, p, 42);
    const Graph& g = inst.graph;
    std::vector<Vertex> identity(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) identity[static_cast<size_t>(v)] = v;
    return CandidatePair{
        Subgraph{g, identity, std::vector<int>(identity.begin(), identity.end())},
        frame_for_certificate(inst.planted)};
  };
  auto timed_run_ns = [](const CandidatePair& pair) {
    auto start = std::chrono::steady_clock::now();
    auto got = detect_from_candidate(pair);
    auto stop = std::chrono::steady_clock::now();
    if (got && got->size() < 6) return -1.0;  // impossible; defeats dead-code elimination
    return static_cast<double>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  };
  // Too-small instances sit near cache thresholds and make the ratio
  // noisy, so the smoke test keeps its full scale even in quick mode; the
  // whole measurement costs well under a second.  The two sizes are timed
  // in alternation so clock-speed drift hits both medians equally.
  int base = 10000;
  CandidatePair small_pair = make_pair(base);
  CandidatePair large_pair = make_pair(2 * base);
  std::vector<double> small_times, large_times;
  timed_run_ns(small_pair);  // warm-up, untimed
  timed_run_ns(large_pair);
  for (int trial = 0; trial < 50; ++trial) {
    small_times.push_back(timed_run_ns(small_pair));
    large_times.push_back(timed_run_ns(large_pair));
  }
  std::sort(small_times.begin(), small_times.end());
  std::sort(large_times.begin(), large_times.end());
  double small = small_times[small_times.size() / 2];
  double large = large_times[large_times.size() / 2];
  double ratio = small > 0 ? large / small : 1e9;
  std::ostringstream detail;
  detail << "median " << small / 1e6 << " ms -> " << large / 1e6 << " ms, ratio " << ratio
         << " (limit 2.5)";
  report(opts, out, 10, "performance-smoke", ratio <= 2.5, detail.str());
}

// 11. Two sequential runs over a sample of the suite produce byte-identical
//     JSON.
void criterion_determinism(const AcceptanceOptions& opts, const Detect& detect,
                           const std::vector<Graph>& corpus, std::vector<CriterionResult>& out) {
  auto transcript = [&]() {
    std::ostringstream all;
    for (size_t i = 0; i < corpus.size(); i += 17) {
      const Graph& g = corpus[i];
      all << detector_json(detect(g));
      all << oracle_json(oracle_report(g, true));
    }
    Graph net = net_subdivisions_upto(6).front();
    all << detector_json(detect(net));
    all << to_edge_list(gnp(10, 0.3, 7));
    return all.str();
  };
  std::string first = transcript(), second = transcript();
  std::ostringstream detail;
  detail << first.size() << " bytes, " << (first == second ? "identical" : "different");
  report(opts, out, 11, "determinism", first == second, detail.str());
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  Detect detect = opts.detect ? opts.detect : [](const Graph& g) { return run_full(g); };
  std::vector<CriterionResult> out;

  std::vector<Graph> corpus = random_corpus(opts.quick);
  criterion_oracle_equivalence(opts, detect, corpus, out);
  criterion_subdivisions(opts, detect, out);
  criterion_planted(opts, detect, out);
  criterion_negatives(opts, detect, out);

  std::vector<Graph> harvest_corpus = corpus;
  if (opts.quick) {  // thin the random part, keep the structure
    harvest_corpus.clear();
    for (size_t i = 0; i < corpus.size(); i += 3) harvest_corpus.push_back(corpus[i]);
  }
  for (Graph& g : harvest_extras()) harvest_corpus.push_back(std::move(g));
  Harvest harvest = harvest_pairs(harvest_corpus);
  criterion_cleaning(opts, harvest, out);
  std::vector<size_t> trackable;
  criterion_all_minor(opts, harvest, trackable, out);
  criteria_path_lemmas(opts, harvest, trackable, out);

  criterion_detector_identity(opts, out);
  criterion_performance(opts, out);
  criterion_determinism(opts, detect, corpus, out);
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

}  // namespace doily
