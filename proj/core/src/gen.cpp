#include "doily/gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace doily {

namespace {

// Draw one bit with probability p using a raw 32-bit draw. The threshold is
// fixed by p alone, so results are reproducible across standard libraries.
class BernoulliBits {
 public:
  BernoulliBits(double p, std::uint32_t seed) : rng_(seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0, 1]");
    threshold_ = static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
  }
  bool operator()() { return static_cast<std::uint64_t>(rng_()) < threshold_; }

 private:
  std::mt19937 rng_;
  std::uint64_t threshold_;
};

}  // namespace

Graph gnp(int n, double p, std::uint32_t seed) {
  if (n < 0) throw std::invalid_argument("gnp: negative vertex count");
  BernoulliBits coin(p, seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin()) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

PlantedDoily planted_doily(int cycle_length, std::array<int, 3> tuft_positions,
                           int extra_n, double edge_p, std::uint32_t seed) {
  if (cycle_length < 3) throw std::invalid_argument("planted_doily: cycle length below 3");
  if (extra_n < 0) throw std::invalid_argument("planted_doily: negative extra vertex count");
  for (int pos : tuft_positions)
    if (pos < 0 || pos >= cycle_length)
      throw std::invalid_argument("planted_doily: tuft position outside the cycle");
  if (tuft_positions[0] == tuft_positions[1] || tuft_positions[0] == tuft_positions[2] ||
      tuft_positions[1] == tuft_positions[2])
    throw std::invalid_argument("planted_doily: tuft positions must be distinct");

  // Planted copy: cycle 0..cycle_length-1, tufts cycle_length..cycle_length+2.
  int planted_n = cycle_length + 3;
  int n = planted_n + extra_n;
  std::vector<Edge> edges;
  std::vector<Vertex> cycle(static_cast<size_t>(cycle_length));
  for (int i = 0; i < cycle_length; ++i) {
    cycle[static_cast<size_t>(i)] = i;
    int j = (i + 1) % cycle_length;
    edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  for (int i = 0; i < 3; ++i)
    edges.emplace_back(tuft_positions[static_cast<size_t>(i)], cycle_length + i);
  Graph bare = Graph::from_edge_list(planted_n, edges);
  DoilyCertificate planted =
      make_certificate(bare, cycle, {cycle_length, cycle_length + 1, cycle_length + 2});

  BernoulliBits coin(edge_p, seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (v < planted_n) continue;  // both planted: keep the copy induced
      if (coin()) edges.emplace_back(u, v);
    }
  return PlantedDoily{Graph::from_edge_list(n, edges), std::move(planted)};
}

int SubdivisionProfile::vertex_count() const {
  int n = 0;
  for (const auto& [d, c] : arms) n += d + c;
  return n;
}

std::vector<SubdivisionProfile> net_subdivision_profiles_upto(int max_n) {
  if (max_n < 6)
    throw std::invalid_argument("net_subdivision_profiles_upto: smallest subdivision has 6 vertices");
  std::vector<SubdivisionProfile> out;
  for (int d0 = 1; d0 <= max_n; ++d0)
    for (int c0 = 1; c0 <= max_n; ++c0)
      for (int d1 = d0; d1 <= max_n; ++d1)
        for (int c1 = 1; c1 <= max_n; ++c1)
          for (int d2 = d1; d2 <= max_n; ++d2)
            for (int c2 = 1; c2 <= max_n; ++c2) {
              if (d0 + c0 + d1 + c1 + d2 + c2 > max_n) continue;
              SubdivisionProfile prof{{{{d0, c0}, {d1, c1}, {d2, c2}}}};
              std::sort(prof.arms.begin(), prof.arms.end());
              if (std::find(out.begin(), out.end(), prof) == out.end()) out.push_back(prof);
            }
  std::sort(out.begin(), out.end(), [](const SubdivisionProfile& a, const SubdivisionProfile& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return a < b;
  });
  return out;
}

Graph build_net_subdivision(const SubdivisionProfile& profile) {
  // Attach points 0, 1, 2 in clockwise cycle order. The clockwise arc from
  // attach i to attach i+1 avoids attach i+2, so it is the arc opposite
  // branch i+2 and carries arms[i+2].second edges.
  std::vector<Edge> edges;
  Vertex next = 3;
  auto add = [&edges](Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
  // Path of `len` edges from `from` through fresh vertices; the far end is
  // fresh too unless `to` is supplied.
  auto chain = [&](Vertex from, int len, Vertex to) {
    Vertex cur = from;
    int fresh = to < 0 ? len : len - 1;
    for (int step = 0; step < fresh; ++step) {
      add(cur, next);
      cur = next++;
    }
    if (to >= 0) add(cur, to);
  };
  for (int i = 0; i < 3; ++i) chain(i, profile.arms[static_cast<size_t>(i)].first, -1);
  for (int i = 0; i < 3; ++i)
    chain(i, profile.arms[static_cast<size_t>((i + 2) % 3)].second, (i + 1) % 3);
  return Graph::from_edge_list(profile.vertex_count(), edges);
}

std::vector<Graph> net_subdivisions_upto(int max_n) {
  std::vector<Graph> out;
  for (const SubdivisionProfile& prof : net_subdivision_profiles_upto(max_n))
    out.push_back(build_net_subdivision(prof));
  return out;
}

}  // namespace doily
