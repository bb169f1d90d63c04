#pragma once

// Deterministic graph generators. All randomness comes from std::mt19937 raw
// draws so the same seed yields the same graph on every platform; the
// distribution helpers from <random> are implementation-defined and are not
// used here.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "doily/certificate.hpp"
#include "doily/graph.hpp"

namespace doily {

// Erdos-Renyi G(n, p). Pairs are visited in ascending (u, v) order, u < v,
// one raw draw per pair.
Graph gnp(int n, double p, std::uint32_t seed);

// A doily with the given cycle length (vertices 0..cycle_length-1 in cycle
// order) and three tufts attached at the given cycle positions, plus extra_n
// background vertices. Random edges are drawn for every pair with at least
// one endpoint outside the planted set — never inside it — so the planted
// copy stays induced and the output is guaranteed to contain a doily.
// Planted-planted pairs consume no randomness. Requires cycle_length >= 3
// and distinct in-range tuft positions.
struct PlantedDoily {
  Graph graph;
  DoilyCertificate planted;  // the planted copy (not necessarily minimum)
};
PlantedDoily planted_doily(int cycle_length, std::array<int, 3> tuft_positions,
                           int extra_n, double edge_p, std::uint32_t seed);

// One isomorphism class of net subdivisions: branch i has d[i] >= 1 edges and
// the cycle arc opposite branch i (the arc avoiding its attach point) has
// c[i] >= 1 edges. Two subdivisions are isomorphic exactly when their
// multisets of (d, c) pairs agree, so the canonical form is the three pairs
// sorted lexicographically. Vertex count = sum(d) + sum(c); the smallest
// profile is the net itself, (1,1) x 3 on 6 vertices.
struct SubdivisionProfile {
  std::array<std::pair<int, int>, 3> arms;  // sorted (branch, opposite arc)
  int vertex_count() const;
  bool operator==(const SubdivisionProfile&) const = default;
  auto operator<=>(const SubdivisionProfile&) const = default;
};

// All net-subdivision isomorphism classes with at most max_n vertices, sorted
// by vertex count then profile. Requires max_n >= 6.
std::vector<SubdivisionProfile> net_subdivision_profiles_upto(int max_n);

// Concrete graph for a profile. Attach points are vertices 0, 1, 2 in
// clockwise cycle order; branch paths come next, then arc interiors.
Graph build_net_subdivision(const SubdivisionProfile& profile);

// Convenience: the graphs of net_subdivision_profiles_upto(max_n), in the
// same order. Every emitted graph contains a doily; it *is* one exactly when
// all three branches have length 1.
std::vector<Graph> net_subdivisions_upto(int max_n);

}  // namespace doily
