#pragma once

// A doily is an induced cycle plus three pairwise non-adjacent "tuft"
// vertices, each with exactly one neighbour on the cycle, attached at three
// distinct points.  DoilyCertificate is the checkable witness used across
// the library: recognition produces it, the detector returns it, and the
// structural probes consume it.
//
// Index conventions (used everywhere, always mod 3):
//   tufts[i]  - the three tufts in ascending id order
//   attach[i] - the cycle neighbour of tufts[i]
//   path(i)   - the cycle path from attach[i+1] to attach[i+2] avoiding
//               attach[i]; the three paths share only their endpoints
// The cycle is stored clockwise, meaning attach[0], attach[1], attach[2]
// occur in that cyclic order, and is rotated to the lexicographically
// smallest sequence so equal doilies compare equal.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "doily/graph.hpp"

namespace doily {

inline int next3(int i) { return (i + 1) % 3; }
inline int prev3(int i) { return (i + 2) % 3; }

struct DoilyCertificate {
  std::vector<Vertex> cycle;
  std::array<Vertex, 3> tufts{};
  std::array<Vertex, 3> attach{};

  int size() const { return static_cast<int>(cycle.size()) + 3; }

  // Cycle vertices plus tufts, ascending.
  std::vector<Vertex> vertex_list() const;

  // Position of v on the cycle, or -1.
  int cycle_pos(Vertex v) const;
  Vertex succ(Vertex on_cycle) const;
  Vertex pred(Vertex on_cycle) const;

  Path path(int i) const;

  // Rewrites every vertex id through `to_host` (local id -> host id) and
  // re-canonicalizes, for lifting certificates out of subgraphs.
  DoilyCertificate relabeled(std::span<const Vertex> to_host) const;

  // Empty string if this is a valid certificate for g, else the reason.
  std::string validate(const Graph& g) const;

  bool operator==(const DoilyCertificate&) const = default;
};

// Assembles the canonical certificate from a cycle (any rotation/direction)
// and its three tufts.  Throws std::invalid_argument if the pieces do not
// form a doily in g.
DoilyCertificate make_certificate(const Graph& g, std::vector<Vertex> cycle,
                                  std::array<Vertex, 3> tufts);

}  // namespace doily
