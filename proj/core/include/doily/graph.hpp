#pragma once

// Simple undirected graphs on vertex ids 0..n-1, plus the handful of
// deterministic primitives the detection pipeline is built from.
//
// Determinism contract (relied on throughout): adjacency lists are kept in
// ascending id order, traversals scan vertices in ascending id order, and
// every operation on equal inputs returns byte-identical results.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace doily {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// A set of vertices bound to a fixed universe {0..n-1}.  Mainly used to pass
// "removed"/"forbidden" sets into traversals.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<size_t>(check_universe(universe))) {}

  static VertexSet of(int universe, std::initializer_list<Vertex> vs) {
    return from(universe, std::span<const Vertex>(vs.begin(), vs.size()));
  }
  static VertexSet from(int universe, std::span<const Vertex> vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.add(v);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  int count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe() && bits_[static_cast<size_t>(v)];
  }
  void add(Vertex v) {
    range_check(v);
    if (!bits_[static_cast<size_t>(v)]) {
      bits_[static_cast<size_t>(v)] = true;
      ++count_;
    }
  }
  void remove(Vertex v) {
    range_check(v);
    if (bits_[static_cast<size_t>(v)]) {
      bits_[static_cast<size_t>(v)] = false;
      --count_;
    }
  }

  // Members in ascending order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(count_));
    for (int v = 0; v < universe(); ++v)
      if (bits_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
  }

 private:
  static int check_universe(int n) {
    if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
    return n;
  }
  void range_check(Vertex v) const {
    if (v < 0 || v >= universe())
      throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                  " outside universe of size " + std::to_string(universe()));
  }

  std::vector<bool> bits_;
  int count_ = 0;
};

// A walk without repeated vertices; consecutive entries are adjacent in the
// graph the path came from.  A single vertex is a path of length 0.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains(Vertex v) const {
    for (Vertex u : vertices)
      if (u == v) return true;
    return false;
  }
};

// Immutable after construction; all member queries are pure and thread-safe.
class Graph {
 public:
  Graph() = default;

  // Builds a graph with exactly the given edges (duplicates collapse).
  // Self-loops and out-of-range endpoints are rejected.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  // Neighbours in ascending id order.
  const std::vector<Vertex>& neighbors(Vertex v) const {
    range_check(v);
    return adj_[static_cast<size_t>(v)];
  }

  bool adjacent(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

 private:
  void range_check(Vertex v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                  " outside 0.." + std::to_string(n_ - 1));
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// An induced subgraph together with the id translation back to its host.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // local id -> host id, ascending
  std::vector<int> from_host;   // host id -> local id, -1 where absent

  Vertex host_of(Vertex local) const { return to_host.at(static_cast<size_t>(local)); }
};

// Subgraph induced on `keep`; local ids follow ascending host id order.
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Connected components of g with `removed` vertices deleted.  Each component
// is sorted ascending and components are ordered by their smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& removed);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Shortest s-t path avoiding `forbidden`, or nullopt if none exists.
// Requires s and t outside `forbidden`.  Ties are broken deterministically:
// the BFS scans vertices and adjacency in ascending id order, so equal-length
// alternatives always resolve to the same path.  s == t gives a length-0 path.
std::optional<Path> bfs_shortest_path(const Graph& g, Vertex s, Vertex t, const VertexSet& forbidden);
std::optional<Path> bfs_shortest_path(const Graph& g, Vertex s, Vertex t);

// Distances from s with `forbidden` removed; -1 for unreachable or forbidden.
std::vector<int> bfs_distances(const Graph& g, Vertex s, const VertexSet& forbidden);

}  // namespace doily
