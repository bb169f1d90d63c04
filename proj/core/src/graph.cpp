#include "doily/graph.hpp"

#include <algorithm>
#include <queue>

namespace doily {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<size_t>(u)].push_back(v);
    g.adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.m_ += static_cast<int>(nbrs.size());
  }
  g.m_ /= 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  range_check(u);
  range_check(v);
  if (u == v) return false;
  const auto& a = adj_[static_cast<size_t>(u)];
  const auto& b = adj_[static_cast<size_t>(v)];
  const auto& shorter = a.size() <= b.size() ? a : b;
  Vertex target = a.size() <= b.size() ? v : u;
  return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.vertex_count())
    throw std::invalid_argument("induced_subgraph: vertex set universe mismatch");
  return induced_subgraph(g, std::span<const Vertex>(keep.members()));
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph s;
  s.from_host.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex outside host graph");
    if (s.from_host[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("induced_subgraph: repeated vertex in keep list");
    s.from_host[static_cast<size_t>(v)] = 0;  // mark; local ids assigned below
  }
  for (int v = 0, next = 0; v < g.vertex_count(); ++v) {
    if (s.from_host[static_cast<size_t>(v)] == 0) {
      s.from_host[static_cast<size_t>(v)] = next++;
      s.to_host.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex u : s.to_host)
    for (Vertex v : g.neighbors(u))
      if (u < v && s.from_host[static_cast<size_t>(v)] != -1)
        edges.emplace_back(s.from_host[static_cast<size_t>(u)], s.from_host[static_cast<size_t>(v)]);
  s.graph = Graph::from_edge_list(static_cast<int>(s.to_host.size()), edges);
  return s;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.vertex_count() && !(removed.empty() && removed.universe() == 0))
    throw std::invalid_argument("connected_components: vertex set universe mismatch");
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (seen[static_cast<size_t>(start)] || removed.contains(start)) continue;
    std::vector<Vertex> comp;
    stack.assign(1, start);
    seen[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<size_t>(w)] && !removed.contains(w)) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  return connected_components(g, VertexSet(g.vertex_count()));
}

std::optional<Path> bfs_shortest_path(const Graph& g, Vertex s, Vertex t, const VertexSet& forbidden) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    throw std::invalid_argument("bfs_shortest_path: endpoint outside graph");
  if (forbidden.contains(s) || forbidden.contains(t))
    throw std::invalid_argument("bfs_shortest_path: endpoint is forbidden");
  if (s == t) return Path{{s}};

  std::vector<Vertex> parent(static_cast<size_t>(g.vertex_count()), -2);
  parent[static_cast<size_t>(s)] = -1;
  std::queue<Vertex> q;
  q.push(s);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (parent[static_cast<size_t>(w)] != -2 || forbidden.contains(w)) continue;
      parent[static_cast<size_t>(w)] = u;
      if (w == t) {
        Path p;
        for (Vertex x = t; x != -1; x = parent[static_cast<size_t>(x)]) p.vertices.push_back(x);
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
      }
      q.push(w);
    }
  }
  return std::nullopt;
}

std::optional<Path> bfs_shortest_path(const Graph& g, Vertex s, Vertex t) {
  return bfs_shortest_path(g, s, t, VertexSet(g.vertex_count()));
}

std::vector<int> bfs_distances(const Graph& g, Vertex s, const VertexSet& forbidden) {
  if (s < 0 || s >= g.vertex_count())
    throw std::invalid_argument("bfs_distances: source outside graph");
  if (forbidden.contains(s))
    throw std::invalid_argument("bfs_distances: source is forbidden");
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  dist[static_cast<size_t>(s)] = 0;
  std::queue<Vertex> q;
  q.push(s);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<size_t>(w)] != -1 || forbidden.contains(w)) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
      q.push(w);
    }
  }
  return dist;
}

}  // namespace doily
