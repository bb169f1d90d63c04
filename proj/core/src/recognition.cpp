#include "doily/recognition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace doily {

std::optional<DoilyCertificate> is_doily(const Graph& g) {
  int n = g.vertex_count();
  if (n < 6) return std::nullopt;

  std::vector<Vertex> ones, threes;
  for (Vertex v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 1)
      ones.push_back(v);
    else if (d == 3)
      threes.push_back(v);
    else if (d != 2)
      return std::nullopt;
  }
  if (ones.size() != 3 || threes.size() != 3) return std::nullopt;
  if (connected_components(g).size() != 1) return std::nullopt;

  // Removing the tufts must leave a single cycle: everything degree 2 and
  // still connected.
  VertexSet tufts = VertexSet::from(n, ones);
  for (Vertex v = 0; v < n; ++v) {
    if (tufts.contains(v)) continue;
    int d = 0;
    for (Vertex w : g.neighbors(v))
      if (!tufts.contains(w)) ++d;
    if (d != 2) return std::nullopt;
  }
  auto comps = connected_components(g, tufts);
  if (comps.size() != 1) return std::nullopt;

  // Attachments: distinct degree-3 vertices.
  std::array<Vertex, 3> attach{};
  for (int i = 0; i < 3; ++i) {
    Vertex a = g.neighbors(ones[static_cast<size_t>(i)]).front();
    if (g.degree(a) != 3) return std::nullopt;
    attach[static_cast<size_t>(i)] = a;
  }
  if (attach[0] == attach[1] || attach[1] == attach[2] || attach[0] == attach[2])
    return std::nullopt;

  // Walk the cycle; make_certificate canonicalizes rotation/direction.
  std::vector<Vertex> cycle;
  Vertex start = comps[0][0], prev = -1, cur = start;
  do {
    cycle.push_back(cur);
    Vertex nxt = -1;
    for (Vertex w : g.neighbors(cur))
      if (!tufts.contains(w) && w != prev) {
        nxt = w;
        break;
      }
    prev = cur;
    cur = nxt;
  } while (cur != start);

  return make_certificate(g, std::move(cycle), {ones[0], ones[1], ones[2]});
}

namespace {

// Three pairwise non-adjacent vertices outside the cycle, each with exactly
// one cycle neighbour, attached at three distinct points.  First triple in
// ascending order wins.
std::optional<std::array<Vertex, 3>> find_tufting(const Graph& g, const std::vector<Vertex>& cycle) {
  std::vector<char> on_cycle(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : cycle) on_cycle[static_cast<size_t>(v)] = 1;

  std::vector<std::pair<Vertex, Vertex>> cand;  // (vertex, attach point)
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (on_cycle[static_cast<size_t>(v)]) continue;
    Vertex hit = -1;
    int hits = 0;
    for (Vertex w : g.neighbors(v))
      if (on_cycle[static_cast<size_t>(w)]) {
        hit = w;
        if (++hits > 1) break;
      }
    if (hits == 1) cand.emplace_back(v, hit);
  }

  size_t t = cand.size();
  for (size_t i = 0; i < t; ++i)
    for (size_t j = i + 1; j < t; ++j) {
      if (cand[i].second == cand[j].second) continue;
      if (g.adjacent(cand[i].first, cand[j].first)) continue;
      for (size_t k = j + 1; k < t; ++k) {
        if (cand[k].second == cand[i].second || cand[k].second == cand[j].second) continue;
        if (g.adjacent(cand[k].first, cand[i].first)) continue;
        if (g.adjacent(cand[k].first, cand[j].first)) continue;
        return std::array<Vertex, 3>{cand[i].first, cand[j].first, cand[k].first};
      }
    }
  return std::nullopt;
}

// Enumerates induced cycles of length len, anchored at their smallest vertex
// and deduplicated by direction (second vertex < last vertex), invoking fn
// until it returns true.  Returns true if fn did.
bool for_each_induced_cycle(const Graph& g, int len,
                            const std::function<bool(const std::vector<Vertex>&)>& fn) {
  int n = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<char> used(static_cast<size_t>(n), 0);

  // Extends path (anchored at path[0], all later vertices larger) keeping it
  // induced; the closing vertex must additionally see path[0].
  std::function<bool()> extend = [&]() -> bool {
    int depth = static_cast<int>(path.size());
    Vertex v0 = path[0];
    Vertex tail = path.back();
    bool closing = depth == len - 1;
    for (Vertex w : g.neighbors(tail)) {
      if (w <= v0 || used[static_cast<size_t>(w)]) continue;
      if (closing && w < path[1]) continue;  // direction dedup
      // w is adjacent to the tail by construction.  A closing vertex must
      // also see the anchor; every other path vertex must be a non-neighbour
      // (the anchor counts as "other" except when it is the tail itself).
      bool ok = !closing || g.adjacent(w, v0);
      for (int k = closing ? 1 : 0; ok && k + 2 <= depth; ++k)
        if (g.adjacent(w, path[static_cast<size_t>(k)])) ok = false;
      if (!ok) continue;
      if (closing) {
        path.push_back(w);
        bool stop = fn(path);
        path.pop_back();
        if (stop) return true;
      } else {
        path.push_back(w);
        used[static_cast<size_t>(w)] = 1;
        bool stop = extend();
        used[static_cast<size_t>(w)] = 0;
        path.pop_back();
        if (stop) return true;
      }
    }
    return false;
  };

  for (Vertex v0 = 0; v0 < n; ++v0) {
    path.assign(1, v0);
    used.assign(static_cast<size_t>(n), 0);
    used[static_cast<size_t>(v0)] = 1;
    if (extend()) return true;
  }
  return false;
}

}  // namespace

std::optional<DoilyCertificate> find_doily_upto(const Graph& g, int max_size) {
  if (max_size < 6) return std::nullopt;
  int max_cycle = std::min(max_size - 3, g.vertex_count());
  std::optional<DoilyCertificate> found;
  for (int len = 3; len <= max_cycle && !found; ++len) {
    for_each_induced_cycle(g, len, [&](const std::vector<Vertex>& cycle) {
      auto tufting = find_tufting(g, cycle);
      if (!tufting) return false;
      found = make_certificate(g, cycle, *tufting);
      return true;
    });
  }
  return found;
}

namespace {

// Bitmask machinery for the exhaustive oracle (vertex count <= 30).
struct MaskOracle {
  int n;
  std::vector<std::uint32_t> adj;

  explicit MaskOracle(const Graph& g) : n(g.vertex_count()), adj(static_cast<size_t>(n), 0) {
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(v)) adj[static_cast<size_t>(v)] |= 1u << w;
  }

  bool connected_within(std::uint32_t set) const {
    if (set == 0) return true;
    std::uint32_t seen = set & (~set + 1);  // lowest bit
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f;) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[static_cast<size_t>(v)] & set;
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  }

  // Exact doily test for the subgraph induced on `set` (same decision
  // procedure as is_doily, evaluated on masks).
  bool subset_is_doily(std::uint32_t set) const {
    std::uint32_t ones = 0, threes = 0;
    int n_ones = 0, n_threes = 0;
    for (std::uint32_t s = set; s;) {
      int v = std::countr_zero(s);
      s &= s - 1;
      int d = std::popcount(adj[static_cast<size_t>(v)] & set);
      if (d == 1) {
        ones |= 1u << v;
        if (++n_ones > 3) return false;
      } else if (d == 3) {
        threes |= 1u << v;
        if (++n_threes > 3) return false;
      } else if (d != 2) {
        return false;
      }
    }
    if (n_ones != 3 || n_threes != 3) return false;
    std::uint32_t cyc = set ^ ones;
    for (std::uint32_t s = cyc; s;) {
      int v = std::countr_zero(s);
      s &= s - 1;
      if (std::popcount(adj[static_cast<size_t>(v)] & cyc) != 2) return false;
    }
    if (!connected_within(cyc)) return false;
    std::uint32_t attach = 0;
    for (std::uint32_t s = ones; s;) {
      int v = std::countr_zero(s);
      s &= s - 1;
      std::uint32_t w = adj[static_cast<size_t>(v)] & set;  // single bit (degree 1)
      if (!(w & threes) || (w & attach)) return false;
      attach |= w;
    }
    return true;
  }
};

std::vector<Vertex> mask_members(std::uint32_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

OracleReport oracle_report(const Graph& g, bool enumerate_all, int guard) {
  int n = g.vertex_count();
  if (guard > 30) guard = 30;
  if (n > guard)
    throw SizeLimitError("oracle_report: graph has " + std::to_string(n) +
                         " vertices, above the exhaustive-search guard of " + std::to_string(guard));

  OracleReport report;
  if (enumerate_all) report.min_doilies.emplace();
  if (n < 6) return report;

  MaskOracle mo(g);
  for (int size = 6; size <= n; ++size) {
    std::vector<std::uint32_t> hits;
    // Gosper's hack: all n-bit masks with `size` bits, ascending.  The guard
    // caps n at 30, so 1u << n cannot overflow.
    std::uint32_t limit = 1u << n;
    for (std::uint32_t mask = (1u << size) - 1; mask < limit;) {
      if (mo.subset_is_doily(mask)) {
        hits.push_back(mask);
        if (!enumerate_all) break;
      }
      std::uint32_t c = mask & (~mask + 1);
      std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    if (hits.empty()) continue;
    report.exists = true;
    report.min_size = size;
    if (enumerate_all) {
      std::vector<DoilyCertificate> certs;
      certs.reserve(hits.size());
      for (std::uint32_t h : hits) {
        Subgraph sub = induced_subgraph(g, mask_members(h));
        auto cert = is_doily(sub.graph);
        // subset_is_doily accepted, so this cannot fail
        certs.push_back(cert->relabeled(sub.to_host));
      }
      std::sort(certs.begin(), certs.end(), [](const DoilyCertificate& x, const DoilyCertificate& y) {
        return x.vertex_list() < y.vertex_list();
      });
      report.min_doilies = std::move(certs);
    }
    break;
  }
  return report;
}

bool is_frame_for(const Graph& g, const DoilyCertificate& k, const Frame& f) {
  (void)g;
  std::vector<Vertex> kv = k.vertex_list();
  auto in_k = [&](Vertex v) { return std::binary_search(kv.begin(), kv.end(), v); };
  for (Vertex v : f.entries())
    if (!in_k(v)) return false;

  for (int i = 0; i < 3; ++i) {
    Vertex lo = f.a[static_cast<size_t>(prev3(i))];
    Vertex hi = f.a[static_cast<size_t>(next3(i))];
    Vertex avoid = f.a[static_cast<size_t>(i)];
    int p_lo = k.cycle_pos(lo), p_hi = k.cycle_pos(hi), p_av = k.cycle_pos(avoid);
    if (p_lo < 0 || p_hi < 0 || p_av < 0) return false;
    if (p_lo == p_hi || p_lo == p_av || p_hi == p_av) return false;

    // The cycle path from lo to hi that does not pass `avoid`.
    int len = static_cast<int>(k.cycle.size());
    std::vector<char> arc(static_cast<size_t>(len), 0);
    bool hits_avoid = false;
    for (int p = p_lo;; p = (p + 1) % len) {
      arc[static_cast<size_t>(p)] = 1;
      if (p == p_av) hits_avoid = true;
      if (p == p_hi) break;
    }
    if (hits_avoid) {
      arc.assign(static_cast<size_t>(len), 0);
      for (int p = p_lo;; p = (p - 1 + len) % len) {
        arc[static_cast<size_t>(p)] = 1;
        if (p == p_hi) break;
      }
    }
    int p1 = k.cycle_pos(f.a_dprime[static_cast<size_t>(next3(i))]);
    int p2 = k.cycle_pos(f.a_prime[static_cast<size_t>(prev3(i))]);
    if (p1 < 0 || !arc[static_cast<size_t>(p1)]) return false;
    if (p2 < 0 || !arc[static_cast<size_t>(p2)]) return false;
  }
  return true;
}

Frame frame_for_certificate(const DoilyCertificate& k) {
  Frame f;
  for (int i = 0; i < 3; ++i) {
    auto idx = static_cast<size_t>(i);
    f.b[idx] = k.tufts[idx];
    f.a[idx] = k.attach[idx];
    f.a_prime[idx] = k.pred(k.attach[idx]);
    f.a_dprime[idx] = k.succ(k.attach[idx]);
  }
  return f;
}

}  // namespace doily
