#include "doily/probes.hpp"

#include <algorithm>

#include "doily/recognition.hpp"

namespace doily {

namespace {

// Per-certificate position tables shared by the probes.
struct KView {
  const DoilyCertificate* k;
  std::vector<char> on_k;                       // host vertex -> in V(K)
  std::array<std::vector<Vertex>, 3> path;      // path(i).vertices
  std::array<std::vector<int>, 3> pos;          // host vertex -> index on path(i), -1 if absent

  KView(const Graph& g, const DoilyCertificate& cert) : k(&cert) {
    size_t n = static_cast<size_t>(g.vertex_count());
    on_k.assign(n, 0);
    for (Vertex v : cert.vertex_list()) on_k[static_cast<size_t>(v)] = 1;
    for (int i = 0; i < 3; ++i) {
      path[static_cast<size_t>(i)] = cert.path(i).vertices;
      pos[static_cast<size_t>(i)].assign(n, -1);
      const auto& p = path[static_cast<size_t>(i)];
      for (size_t idx = 0; idx < p.size(); ++idx)
        pos[static_cast<size_t>(i)][static_cast<size_t>(p[idx])] = static_cast<int>(idx);
    }
  }

  // Position along the traversal attach[i-1] -- path(i+1) -- attach[i] --
  // path(i-1) -- attach[i+1]; -1 if the vertex is on neither leg.
  int trav_pos(int i, Vertex v) const {
    int first = pos[static_cast<size_t>(next3(i))][static_cast<size_t>(v)];
    if (first >= 0) return first;
    int second = pos[static_cast<size_t>(prev3(i))][static_cast<size_t>(v)];
    if (second > 0)  // index 0 is attach[i], already last of the first leg
      return static_cast<int>(path[static_cast<size_t>(next3(i))].size()) - 1 + second;
    return second == 0 ? static_cast<int>(path[static_cast<size_t>(next3(i))].size()) - 1 : -1;
  }
};

void check_outside(const Graph& g, const KView& view, Vertex v, const char* who) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument(std::string(who) + ": vertex outside graph");
  if (view.on_k[static_cast<size_t>(v)])
    throw std::invalid_argument(std::string(who) + ": vertex lies on the doily");
}

AttachmentProfile profile_impl(const Graph& g, const KView& view, Vertex v) {
  AttachmentProfile prof;
  prof.v = v;
  for (Vertex w : g.neighbors(v))
    if (view.on_k[static_cast<size_t>(w)]) prof.in_k.push_back(w);

  for (int i = 0; i < 3; ++i) {
    // x[i]: on path(i+1), closest to its last vertex attach[i].
    const auto& px = view.pos[static_cast<size_t>(next3(i))];
    int best = -1;
    for (Vertex w : prof.in_k)
      if (px[static_cast<size_t>(w)] > best) best = px[static_cast<size_t>(w)];
    if (best >= 0)
      prof.x[static_cast<size_t>(i)] = view.path[static_cast<size_t>(next3(i))][static_cast<size_t>(best)];
    // y[i]: on path(i-1), closest to its first vertex attach[i].
    const auto& py = view.pos[static_cast<size_t>(prev3(i))];
    int besty = -1;
    for (Vertex w : prof.in_k) {
      int p = py[static_cast<size_t>(w)];
      if (p >= 0 && (besty < 0 || p < besty)) besty = p;
    }
    if (besty >= 0)
      prof.y[static_cast<size_t>(i)] = view.path[static_cast<size_t>(prev3(i))][static_cast<size_t>(besty)];
  }

  if (prof.in_k.empty()) {
    prof.minor = true;
  } else {
    for (int i = 0; i < 3 && !prof.minor; ++i) {
      const auto& pp = view.pos[static_cast<size_t>(i)];
      int lo = -1, hi = -1;
      bool all = true;
      for (Vertex w : prof.in_k) {
        int p = pp[static_cast<size_t>(w)];
        if (p < 0) {
          all = false;
          break;
        }
        if (lo < 0 || p < lo) lo = p;
        if (p > hi) hi = p;
      }
      if (all && hi - lo <= 2) prof.minor = true;
    }
  }

  prof.major = true;
  for (int i = 0; i < 3; ++i) {
    bool any = false;
    for (Vertex w : prof.in_k)
      if (view.pos[static_cast<size_t>(i)][static_cast<size_t>(w)] >= 0) any = true;
    if (!any) prof.major = false;
  }

  prof.cls = prof.minor ? VertexClass::minor
                        : (prof.major ? VertexClass::major : VertexClass::neither);
  return prof;
}

}  // namespace

AttachmentProfile attachment_profile(const Graph& g, const DoilyCertificate& k, Vertex v) {
  KView view(g, k);
  check_outside(g, view, v, "attachment_profile");
  return profile_impl(g, view, v);
}

Path w_path(const Graph& g, const DoilyCertificate& k, Vertex v, int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("w_path: index must be 0, 1 or 2");
  KView view(g, k);
  check_outside(g, view, v, "w_path");
  AttachmentProfile prof = profile_impl(g, view, v);
  auto x = prof.x[static_cast<size_t>(i)];
  auto y = prof.y[static_cast<size_t>(i)];
  if (!x || !y)
    throw std::invalid_argument("w_path: vertex lacks neighbours on both flanking paths");

  const auto& first = view.path[static_cast<size_t>(next3(i))];
  const auto& second = view.path[static_cast<size_t>(prev3(i))];
  int px = view.pos[static_cast<size_t>(next3(i))][static_cast<size_t>(*x)];
  int py = view.pos[static_cast<size_t>(prev3(i))][static_cast<size_t>(*y)];
  Path out;
  for (size_t idx = static_cast<size_t>(px); idx < first.size(); ++idx)
    out.vertices.push_back(first[idx]);
  for (size_t idx = 1; idx <= static_cast<size_t>(py); ++idx)
    out.vertices.push_back(second[idx]);
  return out;
}

PairRelation pair_relation(const Graph& g, const DoilyCertificate& k, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("pair_relation: vertices must differ");
  KView view(g, k);
  check_outside(g, view, u, "pair_relation");
  check_outside(g, view, v, "pair_relation");
  AttachmentProfile pu = profile_impl(g, view, u);
  AttachmentProfile pv = profile_impl(g, view, v);
  if (!pu.major || !pv.major)
    throw std::invalid_argument("pair_relation: both vertices must be major");

  PairRelation rel;
  rel.u = u;
  rel.v = v;
  for (int i = 0; i < 3; ++i) {
    Vertex xu = *pu.x[static_cast<size_t>(i)], xv = *pv.x[static_cast<size_t>(i)];
    Vertex yu = *pu.y[static_cast<size_t>(i)], yv = *pv.y[static_cast<size_t>(i)];
    if (xu == xv) {
      rel.at[static_cast<size_t>(i)] = Relation::tie;
      rel.tie_witness[static_cast<size_t>(i)] = xu;
      continue;
    }
    if (yu == yv) {
      rel.at[static_cast<size_t>(i)] = Relation::tie;
      rel.tie_witness[static_cast<size_t>(i)] = yu;
      continue;
    }
    int pxu = view.trav_pos(i, xu), pxv = view.trav_pos(i, xv);
    int pyu = view.trav_pos(i, yu), pyv = view.trav_pos(i, yv);
    if (pxv < pxu && pyu < pyv)
      rel.at[static_cast<size_t>(i)] = Relation::u_beats_v;
    else if (pxu < pxv && pyv < pyu)
      rel.at[static_cast<size_t>(i)] = Relation::v_beats_u;
    else
      rel.at[static_cast<size_t>(i)] = Relation::disagree;
  }
  return rel;
}

bool no_major_check(const Graph& g, const Frame& f, int guard) {
  if (!is_frame_in(g, f))
    throw std::invalid_argument("no_major_check: not a frame in the graph");
  OracleReport rep = oracle_report(g, /*enumerate_all=*/true, guard);
  if (rep.exists && *rep.min_size <= 8)
    throw std::invalid_argument("no_major_check: not trackable, a doily has fewer than 9 vertices");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == f.a[0] || v == f.a[1] || v == f.a[2]) continue;
    for (int j = 0; j < 3; ++j)
      if (is_star_cutset_centre(g, v, f.a, j))
        throw std::invalid_argument("no_major_check: not trackable, star-cutset centre present");
  }
  std::vector<const DoilyCertificate*> framed;
  for (const DoilyCertificate& k : *rep.min_doilies)
    if (is_frame_for(g, k, f)) framed.push_back(&k);
  if (rep.exists && framed.empty())
    throw std::invalid_argument("no_major_check: not trackable, frame sits on no minimum doily");

  for (const DoilyCertificate* k : framed) {
    KView view(g, *k);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (view.on_k[static_cast<size_t>(v)]) continue;
      if (!profile_impl(g, view, v).minor) return false;
    }
  }
  return true;
}

bool nojumps_check(const Graph& g, const DoilyCertificate& k, int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("nojumps_check: index must be 0, 1 or 2");
  KView view(g, k);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!view.on_k[static_cast<size_t>(v)] && profile_impl(g, view, v).major)
      throw std::invalid_argument("nojumps_check: a major vertex exists");

  Vertex ai = k.attach[static_cast<size_t>(i)];
  // The cycle minus attach[i], in cycle order: a path r[0..L-2].
  std::vector<Vertex> r;
  Vertex cur = k.succ(ai);
  while (cur != ai) {
    r.push_back(cur);
    cur = k.succ(cur);
  }
  VertexSet forb = VertexSet::of(g.vertex_count(), {ai});
  std::vector<char> on_cycle(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : k.cycle) on_cycle[static_cast<size_t>(v)] = 1;

  for (size_t si = 0; si < r.size(); ++si) {
    std::vector<int> dist = bfs_distances(g, r[si], forb);
    for (size_t ti = si + 1; ti < r.size(); ++ti) {
      int along = static_cast<int>(ti - si);
      int d = dist[static_cast<size_t>(r[ti])];
      if (d < 0) continue;  // no path at all: nothing to bound
      if (d < along) return false;
      if (d > along) continue;
      // Equality: the canonical shortest path may not touch or neighbour
      // the cycle outside the segment it replaces.
      auto q = bfs_shortest_path(g, r[si], r[ti], forb);
      std::vector<char> outside = on_cycle;
      for (size_t idx = si; idx <= ti; ++idx) outside[static_cast<size_t>(r[idx])] = 0;
      for (size_t qi = 1; qi + 1 < q->vertices.size(); ++qi) {
        Vertex w = q->vertices[qi];
        if (outside[static_cast<size_t>(w)]) return false;
        for (Vertex nb : g.neighbors(w))
          if (outside[static_cast<size_t>(nb)]) return false;
      }
    }
  }
  return true;
}

std::vector<Vertex> replace_path_vertices(const DoilyCertificate& k, int i, const Path& q) {
  if (i < 0 || i > 2) throw std::invalid_argument("replace_path_vertices: index must be 0, 1 or 2");
  Path old = k.path(i);
  bool same_ends = (q.front() == old.front() && q.back() == old.back()) ||
                   (q.front() == old.back() && q.back() == old.front());
  if (!same_ends)
    throw std::invalid_argument("replace_path_vertices: replacement endpoints differ");
  std::vector<char> drop_interior;
  std::vector<Vertex> out;
  for (Vertex v : k.vertex_list()) {
    bool interior = false;
    for (size_t idx = 1; idx + 1 < old.vertices.size(); ++idx)
      if (old.vertices[idx] == v) interior = true;
    if (!interior) out.push_back(v);
  }
  for (Vertex v : q.vertices)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace doily
