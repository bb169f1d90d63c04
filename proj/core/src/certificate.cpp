#include "doily/certificate.hpp"

#include <algorithm>

namespace doily {

std::vector<Vertex> DoilyCertificate::vertex_list() const {
  std::vector<Vertex> out(cycle.begin(), cycle.end());
  out.insert(out.end(), tufts.begin(), tufts.end());
  std::sort(out.begin(), out.end());
  return out;
}

int DoilyCertificate::cycle_pos(Vertex v) const {
  for (size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i] == v) return static_cast<int>(i);
  return -1;
}

Vertex DoilyCertificate::succ(Vertex v) const {
  int p = cycle_pos(v);
  if (p < 0) throw std::invalid_argument("succ: vertex not on cycle");
  return cycle[(static_cast<size_t>(p) + 1) % cycle.size()];
}

Vertex DoilyCertificate::pred(Vertex v) const {
  int p = cycle_pos(v);
  if (p < 0) throw std::invalid_argument("pred: vertex not on cycle");
  return cycle[(static_cast<size_t>(p) + cycle.size() - 1) % cycle.size()];
}

Path DoilyCertificate::path(int i) const {
  // Clockwise from attach[i+1] round to attach[i+2]; never passes attach[i].
  int from = cycle_pos(attach[static_cast<size_t>(next3(i))]);
  int to = cycle_pos(attach[static_cast<size_t>(prev3(i))]);
  if (from < 0 || to < 0) throw std::invalid_argument("path: attach point not on cycle");
  Path p;
  int len = static_cast<int>(cycle.size());
  for (int k = from;; k = (k + 1) % len) {
    p.vertices.push_back(cycle[static_cast<size_t>(k)]);
    if (k == to) break;
  }
  return p;
}

DoilyCertificate DoilyCertificate::relabeled(std::span<const Vertex> to_host) const {
  auto map = [&](Vertex v) { return to_host[static_cast<size_t>(v)]; };
  std::vector<Vertex> c(cycle.size());
  std::transform(cycle.begin(), cycle.end(), c.begin(), map);
  std::array<Vertex, 3> t{map(tufts[0]), map(tufts[1]), map(tufts[2])};

  // Renaming can reorder the tufts and change which rotation is smallest,
  // so rebuild the canonical form from scratch.
  DoilyCertificate out;
  out.cycle = std::move(c);
  out.tufts = t;
  std::sort(out.tufts.begin(), out.tufts.end());
  // Recover attachment: tufts[i] was attached to attach[i]; carry the pairing
  // through the rename, then reorder to the sorted tuft order.
  for (int i = 0; i < 3; ++i) {
    Vertex renamed_tuft = map(tufts[static_cast<size_t>(i)]);
    Vertex renamed_attach = map(attach[static_cast<size_t>(i)]);
    for (int j = 0; j < 3; ++j)
      if (out.tufts[static_cast<size_t>(j)] == renamed_tuft)
        out.attach[static_cast<size_t>(j)] = renamed_attach;
  }
  // Re-orient and rotate to canonical form.
  auto pos = [&](Vertex v) { return out.cycle_pos(v); };
  int p0 = pos(out.attach[0]), p1 = pos(out.attach[1]), p2 = pos(out.attach[2]);
  int len = static_cast<int>(out.cycle.size());
  auto fwd = [&](int from, int to) { return (to - from + len) % len; };
  if (!(fwd(p0, p1) < fwd(p0, p2))) std::reverse(out.cycle.begin(), out.cycle.end());
  std::vector<Vertex> best = out.cycle;
  std::vector<Vertex> rot = out.cycle;
  for (int k = 1; k < len; ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  out.cycle = std::move(best);
  return out;
}

std::string DoilyCertificate::validate(const Graph& g) const {
  int len = static_cast<int>(cycle.size());
  if (len < 3) return "cycle shorter than 3";
  auto in_range = [&](Vertex v) { return v >= 0 && v < g.vertex_count(); };
  std::vector<char> on_cycle(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : cycle) {
    if (!in_range(v)) return "cycle vertex outside graph";
    if (on_cycle[static_cast<size_t>(v)]) return "repeated cycle vertex";
    on_cycle[static_cast<size_t>(v)] = 1;
  }
  // Induced cycle: consecutive vertices adjacent, nothing else adjacent.
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      bool adj = g.adjacent(cycle[static_cast<size_t>(i)], cycle[static_cast<size_t>(j)]);
      if (consecutive && !adj) return "missing cycle edge";
      if (!consecutive && adj) return "chord inside cycle";
    }
  if (!(tufts[0] < tufts[1] && tufts[1] < tufts[2])) return "tufts not in ascending order";
  for (int i = 0; i < 3; ++i) {
    Vertex b = tufts[static_cast<size_t>(i)];
    if (!in_range(b)) return "tuft outside graph";
    if (on_cycle[static_cast<size_t>(b)]) return "tuft lies on cycle";
    int hits = 0;
    for (Vertex w : cycle)
      if (g.adjacent(b, w)) ++hits;
    if (hits != 1) return "tuft does not have exactly one cycle neighbour";
    if (!g.adjacent(b, attach[static_cast<size_t>(i)])) return "attach point mismatch";
    for (int j = i + 1; j < 3; ++j)
      if (g.adjacent(b, tufts[static_cast<size_t>(j)])) return "adjacent tufts";
  }
  if (attach[0] == attach[1] || attach[1] == attach[2] || attach[0] == attach[2])
    return "attach points not distinct";
  // Orientation: attach[0], attach[1], attach[2] must be clockwise.
  int p0 = cycle_pos(attach[0]), p1 = cycle_pos(attach[1]), p2 = cycle_pos(attach[2]);
  auto fwd = [&](int from, int to) { return (to - from + len) % len; };
  if (!(fwd(p0, p1) < fwd(p0, p2))) return "attach points not in clockwise order";
  return "";
}

DoilyCertificate make_certificate(const Graph& g, std::vector<Vertex> cycle,
                                  std::array<Vertex, 3> tufts) {
  DoilyCertificate cert;
  cert.cycle = std::move(cycle);
  std::sort(tufts.begin(), tufts.end());
  cert.tufts = tufts;
  for (int i = 0; i < 3; ++i) {
    Vertex b = tufts[static_cast<size_t>(i)];
    Vertex a = -1;
    for (Vertex w : cert.cycle)
      if (g.adjacent(b, w)) {
        if (a != -1) throw std::invalid_argument("make_certificate: tuft has two cycle neighbours");
        a = w;
      }
    if (a == -1) throw std::invalid_argument("make_certificate: tuft has no cycle neighbour");
    cert.attach[static_cast<size_t>(i)] = a;
  }
  // Delegate canonicalization to relabeled() with the identity renaming.
  std::vector<Vertex> identity(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) identity[static_cast<size_t>(v)] = v;
  DoilyCertificate canon = cert.relabeled(identity);
  std::string err = canon.validate(g);
  if (!err.empty()) throw std::invalid_argument("make_certificate: " + err);
  return canon;
}

}  // namespace doily
