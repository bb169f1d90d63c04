#include <doctest.h>

#include <doily/gen.hpp>
#include <doily/probes.hpp>
#include <doily/recognition.hpp>

#include <vector>

using namespace doily;

namespace {

// C9 with tufts 9,10,11 at attach points 0,3,6:
//   path(0) = 3,4,5,6   path(1) = 6,7,8,0   path(2) = 0,1,2,3
Graph base_doily() {
  std::vector<Edge> edges;
  for (int i = 0; i < 9; ++i) edges.emplace_back(i, (i + 1) % 9);
  edges.emplace_back(9, 0);
  edges.emplace_back(10, 3);
  edges.emplace_back(11, 6);
  return Graph::from_edge_list(12, edges);
}

// The base doily plus one extra vertex (id 12) wired to `hooks`.
Graph with_extra(const std::vector<Vertex>& hooks) {
  auto edges = base_doily().edges();
  for (Vertex h : hooks) edges.emplace_back(12, h);
  return Graph::from_edge_list(13, edges);
}

// Certificate of the base doily.  Extending the host with one more vertex
// never disturbs the induced structure on 0..11, so this stays valid in
// every with_extra graph (which may well contain other doilies too).
DoilyCertificate base_certificate() {
  auto cert = find_doily_upto(base_doily(), 12);
  REQUIRE(cert.has_value());
  REQUIRE(cert->attach == std::array<Vertex, 3>{0, 3, 6});
  return *cert;
}

}  // namespace

TEST_CASE("attachment profile of a one-path minor vertex") {
  Graph g = with_extra({4, 5});
  auto k = base_certificate();
  auto prof = attachment_profile(g, k, 12);
  CHECK(prof.in_k == std::vector<Vertex>{4, 5});
  CHECK(prof.minor);
  CHECK_FALSE(prof.major);
  CHECK(prof.cls == VertexClass::minor);
  // Neighbours sit on path(0) only, which flanks indices 1 and 2.
  CHECK_FALSE(prof.x[0].has_value());
  CHECK_FALSE(prof.x[1].has_value());
  CHECK(prof.x[2] == 5);
  CHECK_FALSE(prof.y[0].has_value());
  CHECK(prof.y[1] == 4);
  CHECK_FALSE(prof.y[2].has_value());
}

TEST_CASE("attachment profile distinguishes stretch limits") {
  // Indices 1 and 3 on path(0): span 2, still minor.
  Graph ok = with_extra({4, 6});
  auto k = base_certificate();
  CHECK(attachment_profile(ok, k, 12).minor);

  // Both endpoints of path(0) (span 3) sit on all three paths: major.
  Graph wide = with_extra({3, 6});
  auto prof = attachment_profile(wide, k, 12);
  CHECK_FALSE(prof.minor);
  CHECK(prof.major);
  CHECK(prof.cls == VertexClass::major);
  CHECK(prof.x == std::array<std::optional<Vertex>, 3>{6, 3, 6});
  CHECK(prof.y == std::array<std::optional<Vertex>, 3>{3, 3, 6});
}

TEST_CASE("attachment profile of a fully spread major vertex") {
  Graph g = with_extra({1, 4, 7});
  auto k = base_certificate();
  auto prof = attachment_profile(g, k, 12);
  CHECK(prof.in_k == std::vector<Vertex>{1, 4, 7});
  CHECK(prof.cls == VertexClass::major);
  CHECK(prof.x == std::array<std::optional<Vertex>, 3>{7, 1, 4});
  CHECK(prof.y == std::array<std::optional<Vertex>, 3>{1, 4, 7});
}

TEST_CASE("attachment profile edge classes") {
  // No neighbours on K at all: minor by convention.
  Graph lonely = with_extra({});
  auto k = base_certificate();
  auto prof = attachment_profile(lonely, k, 12);
  CHECK(prof.in_k.empty());
  CHECK(prof.cls == VertexClass::minor);

  // Only a tuft neighbour: off every path, neither minor nor major.
  Graph tufty = with_extra({9});
  auto k2 = k;
  auto prof2 = attachment_profile(tufty, k2, 12);
  CHECK(prof2.in_k == std::vector<Vertex>{9});
  CHECK_FALSE(prof2.minor);
  CHECK_FALSE(prof2.major);
  CHECK(prof2.cls == VertexClass::neither);

  CHECK_THROWS_AS(attachment_profile(tufty, k2, 5), std::invalid_argument);   // on K
  CHECK_THROWS_AS(attachment_profile(tufty, k2, 42), std::invalid_argument);  // out of range
}

TEST_CASE("w-path walks from x around the attach point to y") {
  Graph g = with_extra({1, 4, 7});
  auto k = base_certificate();
  CHECK(w_path(g, k, 12, 0).vertices == std::vector<Vertex>{7, 8, 0, 1});
  CHECK(w_path(g, k, 12, 1).vertices == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(w_path(g, k, 12, 2).vertices == std::vector<Vertex>{4, 5, 6, 7});

  // All three attach points: x and y collapse onto the attach vertex.
  Graph tight = with_extra({0, 3, 6});
  auto k2 = k;
  auto w = w_path(tight, k2, 12, 0);
  CHECK(w.vertices == std::vector<Vertex>{0});
  CHECK(w.length() == 0);

  // A single-path minor vertex has no flanking neighbours for i = 0.
  Graph narrow = with_extra({4, 5});
  auto k3 = k;
  CHECK_THROWS_AS(w_path(narrow, k3, 12, 0), std::invalid_argument);
  CHECK_THROWS_AS(w_path(narrow, k3, 12, 7), std::invalid_argument);
}

TEST_CASE("pair relations: nesting, staggering and ties") {
  // u and v are both major; their flanks interleave differently per index.
  auto edges = base_doily().edges();
  for (Vertex h : {8, 1, 4}) edges.emplace_back(12, h);
  for (Vertex h : {7, 2, 5}) edges.emplace_back(13, h);
  Graph g = Graph::from_edge_list(14, edges);
  auto k = base_certificate();

  auto rel = pair_relation(g, k, 12, 13);
  CHECK(rel.u == 12);
  CHECK(rel.v == 13);
  CHECK(rel.at[0] == Relation::u_beats_v);
  CHECK(rel.at[1] == Relation::disagree);
  CHECK(rel.at[2] == Relation::v_beats_u);
  CHECK_FALSE(rel.tie_witness[0].has_value());

  // Swapping the arguments mirrors the verdicts.
  auto mirrored = pair_relation(g, k, 13, 12);
  CHECK(mirrored.at[0] == Relation::v_beats_u);
  CHECK(mirrored.at[1] == Relation::disagree);
  CHECK(mirrored.at[2] == Relation::u_beats_v);
}

TEST_CASE("pair relations report tie witnesses") {
  auto edges = base_doily().edges();
  for (Vertex h : {7, 1, 4}) edges.emplace_back(12, h);
  for (Vertex h : {7, 2, 5}) edges.emplace_back(13, h);
  Graph g = Graph::from_edge_list(14, edges);
  auto k = base_certificate();

  auto rel = pair_relation(g, k, 12, 13);
  CHECK(rel.at[0] == Relation::tie);
  CHECK(rel.tie_witness[0] == 7);
  CHECK(rel.at[1] == Relation::disagree);
  CHECK(rel.at[2] == Relation::tie);
  CHECK(rel.tie_witness[2] == 7);
}

TEST_CASE("pair relation argument contract") {
  Graph g = with_extra({1, 4, 7});
  auto k = base_certificate();
  CHECK_THROWS_AS(pair_relation(g, k, 12, 12), std::invalid_argument);
  CHECK_THROWS_AS(pair_relation(g, k, 12, 3), std::invalid_argument);  // on K

  // A minor partner is rejected.
  auto edges = base_doily().edges();
  for (Vertex h : {1, 4, 7}) edges.emplace_back(12, h);
  edges.emplace_back(13, 4);
  Graph h = Graph::from_edge_list(14, edges);
  auto k2 = k;
  CHECK_THROWS_AS(pair_relation(h, k2, 12, 13), std::invalid_argument);
}

TEST_CASE("pair relation is total over random major pairs") {
  for (uint32_t seed = 0; seed < 10; ++seed) {
    auto planted = planted_doily(9, {0, 3, 6}, 5, 0.45, 4200 + seed);
    const Graph& g = planted.graph;
    const DoilyCertificate& k = planted.planted;
    REQUIRE(k.validate(g).empty());

    std::vector<Vertex> majors;
    for (Vertex v = 12; v < g.vertex_count(); ++v)
      if (attachment_profile(g, k, v).cls == VertexClass::major) majors.push_back(v);

    for (size_t i = 0; i < majors.size(); ++i)
      for (size_t j = i + 1; j < majors.size(); ++j) {
        auto rel = pair_relation(g, k, majors[i], majors[j]);
        for (int idx = 0; idx < 3; ++idx) {
          bool is_tie = rel.at[static_cast<size_t>(idx)] == Relation::tie;
          CHECK(is_tie == rel.tie_witness[static_cast<size_t>(idx)].has_value());
        }
      }
  }
}

TEST_CASE("no-major check accepts a bare doily and rejects the untrackable") {
  Graph g = base_doily();
  auto k = base_certificate();
  Frame f = frame_for_certificate(k);
  CHECK(no_major_check(g, f));

  // A net is below the minimum-size threshold for tracking.
  Graph net = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
  auto net_cert = is_doily(net);
  REQUIRE(net_cert.has_value());
  CHECK_THROWS_WITH_AS(no_major_check(net, frame_for_certificate(*net_cert)),
                       doctest::Contains("not trackable"), std::invalid_argument);

  // A fully spread extra vertex creates both a small doily and a star
  // cutset; either way the pair is untrackable.
  Graph spread = with_extra({1, 4, 7});
  CHECK_THROWS_WITH_AS(no_major_check(spread, f), doctest::Contains("not trackable"),
                       std::invalid_argument);

  // Not a frame at all.
  Frame junk = f;
  junk.b[0] = 4;
  CHECK_THROWS_AS(no_major_check(g, junk), std::invalid_argument);
}

TEST_CASE("no-jumps holds on a bare doily and on an equal-length detour") {
  Graph g = base_doily();
  auto k = base_certificate();
  for (int i = 0; i < 3; ++i) CHECK(nojumps_check(g, k, i));
  CHECK_THROWS_AS(nojumps_check(g, k, 5), std::invalid_argument);

  // Cycle 1..9 with a detour vertex 0 adjacent to 2 and 4: the route
  // 2-0-4 matches the cycle segment 2-3-4 in length, and 0 has no other
  // cycle contact, so the bound still holds with the equality branch
  // walking through vertex 0 (BFS prefers the smaller id).
  std::vector<Edge> edges;
  for (int i = 1; i <= 9; ++i) edges.emplace_back(i, i % 9 + 1);
  edges.emplace_back(10, 1);
  edges.emplace_back(11, 4);
  edges.emplace_back(12, 7);
  edges.emplace_back(0, 2);
  edges.emplace_back(0, 4);
  Graph detour = Graph::from_edge_list(13, edges);
  auto cert = find_doily_upto(detour, 12);
  REQUIRE(cert.has_value());
  REQUIRE(cert->attach == std::array<Vertex, 3>{1, 4, 7});
  for (int i = 0; i < 3; ++i) CHECK(nojumps_check(detour, *cert, i));
}

TEST_CASE("no-jumps flags both shortcuts and touching detours") {
  // Vertex 12 bridging cycle vertices 1 and 7 shortcuts every arc.
  Graph jump = with_extra({1, 7});
  auto k = base_certificate();
  for (int i = 0; i < 3; ++i) CHECK_FALSE(nojumps_check(jump, k, i));

  // Cycle 1..9, tufts at 1, 4 and 7, and a two-vertex chain 2-0-13-5 that
  // matches the segment 2-3-4-5 in length.  The certificate is recovered
  // from the chainless graph; it stays valid once the chain is added.
  std::vector<Edge> edges;
  for (int i = 1; i <= 9; ++i) edges.emplace_back(i, i % 9 + 1);
  edges.emplace_back(10, 1);
  edges.emplace_back(11, 4);
  edges.emplace_back(12, 7);
  auto cert = find_doily_upto(Graph::from_edge_list(14, edges), 12);
  REQUIRE(cert.has_value());
  REQUIRE(cert->attach == std::array<Vertex, 3>{1, 4, 7});

  edges.emplace_back(0, 2);
  edges.emplace_back(0, 13);
  edges.emplace_back(13, 5);
  Graph clean = Graph::from_edge_list(14, edges);
  CHECK(nojumps_check(clean, *cert, 0));
  // Removing attach point 4 makes the chain undercut the long way round.
  CHECK_FALSE(nojumps_check(clean, *cert, 1));

  // One more edge from the chain to cycle vertex 9: distances are
  // unchanged, but the canonical equal-length route now has an interior
  // vertex adjacent to the cycle outside the replaced segment.
  edges.emplace_back(13, 9);
  Graph touching = Graph::from_edge_list(14, edges);
  CHECK_FALSE(nojumps_check(touching, *cert, 0));
}

TEST_CASE("no-jumps refuses graphs with major vertices") {
  Graph g = with_extra({1, 4, 7});
  auto k = base_certificate();
  CHECK_THROWS_AS(nojumps_check(g, k, 0), std::invalid_argument);
}

TEST_CASE("path replacement splices vertex sets") {
  Graph g = base_doily();
  auto k = base_certificate();

  // Identity replacement: nothing changes.
  auto same = replace_path_vertices(k, 0, k.path(0));
  CHECK(same == k.vertex_list());

  // Reversed endpoints are accepted.
  Path fwd = k.path(0);
  Path rev;
  rev.vertices.assign(fwd.vertices.rbegin(), fwd.vertices.rend());
  CHECK(replace_path_vertices(k, 0, rev) == k.vertex_list());

  // A detour through a new vertex swaps out the old interior.
  Path detour;
  detour.vertices = {3, 12, 6};
  auto swapped = replace_path_vertices(k, 0, detour);
  CHECK(swapped == std::vector<Vertex>{0, 1, 2, 3, 6, 7, 8, 9, 10, 11, 12});

  Path wrong;
  wrong.vertices = {3, 12, 7};
  CHECK_THROWS_AS(replace_path_vertices(k, 0, wrong), std::invalid_argument);
  CHECK_THROWS_AS(replace_path_vertices(k, 4, detour), std::invalid_argument);
}
