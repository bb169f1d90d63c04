#include <doctest.h>

#include <doily/gen.hpp>
#include <doily/io.hpp>
#include <doily/recognition.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

using namespace doily;

namespace {

Graph load_golden(const char* name) {
  std::ifstream in(std::string(DOILY_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  return read_edge_list(in);
}

// Brute-force isomorphism: try every vertex permutation, with a degree
// multiset prefilter. Only used on small graphs.
bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  std::vector<Vertex> perm(static_cast<size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (Vertex u = 0; match && u < a.vertex_count(); ++u)
      for (Vertex v = static_cast<Vertex>(u + 1); v < a.vertex_count(); ++v)
        if (a.adjacent(u, v) !=
            b.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
          match = false;
          break;
        }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("gnp matches its frozen golden sample") {
  Graph golden = load_golden("gnp_n10_p3_s7.edges");
  Graph fresh = gnp(10, 0.3, 7);
  CHECK(fresh.vertex_count() == golden.vertex_count());
  CHECK(fresh.edges() == golden.edges());
  // Same seed, same graph; different seed, different graph.
  CHECK(gnp(10, 0.3, 7).edges() == fresh.edges());
  CHECK(gnp(10, 0.3, 8).edges() != fresh.edges());
}

TEST_CASE("gnp endpoints and argument checks") {
  CHECK(gnp(0, 0.5, 1).vertex_count() == 0);
  CHECK(gnp(7, 0.0, 1).edge_count() == 0);
  CHECK(gnp(7, 1.0, 1).edge_count() == 21);
  CHECK_THROWS_AS(gnp(-1, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gnp(5, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gnp(5, 1.1, 1), std::invalid_argument);
}

TEST_CASE("planting with no extras reproduces the bare doily") {
  auto planted = planted_doily(9, {0, 3, 6}, 0, 0.9, 123);
  std::vector<Edge> expect;
  for (int i = 0; i < 9; ++i) expect.emplace_back(i, (i + 1) % 9);
  expect.emplace_back(0, 9);
  expect.emplace_back(3, 10);
  expect.emplace_back(6, 11);
  Graph bare = Graph::from_edge_list(12, expect);
  CHECK(planted.graph.edges() == bare.edges());
  CHECK(planted.planted.validate(planted.graph).empty());
  CHECK(planted.planted.attach == std::array<Vertex, 3>{0, 3, 6});
  CHECK(is_doily(planted.graph).has_value());

  // The smallest plant is the net itself.
  auto net = planted_doily(3, {0, 1, 2}, 0, 0.0, 1);
  CHECK(net.graph.vertex_count() == 6);
  CHECK(net.graph.edge_count() == 6);
  CHECK(is_doily(net.graph).has_value());
}

TEST_CASE("the planted copy stays induced under background noise") {
  for (uint32_t seed = 0; seed < 12; ++seed) {
    auto planted = planted_doily(7, {0, 2, 4}, 6, 0.5, 900 + seed);
    const Graph& g = planted.graph;
    CHECK(g.vertex_count() == 7 + 3 + 6);
    CHECK(planted.planted.validate(g).empty());
    auto sub = induced_subgraph(g, planted.planted.vertex_list());
    CHECK(is_doily(sub.graph).has_value());
    // Determinism: replaying the seed reproduces the graph.
    CHECK(planted_doily(7, {0, 2, 4}, 6, 0.5, 900 + seed).graph.edges() == g.edges());
  }
}

TEST_CASE("planted doily argument checks") {
  CHECK_THROWS_AS(planted_doily(2, {0, 1, 1}, 0, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(planted_doily(5, {0, 2, 2}, 0, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(planted_doily(5, {0, 2, 5}, 0, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(planted_doily(5, {-1, 2, 4}, 0, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(planted_doily(5, {0, 2, 4}, -1, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(planted_doily(5, {0, 2, 4}, 1, 1.5, 1), std::invalid_argument);
}

TEST_CASE("subdivision class counts are frozen") {
  const int expect[] = {1, 3, 9, 23, 51, 103, 196};
  for (int max_n = 6; max_n <= 12; ++max_n) {
    auto profiles = net_subdivision_profiles_upto(max_n);
    CHECK(profiles.size() == static_cast<size_t>(expect[max_n - 6]));
    // Sorted by size then profile, without duplicates.
    for (size_t i = 0; i + 1 < profiles.size(); ++i) {
      bool ordered = profiles[i].vertex_count() < profiles[i + 1].vertex_count() ||
                     (profiles[i].vertex_count() == profiles[i + 1].vertex_count() &&
                      profiles[i] < profiles[i + 1]);
      CHECK(ordered);
    }
    for (const auto& p : profiles) {
      CHECK(p.vertex_count() <= max_n);
      CHECK(std::is_sorted(p.arms.begin(), p.arms.end()));
      for (auto [d, c] : p.arms) {
        CHECK(d >= 1);
        CHECK(c >= 1);
      }
    }
  }
  CHECK_THROWS_AS(net_subdivision_profiles_upto(5), std::invalid_argument);
}

TEST_CASE("subdivision classes match an independent enumeration") {
  // Enumerate sorted multisets of three (branch, arc) pairs directly.
  const int max_n = 12;
  std::set<std::array<std::pair<int, int>, 3>> expect;
  for (int d1 = 1; d1 <= max_n; ++d1)
    for (int c1 = 1; c1 <= max_n; ++c1)
      for (int d2 = 1; d2 <= max_n; ++d2)
        for (int c2 = 1; c2 <= max_n; ++c2)
          for (int d3 = 1; d3 <= max_n; ++d3)
            for (int c3 = 1; c3 <= max_n; ++c3) {
              if (d1 + c1 + d2 + c2 + d3 + c3 > max_n) continue;
              std::array<std::pair<int, int>, 3> arms = {
                  std::pair{d1, c1}, std::pair{d2, c2}, std::pair{d3, c3}};
              std::sort(arms.begin(), arms.end());
              expect.insert(arms);
            }
  auto profiles = net_subdivision_profiles_upto(max_n);
  REQUIRE(profiles.size() == expect.size());
  for (const auto& p : profiles) CHECK(expect.count(p.arms) == 1);
}

TEST_CASE("built subdivisions are pairwise non-isomorphic") {
  auto graphs = net_subdivisions_upto(9);
  REQUIRE(graphs.size() == 23);
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i + 1; j < graphs.size(); ++j) CHECK_FALSE(isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("built subdivisions have the right shape") {
  auto profiles = net_subdivision_profiles_upto(11);
  auto graphs = net_subdivisions_upto(11);
  REQUIRE(graphs.size() == profiles.size());
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    CHECK(g.vertex_count() == profiles[i].vertex_count());
    CHECK(connected_components(g).size() == 1);
    // Degree multiset of any subdivision: three leaves, three junctions.
    int ones = 0, twos = 0, threes = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      int d = g.degree(v);
      ones += d == 1;
      twos += d == 2;
      threes += d == 3;
    }
    CHECK(ones == 3);
    CHECK(threes == 3);
    CHECK(ones + twos + threes == g.vertex_count());
    // Every subdivision contains a doily; it is one exactly when no
    // branch was stretched.
    CHECK(find_doily_upto(g, g.vertex_count()).has_value());
    bool unit_branches = true;
    for (auto [d, c] : profiles[i].arms) unit_branches = unit_branches && d == 1;
    CHECK(is_doily(g).has_value() == unit_branches);
  }
  // The first class is the net itself.
  Graph net = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(isomorphic(graphs.front(), net));
}
