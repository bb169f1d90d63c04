#pragma once

// Structural probes around a fixed doily K: how an outside vertex attaches
// to K's three cycle paths, and how two such vertices relate.  These are
// the executable forms of the invariants the detector's completeness
// argument rests on; the test suites assert them over generated corpora.
//
// Conventions (0-based, mod 3): path(i) runs clockwise from attach[i+1] to
// attach[i+2].  For an outside vertex v,
//   x[i] = neighbour of v on path(i+1) closest to attach[i]  (path(i+1)
//          ends at attach[i]),
//   y[i] = neighbour of v on path(i-1) closest to attach[i]  (path(i-1)
//          starts there),
// each defined only when v has a neighbour on that path.

#include <array>
#include <optional>
#include <vector>

#include "doily/certificate.hpp"
#include "doily/frame.hpp"
#include "doily/graph.hpp"

namespace doily {

enum class VertexClass { minor, major, neither };

struct AttachmentProfile {
  Vertex v = -1;
  std::vector<Vertex> in_k;  // N(v) ∩ V(K), ascending
  std::array<std::optional<Vertex>, 3> x{};
  std::array<std::optional<Vertex>, 3> y{};
  // minor: all K-neighbours fit in a stretch of at most three consecutive
  // vertices of a single path (none at all also counts).  major: at least
  // one neighbour on every path.
  bool minor = false;
  bool major = false;
  VertexClass cls = VertexClass::neither;  // minor wins if both hold
};

// Requires v outside V(K).
AttachmentProfile attachment_profile(const Graph& g, const DoilyCertificate& k, Vertex v);

// The walk x[i] -- path(i+1) -- attach[i] -- path(i-1) -- y[i].
// Requires v to have neighbours on both path(i+1) and path(i-1).
Path w_path(const Graph& g, const DoilyCertificate& k, Vertex v, int i);

enum class Relation { disagree, tie, u_beats_v, v_beats_u };

// How two major vertices compete on path index i, read along the traversal
// attach[i-1] -- path(i+1) -- attach[i] -- path(i-1) -- attach[i+1]:
//   tie       x or y coincide (witness recorded),
//   u_beats_v u's ends lie strictly inside v's (x_v, x_u, y_u, y_v),
//   v_beats_u the mirror image,
//   disagree  the ends are staggered.
struct PairRelation {
  Vertex u = -1, v = -1;
  std::array<Relation, 3> at{};
  std::array<std::optional<Vertex>, 3> tie_witness{};
};

// Requires u != v, both outside V(K) and both major.
PairRelation pair_relation(const Graph& g, const DoilyCertificate& k, Vertex u, Vertex v);

// Checks that every vertex outside every minimum doily framed by f is
// minor.  Verifies first that (g, f) is trackable -- f is a frame in g, no
// doily of g has fewer than 9 vertices, some minimum doily is framed by f
// unless g has none, and no vertex is a star-cutset centre for f's a-triple
// -- and throws std::invalid_argument if not.  Exhaustive via the oracle,
// hence guarded by size.
bool no_major_check(const Graph& g, const Frame& f, int guard = 22);

// For every pair s, t on K's cycle other than attach[i]: the distance from
// s to t in g minus attach[i] is at least the length of the cycle path
// between them avoiding attach[i]; and when equal, the canonical BFS path
// has no interior vertex in, or adjacent to, the rest of the cycle.
// Requires no major vertex w.r.t. K (throws otherwise); meaningful when K
// is a minimum doily.
bool nojumps_check(const Graph& g, const DoilyCertificate& k, int i);

// Vertex set obtained by swapping path(i) for q (same endpoints required):
// the raw material for the path-replacement invariant.
std::vector<Vertex> replace_path_vertices(const DoilyCertificate& k, int i, const Path& q);

}  // namespace doily
