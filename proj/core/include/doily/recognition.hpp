#pragma once

// Ground-truth recognition: exact doily checks by definition and by
// exhaustive subset enumeration.  Everything here is independent of the
// frame/detector pipeline so it can serve as its oracle in tests.

#include <optional>
#include <stdexcept>

#include "doily/certificate.hpp"
#include "doily/frame.hpp"
#include "doily/graph.hpp"

namespace doily {

// Raised when an exhaustive operation is asked to exceed its size guard.
struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Decides whether g itself (the whole vertex set) is a doily and returns its
// canonical certificate.  Decision: g is connected, the degree sequence is
// three 1s, three 3s and (n-6) 2s, removing the three degree-1 vertices
// leaves a single cycle, and the degree-1 vertices attach at three distinct
// degree-3 cycle vertices.
std::optional<DoilyCertificate> is_doily(const Graph& g);

// Smallest doily on at most max_size vertices, if any: enumerates induced
// cycles by increasing length (up to max_size - 3) and looks for three
// pairwise non-adjacent vertices with exactly one cycle neighbour each,
// attached at distinct points.  Deterministic: first cycle in enumeration
// order wins, smallest tuft triple wins.
std::optional<DoilyCertificate> find_doily_upto(const Graph& g, int max_size);

struct OracleReport {
  bool exists = false;
  std::optional<int> min_size;
  // Present iff enumeration was requested: one canonical certificate per
  // minimum-size vertex set, sorted by vertex list.
  std::optional<std::vector<DoilyCertificate>> min_doilies;
};

// Exact answer by enumerating vertex subsets in increasing size order.
// Exponential by design; refuses graphs above the guard (default 22, hard
// cap 30) with SizeLimitError.
OracleReport oracle_report(const Graph& g, bool enumerate_all = false, int guard = 22);

// Whether frame f frames the doily K inside g: all twelve entries lie in
// V(K) and, for each i, a''[i+1] and a'[i-1] lie on the path of K between
// a[i-1] and a[i+1] that avoids a[i].  Callers are expected to pass a frame
// that is valid in g (see is_frame_in) and a valid certificate.
bool is_frame_for(const Graph& g, const DoilyCertificate& k, const Frame& f);

// The canonical frame of a certificate: b = tufts, a = attach points,
// a' = the attach point's clockwise predecessor, a'' = its successor.  It
// frames k in any graph where k's vertices have no outside neighbours
// beyond those of the doily itself (in particular, in a bare doily).
Frame frame_for_certificate(const DoilyCertificate& k);

}  // namespace doily
