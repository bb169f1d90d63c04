#pragma once

// Frames and the candidate-cleaning pipeline.
//
// A frame is a twelve-tuple (b, a, a', a'') of three tufts b[i], three
// attachment vertices a[i], and the two remaining neighbours a'[i], a''[i]
// of each a[i].  In a cleaned graph every b[i] has degree one (neighbour
// a[i]) and every a[i] has degree three (neighbours b[i], a'[i], a''[i]).
//
// candidate_stream turns an arbitrary graph into a sequence of cleaned
// (subgraph, frame) pairs: enumerate twelve-tuples, keep the ones passing
// the local frame checks, force the frame's degree conditions by deleting
// the offending neighbours, then delete star-cutset centres until none is
// left.  Tuples that lose one of their own vertices on the way are dropped.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "doily/graph.hpp"

namespace doily {

struct Frame {
  std::array<Vertex, 3> b{};
  std::array<Vertex, 3> a{};
  std::array<Vertex, 3> a_prime{};
  std::array<Vertex, 3> a_dprime{};

  // Tuple order (b1,b2,b3, a1,a2,a3, a'1,a'2,a'3, a''1,a''2,a''3).
  std::array<Vertex, 12> entries() const {
    return {b[0],       b[1],       b[2],       a[0],        a[1],        a[2],
            a_prime[0], a_prime[1], a_prime[2], a_dprime[0], a_dprime[1], a_dprime[2]};
  }

  // Distinct vertices, ascending.
  std::vector<Vertex> vertex_set() const;

  bool operator==(const Frame&) const = default;
};

// Degree-based frame validity in g: entries in range, the six b/a vertices
// distinct, deg(b[i]) == 1 with neighbour a[i], deg(a[i]) == 3 with
// neighbourhood exactly {b[i], a'[i], a''[i]}.
bool is_frame_in(const Graph& g, const Frame& f);

// The local twelve-tuple filter applied before any deletion:
//  (1) the b's are distinct and differ from all nine a-entries,
//  (2) b[i] is adjacent to a[i] and to no other tuple vertex,
//  (3) the a's are distinct,
//  (4) a'[i], a''[i] are distinct neighbours of a[i], and a[i] has no tuple
//      neighbours besides b[i], a'[i], a''[i],
//  (5) for each i, looking at the pair (a[i-1], a[i+1]): if adjacent then
//      a'[i-1] == a[i+1] and a''[i+1] == a[i-1]; if not, a'[i-1] and
//      a''[i+1] differ from a[i-1], a''[i-1], a'[i], a[i], a''[i],
//      a'[i+1] and a[i+1].
bool frame_local_checks(const Graph& g, const Frame& f);

// True iff removing v together with all its neighbours except a[0..2]
// disconnects a[j] from both other a's.  (Removing the maximal allowed
// neighbour set is enough: any smaller star cut around v separates only if
// this one does.)  Requires the a's distinct and v not among them.
bool is_star_cutset_centre(const Graph& g, Vertex v, const std::array<Vertex, 3>& a, int j);

// Repeatedly deletes vertices that are star-cutset centres for some a[j]
// (scanning ids ascending, restarting after each deletion) until none is
// left.  The a's themselves are never candidates, hence never deleted.
Subgraph star_cutset_elimination(const Graph& g, const std::array<Vertex, 3>& a);

// A cleaned subgraph plus a frame that is valid inside it.  `part.to_host`
// translates back to the graph the stream was built from.
struct CandidatePair {
  Subgraph part;
  Frame frame;  // in part.graph's local ids
};

struct StreamStats {
  std::uint64_t triples = 0;           // ordered a-triples visited
  std::uint64_t tuples_passed = 0;     // twelve-tuples through the local checks
  std::uint64_t tuples_dead = 0;       // dropped: a tuple vertex was deleted
  std::uint64_t pairs_emitted = 0;
  std::uint64_t vertices_deleted = 0;  // across all emitted/dead cleanings
};

// Deterministic generator of all cleaned candidate pairs of g.
//
// Tuples are produced in lexicographic order of (a[0], a[1], a[2]) with the
// remaining nine entries enumerated over the relevant neighbour lists in
// ascending order; the accepted set is exactly the set of twelve-tuples that
// pass frame_local_checks (enumerating neighbours only skips tuples those
// checks reject anyway).  Options split the work by a[0] residue class so
// callers may run several streams in parallel.
class CandidateStream {
 public:
  struct Options {
    int a0_offset = 0;
    int a0_stride = 1;
  };

  explicit CandidateStream(const Graph& g) : CandidateStream(g, Options()) {}
  CandidateStream(const Graph& g, Options opt);

  std::optional<CandidatePair> next();
  const StreamStats& stats() const { return stats_; }

 private:
  bool advance_triple_();
  void fill_buffer_();
  std::optional<CandidatePair> build_pair_(const Frame& f);

  const Graph* g_;
  Options opt_;
  StreamStats stats_;
  std::array<Vertex, 3> triple_{-1, -1, -1};
  bool exhausted_ = false;
  std::vector<Frame> buffer_;
  size_t buffer_pos_ = 0;
};

}  // namespace doily
