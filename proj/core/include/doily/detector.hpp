#pragma once

// The polynomial detection driver.
//
// Step 1 looks for a small doily (at most 8 vertices) outright.  Step 2
// walks the cleaned candidate stream; for each pair it joins the frame's
// loose ends by shortest paths and checks whether the pieces close into a
// doily.  Soundness is unconditional (every answer is re-verified by
// definition); completeness comes from the cleaning guarantees.

#include <cstdint>
#include <optional>
#include <string>

#include "doily/frame.hpp"
#include "doily/recognition.hpp"

namespace doily {

struct DetectStats {
  StreamStats stream;
  std::uint64_t candidates_tried = 0;
  std::uint64_t bfs_calls = 0;
};

struct DetectorOutcome {
  enum class Step { none, small_search, candidate };

  std::optional<DoilyCertificate> certificate;  // ids of the input graph
  Step step = Step::none;
  std::optional<std::uint64_t> candidate_index;  // 0-based position in the stream
  DetectStats stats;

  bool found() const { return certificate.has_value(); }
};

// Connects a'[i-1] to a''[i+1] inside the pair's graph for each i by a
// shortest path avoiding all six frame ends (a path whose endpoint is
// itself a forbidden vertex is taken to be empty: the corresponding cycle
// piece is the edge a[i-1]a[i+1] pinned by the local checks), then tests
// whether the union of frame ends and paths induces a doily.  The returned
// certificate uses the ids of the graph the pair was cut from.
std::optional<DoilyCertificate> detect_from_candidate(const CandidatePair& pair,
                                                      DetectStats* stats = nullptr);

struct RunOptions {
  int small_max = 8;  // step-1 exhaustive size bound
  int threads = 1;    // >1 splits the candidate stream (result no longer deterministic)
};

// Full pipeline: step 1, then first hit along the candidate stream.
DetectorOutcome run_full(const Graph& g, const RunOptions& opt = {});

const char* step_name(DetectorOutcome::Step step);

}  // namespace doily
