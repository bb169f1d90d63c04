#pragma once

// JSON emitters for CLI output. Key order is fixed and output is
// byte-stable for a given input, so downstream golden files stay valid.

#include <string>

#include "doily/certificate.hpp"
#include "doily/detector.hpp"
#include "doily/frame.hpp"
#include "doily/probes.hpp"
#include "doily/recognition.hpp"
#include "doily/selftest.hpp"

namespace doily {

// {"found": bool, "vertices": [...], "cycle": [...],
//  "tufts": [{"tuft": v, "attach": a} x3]}; absent certificate -> found=false
// with the arrays omitted.
std::string certificate_json(const DoilyCertificate* cert);

// certificate_json plus "step" (small-search / candidate / none) and a
// "stats" object with the detector counters.
std::string detector_json(const DetectorOutcome& outcome);

// {"exists": bool, "min_size": int|null, "count": int|null,
//  "min_doilies": [certificate...]} — count/min_doilies only when the report
// enumerated everything.
std::string oracle_json(const OracleReport& report);

// {"vertex": v, "class": "minor"|"major"|"neither", "in_k": [...],
//  "x": [...], "y": [...]} with null for missing x/y entries.
std::string profile_json(const AttachmentProfile& profile);

// {"u": ..., "v": ..., "relations": ["tie"|...x3], "tie_witness": [...]}.
std::string relation_json(const PairRelation& relation);

// Reads a certificate produced by certificate_json/detector_json back in and
// re-validates it against g.  Throws std::invalid_argument on malformed
// JSON, found=false input, or a certificate that does not fit g.
DoilyCertificate certificate_from_json(const std::string& text, const Graph& g);

// {"profiles": [profile per vertex outside k, ascending],
//  "relations": [relation per unordered pair of major vertices]}.
std::string probe_report_json(const Graph& g, const DoilyCertificate& k);

// Enumeration-engine observability: stream counters plus per-candidate
// detector counters over a full exhaustion of the stream.
struct BenchReport {
  StreamStats stream;
  std::uint64_t candidates_tried = 0;
  std::uint64_t bfs_calls = 0;
  std::uint64_t doilies_found = 0;
};
std::string bench_json(const BenchReport& report);

// [{"number": 1, "name": ..., "passed": bool, "detail": ...}, ...].
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace doily
