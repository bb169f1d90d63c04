#include "doily/frame.hpp"

#include <algorithm>
#include <functional>

#include "doily/certificate.hpp"  // next3/prev3

namespace doily {

std::vector<Vertex> Frame::vertex_set() const {
  auto e = entries();
  std::vector<Vertex> out(e.begin(), e.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_frame_in(const Graph& g, const Frame& f) {
  int n = g.vertex_count();
  for (Vertex v : f.entries())
    if (v < 0 || v >= n) return false;
  std::array<Vertex, 6> ab{f.b[0], f.b[1], f.b[2], f.a[0], f.a[1], f.a[2]};
  for (size_t i = 0; i < ab.size(); ++i)
    for (size_t j = i + 1; j < ab.size(); ++j)
      if (ab[i] == ab[j]) return false;
  for (size_t i = 0; i < 3; ++i) {
    if (g.degree(f.b[i]) != 1 || g.neighbors(f.b[i]).front() != f.a[i]) return false;
    if (g.degree(f.a[i]) != 3) return false;
    std::array<Vertex, 3> want{f.b[i], f.a_prime[i], f.a_dprime[i]};
    std::sort(want.begin(), want.end());
    if (want[0] == want[1] || want[1] == want[2]) return false;
    const auto& have = g.neighbors(f.a[i]);
    if (!std::equal(want.begin(), want.end(), have.begin(), have.end())) return false;
  }
  return true;
}

namespace {

// Shared implementation of the local tuple filter.  Slots may hold -1
// ("not yet chosen") during candidate enumeration; any constraint touching
// an unknown slot is treated as satisfied, so a partial pass never rejects
// a tuple the complete check would accept.
bool local_checks_impl(const Graph& g, const Frame& f, bool allow_unknown) {
  int n = g.vertex_count();
  auto known = [&](Vertex v) { return v != -1; };
  auto e = f.entries();
  for (Vertex v : e) {
    if (v == -1) {
      if (!allow_unknown) return false;
      continue;
    }
    if (v < 0 || v >= n) return false;
  }

  const std::array<Vertex, 9> a_entries{f.a[0],        f.a[1],        f.a[2],
                                        f.a_prime[0],  f.a_prime[1],  f.a_prime[2],
                                        f.a_dprime[0], f.a_dprime[1], f.a_dprime[2]};

  // (1) b's distinct, and distinct from the nine a-entries.
  for (size_t i = 0; i < 3; ++i) {
    if (!known(f.b[i])) continue;
    for (size_t j = i + 1; j < 3; ++j)
      if (f.b[i] == f.b[j]) return false;
    for (Vertex av : a_entries)
      if (known(av) && av == f.b[i]) return false;
  }

  // (3) a's distinct.
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      if (known(f.a[i]) && f.a[i] == f.a[j]) return false;

  // (2) b[i] is adjacent to a[i] and to nothing else in the tuple.
  for (size_t i = 0; i < 3; ++i) {
    if (!known(f.b[i]) || !known(f.a[i])) continue;
    if (!g.adjacent(f.b[i], f.a[i])) return false;
    for (Vertex w : e)
      if (known(w) && w != f.a[i] && w != f.b[i] && g.adjacent(f.b[i], w)) return false;
  }

  // (4) a'[i], a''[i] distinct neighbours of a[i]; a[i] sees no other tuple
  // vertex besides b[i], a'[i], a''[i].
  for (size_t i = 0; i < 3; ++i) {
    if (!known(f.a[i])) continue;
    if (known(f.a_prime[i]) && known(f.a_dprime[i]) && f.a_prime[i] == f.a_dprime[i]) return false;
    if (known(f.a_prime[i]) && !g.adjacent(f.a_prime[i], f.a[i])) return false;
    if (known(f.a_dprime[i]) && !g.adjacent(f.a_dprime[i], f.a[i])) return false;
    bool trio_known = known(f.b[i]) && known(f.a_prime[i]) && known(f.a_dprime[i]);
    if (!trio_known && allow_unknown) continue;
    for (Vertex w : e) {
      if (!known(w) || w == f.a[i]) continue;
      if (w == f.b[i] || w == f.a_prime[i] || w == f.a_dprime[i]) continue;
      if (g.adjacent(w, f.a[i])) return false;
    }
  }

  // (5) per i, over the pair (a[i-1], a[i+1]).
  for (int i = 0; i < 3; ++i) {
    size_t p = static_cast<size_t>(prev3(i));
    size_t q = static_cast<size_t>(next3(i));
    if (!known(f.a[p]) || !known(f.a[q])) continue;
    if (g.adjacent(f.a[p], f.a[q])) {
      if (known(f.a_prime[p]) && f.a_prime[p] != f.a[q]) return false;
      if (known(f.a_dprime[q]) && f.a_dprime[q] != f.a[p]) return false;
      if (!allow_unknown && (!known(f.a_prime[p]) || !known(f.a_dprime[q]))) return false;
    } else {
      const std::array<Vertex, 7> banned{f.a[p],        f.a_dprime[p],          f.a_prime[static_cast<size_t>(i)],
                                         f.a[static_cast<size_t>(i)], f.a_dprime[static_cast<size_t>(i)],
                                         f.a_prime[q],  f.a[q]};
      for (Vertex x : {f.a_prime[p], f.a_dprime[q]}) {
        if (!known(x)) continue;
        for (Vertex y : banned)
          if (known(y) && x == y) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool frame_local_checks(const Graph& g, const Frame& f) {
  return local_checks_impl(g, f, /*allow_unknown=*/false);
}

namespace {

// Star-cutset test with an explicit alive set (1 = present).  Removes v and
// every alive neighbour of v other than the three a's, then floods from a[j].
bool centre_separates(const Graph& g, const std::vector<char>& alive, Vertex v,
                      const std::array<Vertex, 3>& a, int j) {
  size_t n = static_cast<size_t>(g.vertex_count());
  std::vector<char> blocked(n, 0);
  blocked[static_cast<size_t>(v)] = 1;
  for (Vertex w : g.neighbors(v))
    if (alive[static_cast<size_t>(w)] && w != a[0] && w != a[1] && w != a[2])
      blocked[static_cast<size_t>(w)] = 1;

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{a[static_cast<size_t>(j)]};
  seen[static_cast<size_t>(a[static_cast<size_t>(j)])] = 1;
  Vertex t1 = a[static_cast<size_t>(next3(j))];
  Vertex t2 = a[static_cast<size_t>(prev3(j))];
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (seen[static_cast<size_t>(w)] || !alive[static_cast<size_t>(w)] ||
          blocked[static_cast<size_t>(w)])
        continue;
      if (w == t1 || w == t2) return false;
      seen[static_cast<size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  return true;
}

void check_centre_args(const Graph& g, Vertex v, const std::array<Vertex, 3>& a, int j) {
  if (j < 0 || j > 2) throw std::invalid_argument("star cutset: index j must be 0, 1 or 2");
  for (Vertex x : {a[0], a[1], a[2], v})
    if (x < 0 || x >= g.vertex_count())
      throw std::invalid_argument("star cutset: vertex outside graph");
  if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2])
    throw std::invalid_argument("star cutset: the three a's must be distinct");
  if (v == a[0] || v == a[1] || v == a[2])
    throw std::invalid_argument("star cutset: centre candidate must differ from the a's");
}

// Deletes centres (ascending id, restart after every deletion) until no
// vertex outside the a-triple is a centre for any j.
void elimination_fixpoint(const Graph& g, std::vector<char>& alive, const std::array<Vertex, 3>& a) {
  int n = g.vertex_count();
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (Vertex v = 0; v < n && !deleted; ++v) {
      if (!alive[static_cast<size_t>(v)] || v == a[0] || v == a[1] || v == a[2]) continue;
      for (int j = 0; j < 3 && !deleted; ++j) {
        if (centre_separates(g, alive, v, a, j)) {
          alive[static_cast<size_t>(v)] = 0;
          deleted = true;
        }
      }
    }
  }
}

}  // namespace

bool is_star_cutset_centre(const Graph& g, Vertex v, const std::array<Vertex, 3>& a, int j) {
  check_centre_args(g, v, a, j);
  std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
  return centre_separates(g, alive, v, a, j);
}

Subgraph star_cutset_elimination(const Graph& g, const std::array<Vertex, 3>& a) {
  if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2])
    throw std::invalid_argument("star_cutset_elimination: the three a's must be distinct");
  for (Vertex x : a)
    if (x < 0 || x >= g.vertex_count())
      throw std::invalid_argument("star_cutset_elimination: vertex outside graph");
  std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
  elimination_fixpoint(g, alive, a);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (alive[static_cast<size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

CandidateStream::CandidateStream(const Graph& g, Options opt) : g_(&g), opt_(opt) {
  if (opt_.a0_stride < 1 || opt_.a0_offset < 0 || opt_.a0_offset >= opt_.a0_stride)
    throw std::invalid_argument("CandidateStream: bad partition options");
}

// Advances triple_ to the next ordered triple of distinct vertices with
// a[0] in this stream's residue class; returns false when exhausted.
bool CandidateStream::advance_triple_() {
  int n = g_->vertex_count();
  auto& t = triple_;
  if (t[0] == -1) {
    t = {opt_.a0_offset, 0, 0};
    if (t[0] >= n) return false;
  } else {
    ++t[2];
  }
  for (;;) {
    if (t[2] >= n) {
      t[2] = 0;
      ++t[1];
    }
    if (t[1] >= n) {
      t[1] = 0;
      t[0] += opt_.a0_stride;
    }
    if (t[0] >= n) return false;
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      ++t[2];
      continue;
    }
    return true;
  }
}

namespace {

// Backtracking enumeration of all twelve-tuples with a fixed a-triple that
// pass frame_local_checks, in lexicographic slot order
// (b0, b1, b2, a'0, a''0, a'1, a''1, a'2, a''2).  The partial filter only
// prunes assignments the complete filter rejects, so the output equals a
// brute-force scan of all twelve-tuples over this triple.
void tuples_for_triple(const Graph& g, const std::array<Vertex, 3>& a, std::vector<Frame>& out) {
  Frame f;
  f.a = a;
  f.b = {-1, -1, -1};
  f.a_prime = {-1, -1, -1};
  f.a_dprime = {-1, -1, -1};

  // Bullet (5) pins a'[i-1] and a''[i+1] whenever a[i-1] and a[i+1] are
  // adjacent; precompute those forced values (-1 = free).
  std::array<Vertex, 3> forced_prime{-1, -1, -1}, forced_dprime{-1, -1, -1};
  for (int i = 0; i < 3; ++i) {
    size_t p = static_cast<size_t>(prev3(i)), q = static_cast<size_t>(next3(i));
    if (g.adjacent(a[p], a[q])) {
      forced_prime[p] = a[q];
      forced_dprime[q] = a[p];
    }
  }

  // Slot k: 0..2 -> b[k]; 3..8 -> alternating a'[(k-3)/2], a''[(k-3)/2].
  std::function<void(int)> assign = [&](int slot) {
    if (slot == 9) {
      if (frame_local_checks(g, f)) out.push_back(f);
      return;
    }
    Vertex* cell;
    const std::vector<Vertex>* domain;
    Vertex forced = -1;
    if (slot < 3) {
      cell = &f.b[static_cast<size_t>(slot)];
      domain = &g.neighbors(a[static_cast<size_t>(slot)]);
    } else {
      size_t i = static_cast<size_t>((slot - 3) / 2);
      bool prime = (slot - 3) % 2 == 0;
      cell = prime ? &f.a_prime[i] : &f.a_dprime[i];
      domain = &g.neighbors(a[i]);
      forced = prime ? forced_prime[i] : forced_dprime[i];
    }
    for (Vertex w : *domain) {
      if (forced != -1 && w != forced) continue;
      *cell = w;
      if (local_checks_impl(g, f, /*allow_unknown=*/true)) assign(slot + 1);
    }
    *cell = -1;
  };
  assign(0);
}

}  // namespace

void CandidateStream::fill_buffer_() {
  buffer_.clear();
  buffer_pos_ = 0;
  while (!exhausted_ && buffer_.empty()) {
    if (!advance_triple_()) {
      exhausted_ = true;
      return;
    }
    ++stats_.triples;
    tuples_for_triple(*g_, triple_, buffer_);
  }
}

std::optional<CandidatePair> CandidateStream::build_pair_(const Frame& f) {
  const Graph& g = *g_;
  std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);

  // Force the frame's degree conditions.  The local checks guarantee none
  // of these deletions hits a tuple vertex.
  for (size_t i = 0; i < 3; ++i) {
    for (Vertex w : g.neighbors(f.b[i]))
      if (w != f.a[i]) alive[static_cast<size_t>(w)] = 0;
    for (Vertex w : g.neighbors(f.a[i]))
      if (w != f.b[i] && w != f.a_prime[i] && w != f.a_dprime[i]) alive[static_cast<size_t>(w)] = 0;
  }
  elimination_fixpoint(g, alive, f.a);

  std::uint64_t dead = 0;
  for (char c : alive)
    if (!c) ++dead;
  stats_.vertices_deleted += dead;

  for (Vertex v : f.entries())
    if (!alive[static_cast<size_t>(v)]) {
      ++stats_.tuples_dead;
      return std::nullopt;
    }

  std::vector<Vertex> keep;
  keep.reserve(static_cast<size_t>(g.vertex_count()) - dead);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (alive[static_cast<size_t>(v)]) keep.push_back(v);

  CandidatePair pair;
  pair.part = induced_subgraph(g, keep);
  auto local = [&](Vertex v) { return pair.part.from_host[static_cast<size_t>(v)]; };
  for (size_t i = 0; i < 3; ++i) {
    pair.frame.b[i] = local(f.b[i]);
    pair.frame.a[i] = local(f.a[i]);
    pair.frame.a_prime[i] = local(f.a_prime[i]);
    pair.frame.a_dprime[i] = local(f.a_dprime[i]);
  }
  ++stats_.pairs_emitted;
  return pair;
}

std::optional<CandidatePair> CandidateStream::next() {
  for (;;) {
    if (buffer_pos_ >= buffer_.size()) {
      fill_buffer_();
      if (exhausted_ && buffer_.empty()) return std::nullopt;
    }
    const Frame& f = buffer_[buffer_pos_++];
    ++stats_.tuples_passed;
    if (auto pair = build_pair_(f)) return pair;
  }
}

}  // namespace doily
