#pragma once

#include <cstdint>
#include <vector>

#include "buckyforge/triangulation.hpp"

namespace buckyforge {

// The two growth-operation shapes. An L-site widens a straight double row of
// triangles between two 5-vertices; a B-site does the same along a path with
// a single bend. Both insert one new row of vertices whose ends become the
// new 5-vertices.
enum class OpClass : std::uint8_t { L = 0, B = 1 };

struct SiteKind {
  OpClass cls = OpClass::L;
  std::int16_t i = 0;  // L_i has i interior path vertices; B uses (i, j), i >= 1
  std::int16_t j = 0;  // arm length after the bend (B only)
};

// Vertices added by applying the operation: L_i adds i+2, B_{i,j} adds i+j+2.
inline int growth(const SiteKind& k) {
  return k.cls == OpClass::L ? k.i + 2 : k.i + k.j + 2;
}

// A place where an expansion can be applied. The anchor dart sits at the
// first 5-vertex and points at the first top-row vertex; hand -1 is the
// mirror image of the same walk. The rows are recomputed from the anchor
// when the site is applied, so the site itself stays small.
struct ExpansionSite {
  SiteKind kind;
  std::int8_t hand = +1;
  Dart anchor;
};

// A place where the inverse rewrite applies: the anchor dart sits at the
// first removed 5-vertex and points along the removed path.
struct ReductionSite {
  SiteKind kind;
  std::int8_t hand = +1;
  Dart anchor;
};

// Ordering key for choosing the canonical reduction of a graph:
// lexicographic on (growth, class with L before B, normalized indices).
// B_{i,j} read from its other end is B_{j+1,i-1}, so B indices are
// normalized to the smaller of the two readings.
struct SiteTriple {
  std::int16_t growth = 0, cls = 0, i = 0, j = 0;

  friend bool operator==(const SiteTriple& a, const SiteTriple& b) {
    return a.growth == b.growth && a.cls == b.cls && a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const SiteTriple& a, const SiteTriple& b) {
    if (a.growth != b.growth) return a.growth < b.growth;
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};
SiteTriple site_triple(const SiteKind& k);

// The same ordering key packed into one integer (all fields are small and
// non-negative, so lexicographic order becomes numeric order).
inline std::uint64_t packed_triple(const SiteTriple& t) {
  return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(t.growth)) << 48) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(t.cls)) << 32) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(t.i)) << 16) |
         static_cast<std::uint16_t>(t.j);
}

// Reductions of a host packaged to prune its expansion candidates. A host
// reduction whose active zone is disjoint from a candidate's surgery zone is
// inherited by the candidate's child unchanged; if its key is also strictly
// smaller than the candidate's, the child fails the canonical-construction
// test, so the candidate can be dropped before it is built. Holds at most 32
// witnesses, smallest keys first.
struct WitnessSet {
  int count = 0;
  std::uint64_t keys[32] = {};        // packed_triple of each witness, ascending
  std::uint32_t vbits[kMaxDualV] = {};  // per-vertex witness-membership bits

  // True when some witness with key < candidate_key contributes no bit to
  // hit (its zone misses the candidate's zone entirely).
  bool kills(std::uint32_t hit, std::uint64_t candidate_key) const {
    int c = 0;
    while (c < count && keys[c] < candidate_key) ++c;
    if (c == 0) return false;
    const std::uint32_t prefix = c >= 32 ? 0xFFFFFFFFu : ((1u << c) - 1u);
    return (prefix & ~hit) != 0;
  }
};

// Fills ws with the reductions of g of growth at most max_growth (the 32
// smallest keys when there are more). ipr_only must match the mode of the
// expansion enumeration the set will prune. scratch is reused storage.
void build_witness_set(const DualFullerene& g, bool ipr_only, int max_growth,
                       std::vector<ReductionSite>& scratch, WitnessSet& ws);

// Vertices whose rotation rows apply_expansion would rewrite (the inserted
// vertices excluded): the strip rows and both end 5-vertices. Writes them to
// out (size at least 3 * growth + 8) and returns the count.
int expansion_zone_vertices(const DualFullerene& g, const ExpansionSite& s, Vertex* out);

// Vertices this reduction site's validity depends on: the removed path plus
// every vertex whose rotation or degree its walk reads. With widen_ends the
// full neighborhoods of the two degree-gaining side vertices are included,
// which ipr_only sites additionally depend on. out needs 3 * growth + 20.
int reduction_zone_vertices(const DualFullerene& g, const ReductionSite& s, bool widen_ends,
                            Vertex* out);

// Undo record for an in-place expansion: the rotation rows of every old
// vertex the surgery touches.
struct ExpansionUndo {
  int old_n = 0;
  int count = 0;
  Vertex ids[2 * kMaxDualV + 8];
  std::int8_t degs[2 * kMaxDualV + 8];
  Vertex rows[2 * kMaxDualV + 8][6];
};

// Undo record for a reduction (tests and analysis only): a full snapshot.
struct ReductionUndo {
  DualFullerene before;
};

// All expansion sites applicable to g that keep the vertex count at or below
// max_vertices. With ipr_only, only sites whose child is IPR are returned
// (the host must be IPR for that to be meaningful). Deterministic order.
void enumerate_expansions(const DualFullerene& g, bool ipr_only, int max_vertices,
                          std::vector<ExpansionSite>& out);

// Same, but candidates defeated by a witness (see WitnessSet) are skipped.
// The result is the order-preserving subsequence of the full enumeration
// containing every candidate that could pass the canonical-construction
// test. prune == nullptr keeps everything.
void enumerate_expansions(const DualFullerene& g, bool ipr_only, int max_vertices,
                          std::vector<ExpansionSite>& out, const WitnessSet* prune);

void apply_expansion(DualFullerene& g, const ExpansionSite& s, ExpansionUndo& undo);
void undo_expansion(DualFullerene& g, const ExpansionUndo& undo);

// True when the child that applying s would create provably contains a
// growth-2 reduction at one of the two inserted 5-vertices, decided without
// building the child. Such a child is never canonical, since a growth-2
// reduction beats any inverse of growth >= 3, so the caller may drop s
// before apply. False only means "not proven here"; the post-apply scan
// stays authoritative. Plain reductions only (the IPR walker adds conditions
// this check does not evaluate); requires growth(s.kind) >= 3 and a site
// produced by enumerate_expansions on g.
bool expansion_creates_growth2(const DualFullerene& g, const ExpansionSite& s);

// All reduction sites of g with growth at most max_growth. With ipr_only,
// only sites whose reduced graph is IPR. With first_only the enumeration
// stops after one site (reducibility check). B-sites bend after max_turnpos
// path vertices at most; 0 yields straight sites only. Deterministic order.
void enumerate_reductions(const DualFullerene& g, bool ipr_only, std::vector<ReductionSite>& out,
                          int max_growth = kMaxDualV, bool first_only = false,
                          int max_turnpos = kMaxDualV);

void apply_reduction(DualFullerene& g, const ReductionSite& s, ReductionUndo& undo);
void undo_reduction(DualFullerene& g, const ReductionUndo& undo);

// IPR graph with no IPR-preserving reduction at all. Throws NotIPR when the
// input has adjacent 5-vertices.
bool is_irreducible_ipr(const DualFullerene& g);

// The reduction that exactly undoes an expansion just applied to the parent
// (valid on the child produced by apply_expansion).
ReductionSite inverse_reduction(const DualFullerene& child, const ExpansionSite& s);

// Both reading anchors of a reduction site: the stored one and the walk read
// from the other removed 5-vertex (L keeps the hand, B flips it).
struct SiteReadings {
  Dart d1;
  int h1;
  Dart d2;
  int h2;
};
SiteReadings reduction_readings(const DualFullerene& g, const ReductionSite& s);

// Removed path and the vertices whose degrees the reduction changes.
struct ReductionDetail {
  Vertex end5[2];              // removed 5-vertices (path ends)
  Vertex gain5[2];             // 6-vertices that become 5s (A and D)
  std::vector<Vertex> path;    // all removed vertices in walk order
};
ReductionDetail reduction_detail(const DualFullerene& g, const ReductionSite& s);

}  // namespace buckyforge
