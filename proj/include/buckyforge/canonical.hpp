#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "buckyforge/triangulation.hpp"

namespace buckyforge {

// Bytewise-comparable canonical form. Two graphs have equal codes exactly
// when they are isomorphic as maps, allowing reflection; the byte sequence
// depends only on the isomorphism class, never on labeling or run order.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes == b.bytes;
  }
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes <=> b.bytes;
  }
};

// All (dart, reading direction) anchors whose spanning-tree code equals the
// canonical minimum. They are in bijection with the full automorphism group
// (orientation-reversing elements included), so size() is the group order.
struct AutomorphismSet {
  std::vector<std::pair<Dart, int>> elements;  // direction +1 = clockwise
  int size() const { return static_cast<int>(elements.size()); }
};

// Maximum byte length of any code at the compile-time capacity.
inline constexpr int kMaxCodeBytes = 8 * kMaxDualV - 12;

// Reusable scratch for code construction; keeping one per thread avoids
// clearing the label arrays on every call.
struct CodeScratch {
  std::int16_t label[kMaxDualV];
  std::int16_t order[kMaxDualV];
  std::int8_t entry[kMaxDualV];
  std::uint32_t mark[kMaxDualV] = {};
  std::uint32_t epoch = 0;
};

// Writes the breadth-first code anchored at dart (v0, s0) read in direction
// dir (+1 clockwise, -1 counterclockwise) into out; returns its length
// (always 8n - 12). Equal anchored codes mean exactly that some map
// isomorphism (reflective when the dirs differ) sends one anchor to the
// other.
int anchored_code_write(const DualFullerene& g, int v0, int s0, int dir, std::uint8_t* out,
                        CodeScratch& scratch);

// Compares the anchored code against a reference buffer without
// materializing it, aborting at the first differing byte.
// Returns <0, 0, >0 like memcmp.
int anchored_code_cmp(const DualFullerene& g, int v0, int s0, int dir, const std::uint8_t* ref,
                      CodeScratch& scratch);

// Compares two anchored codes of the same graph generated in lockstep,
// aborting at the first differing byte; neither code is materialized.
// The two anchors need separate scratches. Returns <0, 0, >0 like memcmp.
int anchored_code_cmp2(const DualFullerene& g, int va, int sa, int dira, int vb, int sb, int dirb,
                       CodeScratch& sca, CodeScratch& scb);

// Resumable anchored-code byte source: produces the same stream
// anchored_code_write emits, one byte per next() call, so a partially
// materialized code can be extended on demand. The graph and scratch must
// outlive the emitter and stay untouched between calls.
struct CodeEmitter {
  const DualFullerene* g = nullptr;
  CodeScratch* sc = nullptr;
  int dir = +1;
  std::uint32_t ep = 0;
  int pos = 0, k = -1, filled = 1, next_label = 2, d = 0, u = -1, slot = 0;

  void start(const DualFullerene& gg, CodeScratch& scratch, int v0, int s0, int dr) {
    g = &gg;
    sc = &scratch;
    dir = dr;
    pos = 0;
    k = -1;
    filled = 1;
    next_label = 2;
    d = 0;
    u = -1;
    slot = 0;
    ++sc->epoch;
    ep = sc->epoch;
    sc->mark[v0] = ep;
    sc->label[v0] = 1;
    sc->order[0] = static_cast<std::int16_t>(v0);
    sc->entry[v0] = static_cast<std::int8_t>(s0);
  }

  std::uint8_t next() {
    if (k < 0) {
      u = sc->order[pos];
      d = g->deg[u];
      k = 0;
      slot = sc->entry[u];
      return static_cast<std::uint8_t>(d);
    }
    if (k == d) {
      k = -1;
      ++pos;
      return 0;
    }
    const int w = g->adj[u][slot];
    slot += dir;
    if (slot == d) slot = 0;
    else if (slot < 0) slot = d - 1;
    if (sc->mark[w] != ep) {
      sc->mark[w] = ep;
      sc->label[w] = static_cast<std::int16_t>(next_label++);
      sc->entry[w] = static_cast<std::int8_t>(g->slot_of(w, u));
      sc->order[filled++] = static_cast<std::int16_t>(w);
    }
    ++k;
    return static_cast<std::uint8_t>(sc->label[w]);
  }
};

// Compares the anchored code at (v0, s0, dir) against the champion code
// that emitter ce produces, materializing champion bytes into buf (buf[0,
// have) already emitted) only as far as the comparison needs; have grows
// accordingly. Returns <0, 0, >0 like memcmp.
int anchored_code_cmp_lazy(const DualFullerene& g, int v0, int s0, int dir, CodeScratch& scratch,
                           std::uint8_t* buf, int& have, CodeEmitter& ce);

// Minimum anchored code over all darts and directions. Codes anchored at a
// 5-vertex start with a smaller degree byte, so only the 120 anchors at
// 5-vertices can achieve the minimum.
CanonicalCode canonical_code(const DualFullerene& g);

// All anchors achieving the canonical code.
AutomorphismSet automorphism_darts(const DualFullerene& g);

bool are_isomorphic(const DualFullerene& a, const DualFullerene& b);

}  // namespace buckyforge
