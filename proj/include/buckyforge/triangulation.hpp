#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "buckyforge/errors.hpp"

namespace buckyforge {

#ifndef BUCKYFORGE_MAX_DUAL_V
#define BUCKYFORGE_MAX_DUAL_V 203
#endif

// Compile-time capacity for dual vertex counts. Vertex labels are emitted as
// single bytes in canonical codes, so the cap must stay below 254.
inline constexpr int kMaxDualV = BUCKYFORGE_MAX_DUAL_V;
static_assert(kMaxDualV >= 12 && kMaxDualV <= 253, "dual capacity out of range");

using Vertex = std::int16_t;

// A dart is a directed edge: (tail vertex, slot index into its rotation).
struct Dart {
  Vertex v = -1;
  std::int8_t slot = -1;

  friend bool operator==(const Dart& a, const Dart& b) { return a.v == b.v && a.slot == b.slot; }
  friend bool operator!=(const Dart& a, const Dart& b) { return !(a == b); }
  friend bool operator<(const Dart& a, const Dart& b) {
    return a.v != b.v ? a.v < b.v : a.slot < b.slot;
  }
};

// Fullerene in dual representation: a plane triangulation with vertex degrees
// 5 and 6 only, exactly twelve 5s. Rotation lists are stored clockwise in
// fixed-size rows so the whole graph can be snapshotted with memcpy and
// mutated in place by the growth operations.
struct DualFullerene {
  int n = 0;
  std::int8_t deg[kMaxDualV] = {};
  Vertex adj[kMaxDualV][6] = {};

  int vertex_count() const { return n; }
  int edge_count() const { return 3 * n - 6; }
  int face_count() const { return 2 * n - 4; }
  // Primal fullerene size this dual corresponds to.
  int primal_vertex_count() const { return 2 * (n - 2); }

  int degree(int v) const { return deg[v]; }
  Vertex neighbor(int v, int s) const { return adj[v][s]; }

  // Slot of w in v's rotation, or -1.
  int slot_of(int v, int w) const {
    const Vertex* row = adj[v];
    for (int s = 0; s < deg[v]; ++s)
      if (row[s] == w) return s;
    return -1;
  }
  bool adjacent(int v, int w) const { return slot_of(v, w) >= 0; }

  // Cyclic slot arithmetic at v. |step| must be < deg(v).
  int cyc(int v, int s, int step) const {
    int d = deg[v];
    int r = s + step;
    if (r >= d) r -= d;
    if (r < 0) r += d;
    return r;
  }
  Vertex nbr(int v, int s, int step = 0) const { return adj[v][cyc(v, s, step)]; }

  // Third vertex of the triangle lying clockwise after the dart (v, s):
  // the face {v, adj[v][s], adj[v][s+1]}.
  Vertex face_third(int v, int s) const { return adj[v][cyc(v, s, 1)]; }

  // The other triangle vertex across edge {u, w}, given one of the two
  // (z). Every edge of a triangulation lies in exactly two triangles
  // {u, w, z} and {u, w, result}.
  Vertex opposite(int u, int w, int z) const {
    int s = slot_of(u, w);
    Vertex a = nbr(u, s, 1);
    return a == z ? nbr(u, s, -1) : a;
  }
};

// Dart navigation. All three maps are total bijections on the dart set.
inline Dart dart_reverse(const DualFullerene& g, Dart d) {
  Vertex h = g.adj[d.v][d.slot];
  return Dart{h, static_cast<std::int8_t>(g.slot_of(h, d.v))};
}
inline Dart dart_next_at_vertex(const DualFullerene& g, Dart d) {
  return Dart{d.v, static_cast<std::int8_t>(g.cyc(d.v, d.slot, 1))};
}
// Successor along the triangle clockwise after d: for face {a,b,c} the cycle
// visits (a->b), (b->c), (c->a).
inline Dart dart_next_on_face(const DualFullerene& g, Dart d) {
  Vertex h = g.adj[d.v][d.slot];
  int s = g.slot_of(h, d.v);
  return Dart{h, static_cast<std::int8_t>(g.cyc(h, s, -1))};
}

// Builds a DualFullerene from rotation lists and checks every invariant:
// simplicity, consistent orientation, triangular faces, connectivity, and
// the 5/6 degree spectrum. Throws the error naming the first violated
// invariant (NotSimple, InconsistentEmbedding, NotTriangulation,
// WrongDegreeSpectrum), or std::length_error beyond capacity.
DualFullerene from_rotation_system(const std::vector<std::vector<int>>& rot);

// Re-checks all structural invariants of an in-memory graph (used by tests
// and debug assertions after surgery). Returns silently on success.
void validate(const DualFullerene& g);

// True when no two 5-vertices are adjacent (isolated-pentagon rule).
bool is_ipr(const DualFullerene& g);

// Graph distance between u and v (0 when equal, 1 when adjacent, ...).
// In the dual this is the face distance of the primal fullerene's faces.
int face_distance(const DualFullerene& g, int u, int v);

// Cubic plane graph with explicit face list: the primal fullerene.
struct PrimalFullerene {
  int n = 0;
  std::vector<std::array<Vertex, 3>> adj;     // clockwise rotations
  std::vector<std::vector<Vertex>> faces;     // size-5/6 vertex cycles

  int vertex_count() const { return n; }
  int pentagon_count() const {
    int c = 0;
    for (const auto& f : faces) c += (f.size() == 5);
    return c;
  }
};

// Geometric dual: one primal vertex per triangle, one primal face per dual
// vertex. dualize(primal_to_dual(p)) and primal_to_dual(dualize(g)) are
// isomorphisms.
PrimalFullerene dualize(const DualFullerene& g);
DualFullerene primal_to_dual(const PrimalFullerene& p);

}  // namespace buckyforge
