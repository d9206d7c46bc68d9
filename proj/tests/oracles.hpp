#pragma once

// Shared test helpers: hand-built reference graphs, a rotation-free
// isomorphism oracle (plain graph isomorphism, which for these 3-connected
// planar graphs coincides with map isomorphism up to reflection), and a
// brute-force expansion closure used to cross-check the generator parts.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "buckyforge/operations.hpp"
#include "buckyforge/triangulation.hpp"

namespace testutil {

using buckyforge::DualFullerene;
using Rot = std::vector<std::vector<int>>;

// Icosahedron (dual of the 20-atom fullerene): two poles, two 5-rings.
inline Rot icosahedron_rotations() {
  auto u = [](int t) { return 1 + (t + 5) % 5; };
  auto l = [](int t) { return 6 + (t + 5) % 5; };
  Rot r(12);
  for (int t = 0; t < 5; ++t) r[0].push_back(u(t));
  for (int t = 0; t < 5; ++t) {
    r[u(t)] = {u(t + 1), 0, u(t - 1), l(t), l(t + 1)};
    r[l(t)] = {l(t + 1), u(t), u(t - 1), l(t - 1), 11};
    r[11].push_back(l((5 - t) % 5));
  }
  return r;
}

// Dual of the unique 24-atom fullerene: two poles of degree 6, two 6-rings.
inline Rot c24_dual_rotations() {
  auto u = [](int t) { return 2 + (t + 6) % 6; };
  auto l = [](int t) { return 8 + (t + 6) % 6; };
  Rot r(14);
  for (int t = 0; t < 6; ++t) r[0].push_back(u(t));
  for (int t = 0; t < 6; ++t) {
    r[u(t)] = {u(t + 1), 0, u(t - 1), l(t), l(t + 1)};
    r[l(t)] = {l(t + 1), u(t), u(t - 1), l(t - 1), 1};
    r[1].push_back(l((6 - t) % 6));
  }
  return r;
}

// Octahedron: a consistent triangulation with the wrong degree spectrum.
inline Rot octahedron_rotations() {
  auto q = [](int t) { return 1 + (t + 4) % 4; };
  Rot r(6);
  for (int t = 0; t < 4; ++t) {
    r[0].push_back(q(t));
    r[q(t)] = {q(t + 1), 0, q(t - 1), 5};
    r[5].push_back(q((4 - t) % 4));
  }
  return r;
}

// Dual of the tetrahedrally symmetric 28-atom fullerene. Vertices: four
// 6-vertices h_a indexed by a in 0..3, and twelve 5-vertices p_{ab} for
// ordered pairs a != b. t(a) lists the other three indices in the cyclic
// order h_a sees them.
inline Rot c28_td_rotations() {
  static const int t[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  auto p = [](int a, int b) { return 4 + a * 3 + (b > a ? b - 1 : b); };
  auto succ_in = [&](int b, int a) {  // successor of a in the cycle t(b)
    for (int k = 0; k < 3; ++k)
      if (t[b][k] == a) return t[b][(k + 1) % 3];
    throw std::logic_error("bad triple");
  };
  Rot r(16);
  for (int a = 0; a < 4; ++a)
    for (int k = 0; k < 3; ++k) {
      int b = t[a][k];
      r[a].push_back(p(a, b));
      r[a].push_back(p(b, a));
    }
  for (int a = 0; a < 4; ++a)
    for (int k = 0; k < 3; ++k) {
      int b = t[a][k];
      int x = succ_in(b, a);
      r[p(a, b)] = {a, p(x, a), p(b, x), b, p(b, a)};
    }
  return r;
}

inline Rot rotations_of(const DualFullerene& g) {
  Rot r(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v)
    for (int s = 0; s < g.deg[v]; ++s) r[static_cast<std::size_t>(v)].push_back(g.adj[v][s]);
  return r;
}

inline Rot relabeled(const Rot& r, const std::vector<int>& perm) {
  Rot out(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) {
    auto& row = out[static_cast<std::size_t>(perm[v])];
    for (int w : r[v]) row.push_back(perm[static_cast<std::size_t>(w)]);
  }
  return out;
}

inline Rot reflected(const Rot& r) {
  Rot out(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) out[v].assign(r[v].rbegin(), r[v].rend());
  return out;
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Dual of the 60-atom soccer-ball fullerene: cap each face of the
// dodecahedron (obtained as the primal of the icosahedron) with a new
// vertex. The right cap/vertex orientations are found by trying both.
inline DualFullerene pentakis_dodecahedron() {
  using namespace buckyforge;
  DualFullerene ico = from_rotation_system(icosahedron_rotations());
  PrimalFullerene dod = dualize(ico);
  const int nv = dod.n;
  const int nf = static_cast<int>(dod.faces.size());
  // face index spanning neighbors (wa, wb) at v
  auto face_at = [&](int v, int wa, int wb) {
    for (int f = 0; f < nf; ++f) {
      const auto& c = dod.faces[static_cast<std::size_t>(f)];
      const int m = static_cast<int>(c.size());
      for (int idx = 0; idx < m; ++idx) {
        if (c[static_cast<std::size_t>(idx)] != v) continue;
        int prev = c[static_cast<std::size_t>((idx + m - 1) % m)];
        int next = c[static_cast<std::size_t>((idx + 1) % m)];
        if ((prev == wa && next == wb) || (prev == wb && next == wa)) return f;
      }
    }
    throw std::logic_error("face not found");
  };
  for (int flip_caps = 0; flip_caps < 2; ++flip_caps) {
    for (int flip_all = 0; flip_all < 2; ++flip_all) {
      Rot r(static_cast<std::size_t>(nv + nf));
      for (int v = 0; v < nv; ++v) {
        for (int s = 0; s < 3; ++s) {
          int wa = dod.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
          int wb = dod.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>((s + 1) % 3)];
          r[static_cast<std::size_t>(v)].push_back(wa);
          r[static_cast<std::size_t>(v)].push_back(nv + face_at(v, wa, wb));
        }
      }
      for (int f = 0; f < nf; ++f)
        for (int x : dod.faces[static_cast<std::size_t>(f)])
          r[static_cast<std::size_t>(nv + f)].push_back(x);
      if (flip_caps)
        for (int f = 0; f < nf; ++f) {
          auto& row = r[static_cast<std::size_t>(nv + f)];
          Rot one{std::vector<int>(row.rbegin(), row.rend())};
          row = one[0];
        }
      if (flip_all) r = reflected(r);
      try {
        return from_rotation_system(r);
      } catch (const Error&) {
        continue;
      }
    }
  }
  throw std::logic_error("pentakis construction failed");
}

// Plain graph isomorphism by backtracking (n <= 64).
inline bool graphs_isomorphic_bruteforce(const DualFullerene& a, const DualFullerene& b) {
  if (a.n != b.n) return false;
  const int n = a.n;
  if (n > 64) throw std::logic_error("oracle supports n <= 64");
  std::uint64_t am[64] = {}, bm[64] = {};
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < a.deg[v]; ++s) am[v] |= 1ull << a.adj[v][s];
    for (int s = 0; s < b.deg[v]; ++s) bm[v] |= 1ull << b.adj[v][s];
  }
  int map[64];
  for (int v = 0; v < n; ++v) map[v] = -1;
  std::uint64_t used = 0;

  // order a's vertices so each has a mapped neighbor (BFS from 0)
  int order[64], head = 0, tail = 0;
  bool seen[64] = {};
  order[tail++] = 0;
  seen[0] = true;
  while (head < tail) {
    int v = order[head++];
    for (int s = 0; s < a.deg[v]; ++s) {
      int w = a.adj[v][s];
      if (!seen[w]) {
        seen[w] = true;
        order[tail++] = w;
      }
    }
  }
  if (tail != n) return false;

  struct Ctx {
    const DualFullerene &a, &b;
    const std::uint64_t *am, *bm;
    int* map;
    std::uint64_t* used;
    const int* order;
    int n;
    bool go(int depth) const {
      if (depth == n) return true;
      const int v = order[depth];
      for (int cand = 0; cand < n; ++cand) {
        if ((*used >> cand) & 1) continue;
        if (a.deg[v] != b.deg[cand]) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
          if (map[u] < 0) continue;
          bool ea = (am[v] >> u) & 1;
          bool eb = (bm[cand] >> map[u]) & 1;
          if (ea != eb) ok = false;
        }
        if (!ok) continue;
        map[v] = cand;
        *used |= 1ull << cand;
        if (go(depth + 1)) return true;
        map[v] = -1;
        *used &= ~(1ull << cand);
      }
      return false;
    }
  };
  Ctx c{a, b, am, bm, map, &used, order, n};
  return c.go(0);
}

// Isomorphism classes reachable from the seeds by repeated expansion, up to
// max_dual_v vertices, deduplicated with the brute-force oracle.
inline std::vector<DualFullerene> closure_by_bruteforce(std::vector<DualFullerene> work,
                                                        int max_dual_v) {
  std::vector<DualFullerene> all = work;
  std::vector<buckyforge::ExpansionSite> sites;
  for (std::size_t qi = 0; qi < work.size(); ++qi) {
    DualFullerene g = work[qi];
    buckyforge::enumerate_expansions(g, false, max_dual_v, sites);
    for (const auto& s : sites) {
      buckyforge::ExpansionUndo u;
      buckyforge::apply_expansion(g, s, u);
      DualFullerene child = g;
      buckyforge::undo_expansion(g, u);
      bool fresh = true;
      for (const auto& h : all)
        if (h.n == child.n && graphs_isomorphic_bruteforce(h, child)) {
          fresh = false;
          break;
        }
      if (fresh) {
        all.push_back(child);
        work.push_back(child);
      }
    }
  }
  return all;
}

// Field-by-field equality over the meaningful prefix (rows of removed
// vertices may hold stale values after an undo).
inline bool same_graph(const DualFullerene& a, const DualFullerene& b) {
  if (a.n != b.n) return false;
  for (int v = 0; v < a.n; ++v) {
    if (a.deg[v] != b.deg[v]) return false;
    for (int s = 0; s < a.deg[v]; ++s)
      if (a.adj[v][s] != b.adj[v][s]) return false;
  }
  return true;
}

}  // namespace testutil
