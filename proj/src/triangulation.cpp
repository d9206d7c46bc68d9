#include "buckyforge/triangulation.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace buckyforge {

namespace {

int find_in(const std::vector<int>& row, int w) {
  for (int s = 0; s < static_cast<int>(row.size()); ++s)
    if (row[s] == w) return s;
  return -1;
}

int succ_at(const std::vector<int>& row, int w) {
  int s = find_in(row, w);
  return row[(s + 1) % row.size()];
}

int pred_at(const std::vector<int>& row, int w) {
  int s = find_in(row, w);
  return row[(s + static_cast<int>(row.size()) - 1) % row.size()];
}

// Effective successor/predecessor of w at u when u's list may be read
// reversed (sign < 0 means the stored list is counterclockwise).
int eff_succ(const std::vector<int>& row, int w, int sign) {
  return sign > 0 ? succ_at(row, w) : pred_at(row, w);
}
int eff_pred(const std::vector<int>& row, int w, int sign) {
  return sign > 0 ? pred_at(row, w) : succ_at(row, w);
}

// The edge rule: for every ordered adjacent pair (u, w),
// succ_u(w) == pred_w(u). Together with its mirror for (w, u) this is
// equivalent to "every face walk closes up in three steps".
bool edge_ok(const std::vector<std::vector<int>>& rot, int u, int w, int su, int sw) {
  return eff_succ(rot[u], w, su) == eff_pred(rot[w], u, sw) &&
         eff_pred(rot[u], w, su) == eff_succ(rot[w], u, sw);
}

bool connected(const std::vector<std::vector<int>>& rot) {
  int n = static_cast<int>(rot.size());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : rot[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == n;
}

}  // namespace

DualFullerene from_rotation_system(const std::vector<std::vector<int>>& rot) {
  const int n = static_cast<int>(rot.size());
  if (n == 0) throw NotTriangulation("empty graph");
  if (n > kMaxDualV) throw std::length_error("vertex count exceeds compile-time capacity");

  // Simplicity: ids in range, no loops, no repeated neighbor.
  for (int v = 0; v < n; ++v) {
    if (rot[v].empty()) throw NotTriangulation("isolated vertex");
    for (size_t i = 0; i < rot[v].size(); ++i) {
      int w = rot[v][i];
      if (w < 0 || w >= n) throw NotSimple("neighbor id out of range");
      if (w == v) throw NotSimple("self-loop");
      for (size_t j = i + 1; j < rot[v].size(); ++j)
        if (rot[v][j] == w) throw NotSimple("repeated neighbor");
    }
  }

  // The lists must pair up into undirected edges.
  for (int v = 0; v < n; ++v)
    for (int w : rot[v])
      if (find_in(rot[w], v) < 0)
        throw InconsistentEmbedding("adjacency is not symmetric");

  // Orientation / face check under the as-given (all clockwise) reading.
  bool plain_ok = true;
  for (int v = 0; v < n && plain_ok; ++v)
    for (int w : rot[v])
      if (!edge_ok(rot, v, w, +1, +1)) {
        plain_ok = false;
        break;
      }

  if (!plain_ok) {
    // Decide between a repairable orientation mix-up and a genuine
    // non-triangulation: propagate per-vertex reading directions and see
    // whether some choice of reversals satisfies the edge rule everywhere.
    std::vector<int> sign(n, 0);
    bool repairable = true;
    for (int start = 0; start < n && repairable; ++start) {
      if (sign[start] != 0) continue;
      sign[start] = +1;
      std::vector<int> stack{start};
      while (!stack.empty() && repairable) {
        int u = stack.back();
        stack.pop_back();
        for (int w : rot[u]) {
          if (sign[w] == 0) {
            bool plus = edge_ok(rot, u, w, sign[u], +1);
            bool minus = edge_ok(rot, u, w, sign[u], -1);
            if (!plus && !minus) {
              repairable = false;
              break;
            }
            sign[w] = plus ? +1 : -1;
            stack.push_back(w);
          } else if (!edge_ok(rot, u, w, sign[u], sign[w])) {
            repairable = false;
            break;
          }
        }
      }
    }
    if (repairable)
      throw InconsistentEmbedding("rotation lists mix clockwise and counterclockwise");
    throw NotTriangulation("a face walk does not close up in three steps");
  }

  if (!connected(rot)) throw NotTriangulation("graph is disconnected");

  // Euler check: a connected all-triangle rotation system embeds on the
  // sphere exactly when E = 3V - 6 (higher genus yields more edges).
  long deg_sum = 0;
  for (int v = 0; v < n; ++v) deg_sum += static_cast<long>(rot[v].size());
  if (deg_sum != 2L * (3L * n - 6)) throw NotTriangulation("edge count is not 3V-6");

  int fives = 0;
  for (int v = 0; v < n; ++v) {
    size_t d = rot[v].size();
    if (d == 5)
      ++fives;
    else if (d != 6)
      throw WrongDegreeSpectrum("vertex degree outside {5, 6}");
  }
  if (fives != 12) throw WrongDegreeSpectrum("number of 5-vertices is not twelve");

  DualFullerene g;
  g.n = n;
  for (int v = 0; v < n; ++v) {
    g.deg[v] = static_cast<std::int8_t>(rot[v].size());
    for (size_t s = 0; s < rot[v].size(); ++s) g.adj[v][s] = static_cast<Vertex>(rot[v][s]);
  }
  return g;
}

void validate(const DualFullerene& g) {
  std::vector<std::vector<int>> rot(g.n);
  for (int v = 0; v < g.n; ++v) {
    rot[v].assign(g.adj[v], g.adj[v] + g.deg[v]);
  }
  DualFullerene h = from_rotation_system(rot);
  if (h.n != g.n) throw NotTriangulation("validation rebuild mismatch");
}

bool is_ipr(const DualFullerene& g) {
  for (int v = 0; v < g.n; ++v) {
    if (g.deg[v] != 5) continue;
    for (int s = 0; s < 5; ++s)
      if (g.deg[g.adj[v][s]] == 5) return false;
  }
  return true;
}

int face_distance(const DualFullerene& g, int u, int v) {
  if (u == v) return 0;
  std::int16_t dist[kMaxDualV];
  std::int16_t queue[kMaxDualV];
  std::memset(dist, -1, sizeof(std::int16_t) * g.n);
  int head = 0, tail = 0;
  dist[u] = 0;
  queue[tail++] = static_cast<std::int16_t>(u);
  while (head < tail) {
    int x = queue[head++];
    for (int s = 0; s < g.deg[x]; ++s) {
      int w = g.adj[x][s];
      if (dist[w] < 0) {
        dist[w] = static_cast<std::int16_t>(dist[x] + 1);
        if (w == v) return dist[w];
        queue[tail++] = static_cast<std::int16_t>(w);
      }
    }
  }
  return -1;  // unreachable on a connected graph
}

PrimalFullerene dualize(const DualFullerene& g) {
  // Assign a face id to every dart via the three-step face walks.
  std::int16_t fid[kMaxDualV][6];
  std::memset(fid, -1, sizeof(fid));
  std::vector<std::array<Dart, 3>> face_darts;
  face_darts.reserve(g.face_count());
  for (int v = 0; v < g.n; ++v) {
    for (int s = 0; s < g.deg[v]; ++s) {
      if (fid[v][s] >= 0) continue;
      Dart d0{static_cast<Vertex>(v), static_cast<std::int8_t>(s)};
      Dart d1 = dart_next_on_face(g, d0);
      Dart d2 = dart_next_on_face(g, d1);
      int id = static_cast<int>(face_darts.size());
      fid[d0.v][d0.slot] = static_cast<std::int16_t>(id);
      fid[d1.v][d1.slot] = static_cast<std::int16_t>(id);
      fid[d2.v][d2.slot] = static_cast<std::int16_t>(id);
      face_darts.push_back({d0, d1, d2});
    }
  }

  PrimalFullerene p;
  p.n = static_cast<int>(face_darts.size());
  p.adj.resize(p.n);
  for (int f = 0; f < p.n; ++f) {
    for (int k = 0; k < 3; ++k) {
      Dart r = dart_reverse(g, face_darts[f][k]);
      p.adj[f][k] = static_cast<Vertex>(fid[r.v][r.slot]);
    }
  }

  // Primal faces: orbits of the primal face walk; the orbit entered through
  // dual vertex v has length deg(v).
  std::vector<std::array<std::int8_t, 3>> seen(p.n, {0, 0, 0});
  for (int f = 0; f < p.n; ++f) {
    for (int k = 0; k < 3; ++k) {
      if (seen[f][k]) continue;
      std::vector<Vertex> cycle;
      int cv = f, cs = k;
      do {
        seen[cv][cs] = 1;
        cycle.push_back(static_cast<Vertex>(cv));
        int w = p.adj[cv][cs];
        // next dart on this face: at w, the predecessor slot of cv
        int sw = 0;
        while (p.adj[w][sw] != cv) ++sw;
        cv = w;
        cs = (sw + 2) % 3;
      } while (cv != f || cs != k);
      p.faces.push_back(std::move(cycle));
    }
  }
  return p;
}

DualFullerene primal_to_dual(const PrimalFullerene& p) {
  // face id per primal dart (vertex, slot)
  std::vector<std::array<std::int16_t, 3>> fid(p.n, {-1, -1, -1});
  for (size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f];
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      int v = cyc[i], w = cyc[(i + 1) % k];
      int s = 0;
      while (s < 3 && p.adj[v][s] != w) ++s;
      if (s == 3) throw NotTriangulation("face list inconsistent with adjacency");
      fid[v][s] = static_cast<std::int16_t>(f);
    }
  }
  std::vector<std::vector<int>> rot(p.faces.size());
  for (size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f];
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      int v = cyc[i], w = cyc[(i + 1) % k];
      // face on the other side of edge {v, w}
      int sw = 0;
      while (sw < 3 && p.adj[w][sw] != v) ++sw;
      rot[f].push_back(fid[w][sw]);
    }
  }
  return from_rotation_system(rot);
}

}  // namespace buckyforge
