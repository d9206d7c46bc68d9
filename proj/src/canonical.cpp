#include "buckyforge/canonical.hpp"

#include <cstring>

namespace buckyforge {

namespace {

// Shared BFS emission. The Sink receives each code byte and says whether to
// keep going, which lets the comparing variant abort early.
template <typename Sink>
void emit_code(const DualFullerene& g, int v0, int s0, int dir, CodeScratch& sc, Sink&& sink) {
  ++sc.epoch;
  const std::uint32_t ep = sc.epoch;
  sc.mark[v0] = ep;
  sc.label[v0] = 1;
  sc.order[0] = static_cast<std::int16_t>(v0);
  sc.entry[v0] = static_cast<std::int8_t>(s0);
  int filled = 1;
  int next_label = 2;
  for (int pos = 0; pos < filled; ++pos) {
    int u = sc.order[pos];
    int d = g.deg[u];
    if (!sink(static_cast<std::uint8_t>(d))) return;
    int slot = sc.entry[u];
    for (int k = 0; k < d; ++k) {
      int w = g.adj[u][slot];
      slot += dir;
      if (slot == d) slot = 0;
      else if (slot < 0) slot = d - 1;
      if (sc.mark[w] != ep) {
        sc.mark[w] = ep;
        sc.label[w] = static_cast<std::int16_t>(next_label++);
        sc.entry[w] = static_cast<std::int8_t>(g.slot_of(w, u));
        sc.order[filled++] = static_cast<std::int16_t>(w);
      }
      if (!sink(static_cast<std::uint8_t>(sc.label[w]))) return;
    }
    if (!sink(0)) return;
  }
}

}  // namespace

int anchored_code_cmp2(const DualFullerene& g, int va, int sa, int dira, int vb, int sb, int dirb,
                       CodeScratch& sca, CodeScratch& scb) {
  CodeEmitter a, b;
  a.start(g, sca, va, sa, dira);
  b.start(g, scb, vb, sb, dirb);
  const int total = 8 * g.n - 12;
  for (int i = 0; i < total; ++i) {
    const std::uint8_t x = a.next();
    const std::uint8_t y = b.next();
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

int anchored_code_cmp_lazy(const DualFullerene& g, int v0, int s0, int dir, CodeScratch& scratch,
                           std::uint8_t* buf, int& have, CodeEmitter& ce) {
  const int total = 8 * g.n - 12;
  int idx = 0;
  int result = 0;
  emit_code(g, v0, s0, dir, scratch, [&](std::uint8_t x) {
    if (idx == have) {
      // Refill in bursts so the common path is a plain buffer compare.
      const int target = have + 48 < total ? have + 48 : total;
      while (have < target) buf[have++] = ce.next();
    }
    if (x != buf[idx]) {
      result = x < buf[idx] ? -1 : 1;
      return false;
    }
    ++idx;
    return true;
  });
  return result;
}

int anchored_code_write(const DualFullerene& g, int v0, int s0, int dir, std::uint8_t* out,
                        CodeScratch& sc) {
  int len = 0;
  emit_code(g, v0, s0, dir, sc, [&](std::uint8_t b) {
    out[len++] = b;
    return true;
  });
  return len;
}

int anchored_code_cmp(const DualFullerene& g, int v0, int s0, int dir, const std::uint8_t* ref,
                      CodeScratch& sc) {
  int idx = 0;
  int result = 0;
  emit_code(g, v0, s0, dir, sc, [&](std::uint8_t b) {
    if (b != ref[idx]) {
      result = b < ref[idx] ? -1 : 1;
      return false;
    }
    ++idx;
    return true;
  });
  return result;
}

CanonicalCode canonical_code(const DualFullerene& g) {
  CodeScratch sc;
  std::uint8_t best[kMaxCodeBytes];
  bool have = false;
  for (int v = 0; v < g.n; ++v) {
    if (g.deg[v] != 5) continue;
    for (int s = 0; s < 5; ++s) {
      for (int dir = -1; dir <= 1; dir += 2) {
        if (!have) {
          anchored_code_write(g, v, s, dir, best, sc);
          have = true;
        } else if (anchored_code_cmp(g, v, s, dir, best, sc) < 0) {
          anchored_code_write(g, v, s, dir, best, sc);
        }
      }
    }
  }
  CanonicalCode code;
  code.bytes.assign(best, best + (8 * g.n - 12));
  return code;
}

AutomorphismSet automorphism_darts(const DualFullerene& g) {
  CanonicalCode code = canonical_code(g);
  CodeScratch sc;
  AutomorphismSet set;
  for (int v = 0; v < g.n; ++v) {
    if (g.deg[v] != 5) continue;
    for (int s = 0; s < 5; ++s)
      for (int dir = -1; dir <= 1; dir += 2)
        if (anchored_code_cmp(g, v, s, dir, code.bytes.data(), sc) == 0)
          set.elements.push_back({Dart{static_cast<Vertex>(v), static_cast<std::int8_t>(s)}, dir});
  }
  return set;
}

bool are_isomorphic(const DualFullerene& a, const DualFullerene& b) {
  if (a.n != b.n) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace buckyforge
