#include "buckyforge/operations.hpp"

#include <cassert>
#include <cstring>

#include "buckyforge/errors.hpp"

namespace buckyforge {
namespace {

// Total order on the two walk readings of one site, used to emit each site
// from exactly one of its two end anchors.
inline std::uint32_t pack_reading(int v, int slot, int hand) {
  return (static_cast<std::uint32_t>(v) * 6 + static_cast<std::uint32_t>(slot)) * 2 +
         (hand > 0 ? 1u : 0u);
}

// Row pointers of a strip site, host labels, as the forecast core consumes
// them: straight sites use t[0..i+1], b[0..i+1]; bent sites use t[0..i],
// b[0..i-1], R, S, tp[0..j], bp[0..j-1]. Unused fields may dangle.
struct StripView {
  Vertex A, D, R, S;
  const Vertex* t;
  const Vertex* b;
  const Vertex* tp;
  const Vertex* bp;
};

// Defined with the growth-2 forecast below; declared here so the expansion
// walker can prune at the emission point, where the rows are already in hand.
bool creates_growth2_view(const DualFullerene& g, const StripView& r, OpClass cls, int i, int j,
                          int h);

// ---------------------------------------------------------------------------
// Expansion enumeration.
//
// An anchor (A, s, h) starts a strip walk at 5-vertex A: t_0 = nbr(A, s) and
// b_0 the next neighbor in hand direction h. The walk flips across the
// double row of triangles between the t-row and the b-row; a 5-vertex
// revealed at a t-position closes a straight site, and a one-bend branch can
// leave the strip at every interior position.
// ---------------------------------------------------------------------------

struct ExpWalker {
  const DualFullerene& g;
  bool ipr_only;
  bool forecast;  // drop sites whose child provably holds a growth-2 reduction
  int rem;        // vertices we may still add
  std::vector<ExpansionSite>& out;
  const WitnessSet& ws;

  std::uint8_t seen[kMaxDualV];
  Vertex tps[kMaxDualV + 2];
  Vertex bts[kMaxDualV + 2];
  // Witness bits of everything currently marked; at an emission point the
  // marks are exactly the candidate's surgery zone minus its far 5-vertex.
  std::uint32_t hitmask = 0;

  ExpWalker(const DualFullerene& gg, bool ipr, bool fc, int rem_, std::vector<ExpansionSite>& o,
            const WitnessSet& w)
      : g(gg), ipr_only(ipr), forecast(fc), rem(rem_), out(o), ws(w) {
    std::memset(seen, 0, static_cast<std::size_t>(g.n));
  }

  void mark(Vertex v, Vertex* lst, int& n) {
    seen[v] = 1;
    lst[n++] = v;
    hitmask |= ws.vbits[v];
  }

  // One-bend branch leaving the strip right after t-position reveal w.
  // Arm lengths: first arm i (>= 1), second arm grows as the branch walks.
  // zA = t_i, zB = w (becomes the bend's outer corner R), zC = b_i (= S).
  void branch(Vertex A, int s, int h, int i, Vertex zA, Vertex zB, Vertex zC) {
    Vertex bmarks[2 * kMaxDualV];
    int nbm = 0;
    const std::uint32_t hm0 = hitmask;
    mark(zB, bmarks, nbm);

    // Corner: reveal the far arm's first top across (t_i, R), then the
    // vertex beyond it across (R, t'_j) -- the first far-end candidate.
    Vertex tj = g.opposite(zA, zB, zC);
    if (!seen[tj]) {
      mark(tj, bmarks, nbm);
      // Far-arm rows in walk order; a candidate with j = bcount reads them
      // reversed: tp[a] = ft[j - a], bp[a] = fb[j - 1 - a].
      Vertex ft[kMaxDualV + 2];
      Vertex fb[kMaxDualV + 2];
      ft[0] = tj;
      Vertex tpA = tj;  // most recent far-arm top
      Vertex tpB = -1;  // the one before it
      Vertex bpA = -1;  // most recent far-arm bottom
      Vertex third = zB;
      Vertex curb = g.opposite(zB, tj, zA);
      int bcount = 0;  // far-arm bottoms so far = j of the current candidate
      for (;;) {
        if (seen[curb]) break;
        if (g.deg[curb] == 5) {
          bool ok = true;
          if (ipr_only) {
            // Flanks of the far new 5-vertex must be 6s.
            ok = bcount == 0 ? (g.deg[tj] == 6 && g.deg[zA] == 6 && g.deg[zB] == 6)
                             : (g.deg[bpA] == 6 && g.deg[tpB] == 6 && g.deg[tpA] == 6);
          }
          if (ok) {
            // Read from the far end this is B_{bcount+1, i-1}; emit from the
            // lexicographically smaller reading, breaking exact ties on the
            // packed anchor.
            const SiteKind kind{OpClass::B, static_cast<std::int16_t>(i),
                                static_cast<std::int16_t>(bcount)};
            bool emit;
            if (i <= bcount)
              emit = true;
            else if (i == bcount + 1)
              emit = pack_reading(A, s, h) <
                     pack_reading(curb, g.slot_of(curb, tpA), -h);
            else
              emit = false;
            if (emit && !ws.kills(hitmask | ws.vbits[curb], packed_triple(site_triple(kind)))) {
              bool drop = false;
              if (forecast) {
                Vertex tpl[kMaxDualV + 2];
                Vertex bpl[kMaxDualV + 2];
                for (int a = 0; a <= bcount; ++a) tpl[a] = ft[bcount - a];
                for (int a = 0; a < bcount; ++a) bpl[a] = fb[bcount - 1 - a];
                drop = creates_growth2_view(g, StripView{A, curb, zB, zC, tps, bts, tpl, bpl},
                                            OpClass::B, i, bcount, h);
              }
              if (!drop)
                out.push_back(ExpansionSite{kind, static_cast<std::int8_t>(h),
                                            Dart{A, static_cast<std::int8_t>(s)}});
            }
          }
        }
        if (i + bcount + 3 > rem) break;  // next candidate would grow too far
        mark(curb, bmarks, nbm);
        fb[bcount] = curb;
        Vertex nt = g.opposite(tpA, curb, third);
        if (seen[nt]) break;
        mark(nt, bmarks, nbm);
        ft[bcount + 1] = nt;
        Vertex nb = g.opposite(nt, curb, tpA);
        tpB = tpA;
        tpA = nt;
        bpA = curb;
        third = bpA;
        curb = nb;
        ++bcount;
      }
    }
    while (nbm > 0) seen[bmarks[--nbm]] = 0;
    hitmask = hm0;
  }

  void run(Vertex A, int s, int h) {
    hitmask = 0;
    Vertex t0 = g.nbr(A, s);
    Vertex b0 = g.nbr(A, g.cyc(A, s, h));
    // Flanks of the near new 5-vertex: required 6s for every site here.
    if (ipr_only && (g.deg[t0] != 6 || g.deg[b0] != 6)) return;
    Vertex t1 = g.opposite(t0, b0, A);
    if (ipr_only && g.deg[t1] != 6) return;

    Vertex mlist[2 * kMaxDualV + 4];
    int nm = 0;
    mark(A, mlist, nm);
    mark(t0, mlist, nm);
    mark(b0, mlist, nm);
    if (seen[t1]) {  // cannot happen in a simple triangulation; stay safe
      while (nm > 0) seen[mlist[--nm]] = 0;
      return;
    }
    mark(t1, mlist, nm);
    tps[0] = t0;
    tps[1] = t1;
    bts[0] = b0;

    int k = 1;
    while (k + 1 <= rem) {
      Vertex bk = g.opposite(tps[k], bts[k - 1], tps[k - 1]);
      if (seen[bk]) break;
      mark(bk, mlist, nm);
      bts[k] = bk;
      Vertex w = g.opposite(tps[k], bk, bts[k - 1]);
      if (seen[w]) break;
      if (g.deg[w] == 5) {
        // Straight site with i = k-1 interior vertices, far 5-vertex w.
        bool ok = true;
        if (ipr_only)
          ok = k >= 2 && g.deg[tps[k]] == 6 && g.deg[bts[k - 1]] == 6 && g.deg[bk] == 6;
        if (ok) {
          const std::uint64_t key = (static_cast<std::uint64_t>(k + 1) << 48) |
                                    (static_cast<std::uint64_t>(k - 1) << 16);
          if (!ws.kills(hitmask | ws.vbits[w], key) &&
              pack_reading(A, s, h) < pack_reading(w, g.slot_of(w, bk), h) &&
              !(forecast && k >= 2 &&
                creates_growth2_view(g, StripView{A, w, -1, -1, tps, bts, nullptr, nullptr},
                                     OpClass::L, k - 1, 0, h)))
            out.push_back(ExpansionSite{
                SiteKind{OpClass::L, static_cast<std::int16_t>(k - 1), 0},
                static_cast<std::int8_t>(h), Dart{A, static_cast<std::int8_t>(s)}});
        }
      }
      if (k + 2 <= rem) branch(A, s, h, k, tps[k], w, bk);
      mark(w, mlist, nm);
      tps[k + 1] = w;
      ++k;
    }
    while (nm > 0) seen[mlist[--nm]] = 0;
  }
};

// An all-zero witness set: hitmask stays 0 and kills() is always false.
const WitnessSet kNoWitnesses{};

// ---------------------------------------------------------------------------
// Shared row geometry.
//
// Rows of the strip a site spans, in host labels for expansions and child
// labels for reductions. For straight sites: tops t_0..t_{i+1}, bottoms
// b_0..b_{i+1}, far 5-vertex D. For bent sites: near arm tops t_0..t_i and
// bottoms b_0..b_{i-1}, bend corner R and its inner partner S, far arm tops
// tp[0..j] and bottoms bp[0..j-1] (ascending by far-arm position), far
// 5-vertex D.
// ---------------------------------------------------------------------------

struct Rows {
  Vertex A = -1, D = -1, R = -1, S = -1;
  Vertex t[kMaxDualV + 2];
  Vertex b[kMaxDualV + 2];
  Vertex tp[kMaxDualV + 2];
  Vertex bp[kMaxDualV + 2];
};

// Rows of an expansion site, recovered by re-walking the strip from the
// anchor on the parent graph.
void collect_expansion_rows(const DualFullerene& g, const ExpansionSite& s, Rows& r) {
  const int h = s.hand, i = s.kind.i, j = s.kind.j;
  const Vertex A = s.anchor.v;
  const int sl = s.anchor.slot;
  r.A = A;
  r.t[0] = g.nbr(A, sl);
  r.b[0] = g.nbr(A, g.cyc(A, sl, h));
  r.t[1] = g.opposite(r.t[0], r.b[0], A);
  if (s.kind.cls == OpClass::L) {
    for (int k = 1; k <= i; ++k) {
      r.b[k] = g.opposite(r.t[k], r.b[k - 1], r.t[k - 1]);
      r.t[k + 1] = g.opposite(r.t[k], r.b[k], r.b[k - 1]);
    }
    r.b[i + 1] = g.opposite(r.t[i + 1], r.b[i], r.t[i]);
    r.D = g.opposite(r.t[i + 1], r.b[i + 1], r.b[i]);
  } else {
    for (int k = 1; k <= i - 1; ++k) {
      r.b[k] = g.opposite(r.t[k], r.b[k - 1], r.t[k - 1]);
      r.t[k + 1] = g.opposite(r.t[k], r.b[k], r.b[k - 1]);
    }
    r.S = g.opposite(r.t[i], r.b[i - 1], r.t[i - 1]);
    r.R = g.opposite(r.t[i], r.S, r.b[i - 1]);
    Vertex tj = g.opposite(r.t[i], r.R, r.S);
    Vertex x = g.opposite(r.R, tj, r.t[i]);
    if (j == 0) {
      r.tp[0] = tj;
      r.D = x;
    } else {
      r.tp[j] = tj;
      r.bp[j - 1] = x;
      Vertex tpA = tj, curb = x, third = r.R;
      for (int a = j - 1; a >= 0; --a) {
        Vertex nt = g.opposite(tpA, curb, third);
        r.tp[a] = nt;
        Vertex nb = g.opposite(nt, curb, tpA);
        if (a == 0)
          r.D = nb;
        else
          r.bp[a - 1] = nb;
        third = curb;
        tpA = nt;
        curb = nb;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Surgery.
// ---------------------------------------------------------------------------

// Builds the rotation splice() would install at v into out, reading g only:
// the clockwise run strictly between x and y is replaced by repl (h = +1).
// With h = -1 the run between y and x is replaced by repl reversed, which is
// the same rewrite on the mirrored site. Returns the new length.
int spliced_row(const DualFullerene& g, Vertex v, Vertex x, Vertex y, const Vertex* repl,
                int rlen, int h, Vertex* out) {
  Vertex rbuf[6];
  if (h < 0) {
    Vertex tswap = x;
    x = y;
    y = tswap;
    for (int a = 0; a < rlen; ++a) rbuf[a] = repl[rlen - 1 - a];
    repl = rbuf;
  }
  const int d = g.deg[v];
  const int sx = g.slot_of(v, x);
  assert(sx >= 0);
  int nt = 0;
  out[nt++] = x;
  for (int a = 0; a < rlen; ++a) out[nt++] = repl[a];
  int slot = sx + 1 == d ? 0 : sx + 1;
  while (g.adj[v][slot] != y) {  // skip the replaced run
    ++slot;
    if (slot == d) slot = 0;
  }
  while (slot != sx) {
    out[nt++] = g.adj[v][slot];
    ++slot;
    if (slot == d) slot = 0;
  }
  return nt;
}

void splice(DualFullerene& g, Vertex v, Vertex x, Vertex y, const Vertex* repl, int rlen, int h) {
  Vertex tmp[6];
  const int nt = spliced_row(g, v, x, y, repl, rlen, h, tmp);
  assert(nt <= 6);
  g.deg[v] = static_cast<std::int8_t>(nt);
  std::memcpy(g.adj[v], tmp, sizeof(Vertex) * static_cast<std::size_t>(nt));
}

// Writes a brand-new rotation (given clockwise for hand +1; reversed for -1).
void set_row(DualFullerene& g, Vertex v, const Vertex* row, int len, int h) {
  g.deg[v] = static_cast<std::int8_t>(len);
  if (h > 0)
    for (int a = 0; a < len; ++a) g.adj[v][a] = row[a];
  else
    for (int a = 0; a < len; ++a) g.adj[v][a] = row[len - 1 - a];
}

struct UndoRecorder {
  ExpansionUndo& u;
  DualFullerene& g;
  void rec(Vertex v) {
    u.ids[u.count] = v;
    u.degs[u.count] = g.deg[v];
    std::memcpy(u.rows[u.count], g.adj[v], sizeof(Vertex) * 6);
    ++u.count;
  }
};

}  // namespace

SiteTriple site_triple(const SiteKind& k) {
  if (k.cls == OpClass::L)
    return SiteTriple{static_cast<std::int16_t>(k.i + 2), 0, k.i, 0};
  std::int16_t ii = k.i, jj = k.j;
  const std::int16_t ri = static_cast<std::int16_t>(k.j + 1);
  const std::int16_t rj = static_cast<std::int16_t>(k.i - 1);
  if (ri < ii || (ri == ii && rj < jj)) {
    ii = ri;
    jj = rj;
  }
  return SiteTriple{static_cast<std::int16_t>(k.i + k.j + 2), 1, ii, jj};
}

void enumerate_expansions(const DualFullerene& g, bool ipr_only, int max_vertices,
                          std::vector<ExpansionSite>& out) {
  enumerate_expansions(g, ipr_only, max_vertices, out, nullptr);
}

void enumerate_expansions(const DualFullerene& g, bool ipr_only, int max_vertices,
                          std::vector<ExpansionSite>& out, const WitnessSet* prune) {
  out.clear();
  int rem = max_vertices - g.n;
  if (rem > kMaxDualV - g.n) rem = kMaxDualV - g.n;
  if (rem < 2) return;
  ExpWalker walker(g, ipr_only, rem, out, prune ? *prune : kNoWitnesses);
  for (Vertex A = 0; A < g.n; ++A) {
    if (g.deg[A] != 5) continue;
    for (int s = 0; s < 5; ++s) {
      walker.run(A, s, +1);
      walker.run(A, s, -1);
    }
  }
}

void apply_expansion(DualFullerene& g, const ExpansionSite& s, ExpansionUndo& undo) {
  Rows r;
  collect_expansion_rows(g, s, r);
  const int h = s.hand, i = s.kind.i, j = s.kind.j;
  undo.old_n = g.n;
  undo.count = 0;
  UndoRecorder rec{undo, g};

  if (s.kind.cls == OpClass::L) {
    rec.rec(r.A);
    rec.rec(r.D);
    for (int k = 0; k <= i + 1; ++k) rec.rec(r.t[k]);
    for (int k = 0; k <= i + 1; ++k) rec.rec(r.b[k]);

    Vertex M[kMaxDualV + 2];
    for (int k = 0; k <= i + 1; ++k) M[k] = static_cast<Vertex>(g.n + k);
    g.n += i + 2;

    {
      Vertex rp[2];
      rp[0] = M[0];
      splice(g, r.A, r.t[0], r.b[0], rp, 1, h);
      splice(g, r.t[0], r.t[1], r.A, rp, 1, h);
      for (int k = 1; k <= i; ++k) {
        rp[0] = M[k];
        rp[1] = M[k - 1];
        splice(g, r.t[k], r.t[k + 1], r.t[k - 1], rp, 2, h);
      }
      rp[0] = M[i + 1];
      rp[1] = M[i];
      splice(g, r.t[i + 1], r.D, r.t[i], rp, 2, h);
      rp[0] = M[i + 1];
      splice(g, r.D, r.b[i + 1], r.t[i + 1], rp, 1, h);
      splice(g, r.b[i + 1], r.b[i], r.D, rp, 1, h);
      for (int k = 1; k <= i; ++k) {
        rp[0] = M[k];
        rp[1] = M[k + 1];
        splice(g, r.b[k], r.b[k - 1], r.b[k + 1], rp, 2, h);
      }
      rp[0] = M[0];
      rp[1] = M[1];
      splice(g, r.b[0], r.A, r.b[1], rp, 2, h);
    }

    Vertex row[6];
    row[0] = r.A;
    row[1] = r.t[0];
    row[2] = r.t[1];
    row[3] = M[1];
    row[4] = r.b[0];
    set_row(g, M[0], row, 5, h);
    for (int k = 1; k <= i; ++k) {
      row[0] = M[k - 1];
      row[1] = r.t[k];
      row[2] = r.t[k + 1];
      row[3] = M[k + 1];
      row[4] = r.b[k];
      row[5] = r.b[k - 1];
      set_row(g, M[k], row, 6, h);
    }
    row[0] = M[i];
    row[1] = r.t[i + 1];
    row[2] = r.D;
    row[3] = r.b[i + 1];
    row[4] = r.b[i];
    set_row(g, M[i + 1], row, 5, h);
    return;
  }

  // Bent site.
  rec.rec(r.A);
  rec.rec(r.D);
  rec.rec(r.R);
  rec.rec(r.S);
  for (int k = 0; k <= i; ++k) rec.rec(r.t[k]);
  for (int k = 0; k <= i - 1; ++k) rec.rec(r.b[k]);
  for (int a = 0; a <= j; ++a) rec.rec(r.tp[a]);
  for (int a = 0; a <= j - 1; ++a) rec.rec(r.bp[a]);

  Vertex M[kMaxDualV + 2];
  Vertex N[kMaxDualV + 2];
  for (int k = 0; k <= i; ++k) M[k] = static_cast<Vertex>(g.n + k);
  for (int a = 0; a <= j; ++a) N[a] = static_cast<Vertex>(g.n + i + 1 + (j - a));
  g.n += i + j + 2;

  {
    Vertex rp[3];
    rp[0] = M[0];
    splice(g, r.A, r.t[0], r.b[0], rp, 1, h);
    splice(g, r.t[0], r.t[1], r.A, rp, 1, h);
    for (int k = 1; k <= i - 1; ++k) {
      rp[0] = M[k];
      rp[1] = M[k - 1];
      splice(g, r.t[k], r.t[k + 1], r.t[k - 1], rp, 2, h);
    }
    rp[0] = N[j];
    rp[1] = M[i];
    rp[2] = M[i - 1];
    splice(g, r.t[i], j >= 1 ? r.tp[j] : r.tp[0], r.t[i - 1], rp, 3, h);
    if (j >= 1) {
      rp[0] = N[j - 1];
      rp[1] = N[j];
      splice(g, r.tp[j], r.tp[j - 1], r.t[i], rp, 2, h);
      for (int k = 1; k <= j - 1; ++k) {
        rp[0] = N[k - 1];
        rp[1] = N[k];
        splice(g, r.tp[k], r.tp[k - 1], r.tp[k + 1], rp, 2, h);
      }
      rp[0] = N[0];
      splice(g, r.tp[0], r.D, r.tp[1], rp, 1, h);
      splice(g, r.D, r.bp[0], r.tp[0], rp, 1, h);
      for (int k = 0; k <= j - 2; ++k) {
        rp[0] = N[k + 1];
        rp[1] = N[k];
        splice(g, r.bp[k], r.bp[k + 1], k >= 1 ? r.bp[k - 1] : r.D, rp, 2, h);
      }
      rp[0] = N[j];
      rp[1] = N[j - 1];
      splice(g, r.bp[j - 1], r.R, j >= 2 ? r.bp[j - 2] : r.D, rp, 2, h);
      rp[0] = M[i];
      rp[1] = N[j];
      splice(g, r.R, r.S, r.bp[j - 1], rp, 2, h);
    } else {
      rp[0] = N[0];
      splice(g, r.tp[0], r.D, r.t[i], rp, 1, h);
      splice(g, r.D, r.R, r.tp[0], rp, 1, h);
      rp[0] = M[i];
      rp[1] = N[0];
      splice(g, r.R, r.S, r.D, rp, 2, h);
    }
    rp[0] = M[i];
    splice(g, r.S, r.b[i - 1], r.R, rp, 1, h);
    rp[0] = M[i - 1];
    rp[1] = M[i];
    splice(g, r.b[i - 1], i >= 2 ? r.b[i - 2] : r.A, r.S, rp, 2, h);
    for (int k = 0; k <= i - 2; ++k) {
      rp[0] = M[k];
      rp[1] = M[k + 1];
      splice(g, r.b[k], k >= 1 ? r.b[k - 1] : r.A, r.b[k + 1], rp, 2, h);
    }
  }

  Vertex row[6];
  row[0] = r.A;
  row[1] = r.t[0];
  row[2] = r.t[1];
  row[3] = M[1];
  row[4] = r.b[0];
  set_row(g, M[0], row, 5, h);
  for (int k = 1; k <= i - 1; ++k) {
    row[0] = M[k - 1];
    row[1] = r.t[k];
    row[2] = r.t[k + 1];
    row[3] = M[k + 1];
    row[4] = r.b[k];
    row[5] = r.b[k - 1];
    set_row(g, M[k], row, 6, h);
  }
  row[0] = M[i - 1];
  row[1] = r.t[i];
  row[2] = N[j];
  row[3] = r.R;
  row[4] = r.S;
  row[5] = r.b[i - 1];
  set_row(g, M[i], row, 6, h);
  if (j >= 1) {
    row[0] = N[j - 1];
    row[1] = r.bp[j - 1];
    row[2] = r.R;
    row[3] = M[i];
    row[4] = r.t[i];
    row[5] = r.tp[j];
    set_row(g, N[j], row, 6, h);
    for (int k = 1; k <= j - 1; ++k) {
      row[0] = N[k - 1];
      row[1] = r.bp[k - 1];
      row[2] = r.bp[k];
      row[3] = N[k + 1];
      row[4] = r.tp[k + 1];
      row[5] = r.tp[k];
      set_row(g, N[k], row, 6, h);
    }
    row[0] = r.D;
    row[1] = r.bp[0];
    row[2] = N[1];
    row[3] = r.tp[1];
    row[4] = r.tp[0];
    set_row(g, N[0], row, 5, h);
  } else {
    row[0] = r.D;
    row[1] = r.R;
    row[2] = M[i];
    row[3] = r.t[i];
    row[4] = r.tp[0];
    set_row(g, N[0], row, 5, h);
  }
}

void undo_expansion(DualFullerene& g, const ExpansionUndo& undo) {
  g.n = undo.old_n;
  for (int a = 0; a < undo.count; ++a) {
    const Vertex v = undo.ids[a];
    g.deg[v] = undo.degs[a];
    std::memcpy(g.adj[v], undo.rows[a], sizeof(Vertex) * 6);
  }
}

// ---------------------------------------------------------------------------
// Growth-2 forecast.
//
// A child holding a reduction of growth 2 is never canonical unless that is
// the growth of the inverse just applied, and such a reduction, when the
// expansion creates one, always pairs an inserted 5-vertex with a kept one.
// Everything the reduction walker would ask about that pair -- degrees,
// rotations of the pair, adjacency around it -- is already determined by the
// host plus the site's rows, so the question can be settled without
// performing the surgery at all.
// ---------------------------------------------------------------------------

namespace {

// Answers degree and adjacency queries about the not-yet-built child of an
// expansion. Inserted vertices carry their future ids n0..n0+growth-1.
struct ChildView {
  const DualFullerene& g;
  const StripView& r;
  OpClass cls;
  int i, j, h;
  Vertex n0;    // host vertex count, future id of the near inserted 5-vertex
  Vertex last;  // future id of the far inserted 5-vertex
  // Host edges the surgery removes (both endpoints survive, their rotations
  // are rewritten). 2 * growth - 1 pairs.
  Vertex du[2 * kMaxDualV + 4];
  Vertex dv[2 * kMaxDualV + 4];
  int ndead = 0;

  void dead(Vertex u, Vertex v) {
    du[ndead] = u;
    dv[ndead] = v;
    ++ndead;
  }

  void fill_dead() {
    if (cls == OpClass::L) {
      for (int k = 0; k <= i + 1; ++k) dead(r.t[k], r.b[k]);
      for (int k = 0; k <= i; ++k) dead(r.t[k + 1], r.b[k]);
      return;
    }
    for (int k = 0; k <= i - 1; ++k) dead(r.t[k], r.b[k]);
    for (int k = 0; k <= i - 2; ++k) dead(r.t[k + 1], r.b[k]);
    dead(r.t[i], r.b[i - 1]);
    dead(r.t[i], r.R);
    dead(r.t[i], r.S);
    dead(r.R, j >= 1 ? r.tp[j] : r.tp[0]);
    for (int k = 0; k <= j - 1; ++k) dead(r.tp[k], r.bp[k]);
    for (int k = 0; k <= j - 1; ++k) dead(r.tp[k + 1], r.bp[k]);
  }

  bool edge_removed(Vertex u, Vertex v) const {
    for (int a = 0; a < ndead; ++a)
      if ((du[a] == u && dv[a] == v) || (du[a] == v && dv[a] == u)) return true;
    return false;
  }

  int deg(Vertex v) const {
    if (v >= n0) return v == n0 || v == last ? 5 : 6;
    if (v == r.A || v == r.D) return 6;
    return g.deg[v];
  }

  // Membership of kept vertex o in the future rotation of inserted vertex m.
  bool inserted_adj(Vertex m, Vertex o) const {
    const int k = m - n0;
    if (k == 0) return o == r.A || o == r.t[0] || o == r.t[1] || o == r.b[0];
    if (cls == OpClass::L) {
      if (k == i + 1) return o == r.t[i + 1] || o == r.D || o == r.b[i + 1] || o == r.b[i];
      return o == r.t[k] || o == r.t[k + 1] || o == r.b[k] || o == r.b[k - 1];
    }
    if (k <= i - 1) return o == r.t[k] || o == r.t[k + 1] || o == r.b[k] || o == r.b[k - 1];
    if (k == i) return o == r.t[i] || o == r.R || o == r.S || o == r.b[i - 1];
    const int a = i + 1 + j - k;  // far-arm position
    if (a == 0) {
      if (j == 0) return o == r.D || o == r.R || o == r.t[i] || o == r.tp[0];
      return o == r.D || o == r.bp[0] || o == r.tp[1] || o == r.tp[0];
    }
    if (a == j) return o == r.bp[j - 1] || o == r.R || o == r.t[i] || o == r.tp[j];
    return o == r.bp[a - 1] || o == r.bp[a] || o == r.tp[a + 1] || o == r.tp[a];
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (u >= n0 || v >= n0) {
      // The inserted chain is adjacent exactly at consecutive ids, for both
      // shapes; everything else goes through an inserted vertex's rotation.
      if (u >= n0 && v >= n0) return u - v == 1 || v - u == 1;
      return u >= n0 ? inserted_adj(u, v) : inserted_adj(v, u);
    }
    return g.adjacent(u, v) && !edge_removed(u, v);
  }
};

// The reduction walker's conditions for a growth-2 site on the would-be pair
// (pent, X), evaluated on the child view. T is pent's future rotation in
// set_row order (clockwise when the site hand is +1), X sits at T[pos], and
// estep walks T; xrow is X's future rotation, always clockwise. Checks one
// reading hand; the mirror is estep = -estep.
bool l0_reading_ok(const ChildView& c, const Vertex* T, int pos, Vertex pent, const Vertex* xrow,
                   int estep) {
  const auto tat = [&](int k) {
    int a = (pos + k * estep) % 5;
    if (a < 0) a += 5;
    return T[a];
  };
  const Vertex b0 = tat(1), A = tat(2), t0 = tat(3), t1 = tat(4);
  if (c.deg(A) != 6) return false;
  int ent = 0;
  while (xrow[ent] != pent) ++ent;
  const int dd = c.h > 0 ? estep : -estep;  // clockwise hand of this reading
  const auto xat = [&](int k) {
    int a = (ent + k * dd) % 5;
    if (a < 0) a += 5;
    return xrow[a];
  };
  assert(xat(1) == t1 && xat(4) == b0);
  const Vertex D = xat(2), bEnd = xat(3);
  if (c.deg(D) != 6) return false;
  if (D == A || D == t0 || bEnd == A || bEnd == t0) return false;
  if (c.adjacent(t0, b0) || c.adjacent(t1, bEnd) || c.adjacent(t1, b0)) return false;
  return true;
}

bool creates_growth2_view(const DualFullerene& g, const StripView& r, OpClass cls, int i, int j,
                          int h) {
  ChildView c{g,   r, cls, i, j, h, static_cast<Vertex>(g.n),
              static_cast<Vertex>(g.n + i + j + 1)};
  c.fill_dead();
  const Vertex n0 = c.n0;

  // The candidate pairs: each inserted 5-vertex against the kept deg-5
  // vertices of its future rotation, with the splice that rewrites the kept
  // vertex's rotation.
  struct Probe {
    const Vertex* T;
    Vertex pent;
    int pos;
    Vertex x, y;
    Vertex repl[3];
    int rlen;
  };
  Probe probes[6];
  int np = 0;
  const auto add = [&](const Vertex* T, Vertex pent, int pos, Vertex x, Vertex y, Vertex r0,
                       Vertex r1, Vertex r2, int rlen) {
    if (g.deg[T[pos]] != 5) return;
    probes[np++] = Probe{T, pent, pos, x, y, {r0, r1, r2}, rlen};
  };

  const Vertex M0 = n0;
  const Vertex M1 = static_cast<Vertex>(n0 + 1);
  const Vertex T1[5] = {r.A, r.t[0], r.t[1], M1, r.b[0]};
  Vertex T2[5];
  if (cls == OpClass::L) {
    const Vertex Mi = static_cast<Vertex>(n0 + i);
    const Vertex Me = c.last;  // M_{i+1}
    T2[0] = Mi;
    T2[1] = r.t[i + 1];
    T2[2] = r.D;
    T2[3] = r.b[i + 1];
    T2[4] = r.b[i];
    add(T1, M0, 1, r.t[1], r.A, M0, -1, -1, 1);
    add(T1, M0, 2, r.t[2], r.t[0], M1, M0, -1, 2);
    add(T1, M0, 4, r.A, r.b[1], M0, M1, -1, 2);
    add(T2, Me, 1, r.D, r.t[i], Me, Mi, -1, 2);
    add(T2, Me, 3, r.b[i], r.D, Me, -1, -1, 1);
    add(T2, Me, 4, r.b[i - 1], r.b[i + 1], Mi, Me, -1, 2);
  } else {
    const Vertex Mi = static_cast<Vertex>(n0 + i);
    const Vertex Nj = static_cast<Vertex>(n0 + i + 1);
    const Vertex N0 = c.last;  // N_0 = n0 + i + 1 + j
    add(T1, M0, 1, r.t[1], r.A, M0, -1, -1, 1);
    if (i >= 2)
      add(T1, M0, 2, r.t[2], r.t[0], M1, M0, -1, 2);
    else
      add(T1, M0, 2, j >= 1 ? r.tp[j] : r.tp[0], r.t[0], Nj, M1, M0, 3);
    add(T1, M0, 4, r.A, i >= 2 ? r.b[1] : r.S, M0, M1, -1, 2);
    if (j >= 1) {
      const Vertex N1 = static_cast<Vertex>(N0 - 1);
      T2[0] = r.D;
      T2[1] = r.bp[0];
      T2[2] = N1;
      T2[3] = r.tp[1];
      T2[4] = r.tp[0];
      add(T2, N0, 1, j >= 2 ? r.bp[1] : r.R, r.D, N1, N0, -1, 2);
      add(T2, N0, 3, r.tp[0], j >= 2 ? r.tp[2] : r.t[i], N0, N1, -1, 2);
      add(T2, N0, 4, r.D, r.tp[1], N0, -1, -1, 1);
    } else {
      T2[0] = r.D;
      T2[1] = r.R;
      T2[2] = Mi;
      T2[3] = r.t[i];
      T2[4] = r.tp[0];
      add(T2, N0, 1, r.S, r.D, Mi, N0, -1, 2);
      add(T2, N0, 3, r.tp[0], r.t[i - 1], N0, Mi, static_cast<Vertex>(n0 + i - 1), 3);
      add(T2, N0, 4, r.D, r.t[i], N0, -1, -1, 1);
    }
  }

  Vertex xrow[6];
  for (int a = 0; a < np; ++a) {
    const Probe& p = probes[a];
    const int xn = spliced_row(g, p.T[p.pos], p.x, p.y, p.repl, p.rlen, h, xrow);
    (void)xn;
    assert(xn == 5);
    if (l0_reading_ok(c, p.T, p.pos, p.pent, xrow, +1)) return true;
    if (l0_reading_ok(c, p.T, p.pos, p.pent, xrow, -1)) return true;
  }
  return false;
}

}  // namespace

bool expansion_creates_growth2(const DualFullerene& g, const ExpansionSite& s) {
  assert(growth(s.kind) >= 3);
  Rows r;
  collect_expansion_rows(g, s, r);
  return creates_growth2_view(g, StripView{r.A, r.D, r.R, r.S, r.t, r.b, r.tp, r.bp}, s.kind.cls,
                              s.kind.i, s.kind.j, s.hand);
}

// ---------------------------------------------------------------------------
// Reduction enumeration.
//
// An anchor (m0, e, h) reads the removed path from 5-vertex m0 toward
// nbr(m0, e). The side vertex A = nbr(m0, e+2h) gains the degree m0 loses.
// The walk goes straight through 6-vertices (exit entry+3) and may bend once
// (exit entry+2h); it ends at the next 5-vertex on the path. Marks:
// 2 = removed path, 1 = kept rows.
// ---------------------------------------------------------------------------

struct RedWalker {
  const DualFullerene& g;
  bool ipr_only;
  int max_growth;
  int max_turnpos;
  bool first_only;
  std::vector<ReductionSite>& out;

  std::uint8_t mk[kMaxDualV];
  Vertex tps[kMaxDualV + 2];
  Vertex bts[kMaxDualV + 2];
  int ntp = 0, nbt = 0;
  Vertex A = -1;
  Vertex m0 = -1;
  int e = 0, h = 0;
  bool stop = false;

  // Adjacent 5-5 pairs of the host; a valid IPR reduction must delete at
  // least one endpoint of each (empty whenever the host is IPR).
  std::vector<std::pair<Vertex, Vertex>> bad;

  RedWalker(const DualFullerene& gg, bool ipr, int mg, int mt, bool fo,
            std::vector<ReductionSite>& o)
      : g(gg), ipr_only(ipr), max_growth(mg), max_turnpos(mt), first_only(fo), out(o) {
    std::memset(mk, 0, static_cast<std::size_t>(g.n));
    if (ipr_only) {
      for (Vertex v = 0; v < g.n; ++v) {
        if (g.deg[v] != 5) continue;
        for (int s = 0; s < 5; ++s) {
          Vertex w = g.adj[v][s];
          if (g.deg[w] == 5 && v < w) bad.emplace_back(v, w);
        }
      }
    }
  }

  bool chord_or_bad5(Vertex x, Vertex y) const {
    if (g.adjacent(x, y)) return true;  // refill edge would be a double edge
    if (ipr_only && g.deg[x] == 5 && g.deg[y] == 5) return true;
    return false;
  }

  // IPR of the reduced graph, beyond refill-edge checks: the two vertices
  // gaining a pentagon must not touch a surviving 5 or each other, and every
  // host 5-5 pair must lose an endpoint.
  bool ipr_sides_ok(Vertex D) const {
    for (int s = 0; s < 6; ++s) {
      Vertex w = g.adj[A][s];
      if (w == D) return false;
      if (g.deg[w] == 5 && mk[w] != 2) return false;
    }
    for (int s = 0; s < 6; ++s) {
      Vertex w = g.adj[D][s];
      if (g.deg[w] == 5 && mk[w] != 2) return false;
    }
    for (const auto& p : bad)
      if (mk[p.first] != 2 && mk[p.second] != 2) return false;
    return true;
  }

  void emit(OpClass cls, int i, int j) {
    out.push_back(ReductionSite{
        SiteKind{cls, static_cast<std::int16_t>(i), static_cast<std::int16_t>(j)},
        static_cast<std::int8_t>(h), Dart{m0, static_cast<std::int8_t>(e)}});
    if (first_only) stop = true;
  }

  // Path ended straight at 5-vertex cur after `steps` path edges: candidate
  // L_{steps-1}.
  void straight_end(Vertex cur, int ent, int steps) {
    const int i = steps - 1;
    Vertex D = g.nbr(cur, g.cyc(cur, ent, 2 * h));
    Vertex bEnd = g.nbr(cur, g.cyc(cur, ent, 3 * h));
    if (g.deg[D] != 6 || mk[D] || mk[bEnd]) return;
    assert(g.nbr(cur, g.cyc(cur, ent, h)) == tps[ntp - 1]);
    assert(g.nbr(cur, g.cyc(cur, ent, 4 * h)) == bts[nbt - 1]);
    // Emit from the smaller of the two readings (the far reading keeps h).
    // An existence scan takes whichever reading comes first.
    if (!first_only && pack_reading(m0, e, h) > pack_reading(cur, ent, h)) return;
    for (int a = 0; a <= i; ++a)
      if (chord_or_bad5(tps[a], bts[a])) return;
    if (chord_or_bad5(tps[i + 1], bEnd)) return;
    for (int a = 0; a <= i; ++a)
      if (chord_or_bad5(tps[a + 1], bts[a])) return;
    if (ipr_only && !ipr_sides_ok(D)) return;
    emit(OpClass::L, i, 0);
  }

  // Path bent at step `turnpos` and ended at 5-vertex cur after `steps`
  // edges: candidate B_{turnpos, steps-turnpos-1}.
  void bent_end(Vertex cur, int ent, int turnpos, int steps, Vertex R, Vertex S,
                const Vertex* tp2, const Vertex* bp2, int n2) {
    const int i = turnpos, j = steps - turnpos - 1;
    assert(n2 == j);
    Vertex D = g.nbr(cur, g.cyc(cur, ent, -2 * h));
    Vertex tp0 = g.nbr(cur, g.cyc(cur, ent, 2 * h));
    if (g.deg[D] != 6 || mk[D] || mk[tp0]) return;
    // Normalized reading: the far reading is B_{j+1, i-1} with hand -h.
    if (!first_only) {
      if (i > j + 1) return;
      if (i == j + 1 && pack_reading(m0, e, h) > pack_reading(cur, ent, -h)) return;
    }
    for (int a = 0; a <= i - 1; ++a)
      if (chord_or_bad5(tps[a], bts[a])) return;
    for (int a = 0; a <= i - 1; ++a)
      if (chord_or_bad5(tps[a + 1], bts[a])) return;
    if (chord_or_bad5(tps[i], S) || chord_or_bad5(tps[i], R)) return;
    if (chord_or_bad5(R, j >= 1 ? tp2[0] : tp0)) return;
    // Far arm, walk order tp2 = t'_j..t'_1, bp2 = b'_{j-1}..b'_0.
    for (int x = 0; x < j; ++x) {
      Vertex hi = tp2[x];                      // t'_{j-x}
      Vertex lo = x + 1 < j ? tp2[x + 1] : tp0;  // t'_{j-x-1}
      Vertex bo = bp2[x];                      // b'_{j-1-x}
      if (chord_or_bad5(lo, bo)) return;       // vertical
      if (chord_or_bad5(hi, bo)) return;       // diagonal
    }
    if (ipr_only && !ipr_sides_ok(D)) return;
    emit(OpClass::B, i, j);
  }

  // One-bend continuation leaving the straight path at 6-vertex tv.
  void turn_branch(Vertex tv, int entT, int turnpos) {
    Vertex R = g.nbr(tv, g.cyc(tv, entT, 3));
    Vertex S = g.nbr(tv, g.cyc(tv, entT, 4 * h));
    if (mk[R] || mk[S]) return;
    Vertex blist[2 * kMaxDualV + 4];
    int nb = 0;
    mk[R] = 1;
    blist[nb++] = R;
    mk[S] = 1;
    blist[nb++] = S;
    Vertex tp2[kMaxDualV + 2];
    Vertex bp2[kMaxDualV + 2];
    int n2 = 0;
    Vertex prev = tv;
    Vertex cur = g.nbr(tv, g.cyc(tv, entT, 2 * h));
    int steps = turnpos + 1;
    while (steps + 1 <= max_growth) {
      if (mk[cur]) break;
      int ent = g.slot_of(cur, prev);
      mk[cur] = 2;
      blist[nb++] = cur;
      if (g.deg[cur] == 5) {
        bent_end(cur, ent, turnpos, steps, R, S, tp2, bp2, n2);
        break;
      }
      Vertex Q2 = g.nbr(cur, g.cyc(cur, ent, 2 * h));
      Vertex Q4 = g.nbr(cur, g.cyc(cur, ent, 4 * h));
      if (mk[Q2] || mk[Q4]) break;
      mk[Q2] = 1;
      blist[nb++] = Q2;
      mk[Q4] = 1;
      blist[nb++] = Q4;
      tp2[n2] = Q2;
      bp2[n2] = Q4;
      ++n2;
      prev = cur;
      cur = g.nbr(cur, g.cyc(cur, ent, 3));
      ++steps;
      if (stop) break;
    }
    while (nb > 0) mk[blist[--nb]] = 0;
  }

  void run(Vertex m0_, int e_, int h_) {
    m0 = m0_;
    e = e_;
    h = h_;
    A = g.nbr(m0, g.cyc(m0, e, 2 * h));
    if (g.deg[A] != 6) return;
    Vertex t0 = g.nbr(m0, g.cyc(m0, e, 3 * h));
    Vertex t1 = g.nbr(m0, g.cyc(m0, e, 4 * h));
    Vertex b0 = g.nbr(m0, g.cyc(m0, e, h));
    Vertex mlist[3 * kMaxDualV];
    int nm = 0;
    mk[m0] = 2;
    mlist[nm++] = m0;
    mk[A] = 1;
    mlist[nm++] = A;
    mk[t0] = 1;
    mlist[nm++] = t0;
    mk[t1] = 1;
    mlist[nm++] = t1;
    mk[b0] = 1;
    mlist[nm++] = b0;
    tps[0] = t0;
    tps[1] = t1;
    ntp = 2;
    bts[0] = b0;
    nbt = 1;

    Vertex prev = m0;
    Vertex cur = g.nbr(m0, e);
    int steps = 1;
    while (steps + 1 <= max_growth) {
      if (mk[cur]) break;
      int ent = g.slot_of(cur, prev);
      mk[cur] = 2;
      mlist[nm++] = cur;
      if (g.deg[cur] == 5) {
        straight_end(cur, ent, steps);
        break;
      }
      if (steps + 2 <= max_growth && steps <= max_turnpos) {
        turn_branch(cur, ent, steps);
        if (stop) break;
      }
      Vertex P2 = g.nbr(cur, g.cyc(cur, ent, 2 * h));
      Vertex P4 = g.nbr(cur, g.cyc(cur, ent, 4 * h));
      if (mk[P2] || mk[P4]) break;
      mk[P2] = 1;
      mlist[nm++] = P2;
      mk[P4] = 1;
      mlist[nm++] = P4;
      tps[ntp++] = P2;
      bts[nbt++] = P4;
      prev = cur;
      cur = g.nbr(cur, g.cyc(cur, ent, 3));
      ++steps;
    }
    while (nm > 0) mk[mlist[--nm]] = 0;
  }
};

void enumerate_reductions(const DualFullerene& g, bool ipr_only, std::vector<ReductionSite>& out,
                          int max_growth, bool first_only, int max_turnpos) {
  out.clear();
  if (max_growth < 2) return;
  RedWalker walker(g, ipr_only, max_growth, max_turnpos, first_only, out);
  // At growth 2 only straight sites with no interior vertex fit, and their
  // anchor dart points directly at the other removed 5-vertex; every other
  // anchor exits without emitting, so skip it up front.
  const bool cap2 = max_growth == 2;
  const auto try_anchor = [&](Vertex v) {
    if (g.deg[v] != 5) return false;
    for (int s = 0; s < 5; ++s) {
      if (cap2 && g.deg[g.adj[v][s]] != 5) continue;
      walker.run(v, s, +1);
      if (walker.stop) return true;
      walker.run(v, s, -1);
      if (walker.stop) return true;
    }
    return false;
  };
  if (first_only) {
    // Existence scans run the id loop downward: inserted vertices take the
    // largest ids, and when this scan vets a freshly expanded graph the
    // reduction that disqualifies it usually deletes a new pentagon, so
    // starting high tends to exit after a handful of anchors.
    for (Vertex v = static_cast<Vertex>(g.n - 1); v >= 0; --v)
      if (try_anchor(v)) return;
  } else {
    for (Vertex v = 0; v < g.n; ++v)
      if (try_anchor(v)) return;
  }
}

bool is_irreducible_ipr(const DualFullerene& g) {
  if (!is_ipr(g)) throw NotIPR();
  std::vector<ReductionSite> sites;
  enumerate_reductions(g, true, sites, kMaxDualV, true);
  return sites.empty();
}

namespace {

// Follows the removed path of a reduction site. path receives growth(kind)
// vertices; the return value is the far end's entry slot (toward the
// second-to-last path vertex).
int walk_path(const DualFullerene& g, const ReductionSite& s, Vertex* path) {
  const int h = s.hand, i = s.kind.i;
  const int len = growth(s.kind);
  path[0] = s.anchor.v;
  Vertex prev = s.anchor.v;
  Vertex cur = g.adj[s.anchor.v][s.anchor.slot];
  int ent = -1;
  for (int st = 1; st < len; ++st) {
    ent = g.slot_of(cur, prev);
    path[st] = cur;
    if (st == len - 1) break;
    const bool turn = s.kind.cls == OpClass::B && st == i;
    const int exit = turn ? g.cyc(cur, ent, 2 * h) : g.cyc(cur, ent, 3);
    prev = cur;
    cur = g.adj[cur][exit];
  }
  return ent;
}

// Rows of a reduction site in child labels, by slot arithmetic along the
// removed path.
void collect_reduction_rows(const DualFullerene& g, const ReductionSite& s, Rows& r,
                            Vertex* path) {
  const int h = s.hand, i = s.kind.i, j = s.kind.j;
  const Vertex m0 = s.anchor.v;
  const int e = s.anchor.slot;
  r.A = g.nbr(m0, g.cyc(m0, e, 2 * h));
  r.t[0] = g.nbr(m0, g.cyc(m0, e, 3 * h));
  r.t[1] = g.nbr(m0, g.cyc(m0, e, 4 * h));
  r.b[0] = g.nbr(m0, g.cyc(m0, e, h));
  path[0] = m0;
  Vertex prev = m0;
  Vertex cur = g.adj[m0][e];
  if (s.kind.cls == OpClass::L) {
    for (int st = 1; st <= i; ++st) {
      int ent = g.slot_of(cur, prev);
      r.t[st + 1] = g.nbr(cur, g.cyc(cur, ent, 2 * h));
      r.b[st] = g.nbr(cur, g.cyc(cur, ent, 4 * h));
      path[st] = cur;
      prev = cur;
      cur = g.adj[cur][g.cyc(cur, ent, 3)];
    }
    int ent = g.slot_of(cur, prev);
    r.D = g.nbr(cur, g.cyc(cur, ent, 2 * h));
    r.b[i + 1] = g.nbr(cur, g.cyc(cur, ent, 3 * h));
    path[i + 1] = cur;
  } else {
    for (int st = 1; st <= i - 1; ++st) {
      int ent = g.slot_of(cur, prev);
      r.t[st + 1] = g.nbr(cur, g.cyc(cur, ent, 2 * h));
      r.b[st] = g.nbr(cur, g.cyc(cur, ent, 4 * h));
      path[st] = cur;
      prev = cur;
      cur = g.adj[cur][g.cyc(cur, ent, 3)];
    }
    // Bend vertex.
    int ent = g.slot_of(cur, prev);
    r.R = g.nbr(cur, g.cyc(cur, ent, 3));
    r.S = g.nbr(cur, g.cyc(cur, ent, 4 * h));
    path[i] = cur;
    prev = cur;
    cur = g.adj[cur][g.cyc(cur, ent, 2 * h)];
    for (int st = i + 1; st <= i + j; ++st) {
      ent = g.slot_of(cur, prev);
      const int a = i + j + 1 - st;  // this vertex plays n_a
      r.tp[a] = g.nbr(cur, g.cyc(cur, ent, 2 * h));
      r.bp[a - 1] = g.nbr(cur, g.cyc(cur, ent, 4 * h));
      path[st] = cur;
      prev = cur;
      cur = g.adj[cur][g.cyc(cur, ent, 3)];
    }
    ent = g.slot_of(cur, prev);
    r.D = g.nbr(cur, g.cyc(cur, ent, -2 * h));
    r.tp[0] = g.nbr(cur, g.cyc(cur, ent, 2 * h));
    path[i + j + 1] = cur;
  }
}

}  // namespace

void apply_reduction(DualFullerene& g, const ReductionSite& s, ReductionUndo& undo) {
  undo.before = g;
  Rows r;
  Vertex path[kMaxDualV + 2];
  collect_reduction_rows(g, s, r, path);
  const int h = s.hand, i = s.kind.i, j = s.kind.j;
  const int len = growth(s.kind);

  // Restore the boundary rotations (inverse of the expansion splices).
  if (s.kind.cls == OpClass::L) {
    Vertex rp[2];
    splice(g, r.A, r.t[0], r.b[0], nullptr, 0, h);
    rp[0] = r.b[0];
    splice(g, r.t[0], r.t[1], r.A, rp, 1, h);
    for (int k = 1; k <= i; ++k) {
      rp[0] = r.b[k];
      rp[1] = r.b[k - 1];
      splice(g, r.t[k], r.t[k + 1], r.t[k - 1], rp, 2, h);
    }
    rp[0] = r.b[i + 1];
    rp[1] = r.b[i];
    splice(g, r.t[i + 1], r.D, r.t[i], rp, 2, h);
    splice(g, r.D, r.b[i + 1], r.t[i + 1], nullptr, 0, h);
    rp[0] = r.t[i + 1];
    splice(g, r.b[i + 1], r.b[i], r.D, rp, 1, h);
    for (int k = 1; k <= i; ++k) {
      rp[0] = r.t[k];
      rp[1] = r.t[k + 1];
      splice(g, r.b[k], r.b[k - 1], r.b[k + 1], rp, 2, h);
    }
    rp[0] = r.t[0];
    rp[1] = r.t[1];
    splice(g, r.b[0], r.A, r.b[1], rp, 2, h);
  } else {
    Vertex rp[3];
    splice(g, r.A, r.t[0], r.b[0], nullptr, 0, h);
    rp[0] = r.b[0];
    splice(g, r.t[0], r.t[1], r.A, rp, 1, h);
    for (int k = 1; k <= i - 1; ++k) {
      rp[0] = r.b[k];
      rp[1] = r.b[k - 1];
      splice(g, r.t[k], r.t[k + 1], r.t[k - 1], rp, 2, h);
    }
    rp[0] = r.R;
    rp[1] = r.S;
    rp[2] = r.b[i - 1];
    splice(g, r.t[i], j >= 1 ? r.tp[j] : r.tp[0], r.t[i - 1], rp, 3, h);
    if (j >= 1) {
      rp[0] = r.bp[j - 1];
      rp[1] = r.R;
      splice(g, r.tp[j], r.tp[j - 1], r.t[i], rp, 2, h);
      for (int k = 1; k <= j - 1; ++k) {
        rp[0] = r.bp[k - 1];
        rp[1] = r.bp[k];
        splice(g, r.tp[k], r.tp[k - 1], r.tp[k + 1], rp, 2, h);
      }
      rp[0] = r.bp[0];
      splice(g, r.tp[0], r.D, r.tp[1], rp, 1, h);
      splice(g, r.D, r.bp[0], r.tp[0], nullptr, 0, h);
      for (int k = 0; k <= j - 2; ++k) {
        rp[0] = r.tp[k + 1];
        rp[1] = r.tp[k];
        splice(g, r.bp[k], r.bp[k + 1], k >= 1 ? r.bp[k - 1] : r.D, rp, 2, h);
      }
      rp[0] = r.tp[j];
      rp[1] = r.tp[j - 1];
      splice(g, r.bp[j - 1], r.R, j >= 2 ? r.bp[j - 2] : r.D, rp, 2, h);
      rp[0] = r.t[i];
      rp[1] = r.tp[j];
      splice(g, r.R, r.S, r.bp[j - 1], rp, 2, h);
    } else {
      rp[0] = r.R;
      splice(g, r.tp[0], r.D, r.t[i], rp, 1, h);
      splice(g, r.D, r.R, r.tp[0], nullptr, 0, h);
      rp[0] = r.t[i];
      rp[1] = r.tp[0];
      splice(g, r.R, r.S, r.D, rp, 2, h);
    }
    rp[0] = r.t[i];
    splice(g, r.S, r.b[i - 1], r.R, rp, 1, h);
    rp[0] = r.t[i - 1];
    rp[1] = r.t[i];
    splice(g, r.b[i - 1], i >= 2 ? r.b[i - 2] : r.A, r.S, rp, 2, h);
    for (int k = 0; k <= i - 2; ++k) {
      rp[0] = r.t[k];
      rp[1] = r.t[k + 1];
      splice(g, r.b[k], k >= 1 ? r.b[k - 1] : r.A, r.b[k + 1], rp, 2, h);
    }
  }

  // Compact away the removed path and rebuild (with full validation).
  bool removed[kMaxDualV] = {};
  for (int a = 0; a < len; ++a) removed[path[a]] = true;
  Vertex remap[kMaxDualV];
  int nn = 0;
  for (Vertex v = 0; v < g.n; ++v)
    if (!removed[v]) remap[v] = static_cast<Vertex>(nn++);
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(nn));
  for (Vertex v = 0; v < g.n; ++v) {
    if (removed[v]) continue;
    auto& row = rot[remap[v]];
    row.reserve(static_cast<std::size_t>(g.deg[v]));
    for (int sl = 0; sl < g.deg[v]; ++sl) row.push_back(remap[g.adj[v][sl]]);
  }
  g = from_rotation_system(rot);
}

void undo_reduction(DualFullerene& g, const ReductionUndo& undo) { g = undo.before; }

ReductionSite inverse_reduction(const DualFullerene& child, const ExpansionSite& s) {
  const Vertex base = static_cast<Vertex>(child.n - growth(s.kind));
  const int sl = child.slot_of(base, base + 1);
  assert(sl >= 0);
  return ReductionSite{s.kind, s.hand, Dart{base, static_cast<std::int8_t>(sl)}};
}

SiteReadings reduction_readings(const DualFullerene& g, const ReductionSite& s) {
  Vertex path[kMaxDualV + 2];
  const int ent = walk_path(g, s, path);
  const Vertex end = path[growth(s.kind) - 1];
  const int h2 = s.kind.cls == OpClass::L ? s.hand : -s.hand;
  return SiteReadings{s.anchor, s.hand, Dart{end, static_cast<std::int8_t>(ent)}, h2};
}

ReductionDetail reduction_detail(const DualFullerene& g, const ReductionSite& s) {
  ReductionDetail d;
  Vertex path[kMaxDualV + 2];
  const int ent = walk_path(g, s, path);
  const int len = growth(s.kind);
  const Vertex end = path[len - 1];
  const int h = s.hand;
  d.end5[0] = path[0];
  d.end5[1] = end;
  d.gain5[0] = g.nbr(s.anchor.v, g.cyc(s.anchor.v, s.anchor.slot, 2 * h));
  d.gain5[1] = s.kind.cls == OpClass::B ? g.nbr(end, g.cyc(end, ent, -2 * h))
                                        : g.nbr(end, g.cyc(end, ent, 2 * h));
  d.path.assign(path, path + len);
  return d;
}

namespace {

// Shared tail: the row vertices of a Rows record, by site class.
int append_rows(const Rows& r, const SiteKind& k, Vertex* out, int n) {
  out[n++] = r.A;
  out[n++] = r.D;
  if (k.cls == OpClass::L) {
    for (int a = 0; a <= k.i + 1; ++a) out[n++] = r.t[a];
    for (int a = 0; a <= k.i + 1; ++a) out[n++] = r.b[a];
  } else {
    out[n++] = r.R;
    out[n++] = r.S;
    for (int a = 0; a <= k.i; ++a) out[n++] = r.t[a];
    for (int a = 0; a <= k.i - 1; ++a) out[n++] = r.b[a];
    for (int a = 0; a <= k.j; ++a) out[n++] = r.tp[a];
    for (int a = 0; a <= k.j - 1; ++a) out[n++] = r.bp[a];
  }
  return n;
}

}  // namespace

int expansion_zone_vertices(const DualFullerene& g, const ExpansionSite& s, Vertex* out) {
  Rows r;
  collect_expansion_rows(g, s, r);
  return append_rows(r, s.kind, out, 0);
}

int reduction_zone_vertices(const DualFullerene& g, const ReductionSite& s, bool widen_ends,
                            Vertex* out) {
  Rows r;
  Vertex path[kMaxDualV + 2];
  collect_reduction_rows(g, s, r, path);
  const int len = growth(s.kind);
  int n = 0;
  for (int a = 0; a < len; ++a) out[n++] = path[a];
  n = append_rows(r, s.kind, out, n);
  if (widen_ends) {
    for (int sl = 0; sl < g.deg[r.A]; ++sl) out[n++] = g.adj[r.A][sl];
    for (int sl = 0; sl < g.deg[r.D]; ++sl) out[n++] = g.adj[r.D][sl];
  }
  return n;
}

void build_witness_set(const DualFullerene& g, bool ipr_only, int max_growth,
                       std::vector<ReductionSite>& scratch, WitnessSet& ws) {
  ws.count = 0;
  std::memset(ws.vbits, 0, sizeof(std::uint32_t) * static_cast<std::size_t>(g.n));
  // Minimal-growth reductions are by far the strongest witnesses (their key
  // beats every larger candidate), and their scan is cheap; the deeper
  // enumeration is only worth its cost when they are scarce.
  enumerate_reductions(g, ipr_only, scratch, 2);
  if (scratch.size() < 6 && max_growth > 2) enumerate_reductions(g, ipr_only, scratch, max_growth);
  if (scratch.empty()) return;

  // Bounded insertion sort keeping the 32 smallest keys, stable by position.
  int kept[32];
  std::uint64_t keys[32];
  int cnt = 0;
  for (std::size_t idx = 0; idx < scratch.size(); ++idx) {
    const std::uint64_t key = packed_triple(site_triple(scratch[idx].kind));
    if (cnt == 32 && key >= keys[31]) continue;
    int p = cnt < 32 ? cnt : 31;
    while (p > 0 && keys[p - 1] > key) {
      keys[p] = keys[p - 1];
      kept[p] = kept[p - 1];
      --p;
    }
    keys[p] = key;
    kept[p] = static_cast<int>(idx);
    if (cnt < 32) ++cnt;
  }

  ws.count = cnt;
  Vertex zone[3 * kMaxDualV + 20];
  for (int wi = 0; wi < cnt; ++wi) {
    ws.keys[wi] = keys[wi];
    const int zn = reduction_zone_vertices(g, scratch[kept[wi]], ipr_only, zone);
    const std::uint32_t bit = 1u << wi;
    for (int a = 0; a < zn; ++a) ws.vbits[zone[a]] |= bit;
  }
}

}  // namespace buckyforge
