#include "buckyforge/generator.hpp"

#include <atomic>
#include <cassert>
#include <cstring>
#include <thread>
#include <vector>

#include "buckyforge/canonical.hpp"

namespace buckyforge {

void CountLedger::merge(const CountLedger& other) {
  for (const auto& [nv, c] : other.by_nv) by_nv[nv] += c;
  nodes_visited += other.nodes_visited;
  delivered += other.delivered;
}


namespace {

// Per-depth recycled scratch: enumeration buffers, the undo record for the
// in-place surgery, and an arena of accepted-child signatures used to
// deliver each isomorphism class once per parent.
struct Frame {
  std::vector<ExpansionSite> sites;
  std::vector<ReductionSite> rsites;
  ExpansionUndo undo;
  std::vector<std::uint8_t> sigs;
  struct SigRef {
    std::uint32_t off;
    std::uint32_t len;
  };
  std::vector<SigRef> sigrefs;
};

// Reductions up to this growth are collected from each parent to prune its
// candidate children (see WitnessSet); the cheapest reductions carry nearly
// all of the rejection power.
constexpr int kWitnessGrowthCap = 4;

struct Walker {
  GenerationTask task;
  int max_dual_v = 0;
  bool ipr_ops = false;
  const GraphSink* sink = nullptr;
  CountLedger ledger;
  DualFullerene g;
  std::vector<Frame> frames;
  CodeScratch scratch, scratch2;
  WitnessSet ws;
  std::uint8_t sig[kMaxCodeBytes];

  // When shard_depth >= 0, nodes reached at that depth are handed to
  // on_shard instead of being visited (work-splitting collection pass).
  int shard_depth = -1;
  std::function<void(const DualFullerene&)> on_shard;

  void init(const GenerationTask& t) {
    task = t;
    max_dual_v = t.max_nv / 2 + 2;
    ipr_ops = t.mode == GenMode::IprRecursive;
    frames.resize(static_cast<std::size_t>(max_dual_v / 2 + 4));
  }

  void deliver() {
    const int nv = g.primal_vertex_count();
    if (nv < task.min_nv || nv > task.max_nv) return;
    if (task.mode == GenMode::IprFilter && !is_ipr(g)) return;
    ledger.add(nv);
    if (sink && *sink) (*sink)(g);
  }

  // g currently holds the child created by applying s to its parent. The
  // child survives exactly when that inverse is the child's canonical
  // reduction: no reduction has a smaller (growth, class, indices) triple,
  // and among equal triples no reading has a smaller anchored code than the
  // inverse's best reading. On success sig holds the winning code, which
  // doubles as the child's per-parent dedup signature.
  bool accept(const ExpansionSite& s, Frame& fr) {
    // Cheap rejection first: any reduction with strictly smaller growth
    // beats the applied one, and the capped existence scan exits at the
    // first hit without building codes.
    const int g0 = growth(s.kind);
    if (g0 > 2) {
      // Nearly every such kill has a growth-2 witness, and those live on
      // 5-5 darts only, so a capped scan settles most children before the
      // general walk runs.
      enumerate_reductions(g, ipr_ops, fr.rsites, 2, /*first_only=*/true);
      if (!fr.rsites.empty()) return false;
      if (g0 > 3) {
        enumerate_reductions(g, ipr_ops, fr.rsites, g0 - 1, /*first_only=*/true);
        if (!fr.rsites.empty()) return false;
      }
    }

    // All reductions now have growth exactly g0; reject on a smaller
    // (class, indices) before touching any codes. Only sites that can beat
    // or tie the inverse matter, and with growth pinned the L index is
    // forced: an L inverse admits no bent rival at all, a B inverse none
    // bending later than its own turn.
    const SiteTriple trip0 = site_triple(s.kind);
    const int turncap = s.kind.cls == OpClass::L ? 0 : s.kind.i;
    enumerate_reductions(g, ipr_ops, fr.rsites, g0, /*first_only=*/false, turncap);
    assert(!fr.rsites.empty());
    for (const ReductionSite& r : fr.rsites)
      if (site_triple(r.kind) < trip0) return false;

    // Champion: the smaller of the inverse's two reading codes. Rivals are
    // compared against it in lockstep, so nothing is materialized unless
    // the child wins. A reading's code depends only on its anchor triple
    // (vertex, slot, hand), so readings already-seen are skipped outright;
    // seeding with the inverse's own readings drops the self-comparison.
    const ReductionSite inv = inverse_reduction(g, s);
    const SiteReadings ir = reduction_readings(g, inv);
    // For a growth-2 tournament every reading is of a valid L_0 site, and
    // the site's validity conditions pin the first 14 code bytes to shared
    // constants: the anchor block is [5][2,3,4,5,6][0], and the far
    // 5-vertex's block is [5][1,6,7,8,3][0] because its off-path neighbors
    // are provably fresh. The first byte free to differ is byte 14, the
    // degree of the anchor's label-3 neighbor, available from one lookup.
    const auto byte14 = [this](Vertex v, int slot, int h) {
      return static_cast<int>(g.deg[g.nbr(v, g.cyc(v, slot, h))]);
    };
    Dart dc = ir.d1;
    int hc = ir.h1;
    int champ14 = 7;
    if (g0 == 2) {
      const int c1 = byte14(ir.d1.v, ir.d1.slot, ir.h1);
      const int c2 = byte14(ir.d2.v, ir.d2.slot, ir.h2);
      champ14 = c1;
      if (c2 != c1
              ? c2 < c1
              : anchored_code_cmp2(g, ir.d2.v, ir.d2.slot, ir.h2, dc.v, dc.slot, hc, scratch,
                                   scratch2) < 0) {
        dc = ir.d2;
        hc = ir.h2;
        champ14 = c2;
      }
    } else if (anchored_code_cmp2(g, ir.d2.v, ir.d2.slot, ir.h2, dc.v, dc.slot, hc, scratch,
                                  scratch2) < 0) {
      dc = ir.d2;
      hc = ir.h2;
    }

    // The champion buffer doubles as the per-parent dedup key on acceptance,
    // but most candidates die early, so champion bytes are materialized
    // lazily: only as deep as the deepest rival probes, full length only
    // for the survivors.
    CodeEmitter champ;
    champ.start(g, scratch, dc.v, dc.slot, hc);
    int have = 0;

    const auto reading_key = [](Vertex v, int slot, int h) {
      return (static_cast<std::uint32_t>(v) << 8) | (static_cast<std::uint32_t>(slot) << 2) |
             static_cast<std::uint32_t>(h + 1);
    };
    std::uint32_t seen[96];
    int nseen = 0;
    seen[nseen++] = reading_key(ir.d1.v, ir.d1.slot, ir.h1);
    seen[nseen++] = reading_key(ir.d2.v, ir.d2.slot, ir.h2);
    const auto is_new = [&](std::uint32_t key) {
      for (int a = 0; a < nseen; ++a)
        if (seen[a] == key) return false;
      if (nseen < 96) seen[nseen++] = key;
      return true;
    };

    for (const ReductionSite& r : fr.rsites) {
      if (site_triple(r.kind) != trip0) continue;
      const SiteReadings rr = reduction_readings(g, r);
      if (g0 == 2) {
        // Byte 14 settles most readings without streaming any code bytes.
        const int r1 = byte14(rr.d1.v, rr.d1.slot, rr.h1);
        if (r1 < champ14) return false;
        const int r2 = byte14(rr.d2.v, rr.d2.slot, rr.h2);
        if (r2 < champ14) return false;
        if (r1 > champ14 && r2 > champ14) continue;
        if (r1 == champ14 &&
            is_new(reading_key(rr.d1.v, rr.d1.slot, rr.h1)) &&
            anchored_code_cmp_lazy(g, rr.d1.v, rr.d1.slot, rr.h1, scratch2, sig, have, champ) < 0)
          return false;
        if (r2 == champ14 &&
            is_new(reading_key(rr.d2.v, rr.d2.slot, rr.h2)) &&
            anchored_code_cmp_lazy(g, rr.d2.v, rr.d2.slot, rr.h2, scratch2, sig, have, champ) < 0)
          return false;
        continue;
      }
      if (is_new(reading_key(rr.d1.v, rr.d1.slot, rr.h1)) &&
          anchored_code_cmp_lazy(g, rr.d1.v, rr.d1.slot, rr.h1, scratch2, sig, have, champ) < 0)
        return false;
      if (is_new(reading_key(rr.d2.v, rr.d2.slot, rr.h2)) &&
          anchored_code_cmp_lazy(g, rr.d2.v, rr.d2.slot, rr.h2, scratch2, sig, have, champ) < 0)
        return false;
    }
    const int total = 8 * g.n - 12;
    while (have < total) sig[have++] = champ.next();
    return true;
  }

  void visit(int depth) {
    if (depth == shard_depth) {
      on_shard(g);
      return;
    }
    ++ledger.nodes_visited;
    deliver();
    if (g.n >= max_dual_v) return;

    Frame& fr = frames[static_cast<std::size_t>(depth)];
    // The parent's cheapest reductions seed a prefilter: any candidate child
    // whose surgery leaves one of them untouched inherits a reduction that
    // beats the candidate's own triple, so it can be dropped before apply.
    build_witness_set(g, ipr_ops, kWitnessGrowthCap, fr.rsites, ws);
    enumerate_expansions(g, ipr_ops, max_dual_v, fr.sites, &ws);
    fr.sigs.clear();
    fr.sigrefs.clear();
    const std::size_t nsites = fr.sites.size();
    for (std::size_t k = 0; k < nsites; ++k) {
      const ExpansionSite s = fr.sites[k];
      // Most non-minimal candidates die because the surgery itself creates
      // a growth-2 reduction; that is decidable from the parent alone, and
      // skips the apply/undo and the post-apply scans outright.
      if (!ipr_ops && growth(s.kind) > 2 && expansion_creates_growth2(g, s)) continue;
      apply_expansion(g, s, fr.undo);
      if (accept(s, fr)) {
        const std::uint32_t len = static_cast<std::uint32_t>(8 * g.n - 12);
        bool dup = false;
        for (const Frame::SigRef& ref : fr.sigrefs)
          if (ref.len == len && std::memcmp(fr.sigs.data() + ref.off, sig, len) == 0) {
            dup = true;
            break;
          }
        if (!dup) {
          fr.sigrefs.push_back({static_cast<std::uint32_t>(fr.sigs.size()), len});
          fr.sigs.insert(fr.sigs.end(), sig, sig + len);
          visit(depth + 1);
        }
      }
      undo_expansion(g, fr.undo);
    }
  }
};

CountLedger run_serial(const GenerationTask& task, const std::vector<DualFullerene>& seeds,
                       const GraphSink& sink) {
  Walker w;
  w.init(task);
  w.sink = &sink;
  for (const DualFullerene& s : seeds) {
    if (s.n > w.max_dual_v) continue;
    w.g = s;
    w.visit(0);
  }
  return std::move(w.ledger);
}

}  // namespace

CountLedger generate_with_split(const GenerationTask& task, const std::vector<DualFullerene>& seeds,
                                const GraphSink& sink, int workers, int split_depth) {
  if (workers <= 1) return run_serial(task, seeds, sink);
  if (split_depth < 1) split_depth = 1;

  // Collection pass: walk the tree up to split_depth exactly as the serial
  // run would, recording prefix deliveries and shard roots in depth-first
  // order so the replay below reproduces the serial delivery order.
  struct Event {
    int shard = -1;  // >= 0: splice this shard's output here
    DualFullerene g;
  };
  std::vector<Event> events;
  std::vector<DualFullerene> shard_roots;

  CountLedger total;
  {
    Walker w;
    w.init(task);
    GraphSink collect = [&events](const DualFullerene& d) { events.push_back({-1, d}); };
    w.sink = &collect;
    w.shard_depth = split_depth;
    w.on_shard = [&](const DualFullerene& d) {
      events.push_back({static_cast<int>(shard_roots.size()), DualFullerene{}});
      shard_roots.push_back(d);
    };
    for (const DualFullerene& s : seeds) {
      if (s.n > w.max_dual_v) continue;
      w.g = s;
      w.visit(0);
    }
    total = std::move(w.ledger);
  }

  // Shard pass: workers pull shard roots from a shared queue; each shard's
  // deliveries are buffered so the main thread can replay them in order.
  std::vector<std::vector<DualFullerene>> out(shard_roots.size());
  std::vector<CountLedger> ledgers(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  const bool counting_only = !sink;

  auto work = [&](int wi) {
    Walker w;
    w.init(task);
    GraphSink buffer_sink;
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= shard_roots.size()) break;
      if (counting_only) {
        w.sink = nullptr;
      } else {
        buffer_sink = [&out, k](const DualFullerene& d) { out[k].push_back(d); };
        w.sink = &buffer_sink;
      }
      w.g = shard_roots[k];
      w.visit(split_depth);
    }
    ledgers[static_cast<std::size_t>(wi)] = std::move(w.ledger);
  };

  std::vector<std::thread> pool;
  for (int wi = 1; wi < workers; ++wi) pool.emplace_back(work, wi);
  work(0);
  for (std::thread& t : pool) t.join();
  for (const CountLedger& l : ledgers) total.merge(l);

  if (sink) {
    for (const Event& e : events) {
      if (e.shard < 0)
        sink(e.g);
      else
        for (const DualFullerene& d : out[static_cast<std::size_t>(e.shard)]) sink(d);
    }
  }
  return total;
}

CountLedger generate(const GenerationTask& task, const std::vector<DualFullerene>& seeds,
                     const GraphSink& sink, int workers) {
  return generate_with_split(task, seeds, sink, workers, 2);
}

}  // namespace buckyforge
