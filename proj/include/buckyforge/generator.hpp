#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "buckyforge/operations.hpp"
#include "buckyforge/triangulation.hpp"

namespace buckyforge {

// All: every fullerene. IprFilter: run the full generation and deliver only
// the isolated-pentagon graphs. IprRecursive: grow inside the IPR class with
// IPR-preserving operations from the irreducible IPR graphs.
enum class GenMode : std::uint8_t { All, IprFilter, IprRecursive };

// One generation job: primal sizes min_nv..max_nv (even), one mode. Every
// isomorphism class in range is delivered exactly once.
struct GenerationTask {
  GenMode mode = GenMode::All;
  int min_nv = 20;
  int max_nv = 60;
};

// Per-size tallies. merge() sums componentwise, so shard ledgers can be
// combined in any order.
struct CountLedger {
  std::map<int, std::uint64_t> by_nv;    // primal size -> graphs delivered
  std::uint64_t nodes_visited = 0;       // search-tree nodes (diagnostics)
  std::uint64_t delivered = 0;

  void add(int nv) {
    ++by_nv[nv];
    ++delivered;
  }
  void merge(const CountLedger& other);
};

// Receives each delivered graph. The reference points into the generator's
// working buffer: copy it if it must outlive the call.
using GraphSink = std::function<void(const DualFullerene&)>;

// Runs a task over explicit seed graphs. workers > 1 walks subtrees rooted
// at depth split_depth round-robin on that many threads; the delivered set
// is identical for every worker count, and with one worker the delivery
// order is deterministic. An empty sink counts only.
CountLedger generate_with_split(const GenerationTask& task, const std::vector<DualFullerene>& seeds,
                                const GraphSink& sink, int workers, int split_depth);

// Same with the default split depth.
CountLedger generate(const GenerationTask& task, const std::vector<DualFullerene>& seeds,
                     const GraphSink& sink, int workers = 1);

}  // namespace buckyforge
