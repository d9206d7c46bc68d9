#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "buckyforge/triangulation.hpp"

namespace buckyforge {

// Where a seed graph comes from. Plain generation starts from C20, the Td
// isomer of C28, and the (5,0) nanotubes; IPR generation starts from the
// irreducible IPR graphs: finitely many sporadic ones plus four infinite
// nanotube families (distinguished by cap parameters).
enum class SeedOrigin : std::uint8_t { C20, C28Td, Tube50, Sporadic, Family };

struct SeedGraph {
  DualFullerene g;
  SeedOrigin origin = SeedOrigin::Sporadic;
  int param = 0;  // Tube50: ring count; Family: family id 1..4
};

struct SeedSet {
  std::vector<SeedGraph> seeds;
};

// Icosahedron: dual of the smallest fullerene.
DualFullerene dual_c20();

// Dual of the tetrahedrally symmetric C28 (automorphism group of order 24).
DualFullerene dual_c28_td();

// Dual of the (5,0) nanotube with k hexagon rings between its caps
// (k = 0 is C20); 12 + 5k vertices.
DualFullerene tube_5_0(int k);

// Seeds for plain generation up to the given dual size.
SeedSet all_mode_seeds(int max_dual_v);

// Seeds for recursive IPR generation up to the given dual size: computed by
// bootstrap_ipr_seeds or loaded from a cache file. With allow_bootstrap
// false and no usable cache, throws SeedsMissing.
SeedSet ipr_seeds(int max_dual_v, const std::string& cache_path, bool allow_bootstrap);

// Finds every irreducible IPR graph up to max_dual_v: filtered plain
// generation for the sporadic range, ring insertion for the four families.
SeedSet bootstrap_ipr_seeds(int max_dual_v);

// Seed cache file ("BFSEEDS1"). save refuses to overwrite a cache that
// disagrees with s where they overlap (StoreConflict) and is a no-op when
// the existing cache already covers max_dual_v. load returns false when the
// file is absent or covers less than max_dual_v.
void save_seed_cache(const std::string& path, const SeedSet& s, int max_dual_v);
bool load_seed_cache(const std::string& path, int max_dual_v, SeedSet& out);

}  // namespace buckyforge
