#include <cstring>
#include <random>
#include <set>
#include <vector>

#include "buckyforge/canonical.hpp"
#include "buckyforge/triangulation.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace buckyforge;
using namespace testutil;

namespace {

std::vector<DualFullerene> reference_graphs() {
  return {from_rotation_system(icosahedron_rotations()),
          from_rotation_system(c24_dual_rotations()),
          from_rotation_system(c28_td_rotations()), pentakis_dodecahedron()};
}

}  // namespace

TEST_CASE("codes are invariant under relabeling and reflection") {
  std::mt19937 rng(20120613);
  for (const DualFullerene& g : reference_graphs()) {
    const Rot base = rotations_of(g);
    const CanonicalCode code = canonical_code(g);
    CHECK(code.bytes.size() == static_cast<std::size_t>(8 * g.n - 12));
    CHECK(canonical_code(from_rotation_system(reflected(base))) == code);
    for (int trial = 0; trial < 50; ++trial) {
      Rot r = relabeled(base, random_perm(g.n, rng));
      if (trial % 2) r = reflected(r);
      CHECK(canonical_code(from_rotation_system(r)) == code);
    }
  }
}

TEST_CASE("a thousand relabelings give one code") {
  std::mt19937 rng(28);
  const DualFullerene g = from_rotation_system(c28_td_rotations());
  const Rot base = rotations_of(g);
  const CanonicalCode code = canonical_code(g);
  int equal = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Rot r = relabeled(base, random_perm(g.n, rng));
    equal += (canonical_code(from_rotation_system(r)) == code);
  }
  CHECK(equal == 1000);
}

TEST_CASE("automorphism counts of the reference graphs") {
  // Full map-automorphism groups, reflections included.
  const DualFullerene ico = from_rotation_system(icosahedron_rotations());
  const DualFullerene c24 = from_rotation_system(c24_dual_rotations());
  const DualFullerene c28 = from_rotation_system(c28_td_rotations());
  const DualFullerene ball = pentakis_dodecahedron();
  CHECK(automorphism_darts(ico).size() == 120);
  CHECK(automorphism_darts(c24).size() == 24);
  CHECK(automorphism_darts(c28).size() == 24);
  CHECK(automorphism_darts(ball).size() == 120);
  for (const DualFullerene& g : {ico, c24, c28, ball}) {
    const int a = automorphism_darts(g).size();
    CHECK(a >= 1);
    CHECK(4 * g.edge_count() % a == 0);  // group acts freely on (dart, dir)
  }
}

TEST_CASE("anchored codes order consistently with their buffers") {
  const DualFullerene g = from_rotation_system(c24_dual_rotations());
  CodeScratch scratch;
  std::uint8_t a[kMaxCodeBytes], b[kMaxCodeBytes];
  const int len = anchored_code_write(g, 0, 0, +1, a, scratch);
  CHECK(len == 8 * g.n - 12);
  for (int v = 0; v < g.n; ++v)
    for (int s = 0; s < g.degree(v); ++s)
      for (int dir : {+1, -1}) {
        const int wrote = anchored_code_write(g, v, s, dir, b, scratch);
        CHECK(wrote == len);
        const int cmp = anchored_code_cmp(g, v, s, dir, a, scratch);
        const int ref = std::memcmp(b, a, static_cast<std::size_t>(len));
        CHECK((cmp < 0) == (ref < 0));
        CHECK((cmp == 0) == (ref == 0));
        CHECK(anchored_code_cmp(g, v, s, dir, b, scratch) == 0);
      }
}

TEST_CASE("are_isomorphic agrees with the rotation-free oracle") {
  std::mt19937 rng(7);
  std::vector<DualFullerene> pool = reference_graphs();
  for (const DualFullerene& g : reference_graphs()) {
    pool.push_back(from_rotation_system(relabeled(rotations_of(g), random_perm(g.n, rng))));
    pool.push_back(from_rotation_system(reflected(rotations_of(g))));
  }
  for (std::size_t x = 0; x < pool.size(); ++x)
    for (std::size_t y = x; y < pool.size(); ++y) {
      const bool fast = are_isomorphic(pool[x], pool[y]);
      const bool slow = graphs_isomorphic_bruteforce(pool[x], pool[y]);
      CHECK(fast == slow);
    }
}

TEST_CASE("distinct small graphs get distinct codes") {
  std::vector<DualFullerene> seeds{from_rotation_system(icosahedron_rotations()),
                                   from_rotation_system(c28_td_rotations())};
  std::vector<DualFullerene> all = closure_by_bruteforce(seeds, 16);
  std::set<CanonicalCode> codes;
  for (const DualFullerene& g : all) codes.insert(canonical_code(g));
  CHECK(codes.size() == all.size());  // oracle already deduplicated
}

TEST_CASE("lockstep comparison matches buffered comparison") {
  CodeScratch sa, sb;
  std::uint8_t ba[kMaxCodeBytes], bb[kMaxCodeBytes];
  std::mt19937 rng(41);
  for (const DualFullerene& g : reference_graphs()) {
    // All anchors at 5-vertices plus a sample at 6-vertices.
    std::vector<std::tuple<int, int, int>> anchors;
    for (int v = 0; v < g.n; ++v)
      for (int s = 0; s < g.deg[v]; ++s)
        for (int dir = -1; dir <= 1; dir += 2)
          if (g.deg[v] == 5 || (rng() & 7) == 0) anchors.emplace_back(v, s, dir);
    for (int trial = 0; trial < 400; ++trial) {
      const auto [va, sva, da] = anchors[rng() % anchors.size()];
      const auto [vb, svb, db] = anchors[rng() % anchors.size()];
      const int len = anchored_code_write(g, va, sva, da, ba, sa);
      CHECK(anchored_code_write(g, vb, svb, db, bb, sb) == len);
      const int ref = std::memcmp(ba, bb, static_cast<std::size_t>(len));
      const int fast = anchored_code_cmp2(g, va, sva, da, vb, svb, db, sa, sb);
      CHECK((fast < 0) == (ref < 0));
      CHECK((fast > 0) == (ref > 0));
      CHECK((fast == 0) == (ref == 0));
    }
  }
}
