#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "buckyforge/operations.hpp"
#include "buckyforge/triangulation.hpp"

namespace buckyforge {

// Maximal group of 5-vertices connected by hops of graph distance exactly 2
// (defined on isolated-pentagon graphs, where distance 1 cannot occur). The
// closure adds every vertex within distance 2 of the group.
struct Cluster {
  std::vector<Vertex> fives;    // ascending
  std::vector<Vertex> closure;  // ascending, contains fives
  int size() const { return static_cast<int>(fives.size()); }
};

// Shape classification of a cluster:
//  - FourCluster: the unique 4-cluster with no reduction acting inside it;
//  - Straight / DistortedStar: 6-clusters with no reduction inside, by
//    whether some IPR reduction still joins two of its 5-vertices;
//  - I..IV: the four 6-cluster cap patterns of the infinite nanotube-cap
//    families;
//  - Other: everything else (k carries the cluster size).
enum class ClusterTag : std::uint8_t { FourCluster, Straight, DistortedStar, I, II, III, IV, Other };

struct ClusterClass {
  ClusterTag tag = ClusterTag::Other;
  int k = 0;
};

// Decomposes the twelve 5-vertices of an IPR graph; throws NotIPR otherwise.
std::vector<Cluster> find_clusters(const DualFullerene& g);

// True when some IPR-preserving reduction removes a path between two of the
// cluster's 5-vertices and acts entirely inside the cluster's closure.
bool is_locally_reducible(const DualFullerene& g, const Cluster& c);

ClusterClass classify_cluster(const DualFullerene& g, const Cluster& c);

// Closed walk through distinct 6-vertices that stays "taut": per step the
// exit-entry offset tau is 2..4, and the running sum of (tau - 3) never
// spans more than 1. A separating ring has exactly six 5-vertices on each
// side.
struct CylinderRing {
  std::vector<Vertex> cycle;
  std::vector<std::int8_t> tau;  // tau[k] for the step leaving cycle[k]
  int length() const { return static_cast<int>(cycle.size()); }
};

std::vector<CylinderRing> find_cylinder_rings(const DualFullerene& g, bool separating_only = true);

// Cap parameters of a nanotube-like graph: the axial lattice displacement
// (l, m), normalized to l >= m >= 0, of one separating taut ring, with that
// ring as witness. Empty when no such ring exists.
struct CapBoundary {
  int l = 0, m = 0;
  CylinderRing witness;
};

std::optional<CapBoundary> cap_parameters(const DualFullerene& g);

// Every graph obtained from g by doubling the ring: the cylinder is cut
// along the ring and one new ring of 6-vertices is spliced in, one output
// per valid fan alignment. Vertex count grows by ring length; cap
// parameters are preserved.
std::vector<DualFullerene> insert_ring_variants(const DualFullerene& g, const CylinderRing& ring);

// Largest number of hexagons in a pentagon/hexagon patch with the given
// boundary length and pentagon count (Bornhoft-Brinkmann-Greinus). Returns
// INT32_MAX when 6..12 pentagons impose no finite bound; throws
// InvalidPentagonCount outside 0..12.
int hexagon_upper_bound(int boundary_length, int pentagon_count);

}  // namespace buckyforge
