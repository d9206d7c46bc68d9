#include "buckyforge/seeds.hpp"

#include <stdexcept>
#include <vector>

namespace buckyforge {

namespace {

// Pole-and-rings builder shared by dual_c20 and tube_5_0: one apex, rings
// r_0..r_last of five vertices joined by antiprism bands, a second apex.
// Ring m vertex t is 1 + 5m + t.
DualFullerene pole_tube(int rings) {
  const int n = 2 + 5 * rings;
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  const int b = n - 1;
  auto at = [](int m, int t) { return 1 + 5 * m + ((t % 5) + 5) % 5; };
  for (int t = 0; t < 5; ++t) rot[0].push_back(at(0, t));
  for (int m = 0; m < rings; ++m)
    for (int t = 0; t < 5; ++t) {
      auto& row = rot[static_cast<std::size_t>(at(m, t))];
      row.push_back(at(m, t + 1));
      if (m == 0) {
        row.push_back(0);
      } else {
        row.push_back(at(m - 1, t));
        row.push_back(at(m - 1, t - 1));
      }
      row.push_back(at(m, t - 1));
      if (m == rings - 1) {
        row.push_back(b);
      } else {
        row.push_back(at(m + 1, t));
        row.push_back(at(m + 1, t + 1));
      }
    }
  for (int t = 0; t < 5; ++t) rot[static_cast<std::size_t>(b)].push_back(at(rings - 1, (5 - t) % 5));
  return from_rotation_system(rot);
}

}  // namespace

DualFullerene dual_c20() { return pole_tube(2); }

DualFullerene tube_5_0(int k) {
  if (k < 0) throw std::invalid_argument("ring count must be nonnegative");
  if (12 + 5 * k > kMaxDualV) throw std::length_error("tube exceeds compile-time capacity");
  return pole_tube(k + 2);
}

DualFullerene dual_c28_td() {
  // Four 6-vertices h_a (one per hexagon of the fullerene) and twelve
  // 5-vertices p_ab for ordered pairs a != b; t(a) fixes the cyclic order
  // in which h_a meets the other three hexagon neighborhoods.
  static const int t[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  auto p = [](int a, int b) { return 4 + a * 3 + (b > a ? b - 1 : b); };
  auto succ_in = [&](int b, int a) {
    for (int k = 0; k < 3; ++k)
      if (t[b][k] == a) return t[b][(k + 1) % 3];
    throw std::logic_error("bad triple");
  };
  std::vector<std::vector<int>> rot(16);
  for (int a = 0; a < 4; ++a)
    for (int k = 0; k < 3; ++k) {
      int b = t[a][k];
      rot[static_cast<std::size_t>(a)].push_back(p(a, b));
      rot[static_cast<std::size_t>(a)].push_back(p(b, a));
      int x = succ_in(b, a);
      rot[static_cast<std::size_t>(p(a, b))] = {a, p(x, a), p(b, x), b, p(b, a)};
    }
  return from_rotation_system(rot);
}

SeedSet all_mode_seeds(int max_dual_v) {
  SeedSet s;
  if (max_dual_v >= 12) s.seeds.push_back({dual_c20(), SeedOrigin::C20, 0});
  if (max_dual_v >= 16) s.seeds.push_back({dual_c28_td(), SeedOrigin::C28Td, 0});
  for (int k = 1; 12 + 5 * k <= max_dual_v; ++k)
    s.seeds.push_back({tube_5_0(k), SeedOrigin::Tube50, k});
  return s;
}

}  // namespace buckyforge
