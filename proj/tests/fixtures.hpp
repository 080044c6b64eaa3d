#pragma once

// Graphs built independently of the spiral code, used as oracles.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "clarkit/enumeration.hpp"
#include "clarkit/fullerene.hpp"
#include "clarkit/graph.hpp"

namespace fixtures {

// Icosahedron from coordinates; neighbours sorted counterclockwise as seen
// from outside.
inline std::vector<std::vector<int>> icosahedron_rotation() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<std::array<double, 3>> p;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      p.push_back({0, a, b});
      p.push_back({a, b, 0});
      p.push_back({b, 0, a});
    }
  std::vector<std::vector<int>> rot(12);
  for (int v = 0; v < 12; ++v) {
    const auto& c = p[v];
    // Tangent frame at v.
    std::array<double, 3> e1{0, 0, 0};
    for (int u = 0; u < 12; ++u) {
      double d = 0;
      for (int k = 0; k < 3; ++k) d += (p[u][k] - c[k]) * (p[u][k] - c[k]);
      if (std::abs(d - 4) < 1e-9) rot[v].push_back(u);
    }
    const auto& q = p[rot[v][0]];
    for (int k = 0; k < 3; ++k) e1[k] = q[k] - c[k];
    const std::array<double, 3> e2{c[1] * e1[2] - c[2] * e1[1], c[2] * e1[0] - c[0] * e1[2],
                                   c[0] * e1[1] - c[1] * e1[0]};
    auto angle = [&](int u) {
      double x = 0, y = 0;
      for (int k = 0; k < 3; ++k) {
        x += (p[u][k] - c[k]) * e1[k];
        y += (p[u][k] - c[k]) * e2[k];
      }
      return std::atan2(y, x);
    };
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return rot;
}

inline int index_in(const std::vector<int>& v, int x) {
  return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
}

// Truncated icosahedron: one vertex per dart of the icosahedron.
inline clarkit::RotationSystem c60_truncated() {
  const auto ico = icosahedron_rotation();
  std::map<std::pair<int, int>, int> id;
  for (int u = 0; u < 12; ++u)
    for (int v : ico[u]) id.emplace(std::pair{u, v}, static_cast<int>(id.size()));
  std::vector<std::array<int, 3>> nb(60);
  for (auto [dart, x] : id) {
    auto [u, v] = dart;
    const auto& r = ico[u];
    const int i = index_in(r, v);
    const int succ = r[(i + 1) % 5], pred = r[(i + 4) % 5];
    nb[x] = {id.at({v, u}), id.at({u, succ}), id.at({u, pred})};
  }
  return clarkit::RotationSystem(std::move(nb));
}

// Dodecahedron as the dual of the icosahedron.
inline clarkit::RotationSystem dodecahedron() {
  const auto ico = icosahedron_rotation();
  const clarkit::PlaneGraph g(ico);
  const auto faces = clarkit::trace_faces(g);
  std::vector<std::array<int, 3>> tris;
  for (const auto& f : faces.faces) tris.push_back({f[0], f[1], f[2]});
  return clarkit::detail::dual_of_triangulation(12, tris);
}

// Cube: cubic, 3-connected, but with square faces.
inline clarkit::RotationSystem cube() {
  // Vertices 0..3 bottom (ccw from above), 4..7 top; orientation from outside.
  std::vector<std::array<int, 3>> nb = {
      {1, 4, 3}, {2, 5, 0}, {3, 6, 1}, {0, 7, 2},
      {0, 5, 7}, {1, 6, 4}, {2, 7, 5}, {3, 4, 6}};
  return clarkit::RotationSystem(std::move(nb));
}

inline const std::vector<int> kC60Pentagons = {1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32};

// Canonical pentagon positions of the 18 extremal isomers with 60 vertices,
// frozen from an exhaustive Clar computation over the full catalog.
inline const std::vector<std::vector<int>> kExtremal60 = {
    {1, 2, 3, 4, 7, 10, 23, 26, 29, 30, 31, 32},   {1, 2, 3, 4, 7, 10, 25, 28, 29, 30, 31, 32},
    {1, 2, 4, 7, 9, 12, 21, 24, 26, 29, 31, 32},   {1, 2, 4, 7, 9, 12, 21, 24, 27, 30, 31, 32},
    {1, 2, 4, 7, 9, 13, 20, 24, 26, 29, 31, 32},   {1, 2, 4, 7, 9, 13, 20, 24, 27, 30, 31, 32},
    {1, 2, 4, 7, 11, 15, 20, 24, 25, 28, 31, 32},  {1, 2, 4, 7, 11, 16, 20, 23, 25, 28, 31, 32},
    {1, 2, 4, 7, 12, 16, 18, 22, 25, 28, 31, 32},  {1, 2, 4, 7, 12, 16, 18, 22, 27, 30, 31, 32},
    {1, 2, 4, 7, 12, 16, 19, 23, 25, 28, 31, 32},  {1, 2, 9, 12, 14, 17, 20, 21, 23, 25, 26, 28},
    {1, 2, 9, 12, 14, 17, 20, 21, 23, 25, 27, 32}, {1, 2, 9, 12, 14, 17, 20, 22, 25, 27, 30, 32},
    {1, 2, 9, 12, 15, 17, 20, 21, 23, 24, 27, 32}, {1, 2, 9, 12, 15, 17, 20, 22, 24, 26, 28, 30},
    {1, 2, 9, 12, 15, 17, 20, 22, 24, 27, 30, 32}, {1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32},
};

inline clarkit::Fullerene from_positions(int n, const std::vector<int>& positions) {
  return clarkit::from_spiral(clarkit::SpiralSequence::from_pentagon_positions(n, positions));
}

// Catalogs are costly at larger n; share them across test cases.
inline const clarkit::IsomerCatalog& catalog(int n) {
  static std::mutex mu;
  static std::map<int, clarkit::IsomerCatalog> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, clarkit::enumerate(n)).first;
  return it->second;
}

}  // namespace fixtures
