#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "clarkit/error.hpp"
#include "clarkit/graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace clarkit;

namespace {

// Exhaustive oracle: is there an edge subset of size < k whose removal leaves
// two components that both contain a cycle?
bool brute_force_cyclic_cut(const RotationSystem& rot, int k) {
  const auto edges = rot.graph().edges();
  const int m = static_cast<int>(edges.size());
  const int n = rot.n();
  std::vector<int> pick;
  bool found = false;
  auto check = [&] {
    std::vector<int> comp(n, -1);
    std::vector<char> removed(m, 0);
    for (int e : pick) removed[e] = 1;
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < m; ++e)
      if (!removed[e]) {
        adj[edges[e].first].push_back(edges[e].second);
        adj[edges[e].second].push_back(edges[e].first);
      }
    int c = 0;
    std::vector<int> vcount, ecount;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      vcount.push_back(0);
      ecount.push_back(0);
      std::vector<int> st{s};
      comp[s] = c;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        ++vcount[c];
        ecount[c] += static_cast<int>(adj[v].size());
        for (int u : adj[v])
          if (comp[u] < 0) { comp[u] = c; st.push_back(u); }
      }
      ++c;
    }
    int cyclic = 0;
    for (int i = 0; i < c; ++i)
      if (ecount[i] / 2 >= vcount[i]) ++cyclic;
    return c >= 2 && cyclic >= 2;
  };
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (found) return;
    if (!pick.empty() && check()) { found = true; return; }
    if (left == 0) return;
    for (int e = start; e < m && !found; ++e) {
      pick.push_back(e);
      self(self, e + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, k - 1);
  return found;
}

std::vector<int> sorted_sizes(const FaceSet& fs) {
  auto s = fs.sizes();
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("trace_faces on the dodecahedron and C60") {
  const auto dodeca = fixtures::dodecahedron();
  const auto fs = trace_faces(dodeca);
  CHECK(fs.size() == 12);
  for (int s : fs.sizes()) CHECK(s == 5);

  const auto c60 = fixtures::c60_truncated();
  const auto fc = trace_faces(c60);
  CHECK(fc.size() == 32);
  const auto sz = fc.sizes();
  CHECK(std::count(sz.begin(), sz.end(), 5) == 12);
  CHECK(std::count(sz.begin(), sz.end(), 6) == 20);
  CHECK(std::accumulate(sz.begin(), sz.end(), 0) == 3 * 60);
}

TEST_CASE("every dart is used exactly once") {
  const auto c60 = fixtures::c60_truncated();
  const auto fs = trace_faces(c60);
  std::set<std::pair<int, int>> darts;
  for (const auto& f : fs.faces)
    for (std::size_t i = 0; i < f.size(); ++i) darts.insert({f[i], f[(i + 1) % f.size()]});
  CHECK(darts.size() == 180);
}

TEST_CASE("a non-spherical rotation system violates Euler") {
  // Swapping the cyclic order at one vertex of the cube changes the genus.
  auto base = fixtures::cube().triples();
  std::swap(base[0][1], base[0][2]);
  const RotationSystem twisted(base);
  try {
    trace_faces(twisted);
    FAIL("expected EulerViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEulerViolation);
  }
}

TEST_CASE("rotation system invariants are enforced") {
  CHECK_THROWS_AS(RotationSystem({{1, 1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), Error);
  CHECK_THROWS_AS(RotationSystem({{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), Error);
  CHECK_THROWS_AS(RotationSystem({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 4}, {1, 2, 3}}), Error);
}

TEST_CASE("three-connectivity") {
  CHECK(is_three_connected(fixtures::c60_truncated()));
  CHECK(is_three_connected(fixtures::dodecahedron()));
  // Two disjoint tetrahedra.
  std::vector<std::array<int, 3>> two_k4 = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1},
                                            {5, 6, 7}, {4, 7, 6}, {4, 5, 7}, {4, 6, 5}};
  CHECK_FALSE(is_three_connected(RotationSystem(two_k4)));
  // A 6-cycle has 2-vertex cuts.
  PlaneGraph hex({{1, 5}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}});
  CHECK_FALSE(is_three_connected(hex));
}

TEST_CASE("cyclic edge connectivity is exactly five") {
  const auto dodeca = fixtures::dodecahedron();
  CHECK(cyclic_edge_connectivity_at_least(dodeca, 5));
  CHECK_FALSE(cyclic_edge_connectivity_at_least(dodeca, 6));
  CHECK_FALSE(brute_force_cyclic_cut(dodeca, 5));

  const auto c60 = fixtures::c60_truncated();
  CHECK(cyclic_edge_connectivity_at_least(c60, 5));
  const auto cut = find_cyclic_edge_cut(c60, 6);
  REQUIRE(cut.has_value());
  CHECK(cut->edges.size() == 5);
  CHECK(cut->side_a.size() + cut->side_b.size() == 60);
}

TEST_CASE("cyclic cut detection agrees with brute force on a small cubic graph") {
  // Prism over a triangle: cyclic 3-cut between the two triangles.
  std::vector<std::array<int, 3>> prism = {{1, 3, 2}, {2, 4, 0}, {0, 5, 1},
                                           {0, 4, 5}, {1, 5, 3}, {2, 3, 4}};
  const RotationSystem rot(prism);
  REQUIRE(trace_faces(rot).size() == 5);
  for (int k = 2; k <= 4; ++k)
    CHECK(cyclic_edge_connectivity_at_least(rot, k) == !brute_force_cyclic_cut(rot, k));
}

TEST_CASE("induced subgraphs") {
  const auto c60 = fixtures::c60_truncated();
  std::vector<int> all(60);
  std::iota(all.begin(), all.end(), 0);
  const auto same = induced_subgraph(c60, all);
  CHECK(same.vertex_count() == 60);
  CHECK(same.edge_count() == 90);

  const auto fs = trace_faces(c60);
  const auto pent = *std::find_if(fs.faces.begin(), fs.faces.end(), [](auto& f) { return f.size() == 5; });
  const auto ring = induced_subgraph(c60, pent);
  CHECK(ring.vertex_count() == 5);
  CHECK(ring.edge_count() == 5);
  for (int v : pent) CHECK(ring.degree(v) == 2);

  const auto hex = *std::find_if(fs.faces.begin(), fs.faces.end(), [](auto& f) { return f.size() == 6; });
  std::vector<int> rest;
  for (int v = 0; v < 60; ++v)
    if (std::find(hex.begin(), hex.end(), v) == hex.end()) rest.push_back(v);
  const auto cut = induced_subgraph(c60, rest);
  CHECK(cut.vertex_count() == 54);
  int deg2 = 0;
  for (int v : rest) deg2 += cut.degree(v) == 2;
  CHECK(deg2 == 6);
}

TEST_CASE("face sizes are invariant under relabeling") {
  const auto c60 = fixtures::c60_truncated();
  std::mt19937_64 rng(7);
  const auto before = sorted_sizes(trace_faces(c60));
  for (int t = 0; t < 10; ++t) {
    std::vector<int> perm(60);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(sorted_sizes(trace_faces(c60.relabeled(perm))) == before);
  }
}

TEST_CASE("edge-indexed graph") {
  Graph g(4, {{2, 1}, {0, 1}, {3, 2}, {0, 1}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(0) == std::pair{0, 1});
  CHECK(g.edge(1) == std::pair{1, 2});
  std::vector<int> drop{1};
  const auto h = g.without_vertices(drop);
  CHECK(h.vertex_count() == 3);
  CHECK_FALSE(h.edge_alive(0));
  CHECK(h.edge_alive(2));
  CHECK(h.arcs(0).empty());
}
