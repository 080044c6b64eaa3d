#include <algorithm>
#include <functional>
#include <random>

#include "clarkit/enumeration.hpp"
#include "clarkit/matching.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace clarkit;

namespace {

// Plain recursion on the lowest uncovered vertex, visiting every perfect
// matching. Independent of the memoised counter.
void each_perfect_matching(const Graph& g, const std::function<void(const std::vector<EdgeId>&)>& fn) {
  std::vector<char> used(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) used[v] = g.present(v) ? 0 : 1;
  std::vector<EdgeId> cur;
  std::function<void()> rec = [&] {
    Vertex v = 0;
    while (v < g.order() && used[v]) ++v;
    if (v == g.order()) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      fn(s);
      return;
    }
    used[v] = 1;
    for (const auto& a : g.arcs(v)) {
      if (used[a.to] || !g.edge_alive(a.edge)) continue;
      used[a.to] = 1;
      cur.push_back(a.edge);
      rec();
      cur.pop_back();
      used[a.to] = 0;
    }
    used[v] = 0;
  };
  rec();
}

long long naive_count(const Graph& g) {
  long long c = 0;
  each_perfect_matching(g, [&](const std::vector<EdgeId>&) { ++c; });
  return c;
}

Graph cycle(int k) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  return Graph(k, e);
}

}  // namespace

TEST_CASE("perfect matchings of small cycles") {
  CHECK(count_perfect_matchings(cycle(6)) == 2);
  CHECK(count_perfect_matchings(cycle(5)) == 0);
  CHECK(has_perfect_matching(cycle(8)));
  CHECK_FALSE(has_perfect_matching(cycle(7)));
  const auto m = find_perfect_matching(cycle(6));
  REQUIRE(m);
  CHECK(m->is_perfect(cycle(6)));
}

TEST_CASE("matching counts agree with exhaustive enumeration") {
  const Graph dodeca(validate(fixtures::dodecahedron()).graph());
  const Graph c60(validate(fixtures::c60_truncated()).graph());
  CHECK(naive_count(dodeca) == 36);
  CHECK(count_perfect_matchings(dodeca) == 36);
  CHECK(naive_count(c60) == 12500);
  CHECK(count_perfect_matchings(c60) == 12500);
}

TEST_CASE("counting is invariant under relabeling") {
  std::mt19937_64 rng(7);
  const auto F = validate(fixtures::c60_truncated());
  for (int t = 0; t < 3; ++t) {
    const auto perm = random_permutation(60, rng);
    CHECK(count_perfect_matchings(Graph(relabel(F, perm).graph())) == 12500);
  }
}

TEST_CASE("deletion-contraction identity on random subgraphs") {
  std::mt19937_64 rng(11);
  const Graph c60(validate(fixtures::c60_truncated()).graph());
  int checked = 0;
  while (checked < 20) {
    // Random vertex-deleted subgraph of C60, then split on a random edge.
    std::vector<Vertex> drop;
    for (Vertex v = 0; v < 60; ++v)
      if (rng() % 5 == 0) drop.push_back(v);
    const Graph h = c60.without_vertices(drop);
    std::vector<std::pair<Vertex, Vertex>> live;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (h.edge_alive(e)) live.push_back(h.edge(e));
    if (live.empty() || h.vertex_count() % 2 != 0) continue;
    const auto [u, v] = live[rng() % live.size()];
    std::vector<std::pair<Vertex, Vertex>> minus_e;
    for (auto p : live)
      if (p != std::pair{u, v}) minus_e.push_back(p);
    Graph g_minus(60, minus_e);
    std::vector<Vertex> gone = drop;
    gone.push_back(u);
    gone.push_back(v);
    const Graph contracted = c60.without_vertices(gone);
    // Both sides must also treat the dropped vertices as absent.
    const Graph g_minus_clean = g_minus.without_vertices(drop);
    const BigInt whole = count_perfect_matchings(h);
    CHECK(whole == count_perfect_matchings(g_minus_clean) + count_perfect_matchings(contracted));
    CHECK(whole == naive_count(h));
    CHECK(has_perfect_matching(h) == (whole > 0));
    ++checked;
  }
}

TEST_CASE("masked existence test matches the copied graph") {
  std::mt19937_64 rng(3);
  const Graph c60(validate(fixtures::c60_truncated()).graph());
  for (int t = 0; t < 50; ++t) {
    std::vector<char> removed(60, 0);
    std::vector<Vertex> drop;
    for (Vertex v = 0; v < 60; ++v)
      if (rng() % 4 == 0) {
        removed[v] = 1;
        drop.push_back(v);
      }
    const Graph h = c60.without_vertices(drop);
    CHECK(has_perfect_matching(c60, removed) == (naive_count(h) > 0));
  }
}

TEST_CASE("forced and forbidden edges") {
  const Graph g = cycle(6);
  const EdgeId e01 = *g.find_edge(0, 1);
  const EdgeId e12 = *g.find_edge(1, 2);
  const std::vector<EdgeId> f01{e01}, f12{e12};
  const auto a = find_perfect_matching(g, f01);
  REQUIRE(a);
  CHECK(a->contains(e01));
  const auto b = find_perfect_matching(g, {}, f01);
  REQUIRE(b);
  CHECK(b->contains(e12));
  const std::vector<EdgeId> both{e01, e12};
  CHECK_FALSE(find_perfect_matching(g, both));
}

TEST_CASE("covering matchings may leave optional vertices exposed") {
  // Path 0-1-2: no perfect matching; covering 0 and 1 works with 2 optional.
  const Graph p(3, {{0, 1}, {1, 2}});
  std::vector<char> none(3, 0), opt2 = {0, 0, 1}, opt1 = {0, 1, 0};
  CHECK(find_covering_matching(p, none, opt2));
  CHECK_FALSE(find_covering_matching(p, none, opt1));
  CHECK_FALSE(find_covering_matching(p, none, none));

  // Exhaustive oracle on random pieces of C60.
  std::mt19937_64 rng(5);
  const Graph c60(validate(fixtures::c60_truncated()).graph());
  for (int t = 0; t < 40; ++t) {
    std::vector<char> removed(60, 0), optional(60, 0);
    for (Vertex v = 0; v < 60; ++v) {
      if (rng() % 3 == 0) removed[v] = 1;
      else if (rng() % 6 == 0) optional[v] = 1;
    }
    // Oracle: some subset of optional vertices can be deleted to leave a
    // perfect matching. Brute force over matchings of the remainder.
    std::vector<Vertex> drop;
    for (Vertex v = 0; v < 60; ++v)
      if (removed[v]) drop.push_back(v);
    const Graph h = c60.without_vertices(drop);
    std::vector<Vertex> opts;
    for (Vertex v = 0; v < 60; ++v)
      if (optional[v]) opts.push_back(v);
    bool oracle = false;
    for (unsigned mask = 0; mask < (1u << opts.size()) && !oracle; ++mask) {
      std::vector<Vertex> extra;
      for (std::size_t i = 0; i < opts.size(); ++i)
        if (mask & (1u << i)) extra.push_back(opts[i]);
      oracle = has_perfect_matching(h.without_vertices(extra));
    }
    const auto m = find_covering_matching(c60, removed, optional);
    CHECK(m.has_value() == oracle);
    if (m) {
      CHECK(m->is_matching(c60));
      std::vector<char> cov(60, 0);
      for (Vertex v : m->covered(c60)) cov[v] = 1;
      for (Vertex v = 0; v < 60; ++v) {
        if (removed[v]) CHECK_FALSE(cov[v]);
        else if (!optional[v]) CHECK(cov[v]);
      }
    }
  }
}

namespace {

// Fries number and lexicographically least optimal matching by brute force.
std::pair<int, std::vector<EdgeId>> fries_oracle(const Fullerene& F) {
  const Graph g(F.graph());
  int best = -1;
  std::vector<EdgeId> witness;
  each_perfect_matching(g, [&](const std::vector<EdgeId>& m) {
    const int k = static_cast<int>(alternating_hexagons(F, g, Matching{m}).size());
    if (k > best || (k == best && m < witness)) {
      best = k;
      witness = m;
    }
  });
  return {best, witness};
}

}  // namespace

TEST_CASE("Fries number of C60 and the dodecahedron") {
  const auto c60 = validate(fixtures::c60_truncated());
  const auto [k, r] = fries_number(c60);
  CHECK(k == 20);
  CHECK(r.pentagon_free);
  CHECK(r.alternating_hexagons.size() == 20);
  CHECK(r.matching.is_perfect(Graph(c60.graph())));
  const auto [ko, wo] = fries_oracle(c60);
  CHECK(ko == 20);
  CHECK(r.matching.edges == wo);

  const auto d = validate(fixtures::dodecahedron());
  CHECK(fries_value(d) == 0);
  CHECK(fries_number(d).first == 0);
}

TEST_CASE("Fries number agrees with brute force on small isomers") {
  for (int n : {24, 26, 28, 30, 32, 36}) {
    for (const auto& e : enumerate(n).entries) {
      const auto F = from_spiral(e.form.spiral);
      const auto [k, r] = fries_number(F);
      const auto [ko, wo] = fries_oracle(F);
      CHECK(k == ko);
      CHECK(fries_value(F) == ko);
      CHECK(r.matching.edges == wo);
    }
  }
}

TEST_CASE("Fries number of a single hexagon") {
  HexagonSystem benzene{cycle(6), {{0, 1, 2, 3, 4, 5}}, {0}};
  const auto [k, r] = fries_number(benzene);
  CHECK(k == 1);
  CHECK(r.alternating_hexagons == std::vector<FaceId>{0});
}
