#include <algorithm>
#include <random>

#include "clarkit/clar.hpp"
#include "clarkit/enumeration.hpp"
#include "clarkit/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace clarkit;

namespace {

void check_pattern(const Fullerene& F, const SextetPattern& p) {
  const Graph g(F.graph());
  REQUIRE(is_sextet_pattern(F, p.hexagons));
  CHECK(p.witness.is_perfect(g));
  for (FaceId h : p.hexagons) CHECK(is_alternating(g, F.face(h), p.witness));
}

}  // namespace

TEST_CASE("Clar number and formulas of C60") {
  const auto F = validate(fixtures::c60_truncated());
  const auto r = clar_number(F);
  CHECK(r.clar_number == 8);
  CHECK(r.bound == 8);
  CHECK(r.extremal);
  CHECK(r.formulas.size() == 5);
  CHECK_FALSE(r.formulas_truncated);
  for (const auto& p : r.formulas) {
    CHECK(p.hexagons.size() == 8);
    check_pattern(F, p);
  }
  CHECK(is_extremal(F));
  CHECK(clar_brute_force(F) == 8);
}

TEST_CASE("Clar number of the dodecahedron") {
  const auto F = validate(fixtures::dodecahedron());
  const auto r = clar_number(F);
  CHECK(r.clar_number == 0);
  CHECK(r.bound == 1);
  CHECK_FALSE(r.extremal);
  REQUIRE(r.formulas.size() == 1);
  CHECK(r.formulas[0].hexagons.empty());
  CHECK(clar_brute_force(F) == 0);
  CHECK_FALSE(is_extremal(F));
}

TEST_CASE("benzene has one formula of size one") {
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const HexagonSystem S{g, {{0, 1, 2, 3, 4, 5}}, {0}};
  const auto r = clar_number(S);
  CHECK(r.clar_number == 1);
  REQUIRE(r.formulas.size() == 1);
  CHECK(r.formulas[0].hexagons == std::vector<FaceId>{0});
}

TEST_CASE("sextet pattern checks") {
  const auto F = validate(fixtures::c60_truncated());
  CHECK(is_sextet_pattern(F, std::vector<FaceId>{}));
  // Two hexagons sharing an edge.
  const FaceId h = F.hexagon_ids()[0];
  FaceId other = -1;
  for (FaceId f : F.face_adjacency(h))
    if (!F.is_pentagon(f)) other = f;
  REQUIRE(other >= 0);
  CHECK_FALSE(is_sextet_pattern(F, std::vector<FaceId>{h, other}));
  try {
    (void)is_sextet_pattern(F, std::vector<FaceId>{F.pentagon_ids()[0]});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAHexagon);
  }
}

TEST_CASE("branch and bound agrees with brute force up to 40 vertices") {
  int graphs = 0;
  for (int n = 20; n <= 40; n += 2) {
    for (const auto& e : enumerate(n).entries) {
      const auto F = from_spiral(e.form.spiral);
      const auto r = clar_number(F);
      CHECK(r.clar_number == clar_brute_force(F));
      CHECK(r.clar_number <= r.bound);
      CHECK(r.extremal == (r.clar_number * 6 == n - 12));
      for (const auto& p : r.formulas) check_pattern(F, p);
      ++graphs;
    }
  }
  CHECK(graphs == 1 + 0 + 1 + 1 + 2 + 3 + 6 + 6 + 15 + 17 + 40);
}

TEST_CASE("subsets of formulas are sextet patterns") {
  std::mt19937_64 rng(1);
  for (const auto& e : enumerate(44).entries) {
    const auto F = from_spiral(e.form.spiral);
    for (const auto& p : clar_number(F).formulas) {
      std::vector<FaceId> sub;
      for (FaceId h : p.hexagons)
        if (rng() % 2) sub.push_back(h);
      CHECK(is_sextet_pattern(F, sub));
    }
  }
}

TEST_CASE("formula count agrees with an exhaustive count") {
  // Count maximum disjoint hexagon sets with a perfect-matching complement.
  for (const auto& e : enumerate(36).entries) {
    const auto F = from_spiral(e.form.spiral);
    const auto r = clar_number(F);
    const auto& hexes = F.hexagon_ids();
    int count = 0;
    for (unsigned mask = 0; mask < (1u << hexes.size()); ++mask) {
      if (std::popcount(mask) != r.clar_number) continue;
      std::vector<FaceId> H;
      for (std::size_t i = 0; i < hexes.size(); ++i)
        if (mask >> i & 1) H.push_back(hexes[i]);
      if (is_sextet_pattern(F, H)) ++count;
    }
    CHECK(static_cast<int>(r.formulas.size()) == count);
  }
}

TEST_CASE("the isolated-pentagon 70-vertex fullerene") {
  const std::vector<int> pos = {1, 7, 9, 11, 13, 15, 27, 29, 31, 33, 35, 37};
  const auto F = fixtures::from_positions(70, pos);
  auto isolated = [](const Fullerene& G) {
    for (FaceId a : G.pentagon_ids())
      for (FaceId b : G.pentagon_ids())
        if (a < b && G.faces_adjacent(a, b)) return false;
    return true;
  };
  CHECK(isolated(F));
  // It is the only one among all 70-vertex isomers.
  const auto cat = enumerate(70);
  CHECK(cat.size() == 8149);
  int hits = 0;
  for (const auto& e : cat.entries)
    if (isolated(from_spiral(e.form.spiral))) {
      ++hits;
      CHECK(e.form == canonical_form(F));
    }
  CHECK(hits == 1);

  const auto r = clar_number(F);
  CHECK(r.clar_number == 9);
  CHECK(r.bound == 9);
  // 58 is not a multiple of 6, so the floor bound is met without a perfect sextet cover.
  CHECK_FALSE(r.extremal);
  REQUIRE_FALSE(r.formulas.empty());
  for (const auto& f : r.formulas) CHECK(is_sextet_pattern(F, f.hexagons));
}
