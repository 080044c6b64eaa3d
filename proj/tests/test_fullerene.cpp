#include <random>

#include "clarkit/error.hpp"
#include "clarkit/fullerene.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace clarkit;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kParse;
}

SpiralSequence c60_spiral() { return SpiralSequence::from_pentagon_positions(60, fixtures::kC60Pentagons); }

}  // namespace

TEST_CASE("validate accepts C60 and the dodecahedron") {
  const auto c60 = validate(fixtures::c60_truncated());
  CHECK(c60.pentagon_ids().size() == 12);
  CHECK(c60.hexagon_ids().size() == 20);
  const auto d = validate(fixtures::dodecahedron());
  CHECK(d.pentagon_ids().size() == 12);
  CHECK(d.hexagon_ids().empty());
}

TEST_CASE("validate rejects the cube") {
  CHECK(code_of([] { validate(fixtures::cube()); }) == ErrorCode::kBadFaceSizes);
}

TEST_CASE("non-cubic adjacency is rejected") {
  std::vector<std::vector<int>> adj = {{1, 2}, {0, 2}, {0, 1}};
  CHECK(code_of([&] { rotation_from_adjacency(adj); }) == ErrorCode::kNotCubic);
}

TEST_CASE("face adjacency is consistent") {
  const auto F = validate(fixtures::c60_truncated());
  for (FaceId f = 0; f < F.face_count(); ++f) {
    CHECK(F.face_adjacency(f).size() == static_cast<std::size_t>(F.face_size(f)));
    for (FaceId g : F.face_adjacency(f)) CHECK(F.faces_adjacent(g, f));
  }
  for (FaceId p : F.pentagon_ids())
    for (FaceId g : F.face_adjacency(p)) CHECK_FALSE(F.is_pentagon(g));
}

TEST_CASE("all-pentagon spiral winds up to the dodecahedron") {
  const auto F = from_spiral(SpiralSequence{std::vector<int>(12, 5)});
  CHECK(F.n() == 20);
  CHECK(is_isomorphic(F, validate(fixtures::dodecahedron())));
  CHECK(canonical_form(F).spiral.sizes == std::vector<int>(12, 5));
}

TEST_CASE("the C60 spiral gives the truncated icosahedron") {
  const auto F = from_spiral(c60_spiral());
  CHECK(F.n() == 60);
  const auto G = validate(fixtures::c60_truncated());
  CHECK(canonical_form(F) == canonical_form(G));
  CHECK(canonical_form(G).spiral.pentagon_positions() == fixtures::kC60Pentagons);
  CHECK(is_canonical_spiral(F, c60_spiral()));
}

TEST_CASE("spiral preconditions") {
  std::vector<int> thirteen(13, 5);
  thirteen.push_back(6);
  CHECK(code_of([&] { from_spiral(SpiralSequence{thirteen}); }) == ErrorCode::kSpiralPrecondition);
  std::vector<int> bad(12, 5);
  bad[3] = 7;
  CHECK(code_of([&] { from_spiral(SpiralSequence{bad}); }) == ErrorCode::kSpiralPrecondition);
  // Twelve pentagons then a hexagon cannot close.
  std::vector<int> n22(12, 5);
  n22.push_back(6);
  CHECK(code_of([&] { from_spiral(SpiralSequence{n22}); }) == ErrorCode::kSpiralDoesNotClose);
}

TEST_CASE("n = 22 has no closing spiral") {
  for (int hex = 0; hex < 13; ++hex) {
    std::vector<int> s(13, 5);
    s[hex] = 6;
    CHECK_THROWS_AS(from_spiral(SpiralSequence{s}), Error);
  }
}

TEST_CASE("canonical form is invariant under relabeling and mirroring") {
  std::mt19937_64 rng(11);
  const auto F = from_spiral(c60_spiral());
  const auto c = canonical_form(F);
  for (int t = 0; t < 100; ++t) {
    const auto perm = random_permutation(F.n(), rng);
    CHECK(canonical_form(relabel(F, perm)) == c);
  }
  CHECK(canonical_form(mirror(F)) == c);
}

TEST_CASE("spiral round trip") {
  const auto F = from_spiral(c60_spiral());
  for (FaceId f2 : F.face_adjacency(0)) {
    auto s = spiral_from(F, 0, f2, false);
    if (!s) continue;
    const auto G = from_spiral(*s);
    CHECK(is_isomorphic(F, G));
  }
}

TEST_CASE("different orders are not isomorphic") {
  CHECK_FALSE(is_isomorphic(validate(fixtures::dodecahedron()), validate(fixtures::c60_truncated())));
}
