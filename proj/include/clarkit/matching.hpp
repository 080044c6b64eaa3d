#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

#include "clarkit/fullerene.hpp"
#include "clarkit/graph.hpp"

namespace clarkit {

using BigInt = boost::multiprecision::cpp_int;

// A set of pairwise disjoint edges, stored as sorted edge ids of some Graph.
struct Matching {
  std::vector<EdgeId> edges;

  bool contains(EdgeId e) const;
  std::vector<Vertex> covered(const Graph& g) const;
  bool is_matching(const Graph& g) const;
  // Covers every present vertex of g.
  bool is_perfect(const Graph& g) const;
};

// A perfect matching of g (present vertices and live edges only) containing
// `forced` and avoiding `forbidden`, if one exists. Uses Edmonds' blossom
// algorithm, so the answer is exact.
std::optional<Matching> find_perfect_matching(const Graph& g, std::span<const EdgeId> forced = {},
                                              std::span<const EdgeId> forbidden = {});

bool has_perfect_matching(const Graph& g);

// Existence test on g minus the vertices with removed[v] != 0, without
// copying the graph. Hot path of the Clar search.
bool has_perfect_matching(const Graph& g, const std::vector<char>& removed);

// A matching of g minus `removed` covering every vertex with optional[v] == 0;
// vertices with optional[v] != 0 may stay exposed.
std::optional<Matching> find_covering_matching(const Graph& g, const std::vector<char>& removed,
                                               const std::vector<char>& optional);

// Exact number of perfect matchings.
BigInt count_perfect_matchings(const Graph& g);

// True iff consecutive edges of the closed vertex walk `cycle` alternate in
// and out of M. Requires even length and existing edges.
bool is_alternating(const Graph& g, std::span<const Vertex> cycle, const Matching& M);

// A graph with designated hexagonal faces, each a closed vertex walk of
// length 6. Fullerenes convert to one; toy systems such as benzene can be
// built directly.
struct HexagonSystem {
  Graph graph;
  std::vector<std::vector<Vertex>> hexagons;
  std::vector<FaceId> ids;  // reported id of each hexagon

  static HexagonSystem of(const Fullerene& F);
};

struct FriesResult {
  Matching matching;
  std::vector<FaceId> alternating_hexagons;
  bool pentagon_free = false;
};

// Maximum number of M-alternating hexagons over perfect matchings M, with
// the lexicographically least optimal matching (by edge id) as witness.
std::pair<int, FriesResult> fries_number(const Fullerene& F);

// Only the maximum, without computing the witness.
int fries_value(const Fullerene& F);

// Same on a bare hexagon system; pentagon_free is left true.
std::pair<int, FriesResult> fries_number(const HexagonSystem& S);

// Hexagons of F that are M-alternating.
std::vector<FaceId> alternating_hexagons(const Fullerene& F, const Graph& g, const Matching& M);

}  // namespace clarkit
