#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clarkit/clar.hpp"
#include "clarkit/fullerene.hpp"

namespace clarkit {

// A subgraph of a fullerene made of whole faces plus optional extra edges,
// with its boundary structure. It is a fragment in the strict sense (a cycle
// with its interior) when there is exactly one boundary walk and that walk
// is a cycle.
struct Fragment {
  std::vector<FaceId> faces;  // sorted
  std::vector<std::pair<Vertex, Vertex>> extra_edges;
  std::vector<Vertex> vertices;  // sorted
  std::vector<std::pair<Vertex, Vertex>> edges;  // (u < v), sorted
  // Longest boundary walk; empty when the region is the whole fullerene.
  std::vector<Vertex> boundary;
  // Remaining boundary walks (holes).
  std::vector<std::vector<Vertex>> holes;
  std::vector<Vertex> W;  // 2-degree vertices, sorted

  int w() const { return static_cast<int>(W.size()); }
  bool is_fragment() const;
  bool contains_vertex(Vertex v) const;
  int degree(Vertex v) const;
};

Fragment make_region(const Fullerene& F, std::vector<FaceId> faces,
                     std::vector<std::pair<Vertex, Vertex>> extra_edges = {});

// Connected components of the pentagon-adjacency structure, ordered by
// smallest face id. Components with a hole are returned too (is_fragment()
// is then false).
std::vector<Fragment> pentagon_components(const Fullerene& F);

struct PentagonalRing {
  int k = 0;
  std::vector<FaceId> pentagons;  // P_0..P_{k-1}
};

// Chordless cycles of 5..12 pentagons, one per cyclic sequence up to
// rotation and reflection.
std::vector<PentagonalRing> detect_pentagonal_rings(const Fullerene& F);

// G plus every face sharing an edge with G.
Fragment territory(const Fullerene& F, const Fragment& G);
// The territory when all adjoining faces are hexagons.
std::optional<Fragment> hexagon_extension(const Fullerene& F, const Fragment& G);
// Faces adjoining G (sharing an edge with G without being one of its faces).
std::vector<FaceId> adjoining_faces(const Fullerene& F, const Fragment& G);

struct ClarSet {
  std::vector<FaceId> hexagons;
  std::vector<Vertex> U;  // V(G) minus the hexagon vertices
  bool normal = false;
};

// A Clar set of H[G]: disjoint hexagons of the extension minimising |U|
// such that G minus them has a matching covering its remaining 3-degree
// vertices. Prefers normal sets, then the lexicographically least.
// Throws Error(kNotMaximal) when G has no hexagon extension.
ClarSet clar_set(const Fullerene& F, const Fragment& G);
// Every set attaining the minimum.
std::vector<ClarSet> all_clar_sets(const Fullerene& F, const Fragment& G);

// Subgraph induced by V(G) and the vertices of the Clar set.
Fragment clar_extension(const Fullerene& F, const Fragment& G, const ClarSet& s);
// Region of all faces with every vertex in `vertices` plus the remaining
// induced edges.
Fragment induced_region(const Fullerene& F, const std::vector<Vertex>& vertices);

int pentagon_count(const Fullerene& F, const Fragment& G);
bool is_extremal_fragment(const Fullerene& F, const Fragment& G);

// Minimum degree of the pentagon-adjacency graph of G's pentagons.
int gamma(const Fullerene& F, const Fragment& G);

// Lengths of the degree-saturated paths around a closed walk of a subgraph,
// maximised over rotations and both directions. `is_two` marks the
// 2-degree vertices. Throws Error(kNoTwoDegreeVertices) when there are none.
std::vector<int> boundary_labeling(const std::vector<Vertex>& walk, const std::vector<char>& is_two);
std::vector<int> boundary_labeling(const Fragment& G);
std::string labeling_string(const std::vector<int>& labeling);

// Faces of the subgraph of F induced by `vertices` that are not faces of F.
std::vector<std::vector<Vertex>> region_boundaries(const Fullerene& F, const std::vector<Vertex>& vertices);

// Embedded patch (local ids, counterclockwise neighbour lists) used for
// template matching.
struct Patch {
  std::vector<std::vector<int>> rot;
  std::vector<std::vector<int>> faces;  // inner faces, counterclockwise

  int order() const { return static_cast<int>(rot.size()); }
  // Adds a face of `size` across edge `edge` of face `face`, growing the
  // shared run over 3-degree boundary vertices. Returns the new face index.
  int attach(int face, int edge, int size);
  std::vector<int> canonical_code() const;
};

Patch single_face(int size);
// Identifies edge (a, b) of X with edge (c, d) of Y so the faces of X and Y
// end up on opposite sides; each edge is a boundary edge with 2-degree ends.
// Throws Error(kIncompatibleOrientation) otherwise.
Patch paste(const Patch& X, const Patch& Y, std::pair<int, int> ex, std::pair<int, int> ey);
// Boundary edges whose ends both have degree 2.
std::vector<std::pair<int, int>> pasting_candidates(const Patch& p);
Patch patch_of(const Fullerene& F, const std::vector<FaceId>& faces);

enum class FragmentTag { kP, kB1, kB2, kB3, kP2, kPB2, kPB2P, kOther };
const char* to_string(FragmentTag t);

// Templates of the extremal maximal pentagonal fragments.
const Patch& fragment_template(FragmentTag t);

struct FragmentClass {
  FragmentTag tag = FragmentTag::kOther;
  ClarSet clar_set;
  int gamma = 0;
  std::vector<int> labeling;  // of the fragment boundary, empty if undefined
};

// Throws Error(kNotMaximal) when G has no hexagon extension.
FragmentClass classify_fragment(const Fullerene& F, const Fragment& G);

struct StructuralReport {
  bool extremal = false;
  int failed_condition = 0;  // 0 when all three hold, else 1, 2 or 3
  std::vector<Fragment> components;
  std::vector<FragmentClass> classes;
  std::optional<SextetPattern> witness;
};

// Structural extremality test. Throws Error(kWrongOrder) for n < 60.
StructuralReport structural_report(const Fullerene& F);
bool theorem2_classify(const Fullerene& F);

// Pentagon pairs joined by a matching edge outside the hexagons of a Clar
// formula of an extremal fullerene; each pair with its edge forms a B1.
struct B1Pair {
  FaceId a = -1, b = -1;
  std::pair<Vertex, Vertex> edge;
};
std::vector<B1Pair> b1_pairs(const Fullerene& F, const SextetPattern& formula);

}  // namespace clarkit
