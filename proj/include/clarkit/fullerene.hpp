#pragma once

#include <array>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "clarkit/graph.hpp"

namespace clarkit {

// Face sizes in spiral order, n/2 + 2 entries over {5, 6}.
struct SpiralSequence {
  std::vector<int> sizes;

  int n() const { return 2 * (static_cast<int>(sizes.size()) - 2); }
  // 1-based positions of the pentagons, the usual compact notation.
  std::vector<int> pentagon_positions() const;
  static SpiralSequence from_pentagon_positions(int n, std::span<const int> positions);

  auto operator<=>(const SpiralSequence&) const = default;
};

struct CanonicalForm {
  SpiralSequence spiral;

  auto operator<=>(const CanonicalForm&) const = default;
};

class Fullerene {
 public:
  const RotationSystem& rot() const { return rot_; }
  const FaceSet& faces() const { return faces_; }
  int n() const { return rot_.n(); }
  int face_count() const { return faces_.size(); }
  int face_size(FaceId f) const { return static_cast<int>(faces_.faces[f].size()); }
  bool is_pentagon(FaceId f) const { return face_size(f) == 5; }
  const std::vector<Vertex>& face(FaceId f) const { return faces_.faces[f]; }

  const std::vector<FaceId>& pentagon_ids() const { return pentagons_; }
  const std::vector<FaceId>& hexagon_ids() const { return hexagons_; }

  // Neighbouring faces of f in counterclockwise order; entry i lies across
  // the boundary edge face(f)[i] -> face(f)[i+1].
  const std::vector<FaceId>& face_adjacency(FaceId f) const { return face_adj_[f]; }
  bool faces_adjacent(FaceId a, FaceId b) const;

  // Face to the left of the dart v -> rot().neighbors(v)[k].
  FaceId dart_face(Vertex v, int k) const { return dart_face_[v][k]; }
  // The three faces around v.
  std::array<FaceId, 3> vertex_faces(Vertex v) const { return dart_face_[v]; }
  // The two faces containing edge uv.
  std::pair<FaceId, FaceId> edge_faces(Vertex u, Vertex v) const;

  const PlaneGraph& graph() const { return rot_.graph(); }

 private:
  friend Fullerene validate(const RotationSystem& rot);

  RotationSystem rot_;
  FaceSet faces_;
  std::vector<FaceId> pentagons_;
  std::vector<FaceId> hexagons_;
  std::vector<std::vector<FaceId>> face_adj_;
  std::vector<std::array<FaceId, 3>> dart_face_;
};

// Throws Error with kNotThreeConnected, kBadFaceSizes, kWrongPentagonCount or
// kEulerViolation.
Fullerene validate(const RotationSystem& rot);

// Builds a cubic rotation system from arbitrary adjacency lists; throws
// Error(kNotCubic) when some vertex does not have exactly three neighbours.
RotationSystem rotation_from_adjacency(const std::vector<std::vector<Vertex>>& adjacency);

// Throws kSpiralPrecondition for bad lengths, sizes or pentagon counts and
// kSpiralDoesNotClose when the windup fails.
Fullerene from_spiral(const SpiralSequence& seq);

// Spiral of F starting at faces f1, f2 (adjacent), winding counterclockwise
// or clockwise. Empty when the spiral from that start gets stuck.
std::optional<SpiralSequence> spiral_from(const Fullerene& F, FaceId f1, FaceId f2, bool clockwise);

CanonicalForm canonical_form(const Fullerene& F);

// True when seq is the canonical spiral of the graph it winds up to.
bool is_canonical_spiral(const Fullerene& F, const SpiralSequence& seq);

bool is_isomorphic(const Fullerene& a, const Fullerene& b);
// True when no orientation-preserving isomorphism maps F to its mirror image.
bool is_chiral(const Fullerene& F);

// Vertex v of F becomes perm[v].
Fullerene relabel(const Fullerene& F, std::span<const Vertex> perm);
Fullerene mirror(const Fullerene& F);
std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng);

namespace detail {

// Incremental face-spiral windup. Faces are added one at a time; the state
// tracks the open boundary and remaining valencies so that infeasible
// prefixes are rejected as early as possible.
class Windup {
 public:
  explicit Windup(int face_count);

  // Adds the next face; false when the spiral cannot continue.
  bool add(int size);
  // Adds the final face and checks closure.
  bool close(int size);

  int placed() const { return placed_; }
  int face_count() const { return face_count_; }

  // Counterclockwise triangles of the dual triangulation built so far.
  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }

 private:
  void connect(int a, int b);

  int face_count_;
  int placed_ = 0;
  std::vector<int> rem_;
  std::vector<int> open_;  // used as a deque: [head_, open_.size())
  std::size_t head_ = 0;
  std::vector<std::array<int, 3>> tris_;
  bool track_triangles_ = true;

 public:
  void set_track_triangles(bool on) { track_triangles_ = on; }
};

// Counterclockwise neighbour lists of a triangulation given by ccw triangles.
std::vector<std::vector<int>> dual_rotation(int face_count, const std::vector<std::array<int, 3>>& tris);

// True when no spiral starting at a pentagon is lexicographically smaller
// than seq, a spiral of the dual `adj`.
bool is_canonical_dual(const std::vector<std::vector<int>>& adj, const std::vector<int>& seq);

// Cubic rotation system dual to a triangulation given by ccw triangles.
RotationSystem dual_of_triangulation(int vertex_count, const std::vector<std::array<int, 3>>& tris);

}  // namespace detail

}  // namespace clarkit
