#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace clarkit {

using Vertex = int;
using EdgeId = int;
using FaceId = int;

// An embedded graph given by the counterclockwise cyclic order of neighbours
// around every vertex. Vertex ids are stable: subgraphs keep the ids of the
// graph they were cut from and simply mark the rest as absent.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // Throws Error(kInvalidRotationSystem) on asymmetric adjacency, loops or
  // repeated neighbours.
  explicit PlaneGraph(std::vector<std::vector<Vertex>> rotation);

  int order() const { return static_cast<int>(adj_.size()); }
  bool present(Vertex v) const { return present_[v] != 0; }
  int vertex_count() const;
  int edge_count() const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Neighbour of v that follows / precedes u in counterclockwise order.
  Vertex next_ccw(Vertex v, Vertex u) const;
  Vertex prev_ccw(Vertex v, Vertex u) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Subgraph on `keep`, retaining the cyclic order among surviving
  // neighbours. Vertices outside `keep` become absent.
  PlaneGraph induced(std::span<const Vertex> keep) const;

  // Same vertex set with the listed edges removed.
  PlaneGraph without_edges(std::span<const std::pair<Vertex, Vertex>> drop) const;

  PlaneGraph mirrored() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> present_;
};

// Face boundaries of a plane graph. Each face is the closed walk of its
// boundary; for 2-connected graphs every walk is a cycle.
struct FaceSet {
  std::vector<std::vector<Vertex>> faces;

  std::vector<int> sizes() const;
  int size() const { return static_cast<int>(faces.size()); }
};

// Traces all faces of `g` (absent vertices ignored). The successor of the
// dart u->v is v->w where w is the neighbour of v immediately clockwise of u.
// Every dart is used exactly once.
FaceSet trace_faces(const PlaneGraph& g);

// Combinatorial embedding of a cubic plane graph.
class RotationSystem {
 public:
  RotationSystem() = default;

  // Throws Error(kInvalidRotationSystem) unless every vertex has exactly three
  // distinct neighbours, adjacency is symmetric and there are no loops.
  explicit RotationSystem(std::vector<std::array<Vertex, 3>> neighbors);

  int n() const { return static_cast<int>(nbrs_.size()); }
  const std::array<Vertex, 3>& neighbors(Vertex v) const { return nbrs_[v]; }
  const std::vector<std::array<Vertex, 3>>& triples() const { return nbrs_; }
  const PlaneGraph& graph() const { return graph_; }

  // New labels: vertex v becomes perm[v].
  RotationSystem relabeled(std::span<const Vertex> perm) const;
  RotationSystem mirrored() const;

 private:
  std::vector<std::array<Vertex, 3>> nbrs_;
  PlaneGraph graph_;
};

// Faces of a rotation system, checked against Euler's formula for the sphere.
// Throws Error(kEulerViolation) otherwise.
FaceSet trace_faces(const RotationSystem& rot);

bool is_connected(const PlaneGraph& g);

// True iff the graph has at least four vertices and no vertex cut of size <= 2.
bool is_three_connected(const PlaneGraph& g);
bool is_three_connected(const RotationSystem& rot);

struct EdgeCut {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

// A cut of fewer than k edges whose two sides both contain a cycle, if one
// exists. Searched by max-flow between every pair of vertex-disjoint faces.
std::optional<EdgeCut> find_cyclic_edge_cut(const RotationSystem& rot, int k);

bool cyclic_edge_connectivity_at_least(const RotationSystem& rot, int k);

PlaneGraph induced_subgraph(const RotationSystem& rot, std::span<const Vertex> vertices);

// Undirected graph with dense edge ids, used by the matching code. Edge ids
// follow the lexicographic order of (min endpoint, max endpoint).
class Graph {
 public:
  struct Arc {
    Vertex to;
    EdgeId edge;
  };

  Graph() = default;
  explicit Graph(const PlaneGraph& g);
  Graph(int order, std::vector<std::pair<Vertex, Vertex>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  bool present(Vertex v) const { return present_[v] != 0; }
  int vertex_count() const;
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::pair<Vertex, Vertex>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::span<const Arc> arcs(Vertex v) const { return adj_[v]; }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  // Same edge ids; the listed vertices and their incident edges disappear.
  Graph without_vertices(std::span<const Vertex> drop) const;

 private:
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<char> present_;
  std::vector<char> edge_alive_;

 public:
  bool edge_alive(EdgeId e) const { return edge_alive_[e] != 0; }
};

}  // namespace clarkit
