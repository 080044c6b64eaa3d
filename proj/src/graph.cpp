#include "clarkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "clarkit/error.hpp"

namespace clarkit {

namespace {

[[noreturn]] void bad_rotation(const std::string& what) {
  throw Error(ErrorCode::kInvalidRotationSystem, what);
}

int index_of(std::span<const Vertex> list, Vertex u) {
  for (int i = 0; i < static_cast<int>(list.size()); ++i)
    if (list[i] == u) return i;
  return -1;
}

}  // namespace

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation)
    : adj_(std::move(rotation)), present_(adj_.size(), 1) {
  const int n = order();
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adj_[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex u = nb[i];
      if (u < 0 || u >= n) bad_rotation("neighbour " + std::to_string(u) + " of vertex " + std::to_string(v) + " out of range");
      if (u == v) bad_rotation("self-loop at vertex " + std::to_string(v));
      for (std::size_t j = 0; j < i; ++j)
        if (nb[j] == u) bad_rotation("repeated neighbour " + std::to_string(u) + " at vertex " + std::to_string(v));
    }
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : adj_[v])
      if (index_of(adj_[u], v) < 0)
        bad_rotation("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
}

int PlaneGraph::vertex_count() const {
  return static_cast<int>(std::count(present_.begin(), present_.end(), 1));
}

int PlaneGraph::edge_count() const {
  int total = 0;
  for (const auto& nb : adj_) total += static_cast<int>(nb.size());
  return total / 2;
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const { return index_of(adj_[u], v) >= 0; }

Vertex PlaneGraph::next_ccw(Vertex v, Vertex u) const {
  const auto& nb = adj_[v];
  const int i = index_of(nb, u);
  return nb[(i + 1) % nb.size()];
}

Vertex PlaneGraph::prev_ccw(Vertex v, Vertex u) const {
  const auto& nb = adj_[v];
  const int i = index_of(nb, u);
  return nb[(i + nb.size() - 1) % nb.size()];
}

std::vector<std::pair<Vertex, Vertex>> PlaneGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < order(); ++v)
    for (Vertex u : adj_[v])
      if (v < u) out.emplace_back(v, u);
  std::sort(out.begin(), out.end());
  return out;
}

PlaneGraph PlaneGraph::induced(std::span<const Vertex> keep) const {
  std::vector<char> in(order(), 0);
  for (Vertex v : keep)
    if (present(v)) in[v] = 1;
  PlaneGraph g;
  g.adj_.assign(order(), {});
  g.present_ = in;
  for (Vertex v = 0; v < order(); ++v) {
    if (!in[v]) continue;
    for (Vertex u : adj_[v])
      if (in[u]) g.adj_[v].push_back(u);
  }
  return g;
}

PlaneGraph PlaneGraph::without_edges(std::span<const std::pair<Vertex, Vertex>> drop) const {
  PlaneGraph g = *this;
  for (auto [a, b] : drop) {
    std::erase(g.adj_[a], b);
    std::erase(g.adj_[b], a);
  }
  return g;
}

PlaneGraph PlaneGraph::mirrored() const {
  PlaneGraph g = *this;
  for (auto& nb : g.adj_) std::reverse(nb.begin(), nb.end());
  return g;
}

std::vector<int> FaceSet::sizes() const {
  std::vector<int> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(static_cast<int>(f.size()));
  return out;
}

FaceSet trace_faces(const PlaneGraph& g) {
  const int n = g.order();
  std::vector<std::vector<char>> used(n);
  for (Vertex v = 0; v < n; ++v) used[v].assign(g.degree(v), 0);
  FaceSet out;
  for (Vertex s = 0; s < n; ++s) {
    if (!g.present(s)) continue;
    for (int i = 0; i < g.degree(s); ++i) {
      if (used[s][i]) continue;
      std::vector<Vertex> face;
      Vertex u = s, v = g.neighbors(s)[i];
      int iu = i;
      while (!used[u][iu]) {
        used[u][iu] = 1;
        face.push_back(u);
        const Vertex w = g.prev_ccw(v, u);
        u = v;
        v = w;
        iu = index_of(g.neighbors(u), v);
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

RotationSystem::RotationSystem(std::vector<std::array<Vertex, 3>> neighbors)
    : nbrs_(std::move(neighbors)) {
  std::vector<std::vector<Vertex>> rot(nbrs_.size());
  for (std::size_t v = 0; v < nbrs_.size(); ++v)
    rot[v].assign(nbrs_[v].begin(), nbrs_[v].end());
  graph_ = PlaneGraph(std::move(rot));
}

RotationSystem RotationSystem::relabeled(std::span<const Vertex> perm) const {
  std::vector<std::array<Vertex, 3>> out(nbrs_.size());
  for (std::size_t v = 0; v < nbrs_.size(); ++v)
    for (int k = 0; k < 3; ++k) out[perm[v]][k] = perm[nbrs_[v][k]];
  return RotationSystem(std::move(out));
}

RotationSystem RotationSystem::mirrored() const {
  auto out = nbrs_;
  for (auto& t : out) std::swap(t[1], t[2]);
  return RotationSystem(std::move(out));
}

FaceSet trace_faces(const RotationSystem& rot) {
  FaceSet fs = trace_faces(rot.graph());
  const int n = rot.n();
  const int e = 3 * n / 2;
  if (n - e + fs.size() != 2)
    throw Error(ErrorCode::kEulerViolation,
                "n - e + f = " + std::to_string(n - e + fs.size()) + ", expected 2");
  return fs;
}

bool is_connected(const PlaneGraph& g) {
  Vertex start = -1;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.present(v)) { start = v; break; }
  if (start < 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) { seen[u] = 1; ++count; stack.push_back(u); }
  }
  return count == g.vertex_count();
}

namespace {

// Connected and free of articulation points, ignoring vertex `skip`.
bool biconnected_without(const PlaneGraph& g, Vertex skip) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool ok = true;
  Vertex root = -1;
  for (Vertex v = 0; v < n; ++v)
    if (g.present(v) && v != skip) { root = v; break; }
  if (root < 0) return true;
  int root_children = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Vertex u : g.neighbors(v)) {
      if (u == skip || u == parent) continue;
      if (disc[u] >= 0) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      if (v == root) ++root_children;
      dfs(u, v);
      low[v] = std::min(low[v], low[u]);
      if (v != root && low[u] >= disc[v]) ok = false;
    }
  };
  dfs(root, -1);
  if (root_children > 1) ok = false;
  for (Vertex v = 0; v < n; ++v)
    if (g.present(v) && v != skip && disc[v] < 0) return false;
  return ok;
}

}  // namespace

bool is_three_connected(const PlaneGraph& g) {
  if (g.vertex_count() < 4) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.present(v) && !biconnected_without(g, v)) return false;
  return true;
}

bool is_three_connected(const RotationSystem& rot) { return is_three_connected(rot.graph()); }

namespace {

// Unit-capacity max flow on an undirected multigraph given as an edge list,
// stopping once `limit` units are found.
struct UnitFlow {
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> g;

  explicit UnitFlow(int n) : g(n) {}

  void add_undirected(int a, int b) {
    g[a].push_back({b, static_cast<int>(g[b].size()), 1});
    g[b].push_back({a, static_cast<int>(g[a].size()) - 1, 1});
  }

  int run(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit) {
      std::vector<std::pair<int, int>> pred(g.size(), {-1, -1});
      std::queue<int> q;
      q.push(s);
      pred[s] = {s, -1};
      while (!q.empty() && pred[t].first < 0) {
        const int v = q.front();
        q.pop();
        for (int i = 0; i < static_cast<int>(g[v].size()); ++i) {
          const Arc& a = g[v][i];
          if (a.cap > 0 && pred[a.to].first < 0) {
            pred[a.to] = {v, i};
            q.push(a.to);
          }
        }
      }
      if (pred[t].first < 0) break;
      for (int v = t; v != s;) {
        auto [p, i] = pred[v];
        Arc& a = g[p][i];
        a.cap -= 1;
        g[v][a.rev].cap += 1;
        v = p;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const Arc& a : g[v])
        if (a.cap > 0 && !seen[a.to]) { seen[a.to] = 1; stack.push_back(a.to); }
    }
    return seen;
  }
};

}  // namespace

std::optional<EdgeCut> find_cyclic_edge_cut(const RotationSystem& rot, int k) {
  const FaceSet fs = trace_faces(rot.graph());
  const int n = rot.n();
  const auto edges = rot.graph().edges();
  std::vector<std::vector<char>> member(fs.size(), std::vector<char>(n, 0));
  for (int f = 0; f < fs.size(); ++f)
    for (Vertex v : fs.faces[f]) member[f][v] = 1;

  for (int a = 0; a < fs.size(); ++a) {
    for (int b = a + 1; b < fs.size(); ++b) {
      bool disjoint = true;
      for (Vertex v : fs.faces[b])
        if (member[a][v]) { disjoint = false; break; }
      if (!disjoint) continue;
      // Node n is face a contracted, node n+1 is face b contracted.
      auto node = [&](Vertex v) { return member[a][v] ? n : member[b][v] ? n + 1 : v; };
      UnitFlow flow(n + 2);
      for (auto [u, v] : edges) {
        const int x = node(u), y = node(v);
        if (x != y) flow.add_undirected(x, y);
      }
      if (flow.run(n, n + 1, k) >= k) continue;
      const auto side = flow.reachable(n);
      EdgeCut cut;
      for (Vertex v = 0; v < n; ++v) (side[node(v)] ? cut.side_a : cut.side_b).push_back(v);
      for (auto [u, v] : edges)
        if (side[node(u)] != side[node(v)]) cut.edges.emplace_back(u, v);
      return cut;
    }
  }
  return std::nullopt;
}

bool cyclic_edge_connectivity_at_least(const RotationSystem& rot, int k) {
  return !find_cyclic_edge_cut(rot, k).has_value();
}

PlaneGraph induced_subgraph(const RotationSystem& rot, std::span<const Vertex> vertices) {
  return rot.graph().induced(vertices);
}

Graph::Graph(const PlaneGraph& g) : Graph(g.order(), g.edges()) {
  for (Vertex v = 0; v < g.order(); ++v) present_[v] = g.present(v) ? 1 : 0;
}

Graph::Graph(int order, std::vector<std::pair<Vertex, Vertex>> edges)
    : adj_(order), present_(order, 1) {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  edge_alive_.assign(edges_.size(), 1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto [a, b] = edges_[e];
    adj_[a].push_back({b, e});
    adj_[b].push_back({a, e});
  }
}

int Graph::vertex_count() const {
  return static_cast<int>(std::count(present_.begin(), present_.end(), 1));
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  for (const Arc& a : adj_[u])
    if (a.to == v) return a.edge;
  return std::nullopt;
}

Graph Graph::without_vertices(std::span<const Vertex> drop) const {
  Graph g = *this;
  for (Vertex v : drop) g.present_[v] = 0;
  for (Vertex v = 0; v < order(); ++v) {
    if (!g.present_[v]) {
      for (const Arc& a : g.adj_[v]) g.edge_alive_[a.edge] = 0;
      g.adj_[v].clear();
    }
  }
  for (Vertex v = 0; v < order(); ++v)
    std::erase_if(g.adj_[v], [&](const Arc& a) { return !g.edge_alive_[a.edge]; });
  return g;
}

}  // namespace clarkit
