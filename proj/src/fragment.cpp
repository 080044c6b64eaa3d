#include "clarkit/fragment.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "clarkit/error.hpp"

namespace clarkit {

namespace {

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

int index_in(const std::vector<int>& v, int x) {
  return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
}

// Successor rule shared with face tracing: u->v continues as v->prev_ccw(v, u).
int prev_ccw(const std::vector<std::vector<int>>& rot, int v, int u) {
  const auto& r = rot[v];
  const int d = static_cast<int>(r.size());
  return r[(index_in(r, u) + d - 1) % d];
}

int next_ccw(const std::vector<std::vector<int>>& rot, int v, int u) {
  const auto& r = rot[v];
  const int d = static_cast<int>(r.size());
  return r[(index_in(r, u) + 1) % d];
}

std::vector<std::vector<int>> trace(const std::vector<std::vector<int>>& rot) {
  std::map<std::pair<int, int>, bool> used;
  std::vector<std::vector<int>> faces;
  for (int s = 0; s < static_cast<int>(rot.size()); ++s) {
    for (int t : rot[s]) {
      if (used[{s, t}]) continue;
      std::vector<int> face;
      int u = s, v = t;
      while (!used[{u, v}]) {
        used[{u, v}] = true;
        face.push_back(u);
        const int w = prev_ccw(rot, v, u);
        u = v;
        v = w;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

// Local rotation of F restricted to an edge set on the given vertices.
std::vector<std::vector<int>> local_rotation(const Fullerene& F, const std::vector<Vertex>& vertices,
                                             const std::vector<std::pair<Vertex, Vertex>>& edges,
                                             std::vector<int>& local) {
  local.assign(F.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> rot(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    for (Vertex u : F.rot().neighbors(v))
      if (local[u] >= 0 && std::binary_search(edges.begin(), edges.end(), ordered(u, v))) rot[i].push_back(local[u]);
  }
  return rot;
}

// Face of F left of the dart u->v.
FaceId face_left(const Fullerene& F, Vertex u, Vertex v) {
  const auto& nb = F.rot().neighbors(u);
  for (int k = 0; k < 3; ++k)
    if (nb[k] == v) return F.dart_face(u, k);
  return -1;
}

// If the closed walk is exactly a face of F, that face.
std::optional<FaceId> as_face(const Fullerene& F, const std::vector<Vertex>& walk) {
  if (walk.size() < 2) return std::nullopt;
  const FaceId f = face_left(F, walk[0], walk[1]);
  if (f < 0 || F.face_size(f) != static_cast<int>(walk.size())) return std::nullopt;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (face_left(F, walk[i], walk[(i + 1) % walk.size()]) != f) return std::nullopt;
  return f;
}

std::vector<std::pair<Vertex, Vertex>> face_edges(const Fullerene& F, FaceId f) {
  const auto& c = F.face(f);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(ordered(c[i], c[(i + 1) % c.size()]));
  return out;
}

bool is_simple_cycle(const std::vector<Vertex>& walk) {
  auto s = walk;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

bool Fragment::is_fragment() const { return !boundary.empty() && holes.empty() && is_simple_cycle(boundary); }

bool Fragment::contains_vertex(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

int Fragment::degree(Vertex v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

Fragment make_region(const Fullerene& F, std::vector<FaceId> faces, std::vector<std::pair<Vertex, Vertex>> extra_edges) {
  Fragment G;
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto& e : extra_edges) e = ordered(e.first, e.second);
  std::sort(extra_edges.begin(), extra_edges.end());
  G.faces = faces;
  G.extra_edges = extra_edges;
  for (FaceId f : faces) {
    for (Vertex v : F.face(f)) G.vertices.push_back(v);
    for (auto e : face_edges(F, f)) G.edges.push_back(e);
  }
  for (auto [a, b] : extra_edges) {
    if (!F.graph().adjacent(a, b)) throw Error(ErrorCode::kNotAFragment, "extra edge is not an edge of the fullerene");
    G.vertices.push_back(a);
    G.vertices.push_back(b);
    G.edges.push_back({a, b});
  }
  std::sort(G.vertices.begin(), G.vertices.end());
  G.vertices.erase(std::unique(G.vertices.begin(), G.vertices.end()), G.vertices.end());
  std::sort(G.edges.begin(), G.edges.end());
  G.edges.erase(std::unique(G.edges.begin(), G.edges.end()), G.edges.end());

  std::vector<int> local;
  const auto rot = local_rotation(F, G.vertices, G.edges, local);
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i].size() == 2) G.W.push_back(G.vertices[i]);

  std::vector<std::vector<Vertex>> walks;
  for (const auto& lf : trace(rot)) {
    std::vector<Vertex> walk;
    for (int x : lf) walk.push_back(G.vertices[x]);
    const auto f = as_face(F, walk);
    if (f && std::binary_search(faces.begin(), faces.end(), *f)) continue;
    walks.push_back(std::move(walk));
  }
  std::stable_sort(walks.begin(), walks.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  if (!walks.empty()) {
    G.boundary = walks[0];
    G.holes.assign(walks.begin() + 1, walks.end());
  }
  return G;
}

std::vector<Fragment> pentagon_components(const Fullerene& F) {
  std::vector<char> seen(F.face_count(), 0);
  std::vector<Fragment> out;
  for (FaceId p : F.pentagon_ids()) {
    if (seen[p]) continue;
    std::vector<FaceId> comp{p};
    seen[p] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (FaceId q : F.face_adjacency(comp[i]))
        if (F.is_pentagon(q) && !seen[q]) {
          seen[q] = 1;
          comp.push_back(q);
        }
    out.push_back(make_region(F, comp));
  }
  return out;
}

std::vector<PentagonalRing> detect_pentagonal_rings(const Fullerene& F) {
  const auto& P = F.pentagon_ids();
  const int k = static_cast<int>(P.size());
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) adj[i][j] = i != j && F.faces_adjacent(P[i], P[j]);

  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> on(k, 0);
  auto dfs = [&](auto&& self) -> void {
    const int s = path.front(), y = path.back();
    const int m = static_cast<int>(path.size());
    for (int x = s + 1; x < k; ++x) {
      if (on[x] || !adj[y][x]) continue;
      bool chord = false;
      for (int i = 1; i + 1 < m && !chord; ++i) chord = adj[x][path[i]];
      if (chord) continue;
      if (m >= 2 && adj[x][s]) {
        // Closing vertex; each cycle is met once per direction.
        if (m + 1 >= 5 && m + 1 <= 12 && path[1] < x) {
          auto c = path;
          c.push_back(x);
          cycles.push_back(std::move(c));
        }
        continue;
      }
      path.push_back(x);
      on[x] = 1;
      self(self);
      on[x] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < k; ++s) {
    path = {s};
    on[s] = 1;
    dfs(dfs);
    on[s] = 0;
  }
  std::vector<PentagonalRing> rings;
  for (const auto& c : cycles) {
    PentagonalRing r;
    r.k = static_cast<int>(c.size());
    for (int i : c) r.pentagons.push_back(P[i]);
    rings.push_back(std::move(r));
  }
  std::sort(rings.begin(), rings.end(), [](const PentagonalRing& a, const PentagonalRing& b) {
    return std::pair{a.k, a.pentagons} < std::pair{b.k, b.pentagons};
  });
  return rings;
}

std::vector<FaceId> adjoining_faces(const Fullerene& F, const Fragment& G) {
  std::vector<FaceId> out;
  for (auto [u, v] : G.edges) {
    const auto [a, b] = F.edge_faces(u, v);
    for (FaceId f : {a, b})
      if (!std::binary_search(G.faces.begin(), G.faces.end(), f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Fragment territory(const Fullerene& F, const Fragment& G) {
  auto faces = G.faces;
  for (FaceId f : adjoining_faces(F, G)) faces.push_back(f);
  return make_region(F, faces, G.extra_edges);
}

std::optional<Fragment> hexagon_extension(const Fullerene& F, const Fragment& G) {
  for (FaceId f : adjoining_faces(F, G))
    if (F.face_size(f) != 6) return std::nullopt;
  return territory(F, G);
}

namespace {

struct ClarSetSearch {
  const Fullerene& F;
  const Fragment& G;
  std::vector<FaceId> candidates;
  Graph g;
  std::vector<char> outside, optional, used;
  std::vector<FaceId> chosen;
  std::vector<ClarSet> found;
  int best = 1 << 30;

  ClarSetSearch(const Fullerene& F_, const Fragment& G_) : F(F_), G(G_), g(F_.n(), G_.edges) {
    outside.assign(F.n(), 1);
    optional.assign(F.n(), 0);
    for (Vertex v : G.vertices) outside[v] = 0;
    for (Vertex v : G.W) optional[v] = 1;
    used.assign(F.n(), 0);
  }

  void evaluate() {
    std::vector<Vertex> U;
    for (Vertex v : G.vertices)
      if (!used[v]) U.push_back(v);
    const int u = static_cast<int>(U.size());
    if (u > best) return;
    std::vector<char> removed(F.n(), 0);
    for (Vertex v = 0; v < F.n(); ++v) removed[v] = outside[v] || used[v];
    if (!find_covering_matching(g, removed, optional)) return;
    if (u < best) {
      best = u;
      found.clear();
    }
    ClarSet s;
    s.hexagons = chosen;
    std::sort(s.hexagons.begin(), s.hexagons.end());
    s.U = std::move(U);
    s.normal = has_perfect_matching(g, removed);
    found.push_back(std::move(s));
  }

  void dfs(std::size_t i) {
    if (i == candidates.size()) {
      evaluate();
      return;
    }
    dfs(i + 1);
    const FaceId h = candidates[i];
    for (Vertex v : F.face(h))
      if (used[v]) return;
    for (Vertex v : F.face(h)) used[v] = 1;
    chosen.push_back(h);
    dfs(i + 1);
    chosen.pop_back();
    for (Vertex v : F.face(h)) used[v] = 0;
  }
};

}  // namespace

std::vector<ClarSet> all_clar_sets(const Fullerene& F, const Fragment& G) {
  const auto ext = hexagon_extension(F, G);
  if (!ext) throw Error(ErrorCode::kNotMaximal, "a face adjoining the subgraph is a pentagon");
  ClarSetSearch s(F, G);
  for (FaceId f : ext->faces)
    if (F.face_size(f) == 6) s.candidates.push_back(f);
  s.dfs(0);
  std::sort(s.found.begin(), s.found.end(), [](const ClarSet& a, const ClarSet& b) {
    if (a.normal != b.normal) return a.normal;
    return a.hexagons < b.hexagons;
  });
  return s.found;
}

ClarSet clar_set(const Fullerene& F, const Fragment& G) {
  auto all = all_clar_sets(F, G);
  if (all.empty()) throw Error(ErrorCode::kNotMaximal, "no hexagon set satisfies the covering condition");
  return all.front();
}

Fragment induced_region(const Fullerene& F, const std::vector<Vertex>& vertices) {
  std::vector<char> in(F.n(), 0);
  for (Vertex v : vertices) in[v] = 1;
  std::vector<FaceId> faces;
  for (FaceId f = 0; f < F.face_count(); ++f) {
    bool all = true;
    for (Vertex v : F.face(f)) all = all && in[v];
    if (all) faces.push_back(f);
  }
  std::vector<std::pair<Vertex, Vertex>> covered;
  for (FaceId f : faces)
    for (auto e : face_edges(F, f)) covered.push_back(e);
  std::sort(covered.begin(), covered.end());
  std::vector<std::pair<Vertex, Vertex>> extra;
  for (Vertex v : vertices)
    for (Vertex u : F.rot().neighbors(v))
      if (v < u && in[u] && !std::binary_search(covered.begin(), covered.end(), std::pair{v, u})) extra.push_back({v, u});
  return make_region(F, faces, extra);
}

Fragment clar_extension(const Fullerene& F, const Fragment& G, const ClarSet& s) {
  auto vs = G.vertices;
  for (FaceId h : s.hexagons)
    for (Vertex v : F.face(h)) vs.push_back(v);
  return induced_region(F, vs);
}

int pentagon_count(const Fullerene& F, const Fragment& G) {
  int k = 0;
  for (FaceId f : G.faces) k += F.is_pentagon(f);
  return k;
}

bool is_extremal_fragment(const Fullerene& F, const Fragment& G) {
  return static_cast<int>(clar_set(F, G).U.size()) == pentagon_count(F, G);
}

int gamma(const Fullerene& F, const Fragment& G) {
  std::vector<FaceId> P;
  for (FaceId f : G.faces)
    if (F.is_pentagon(f)) P.push_back(f);
  if (P.size() <= 1) return 0;
  int best = 1 << 30;
  for (FaceId p : P) {
    int d = 0;
    for (FaceId q : P) d += q != p && F.faces_adjacent(p, q);
    best = std::min(best, d);
  }
  return best;
}

std::vector<int> boundary_labeling(const std::vector<Vertex>& walk, const std::vector<char>& is_two) {
  std::vector<int> pos;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (is_two[walk[i]]) pos.push_back(static_cast<int>(i));
  if (pos.empty()) throw Error(ErrorCode::kNoTwoDegreeVertices, "the walk has no 2-degree vertices");
  const int L = static_cast<int>(walk.size());
  const int k = static_cast<int>(pos.size());
  std::vector<int> seq(k);
  for (int i = 0; i < k; ++i) seq[i] = ((pos[(i + 1) % k] - pos[i]) % L + L) % L;
  if (k == 1) seq[0] = L;
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int r = 0; r < k; ++r) {
      std::vector<int> cand(k);
      for (int i = 0; i < k; ++i) cand[i] = seq[(r + i) % k];
      best = std::max(best, cand);
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

std::vector<int> boundary_labeling(const Fragment& G) {
  if (G.boundary.empty()) throw Error(ErrorCode::kNoTwoDegreeVertices, "the region has no boundary");
  std::vector<char> is_two(*std::max_element(G.boundary.begin(), G.boundary.end()) + 1, 0);
  for (Vertex v : G.W)
    if (v < static_cast<Vertex>(is_two.size())) is_two[v] = 1;
  return boundary_labeling(G.boundary, is_two);
}

std::string labeling_string(const std::vector<int>& labeling) {
  std::string s;
  for (int x : labeling) s += std::to_string(x);
  return s;
}

std::vector<std::vector<Vertex>> region_boundaries(const Fullerene& F, const std::vector<Vertex>& vertices) {
  auto vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v : vs)
    for (Vertex u : F.rot().neighbors(v))
      if (u > v && std::binary_search(vs.begin(), vs.end(), u)) edges.push_back({v, u});
  std::sort(edges.begin(), edges.end());
  std::vector<int> local;
  const auto rot = local_rotation(F, vs, edges, local);
  std::vector<std::vector<Vertex>> out;
  for (const auto& lf : trace(rot)) {
    std::vector<Vertex> walk;
    for (int x : lf) walk.push_back(vs[x]);
    if (!as_face(F, walk)) out.push_back(std::move(walk));
  }
  return out;
}

int Patch::attach(int face, int edge, int size) {
  const auto& c = faces.at(face);
  const int len = static_cast<int>(c.size());
  std::deque<int> run{c[(edge + 1) % len], c[edge]};
  while (rot[run.front()].size() == 3) run.push_front(next_ccw(rot, run.front(), run[1]));
  while (rot[run.back()].size() == 3) run.push_back(prev_ccw(rot, run.back(), run[run.size() - 2]));
  const int L = static_cast<int>(run.size()) - 1;
  const int m = size - (L + 1);
  if (m < 0 || run.front() == run.back()) throw std::logic_error("face does not fit the boundary notch");
  const int b0 = run.front(), b1 = run[1], bl = run.back(), bl1 = run[run.size() - 2];
  std::vector<int> z;
  for (int i = 0; i < m; ++i) {
    z.push_back(order());
    rot.emplace_back();
  }
  const int to_b0 = m ? z.back() : bl;
  const int to_bl = m ? z.front() : b0;
  rot[b0].insert(rot[b0].begin() + index_in(rot[b0], b1) + 1, to_b0);
  rot[bl].insert(rot[bl].begin() + index_in(rot[bl], bl1), to_bl);
  for (int i = 0; i < m; ++i) {
    rot[z[i]].push_back(i == 0 ? bl : z[i - 1]);
    rot[z[i]].push_back(i + 1 == m ? b0 : z[i + 1]);
  }
  std::vector<int> cycle(run.begin(), run.end());
  cycle.insert(cycle.end(), z.begin(), z.end());
  faces.push_back(std::move(cycle));
  return static_cast<int>(faces.size()) - 1;
}

std::vector<int> Patch::canonical_code() const {
  std::vector<int> best;
  const int n = order();
  for (int u = 0; u < n; ++u) {
    for (int v : rot[u]) {
      for (int dir : {1, -1}) {
        std::vector<int> label(n, -1), ref(n, -1), code, queue{u};
        label[u] = 0;
        ref[u] = v;
        int next = 1;
        bool worse = false;
        for (std::size_t qi = 0; qi < queue.size() && !worse; ++qi) {
          const int x = queue[qi];
          const int d = static_cast<int>(rot[x].size());
          code.push_back(d);
          const int start = index_in(rot[x], ref[x]);
          for (int i = 0; i < d; ++i) {
            const int y = rot[x][((start + dir * i) % d + d) % d];
            if (label[y] < 0) {
              label[y] = next++;
              ref[y] = x;
              queue.push_back(y);
            }
            code.push_back(label[y]);
          }
          // Early exit once the prefix already exceeds the incumbent.
          if (!best.empty()) {
            const std::size_t k = std::min(code.size(), best.size());
            const auto cmp = std::lexicographical_compare_three_way(code.begin(), code.begin() + k, best.begin(),
                                                                    best.begin() + k);
            if (cmp > 0) worse = true;
          }
        }
        if (!worse && (best.empty() || code < best)) best = std::move(code);
      }
    }
  }
  return best;
}

Patch single_face(int size) {
  Patch p;
  p.rot.resize(size);
  std::vector<int> cycle;
  for (int i = 0; i < size; ++i) {
    p.rot[i] = {(i + size - 1) % size, (i + 1) % size};
    cycle.push_back(i);
  }
  p.faces.push_back(cycle);
  return p;
}

namespace {

// Orients (a, b) so that a face of p lies on its left; -1 when the edge is
// missing or interior.
int face_left_of(const Patch& p, std::pair<int, int>& e) {
  int left = -1, right = -1;
  for (int f = 0; f < static_cast<int>(p.faces.size()); ++f) {
    const auto& c = p.faces[f];
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i], y = c[(i + 1) % c.size()];
      if (x == e.first && y == e.second) left = f;
      if (x == e.second && y == e.first) right = f;
    }
  }
  if ((left < 0) == (right < 0)) return -1;
  if (left < 0) std::swap(e.first, e.second);
  return std::max(left, right);
}

int other_neighbor(const Patch& p, int v, int u) { return p.rot[v][0] == u ? p.rot[v][1] : p.rot[v][0]; }

}  // namespace

Patch paste(const Patch& X, const Patch& Y, std::pair<int, int> ex, std::pair<int, int> ey) {
  if (face_left_of(X, ex) < 0 || face_left_of(Y, ey) < 0)
    throw Error(ErrorCode::kIncompatibleOrientation, "pasting edge is not a boundary edge");
  const auto [a, b] = ex;
  const auto [c, d] = ey;
  for (auto [P, v] : {std::pair{&X, a}, {&X, b}, {&Y, c}, {&Y, d}})
    if (P->rot[v].size() != 2) throw Error(ErrorCode::kIncompatibleOrientation, "pasting edge end is not 2-degree");
  // c becomes b and d becomes a, so the two sides face each other.
  std::vector<int> map(Y.order(), -1);
  map[c] = b;
  map[d] = a;
  int next = X.order();
  for (int v = 0; v < Y.order(); ++v)
    if (map[v] < 0) map[v] = next++;
  Patch out;
  out.rot = X.rot;
  out.rot.resize(next);
  for (int v = 0; v < Y.order(); ++v) {
    if (v == c || v == d) continue;
    for (int u : Y.rot[v]) out.rot[map[v]].push_back(map[u]);
  }
  out.rot[a] = {b, other_neighbor(X, a, b), map[other_neighbor(Y, d, c)]};
  out.rot[b] = {other_neighbor(X, b, a), a, map[other_neighbor(Y, c, d)]};
  out.faces = X.faces;
  for (const auto& f : Y.faces) {
    std::vector<int> g;
    for (int v : f) g.push_back(map[v]);
    out.faces.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<int, int>> pasting_candidates(const Patch& p) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < p.order(); ++v)
    for (int u : p.rot[v]) {
      if (v > u || p.rot[v].size() != 2 || p.rot[u].size() != 2) continue;
      std::pair<int, int> e{v, u};
      if (face_left_of(p, e) >= 0) out.push_back({v, u});
    }
  return out;
}

Patch patch_of(const Fullerene& F, const std::vector<FaceId>& faces) {
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (FaceId f : faces) {
    for (Vertex v : F.face(f)) vs.push_back(v);
    for (auto e : face_edges(F, f)) edges.push_back(e);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<int> local;
  Patch p;
  p.rot = local_rotation(F, vs, edges, local);
  for (FaceId f : faces) {
    std::vector<int> c;
    for (Vertex v : F.face(f)) c.push_back(local[v]);
    p.faces.push_back(std::move(c));
  }
  return p;
}

const char* to_string(FragmentTag t) {
  switch (t) {
    case FragmentTag::kP: return "P";
    case FragmentTag::kB1: return "B1";
    case FragmentTag::kB2: return "B2";
    case FragmentTag::kB3: return "B3";
    case FragmentTag::kP2: return "P2";
    case FragmentTag::kPB2: return "P_B2";
    case FragmentTag::kPB2P: return "P_B2_P";
    case FragmentTag::kOther: return "Other";
  }
  return "?";
}

namespace {

// Chain of k pentagons, each adjoining the next across an edge two steps
// round from the previous one, turning alternately left and right.
Patch zigzag_chain(int k) {
  Patch p = single_face(5);
  if (k >= 2) p.attach(0, 0, 5);
  for (int i = 1; i + 1 < k; ++i) p.attach(i, i % 2 == 1 ? 2 : 3, 5);
  return p;
}

int shared_edge(const Patch& p, int a, int b) {
  const auto& ca = p.faces[a];
  const auto& cb = p.faces[b];
  const int len = static_cast<int>(ca.size());
  for (int i = 0; i < len; ++i) {
    const int x = ca[i], y = ca[(i + 1) % len];
    for (std::size_t j = 0; j < cb.size(); ++j)
      if (cb[j] == y && cb[(j + 1) % cb.size()] == x) return i;
  }
  return -1;
}

// Four pentagons around one edge (two meeting triangles of pentagons) with a
// tail pentagon at each far end.
Patch b3_patch() {
  Patch p = single_face(5);                 // p1
  const int tail = p.attach(0, 0, 5);       // p, adjoining p1 only
  const int p2 = p.attach(0, 2, 5);         // p2, two steps round p1 from p
  const int f = p.attach(0, 3, 5);          // f, closing the notch between p1 and p2
  const int ef = shared_edge(p, p2, f);     // next to p2's edge with p1
  const int f2 = p.attach(p2, ef == 1 ? 2 : 3, 5);
  // The tail pentagon on f2 sits opposite its two shared edges.
  const int s = shared_edge(p, f2, p2), t = shared_edge(p, f2, f);
  int far = -1;
  for (int i = 0; i < 5; ++i) {
    const int a = (i + 4) % 5, b = (i + 1) % 5;
    if (i != s && i != t && a != s && a != t && b != s && b != t) far = i;
  }
  p.attach(f2, far, 5);
  (void)tail;
  return p;
}

struct TemplateCodes {
  std::vector<std::pair<FragmentTag, std::vector<int>>> codes;
  TemplateCodes() {
    for (FragmentTag t : {FragmentTag::kP, FragmentTag::kP2, FragmentTag::kB2, FragmentTag::kPB2,
                          FragmentTag::kPB2P, FragmentTag::kB3})
      codes.emplace_back(t, fragment_template(t).canonical_code());
  }
};

const TemplateCodes& template_codes() {
  static const TemplateCodes t;
  return t;
}

}  // namespace

const Patch& fragment_template(FragmentTag t) {
  static const Patch p = zigzag_chain(1), p2 = zigzag_chain(2), b2 = zigzag_chain(4), pb2 = zigzag_chain(5),
                     pb2p = zigzag_chain(6), b3 = b3_patch();
  switch (t) {
    case FragmentTag::kP: return p;
    case FragmentTag::kP2: return p2;
    case FragmentTag::kB2: return b2;
    case FragmentTag::kPB2: return pb2;
    case FragmentTag::kPB2P: return pb2p;
    case FragmentTag::kB3: return b3;
    default: throw std::invalid_argument("no patch template for this tag");
  }
}

FragmentClass classify_fragment(const Fullerene& F, const Fragment& G) {
  if (!hexagon_extension(F, G)) throw Error(ErrorCode::kNotMaximal, "a face adjoining the fragment is a pentagon");
  FragmentClass c;
  c.clar_set = clar_set(F, G);
  c.gamma = gamma(F, G);
  if (!G.W.empty() && !G.boundary.empty()) c.labeling = boundary_labeling(G);
  if (G.is_fragment() && G.extra_edges.empty() && pentagon_count(F, G) == static_cast<int>(G.faces.size())) {
    const auto code = patch_of(F, G.faces).canonical_code();
    for (const auto& [tag, tc] : template_codes().codes)
      if (tc == code) c.tag = tag;
  }
  return c;
}

namespace {

// Joint choice of one Clar set per component, consistent on shared
// hexagons, followed by an exact hexagon cover of the rest.
struct StructuralSearch {
  const Fullerene& F;
  const std::vector<Fragment>& comps;
  std::vector<std::vector<ClarSet>> options;
  std::vector<std::vector<FaceId>> ext_hexes;  // hexagons of each H[B_i]
  Graph g;
  std::vector<int> owner_count;  // per face: how many chosen sets contain it
  std::vector<char> covered;     // vertices covered by chosen hexagons
  std::vector<int> cover_count;  // per vertex, with multiplicity of identical hexagons
  std::vector<int> choice;
  bool normal_seen = false;
  std::optional<SextetPattern> witness;

  StructuralSearch(const Fullerene& F_, const std::vector<Fragment>& c) : F(F_), comps(c), g(F_.graph()) {
    owner_count.assign(F.face_count(), 0);
    cover_count.assign(F.n(), 0);
  }

  bool in_ext(int i, FaceId h) const { return std::binary_search(ext_hexes[i].begin(), ext_hexes[i].end(), h); }

  bool add(int i, const ClarSet& s) {
    // Hexagons already chosen that lie in H[B_i] must belong to s, and the
    // new ones must not clash with chosen hexagons.
    for (FaceId h = 0; h < F.face_count(); ++h)
      if (owner_count[h] > 0 && in_ext(i, h) && !std::binary_search(s.hexagons.begin(), s.hexagons.end(), h))
        return false;
    for (FaceId h : s.hexagons) {
      for (int j = 0; j < static_cast<int>(choice.size()); ++j)
        if (in_ext(j, h) && !std::binary_search(options[j][choice[j]].hexagons.begin(),
                                                 options[j][choice[j]].hexagons.end(), h))
          return false;
      if (owner_count[h] > 0) continue;
      for (Vertex v : F.face(h))
        if (cover_count[v] > 0) return false;
    }
    return true;
  }

  void apply(const ClarSet& s, int delta) {
    for (FaceId h : s.hexagons) {
      if (delta > 0 && owner_count[h]++ == 0)
        for (Vertex v : F.face(h)) ++cover_count[v];
      if (delta < 0 && --owner_count[h] == 0)
        for (Vertex v : F.face(h)) --cover_count[v];
    }
  }

  bool finish() {
    std::vector<char> in_b(F.n(), 0);
    for (const auto& c : comps)
      for (Vertex v : c.vertices) in_b[v] = 1;
    // Normality: F[union of B_i] minus the hexagons has a perfect matching.
    std::vector<char> removed(F.n(), 0);
    for (Vertex v = 0; v < F.n(); ++v) removed[v] = !in_b[v] || cover_count[v] > 0;
    if (!has_perfect_matching(g, removed)) return false;
    normal_seen = true;
    // Exact cover of F - C[union B_i] by hexagons.
    std::vector<char> rest(F.n(), 0);
    for (Vertex v = 0; v < F.n(); ++v) rest[v] = !in_b[v] && cover_count[v] == 0;
    std::vector<FaceId> cover;
    if (!exact_cover(rest, cover)) return false;
    SextetPattern p;
    for (FaceId h = 0; h < F.face_count(); ++h)
      if (owner_count[h] > 0) p.hexagons.push_back(h);
    for (FaceId h : cover) p.hexagons.push_back(h);
    std::sort(p.hexagons.begin(), p.hexagons.end());
    std::vector<EdgeId> forced;
    for (FaceId h : p.hexagons) {
      const auto& c = F.face(h);
      for (int k = 0; k < 6; k += 2) forced.push_back(*g.find_edge(c[k], c[k + 1]));
    }
    auto m = find_perfect_matching(g, forced);
    if (!m) return false;
    p.witness = std::move(*m);
    witness = std::move(p);
    return true;
  }

  bool exact_cover(std::vector<char>& rest, std::vector<FaceId>& cover) {
    Vertex v = 0;
    while (v < F.n() && !rest[v]) ++v;
    if (v == F.n()) return true;
    for (FaceId h : F.vertex_faces(v)) {
      if (F.face_size(h) != 6) continue;
      bool fits = true;
      for (Vertex x : F.face(h)) fits = fits && rest[x];
      if (!fits) continue;
      for (Vertex x : F.face(h)) rest[x] = 0;
      cover.push_back(h);
      if (exact_cover(rest, cover)) return true;
      cover.pop_back();
      for (Vertex x : F.face(h)) rest[x] = 1;
    }
    return false;
  }

  bool dfs(std::size_t i) {
    if (i == comps.size()) return finish();
    for (int k = 0; k < static_cast<int>(options[i].size()); ++k) {
      if (!add(static_cast<int>(i), options[i][k])) continue;
      apply(options[i][k], +1);
      choice.push_back(k);
      const bool ok = dfs(i + 1);
      choice.pop_back();
      apply(options[i][k], -1);
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

StructuralReport structural_report(const Fullerene& F) {
  if (F.n() < 60) throw Error(ErrorCode::kWrongOrder, "the structural test needs at least 60 vertices");
  StructuralReport r;
  auto comps = pentagon_components(F);
  // Visit components so that neighbours follow each other, which lets the
  // consistency check on shared hexagons prune early.
  {
    std::vector<Fragment> ordered_comps;
    std::vector<char> taken(comps.size(), 0);
    std::vector<std::vector<FaceId>> ext(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) ext[i] = adjoining_faces(F, comps[i]);
    auto near = [&](std::size_t a, std::size_t b) {
      for (FaceId f : ext[a])
        if (std::binary_search(ext[b].begin(), ext[b].end(), f)) return true;
      return false;
    };
    std::vector<std::size_t> order;
    while (order.size() < comps.size()) {
      std::size_t start = 0;
      while (taken[start]) ++start;
      taken[start] = 1;
      order.push_back(start);
      for (std::size_t q = order.size() - 1; q < order.size(); ++q)
        for (std::size_t j = 0; j < comps.size(); ++j)
          if (!taken[j] && near(order[q], j)) {
            taken[j] = 1;
            order.push_back(j);
          }
    }
    for (std::size_t i : order) ordered_comps.push_back(std::move(comps[i]));
    comps = std::move(ordered_comps);
  }
  r.components = comps;
  bool cond1 = true;
  for (const auto& c : comps) {
    if (!c.is_fragment() || !hexagon_extension(F, c)) {
      cond1 = false;
      r.classes.push_back(FragmentClass{});
      continue;
    }
    r.classes.push_back(classify_fragment(F, c));
    if (r.classes.back().tag == FragmentTag::kOther) cond1 = false;
  }
  if (!cond1) {
    r.failed_condition = 1;
    return r;
  }
  StructuralSearch s(F, comps);
  for (const auto& c : comps) {
    s.options.push_back(all_clar_sets(F, c));
    auto ext = hexagon_extension(F, c)->faces;
    std::vector<FaceId> hexes;
    for (FaceId f : ext)
      if (F.face_size(f) == 6) hexes.push_back(f);
    s.ext_hexes.push_back(std::move(hexes));
  }
  if (s.dfs(0)) {
    r.extremal = true;
    r.witness = std::move(s.witness);
  } else {
    r.failed_condition = s.normal_seen ? 3 : 2;
  }
  return r;
}

bool theorem2_classify(const Fullerene& F) { return structural_report(F).extremal; }

std::vector<B1Pair> b1_pairs(const Fullerene& F, const SextetPattern& formula) {
  const Graph g(F.graph());
  std::vector<char> in_hex(F.n(), 0);
  for (FaceId h : formula.hexagons)
    for (Vertex v : F.face(h)) in_hex[v] = 1;
  std::vector<B1Pair> out;
  for (EdgeId e : formula.witness.edges) {
    const auto [u, v] = g.edge(e);
    if (in_hex[u] || in_hex[v]) continue;
    auto pentagon_at = [&](Vertex x) {
      FaceId found = -1;
      int count = 0;
      for (FaceId f : F.vertex_faces(x))
        if (F.is_pentagon(f)) {
          found = f;
          ++count;
        }
      return count == 1 ? found : -1;
    };
    const FaceId a = pentagon_at(u), b = pentagon_at(v);
    if (a < 0 || b < 0 || a == b || F.faces_adjacent(a, b)) continue;
    out.push_back({std::min(a, b), std::max(a, b), {u, v}});
  }
  std::sort(out.begin(), out.end(), [](const B1Pair& x, const B1Pair& y) { return std::pair{x.a, x.b} < std::pair{y.a, y.b}; });
  return out;
}

}  // namespace clarkit
