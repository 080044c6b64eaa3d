#include "clarkit/matching.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace clarkit {

bool Matching::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

std::vector<Vertex> Matching::covered(const Graph& g) const {
  std::vector<Vertex> out;
  for (EdgeId e : edges) {
    out.push_back(g.edge(e).first);
    out.push_back(g.edge(e).second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Matching::is_matching(const Graph& g) const {
  const auto c = covered(g);
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

bool Matching::is_perfect(const Graph& g) const {
  if (!is_matching(g)) return false;
  for (EdgeId e : edges)
    if (!g.edge_alive(e)) return false;
  return static_cast<int>(edges.size()) * 2 == g.vertex_count();
}

namespace {

// Edmonds' blossom algorithm on a small dense-index graph.
class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), mate_(n_, -1), p_(n_), base_(n_), used_(n_), blossom_(n_) {}

  // Returns the size of a maximum matching; mate() holds it afterwards.
  int run() {
    int size = 0;
    // Greedy start, low degree first.
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return adj_[a].size() < adj_[b].size(); });
    for (int v : order) {
      if (mate_[v] >= 0) continue;
      for (int u : adj_[v])
        if (mate_[u] < 0) {
          mate_[u] = v;
          mate_[v] = u;
          ++size;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) continue;
      int end = find_path(v);
      if (end < 0) continue;
      ++size;
      while (end >= 0) {
        const int pv = p_[end], ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return size;
  }

  const std::vector<int>& mate() const { return mate_; }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = p_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      p_[v] = child;
      child = mate_[v];
      v = p_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && p_[mate_[to]] >= 0)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (p_[to] < 0) {
          p_[to] = v;
          if (mate_[to] < 0) return to;
          used_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> mate_, p_, base_;
  std::vector<char> used_, blossom_;
};

// Local re-indexing of the live part of a graph.
struct Local {
  std::vector<int> to_local;   // -1 when absent
  std::vector<Vertex> to_global;
  std::vector<std::vector<int>> adj;
};

Local localize(const Graph& g, const std::vector<char>* removed, const std::vector<char>* dead_edge) {
  Local L;
  L.to_local.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!g.present(v) || (removed && (*removed)[v])) continue;
    L.to_local[v] = static_cast<int>(L.to_global.size());
    L.to_global.push_back(v);
  }
  L.adj.resize(L.to_global.size());
  for (std::size_t i = 0; i < L.to_global.size(); ++i) {
    for (const auto& a : g.arcs(L.to_global[i])) {
      if (dead_edge && (*dead_edge)[a.edge]) continue;
      const int j = L.to_local[a.to];
      if (j >= 0) L.adj[i].push_back(j);
    }
  }
  return L;
}

bool quick_reject(const Local& L) {
  if (L.to_global.size() % 2 != 0) return true;
  for (const auto& nb : L.adj)
    if (nb.empty()) return true;
  return false;
}

}  // namespace

bool has_perfect_matching(const Graph& g, const std::vector<char>& removed) {
  const Local L = localize(g, &removed, nullptr);
  if (quick_reject(L)) return false;
  Blossom b(L.adj);
  return b.run() * 2 == static_cast<int>(L.to_global.size());
}

bool has_perfect_matching(const Graph& g) {
  std::vector<char> none(g.order(), 0);
  return has_perfect_matching(g, none);
}

std::optional<Matching> find_perfect_matching(const Graph& g, std::span<const EdgeId> forced,
                                              std::span<const EdgeId> forbidden) {
  std::vector<char> removed(g.order(), 0), dead(g.edge_count(), 0);
  for (EdgeId e : forbidden) dead[e] = 1;
  for (EdgeId e : forced) {
    if (!g.edge_alive(e) || dead[e]) return std::nullopt;
    auto [a, b] = g.edge(e);
    if (!g.present(a) || !g.present(b) || removed[a] || removed[b]) return std::nullopt;
    removed[a] = removed[b] = 1;
  }
  const Local L = localize(g, &removed, &dead);
  Matching M{std::vector<EdgeId>(forced.begin(), forced.end())};
  if (!L.to_global.empty()) {
    if (quick_reject(L)) return std::nullopt;
    Blossom b(L.adj);
    if (b.run() * 2 != static_cast<int>(L.to_global.size())) return std::nullopt;
    const auto& mate = b.mate();
    for (std::size_t i = 0; i < mate.size(); ++i) {
      const int j = mate[i];
      if (static_cast<int>(i) < j) M.edges.push_back(*g.find_edge(L.to_global[i], L.to_global[j]));
    }
  }
  std::sort(M.edges.begin(), M.edges.end());
  return M;
}

std::optional<Matching> find_covering_matching(const Graph& g, const std::vector<char>& removed,
                                               const std::vector<char>& optional) {
  Local L = localize(g, &removed, nullptr);
  const int base = static_cast<int>(L.to_global.size());
  std::vector<int> stars;
  for (int i = 0; i < base; ++i)
    if (optional[L.to_global[i]]) stars.push_back(i);
  // Each optional vertex gets a partner; partners form a clique, plus one
  // parity vertex when needed.
  const int k = static_cast<int>(stars.size());
  const bool parity = (base + k) % 2 != 0;
  L.adj.resize(base + k + (parity ? 1 : 0));
  for (int s = 0; s < k; ++s) {
    const int star = base + s;
    L.adj[stars[s]].push_back(star);
    L.adj[star].push_back(stars[s]);
    for (int t = 0; t < k; ++t)
      if (t != s) L.adj[star].push_back(base + t);
    if (parity) {
      L.adj[star].push_back(base + k);
      L.adj[base + k].push_back(star);
    }
  }
  const int total = static_cast<int>(L.adj.size());
  if (total % 2 != 0) return std::nullopt;
  for (const auto& nb : L.adj)
    if (nb.empty()) return std::nullopt;
  Blossom b(L.adj);
  if (b.run() * 2 != total) return std::nullopt;
  Matching M;
  const auto& mate = b.mate();
  for (int i = 0; i < base; ++i) {
    const int j = mate[i];
    if (j < base && i < j) M.edges.push_back(*g.find_edge(L.to_global[i], L.to_global[j]));
  }
  std::sort(M.edges.begin(), M.edges.end());
  return M;
}

namespace {

// Residual-graph counter: branch on a live vertex of minimum residual
// degree (lowest id on ties) and memoise on the residual vertex set.
class Counter {
 public:
  explicit Counter(const Graph& g) : g_(g), alive_(g.order(), 0), deg_(g.order(), 0) {
    words_ = (g.order() + 63) / 64;
    for (Vertex v = 0; v < g.order(); ++v) alive_[v] = g.present(v) ? 1 : 0;
    for (Vertex v = 0; v < g.order(); ++v)
      if (alive_[v]) deg_[v] = static_cast<int>(g.arcs(v).size());
    live_ = g.vertex_count();
  }

  BigInt run() { return count(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const {
      std::size_t h = 1469598103934665603ull;
      for (auto w : k) h = (h ^ w) * 1099511628211ull;
      return h;
    }
  };

  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> k(words_, 0);
    for (Vertex v = 0; v < g_.order(); ++v)
      if (alive_[v]) k[v / 64] |= std::uint64_t{1} << (v % 64);
    return k;
  }

  void kill(Vertex v) {
    alive_[v] = 0;
    --live_;
    for (const auto& a : g_.arcs(v))
      if (alive_[a.to]) --deg_[a.to];
  }

  void revive(Vertex v) {
    alive_[v] = 1;
    ++live_;
    for (const auto& a : g_.arcs(v))
      if (alive_[a.to]) ++deg_[a.to];
  }

  BigInt count() {
    if (live_ == 0) return 1;
    if (live_ % 2 != 0) return 0;
    Vertex pick = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!alive_[v]) continue;
      if (pick < 0 || deg_[v] < deg_[pick]) pick = v;
    }
    if (deg_[pick] == 0) return 0;
    auto k = key();
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    BigInt total = 0;
    kill(pick);
    for (const auto& a : g_.arcs(pick)) {
      if (!alive_[a.to]) continue;
      kill(a.to);
      total += count();
      revive(a.to);
    }
    revive(pick);
    memo_.emplace(std::move(k), total);
    return total;
  }

  const Graph& g_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  int live_ = 0;
  int words_ = 1;
  std::unordered_map<std::vector<std::uint64_t>, BigInt, KeyHash> memo_;
};

}  // namespace

BigInt count_perfect_matchings(const Graph& g) {
  Counter c(g);
  return c.run();
}

bool is_alternating(const Graph& g, std::span<const Vertex> cycle, const Matching& M) {
  const std::size_t k = cycle.size();
  if (k < 2 || k % 2 != 0) return false;
  std::vector<char> in(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto e = g.find_edge(cycle[i], cycle[(i + 1) % k]);
    if (!e) return false;
    in[i] = M.contains(*e) ? 1 : 0;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (in[i] == in[(i + 1) % k]) return false;
  return true;
}

std::vector<FaceId> alternating_hexagons(const Fullerene& F, const Graph& g, const Matching& M) {
  std::vector<FaceId> out;
  for (FaceId h : F.hexagon_ids())
    if (is_alternating(g, F.face(h), M)) out.push_back(h);
  return out;
}

HexagonSystem HexagonSystem::of(const Fullerene& F) {
  HexagonSystem S{Graph(F.graph()), {}, {}};
  for (FaceId h : F.hexagon_ids()) {
    S.hexagons.push_back(F.face(h));
    S.ids.push_back(h);
  }
  return S;
}

namespace {

// Branch and bound over perfect matchings maximising alternating hexagons.
// A hexagon stays open until one of its vertices is matched by an edge
// leaving it.
class FriesSearch {
 public:
  explicit FriesSearch(const HexagonSystem& S) : g_(S.graph), n_(S.graph.order()) {
    const int H = static_cast<int>(S.hexagons.size());
    hex_of_edge_.assign(g_.edge_count(), {});
    hexes_of_vertex_.assign(n_, {});
    for (int h = 0; h < H; ++h) {
      const auto& cyc = S.hexagons[h];
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        hex_of_edge_[*g_.find_edge(cyc[i], cyc[(i + 1) % cyc.size()])].push_back(h);
        hexes_of_vertex_[cyc[i]].push_back(h);
      }
    }
    hex_count_ = H;
    mate_.assign(n_, -1);
    inside_.assign(H, 0);
    ruled_out_.assign(H, 0);
    deg_.assign(n_, 0);
  }

  // Best count among perfect matchings using `forced` and avoiding
  // `forbidden`; -1 when there is none. With target >= 0, only matchings
  // reaching target count and the search stops at the first one.
  int solve(const std::vector<EdgeId>& forced, const std::vector<char>& forbidden, int target) {
    std::fill(mate_.begin(), mate_.end(), -1);
    std::fill(inside_.begin(), inside_.end(), 0);
    std::fill(ruled_out_.begin(), ruled_out_.end(), 0);
    forbidden_ = forbidden;
    for (Vertex v = 0; v < n_; ++v) {
      deg_[v] = 0;
      if (!g_.present(v)) continue;
      for (const auto& a : g_.arcs(v))
        if (usable(a.edge)) ++deg_[v];
    }
    alternating_ = 0;
    open_ = hex_count_;
    best_ = target >= 0 ? target - 1 : -1;
    stop_at_target_ = target >= 0;
    found_ = false;
    for (EdgeId e : forced) {
      auto [a, b] = g_.edge(e);
      if (mate_[a] >= 0 || mate_[b] >= 0 || !usable(e)) return -1;
      match(a, b, e);
    }
    search();
    return found_ ? best_ : -1;
  }

 private:
  bool usable(EdgeId e) const { return !forbidden_[e] && g_.edge_alive(e); }
  bool on(EdgeId e, int h) const {
    const auto& l = hex_of_edge_[e];
    return std::find(l.begin(), l.end(), h) != l.end();
  }

  void match(Vertex a, Vertex b, EdgeId e) {
    mate_[a] = b;
    mate_[b] = a;
    for (Vertex x : {a, b})
      for (const auto& arc : g_.arcs(x))
        if (mate_[arc.to] < 0 && usable(arc.edge)) --deg_[arc.to];
    for (Vertex x : {a, b}) {
      for (int h : hexes_of_vertex_[x]) {
        if (on(e, h)) {
          if (++inside_[h] == 6) {
            ++alternating_;
            --open_;
          }
        } else if (ruled_out_[h]++ == 0) {
          --open_;
        }
      }
    }
  }

  void unmatch(Vertex a, Vertex b, EdgeId e) {
    for (Vertex x : {a, b}) {
      for (int h : hexes_of_vertex_[x]) {
        if (on(e, h)) {
          if (inside_[h]-- == 6) {
            --alternating_;
            ++open_;
          }
        } else if (--ruled_out_[h] == 0) {
          ++open_;
        }
      }
    }
    mate_[a] = mate_[b] = -1;
    for (Vertex x : {a, b})
      for (const auto& arc : g_.arcs(x))
        if (mate_[arc.to] < 0 && usable(arc.edge)) ++deg_[arc.to];
  }

  void search() {
    if (alternating_ + open_ <= best_) return;
    Vertex pick = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] >= 0 || !g_.present(v)) continue;
      if (pick < 0 || deg_[v] < deg_[pick]) pick = v;
    }
    if (pick < 0) {
      best_ = alternating_;
      found_ = true;
      return;
    }
    if (deg_[pick] == 0) return;
    for (const auto& arc : g_.arcs(pick)) {
      if (mate_[arc.to] >= 0 || !usable(arc.edge)) continue;
      match(pick, arc.to, arc.edge);
      search();
      unmatch(pick, arc.to, arc.edge);
      if (found_ && stop_at_target_) return;
    }
  }

  const Graph& g_;
  int n_;
  int hex_count_ = 0;
  std::vector<Vertex> mate_;
  std::vector<char> forbidden_;
  std::vector<std::vector<int>> hex_of_edge_;
  std::vector<std::vector<int>> hexes_of_vertex_;
  std::vector<int> inside_, ruled_out_, deg_;
  int alternating_ = 0;
  int open_ = 0;
  int best_ = -1;
  bool stop_at_target_ = false;
  bool found_ = false;
};

}  // namespace

std::pair<int, FriesResult> fries_number(const HexagonSystem& S) {
  const Graph& g = S.graph;
  FriesSearch s(S);
  const int best = s.solve({}, std::vector<char>(g.edge_count(), 0), -1);
  FriesResult r;
  r.pentagon_free = true;
  if (best < 0) return {best, r};
  // Lexicographically least optimal matching: decide edges in id order.
  std::vector<EdgeId> forced;
  std::vector<char> forbidden(g.edge_count(), 0);
  std::vector<char> covered(g.order(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.edge_alive(e)) continue;
    auto [a, b] = g.edge(e);
    if (covered[a] || covered[b]) continue;
    forced.push_back(e);
    if (s.solve(forced, forbidden, best) >= best) {
      covered[a] = covered[b] = 1;
    } else {
      forced.pop_back();
      forbidden[e] = 1;
    }
  }
  r.matching.edges = forced;
  for (std::size_t h = 0; h < S.hexagons.size(); ++h)
    if (is_alternating(g, S.hexagons[h], r.matching)) r.alternating_hexagons.push_back(S.ids[h]);
  return {best, std::move(r)};
}

int fries_value(const Fullerene& F) {
  const auto S = HexagonSystem::of(F);
  FriesSearch s(S);
  return s.solve({}, std::vector<char>(S.graph.edge_count(), 0), -1);
}

std::pair<int, FriesResult> fries_number(const Fullerene& F) {
  const auto S = HexagonSystem::of(F);
  auto [best, r] = fries_number(S);
  for (FaceId p : F.pentagon_ids()) {
    const auto& cyc = F.face(p);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (r.matching.contains(*S.graph.find_edge(cyc[i], cyc[(i + 1) % cyc.size()]))) r.pentagon_free = false;
  }
  return {best, std::move(r)};
}

}  // namespace clarkit
