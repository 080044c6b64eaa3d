#include "clarkit/clar.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "clarkit/error.hpp"

namespace clarkit {

namespace {

std::vector<EdgeId> sextet_edges(const Graph& g, const std::vector<Vertex>& hex) {
  return {*g.find_edge(hex[0], hex[1]), *g.find_edge(hex[2], hex[3]), *g.find_edge(hex[4], hex[5])};
}

// Branch and bound over vertex-disjoint hexagon sets.
class ClarSearch {
 public:
  ClarSearch(const HexagonSystem& S, int cap) : S_(S), g_(S.graph), cap_(cap) {
    const int H = static_cast<int>(S.hexagons.size());
    hexes_of_vertex_.assign(g_.order(), {});
    for (int h = 0; h < H; ++h)
      for (Vertex v : S.hexagons[h]) hexes_of_vertex_[v].push_back(h);
    // Order: most neighbouring hexagons first, then by id.
    std::vector<int> shared(H, 0);
    for (int a = 0; a < H; ++a)
      for (int b = 0; b < H; ++b) {
        if (a == b) continue;
        int common = 0;
        for (Vertex v : S.hexagons[a])
          common += std::count(S.hexagons[b].begin(), S.hexagons[b].end(), v);
        if (common >= 2) ++shared[a];
      }
    order_.resize(H);
    for (int h = 0; h < H; ++h) order_[h] = h;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (shared[a] != shared[b]) return shared[a] > shared[b];
      return S.ids[a] < S.ids[b];
    });
    removed_.assign(g_.order(), 0);
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!g_.present(v)) removed_[v] = 1;
    mark_.assign(H, 0);
  }

  // Maximum size of a sextet pattern, or -1 without any perfect matching.
  int maximum() {
    if (!has_perfect_matching(g_, removed_)) return -1;
    best_ = 0;
    enumerate_ = false;
    dfs(0);
    return best_;
  }

  // All patterns of size `target`, up to `cap` of them.
  std::vector<std::vector<int>> all_of_size(int target, int limit, bool& truncated) {
    found_.clear();
    truncated_ = false;
    limit_ = limit;
    target_ = target;
    enumerate_ = true;
    if (has_perfect_matching(g_, removed_)) dfs(0);
    truncated = truncated_;
    return found_;
  }

 private:
  bool free_hex(int h) const {
    for (Vertex v : S_.hexagons[h])
      if (removed_[v]) return false;
    return true;
  }

  // Upper bound on the number of disjoint hexagons among `cand`: a greedy
  // cover by cliques of hexagons sharing a vertex, since each clique holds
  // at most one chosen hexagon.
  int upper_bound(const std::vector<int>& cand) {
    ++stamp_;
    for (int h : cand) mark_[h] = stamp_;
    int cliques = 0;
    for (int h : cand) {
      if (mark_[h] != stamp_) continue;
      Vertex best_v = -1;
      int best_c = -1;
      for (Vertex v : S_.hexagons[h]) {
        int c = 0;
        for (int o : hexes_of_vertex_[v]) c += mark_[o] == stamp_;
        if (c > best_c) {
          best_c = c;
          best_v = v;
        }
      }
      for (int o : hexes_of_vertex_[best_v])
        if (mark_[o] == stamp_) mark_[o] = stamp_ - 1;
      ++cliques;
    }
    int free_vertices = 0;
    for (Vertex v = 0; v < g_.order(); ++v) free_vertices += !removed_[v];
    return std::min(cliques, free_vertices / 6);
  }

  void set_hex(int h, char value) {
    for (Vertex v : S_.hexagons[h]) removed_[v] = value;
  }

  bool done() const {
    if (enumerate_) return truncated_;
    return best_ >= cap_;
  }

  void dfs(std::size_t pos) {
    const int cur = static_cast<int>(chosen_.size());
    if (enumerate_) {
      if (cur == target_) {
        if (static_cast<int>(found_.size()) >= limit_) {
          truncated_ = true;
          return;
        }
        auto s = chosen_;
        std::sort(s.begin(), s.end());
        found_.push_back(std::move(s));
        return;
      }
    } else if (cur > best_) {
      best_ = cur;
    }
    if (done()) return;
    std::vector<std::size_t> cand_pos;
    std::vector<int> cand;
    for (std::size_t i = pos; i < order_.size(); ++i)
      if (free_hex(order_[i])) {
        cand_pos.push_back(i);
        cand.push_back(order_[i]);
      }
    if (cand.empty()) return;
    const int ub = std::min(upper_bound(cand), cap_ - cur);
    if (enumerate_ ? cur + ub < target_ : cur + ub <= best_) return;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const int h = cand[k];
      if (!free_hex(h)) continue;
      set_hex(h, 1);
      if (has_perfect_matching(g_, removed_)) {
        chosen_.push_back(h);
        dfs(cand_pos[k] + 1);
        chosen_.pop_back();
      }
      set_hex(h, 0);
      if (done()) return;
      // Remaining candidates cannot beat the incumbent.
      const int left = static_cast<int>(cand.size() - k - 1);
      if (enumerate_ ? cur + left < target_ : cur + left <= best_) return;
    }
  }

  const HexagonSystem& S_;
  const Graph& g_;
  int cap_;
  std::vector<std::vector<int>> hexes_of_vertex_;
  std::vector<int> order_;
  std::vector<char> removed_;
  std::vector<int> mark_;
  int stamp_ = 2;
  std::vector<int> chosen_;
  int best_ = 0;
  bool enumerate_ = false;
  int target_ = 0;
  int limit_ = 0;
  bool truncated_ = false;
  std::vector<std::vector<int>> found_;
};

SextetPattern make_pattern(const HexagonSystem& S, const std::vector<int>& local) {
  SextetPattern p;
  std::vector<EdgeId> forced;
  for (int h : local) {
    p.hexagons.push_back(S.ids[h]);
    for (EdgeId e : sextet_edges(S.graph, S.hexagons[h])) forced.push_back(e);
  }
  std::sort(p.hexagons.begin(), p.hexagons.end());
  p.witness = *find_perfect_matching(S.graph, forced);
  return p;
}

ClarResult solve(const HexagonSystem& S, int cap, const ClarOptions& opts) {
  ClarSearch search(S, cap);
  ClarResult r;
  r.clar_number = std::max(0, search.maximum());
  if (opts.with_formulas) {
    bool truncated = false;
    for (const auto& local : search.all_of_size(r.clar_number, opts.formula_cap, truncated))
      r.formulas.push_back(make_pattern(S, local));
    std::sort(r.formulas.begin(), r.formulas.end(),
              [](const SextetPattern& a, const SextetPattern& b) { return a.hexagons < b.hexagons; });
    r.formulas_truncated = truncated;
  }
  return r;
}

int fullerene_bound(const Fullerene& F) { return (F.n() - 12) / 6; }

}  // namespace

std::optional<Matching> is_sextet_pattern(const Fullerene& F, std::span<const FaceId> H) {
  for (FaceId h : H)
    if (h < 0 || h >= F.face_count() || F.face_size(h) != 6)
      throw Error(ErrorCode::kNotAHexagon, "face " + std::to_string(h) + " is not a hexagon");
  std::vector<char> used(F.n(), 0);
  const Graph g(F.graph());
  std::vector<EdgeId> forced;
  for (FaceId h : H) {
    for (Vertex v : F.face(h)) {
      if (used[v]) return std::nullopt;
      used[v] = 1;
    }
    for (EdgeId e : sextet_edges(g, F.face(h))) forced.push_back(e);
  }
  return find_perfect_matching(g, forced);
}

ClarResult clar_number(const HexagonSystem& S, const ClarOptions& opts) {
  ClarResult r = solve(S, static_cast<int>(S.hexagons.size()), opts);
  r.bound = static_cast<int>(S.hexagons.size());
  r.extremal = false;
  return r;
}

ClarResult clar_number(const Fullerene& F, const ClarOptions& opts) {
  const auto S = HexagonSystem::of(F);
  ClarResult r = solve(S, fullerene_bound(F), opts);
  r.bound = fullerene_bound(F);
  r.extremal = r.clar_number * 6 == F.n() - 12;
  return r;
}

std::vector<SextetPattern> enumerate_clar_formulas(const Fullerene& F, const ClarOptions& opts) {
  ClarOptions o = opts;
  o.with_formulas = true;
  return clar_number(F, o).formulas;
}

bool is_extremal(const Fullerene& F) {
  if ((F.n() - 12) % 6 != 0) return false;
  return clar_number(F, ClarOptions{.with_formulas = false}).extremal;
}

int clar_brute_force(const Fullerene& F) {
  const auto& hexes = F.hexagon_ids();
  const int H = static_cast<int>(hexes.size());
  if (H > 22) throw Error(ErrorCode::kTooManyHexagons, std::to_string(H) + " hexagons exceed the brute-force guard");
  const Graph g(F.graph());
  int best = 0;
  std::vector<char> removed(F.n());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << H); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    std::fill(removed.begin(), removed.end(), 0);
    bool disjoint = true;
    for (int i = 0; i < H && disjoint; ++i) {
      if (!(mask >> i & 1)) continue;
      for (Vertex v : F.face(hexes[i])) {
        if (removed[v]) disjoint = false;
        removed[v] = 1;
      }
    }
    if (disjoint && has_perfect_matching(g, removed)) best = size;
  }
  return best;
}

}  // namespace clarkit
