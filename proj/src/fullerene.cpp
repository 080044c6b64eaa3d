#include "clarkit/fullerene.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "clarkit/error.hpp"

namespace clarkit {

std::vector<int> SpiralSequence::pentagon_positions() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] == 5) out.push_back(static_cast<int>(i) + 1);
  return out;
}

SpiralSequence SpiralSequence::from_pentagon_positions(int n, std::span<const int> positions) {
  SpiralSequence s;
  s.sizes.assign(n / 2 + 2, 6);
  for (int p : positions) {
    if (p < 1 || p > static_cast<int>(s.sizes.size()))
      throw Error(ErrorCode::kSpiralPrecondition, "pentagon position " + std::to_string(p) + " out of range");
    s.sizes[p - 1] = 5;
  }
  return s;
}

bool Fullerene::faces_adjacent(FaceId a, FaceId b) const {
  const auto& adj = face_adj_[a];
  return std::find(adj.begin(), adj.end(), b) != adj.end();
}

std::pair<FaceId, FaceId> Fullerene::edge_faces(Vertex u, Vertex v) const {
  const auto& nu = rot_.neighbors(u);
  const auto& nv = rot_.neighbors(v);
  const int iu = static_cast<int>(std::find(nu.begin(), nu.end(), v) - nu.begin());
  const int iv = static_cast<int>(std::find(nv.begin(), nv.end(), u) - nv.begin());
  return {dart_face_[u][iu], dart_face_[v][iv]};
}

RotationSystem rotation_from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
  std::vector<std::array<Vertex, 3>> triples(adjacency.size());
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    if (adjacency[v].size() != 3)
      throw Error(ErrorCode::kNotCubic, "vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(adjacency[v].size()));
    std::copy(adjacency[v].begin(), adjacency[v].end(), triples[v].begin());
  }
  return RotationSystem(std::move(triples));
}

Fullerene validate(const RotationSystem& rot) {
  Fullerene F;
  F.rot_ = rot;
  F.faces_ = trace_faces(rot);
  for (FaceId f = 0; f < F.faces_.size(); ++f) {
    const int s = F.face_size(f);
    if (s != 5 && s != 6)
      throw Error(ErrorCode::kBadFaceSizes, "face " + std::to_string(f) + " has size " + std::to_string(s));
    (s == 5 ? F.pentagons_ : F.hexagons_).push_back(f);
  }
  if (F.pentagons_.size() != 12)
    throw Error(ErrorCode::kWrongPentagonCount,
                std::to_string(F.pentagons_.size()) + " pentagons, expected 12");
  if (!is_three_connected(rot)) throw Error(ErrorCode::kNotThreeConnected, "graph is not 3-connected");

  const int n = rot.n();
  F.dart_face_.assign(n, {-1, -1, -1});
  for (FaceId f = 0; f < F.faces_.size(); ++f) {
    const auto& cyc = F.faces_.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Vertex u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      const auto& nu = rot.neighbors(u);
      const int k = static_cast<int>(std::find(nu.begin(), nu.end(), v) - nu.begin());
      F.dart_face_[u][k] = f;
    }
  }
  F.face_adj_.resize(F.faces_.size());
  for (FaceId f = 0; f < F.faces_.size(); ++f) {
    const auto& cyc = F.faces_.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Vertex u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      F.face_adj_[f].push_back(F.edge_faces(u, v).second);
    }
  }
  return F;
}

namespace detail {

Windup::Windup(int face_count) : face_count_(face_count), rem_(face_count, 0) {
  open_.reserve(face_count);
}

void Windup::connect(int a, int b) {
  --rem_[a];
  --rem_[b];
}

bool Windup::add(int size) {
  const int k = placed_;
  if (k >= face_count_ - 1) return false;
  rem_[k] = size;
  if (k == 0) {
    open_.push_back(0);
    placed_ = 1;
    return true;
  }
  if (k == 1) {
    connect(0, 1);
    open_.push_back(1);
    placed_ = 2;
    return true;
  }
  auto open_size = [&] { return open_.size() - head_; };
  if (open_size() < 2) return false;
  int back = open_.back();
  int front = open_[head_];
  if (rem_[back] <= 0 || rem_[front] <= 0) return false;
  connect(k, back);
  connect(k, front);
  if (track_triangles_) tris_.push_back({front, back, k});

  while (rem_[open_.back()] == 0) {
    const int old = open_.back();
    open_.pop_back();
    if (open_size() < 2) return false;
    back = open_.back();
    if (rem_[back] <= 0 || rem_[k] <= 0) return false;
    connect(k, back);
    if (track_triangles_) tris_.push_back({old, back, k});
  }
  while (rem_[open_[head_]] == 0) {
    const int old = open_[head_];
    ++head_;
    if (open_size() < 2) return false;
    front = open_[head_];
    if (rem_[front] <= 0 || rem_[k] <= 0) return false;
    connect(k, front);
    if (track_triangles_) tris_.push_back({front, old, k});
  }
  if (rem_[k] <= 0) return false;
  open_.push_back(k);
  placed_ = k + 1;
  return true;
}

bool Windup::close(int size) {
  const int k = placed_;
  if (k != face_count_ - 1) return false;
  const std::size_t m = open_.size() - head_;
  if (static_cast<int>(m) != size) return false;
  for (std::size_t i = head_; i < open_.size(); ++i)
    if (rem_[open_[i]] != 1) return false;
  rem_[k] = 0;
  for (std::size_t i = head_; i < open_.size(); ++i) rem_[open_[i]] = 0;
  if (track_triangles_) {
    for (std::size_t i = head_; i < open_.size(); ++i) {
      const int a = open_[i];
      const int b = (i + 1 < open_.size()) ? open_[i + 1] : open_[head_];
      tris_.push_back({b, a, k});
    }
  }
  open_.clear();
  head_ = 0;
  placed_ = face_count_;
  return true;
}

RotationSystem dual_of_triangulation(int vertex_count, const std::vector<std::array<int, 3>>& tris) {
  std::unordered_map<long long, int> owner;
  owner.reserve(tris.size() * 3);
  auto key = [&](int x, int y) { return static_cast<long long>(x) * vertex_count + y; };
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    const auto& tr = tris[t];
    for (int i = 0; i < 3; ++i) {
      auto [it, fresh] = owner.emplace(key(tr[i], tr[(i + 1) % 3]), t);
      if (!fresh) throw Error(ErrorCode::kSpiralDoesNotClose, "dual triangulation repeats a directed edge");
    }
  }
  std::vector<std::array<Vertex, 3>> nbrs(tris.size());
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    const auto& [a, b, c] = tris[t];
    auto across = [&](int x, int y) {
      auto it = owner.find(key(y, x));
      if (it == owner.end()) throw Error(ErrorCode::kSpiralDoesNotClose, "dual triangulation is not closed");
      return it->second;
    };
    nbrs[t] = {across(a, b), across(b, c), across(c, a)};
  }
  return RotationSystem(std::move(nbrs));
}

}  // namespace detail

Fullerene from_spiral(const SpiralSequence& seq) {
  const int N = static_cast<int>(seq.sizes.size());
  if (N < 12) throw Error(ErrorCode::kSpiralPrecondition, "spiral has " + std::to_string(N) + " faces");
  int pentagons = 0;
  for (int s : seq.sizes) {
    if (s != 5 && s != 6)
      throw Error(ErrorCode::kSpiralPrecondition, "face size " + std::to_string(s) + " is not 5 or 6");
    pentagons += s == 5;
  }
  if (pentagons != 12)
    throw Error(ErrorCode::kSpiralPrecondition, std::to_string(pentagons) + " pentagons in spiral, expected 12");
  detail::Windup w(N);
  for (int k = 0; k + 1 < N; ++k)
    if (!w.add(seq.sizes[k]))
      throw Error(ErrorCode::kSpiralDoesNotClose, "windup fails at face " + std::to_string(k + 1));
  if (!w.close(seq.sizes[N - 1]))
    throw Error(ErrorCode::kSpiralDoesNotClose, "last face does not close the spiral");
  RotationSystem rot;
  try {
    rot = detail::dual_of_triangulation(N, w.triangles());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidRotationSystem) throw Error(ErrorCode::kSpiralDoesNotClose, e.what());
    throw;
  }
  Fullerene F = validate(rot);
  return F;
}

namespace {

enum class Unwind { kFail, kLess, kEqual, kGreater };

struct Scratch {
  std::vector<int> out, unused;
  std::vector<char> used;
  std::vector<FaceId> order;
};

// Unwinds a spiral from (f1, f2) over a dual given by ccw neighbour lists.
// With a bound, stops as soon as the prefix exceeds it.
Unwind unwind(const std::vector<std::vector<int>>& adj, FaceId f1, FaceId f2, bool clockwise,
              const std::vector<int>* bound, Scratch& s) {
  const int N = static_cast<int>(adj.size());
  s.out.clear();
  s.order.clear();
  s.used.assign(N, 0);
  s.unused.resize(N);
  for (FaceId f = 0; f < N; ++f) s.unused[f] = static_cast<int>(adj[f].size());
  bool decided_less = bound == nullptr;

  auto place = [&](FaceId f) -> bool {
    const int size = static_cast<int>(adj[f].size());
    if (!decided_less) {
      const int b = (*bound)[s.out.size()];
      if (size > b) return false;
      if (size < b) decided_less = true;
    }
    s.used[f] = 1;
    s.order.push_back(f);
    s.out.push_back(size);
    for (FaceId g : adj[f]) --s.unused[g];
    return true;
  };

  if (!place(f1)) return Unwind::kGreater;
  if (!place(f2)) return Unwind::kGreater;
  std::size_t base_idx = 0;
  for (int k = 2; k < N; ++k) {
    while (base_idx < s.order.size() && s.unused[s.order[base_idx]] == 0) ++base_idx;
    if (base_idx >= s.order.size()) return Unwind::kFail;
    const FaceId base = s.order[base_idx];
    const FaceId last = s.order.back();
    if (base == last) return Unwind::kFail;
    const auto& nb = adj[last];
    const int d = static_cast<int>(nb.size());
    int i = 0;
    while (i < d && nb[i] != base) ++i;
    if (i == d) return Unwind::kFail;
    const FaceId next = clockwise ? nb[(i + 1) % d] : nb[(i + d - 1) % d];
    if (s.used[next]) return Unwind::kFail;
    if (!place(next)) return Unwind::kGreater;
  }
  if (bound == nullptr) return Unwind::kEqual;
  return decided_less ? Unwind::kLess : Unwind::kEqual;
}

// Minimises over starts at the faces in `firsts`; empty if none spiral.
std::optional<std::vector<int>> best_spiral(const std::vector<std::vector<int>>& adj,
                                            const std::vector<FaceId>& firsts, int orientations = 3) {
  Scratch s;
  std::optional<std::vector<int>> best;
  for (FaceId f1 : firsts) {
    for (FaceId f2 : adj[f1]) {
      for (bool cw : {false, true}) {
        if (!(orientations >> cw & 1)) continue;
        const Unwind r = unwind(adj, f1, f2, cw, best ? &*best : nullptr, s);
        if (r == Unwind::kFail || r == Unwind::kGreater) continue;
        if (!best || r == Unwind::kLess) best = s.out;
      }
    }
  }
  return best;
}

std::vector<std::vector<int>> dual_of(const Fullerene& F) {
  std::vector<std::vector<int>> adj(F.face_count());
  for (FaceId f = 0; f < F.face_count(); ++f) adj[f] = F.face_adjacency(f);
  return adj;
}

}  // namespace

namespace detail {

std::vector<std::vector<int>> dual_rotation(int face_count, const std::vector<std::array<int, 3>>& tris) {
  // succ[a] maps b to the next neighbour counterclockwise around a.
  std::vector<std::vector<std::pair<int, int>>> succ(face_count);
  for (const auto& [a, b, c] : tris) {
    succ[a].emplace_back(b, c);
    succ[b].emplace_back(c, a);
    succ[c].emplace_back(a, b);
  }
  std::vector<std::vector<int>> adj(face_count);
  for (int f = 0; f < face_count; ++f) {
    const auto& m = succ[f];
    if (m.empty()) continue;
    int x = m[0].first;
    for (std::size_t step = 0; step < m.size(); ++step) {
      adj[f].push_back(x);
      auto it = std::find_if(m.begin(), m.end(), [&](const auto& p) { return p.first == x; });
      x = it->second;
    }
  }
  return adj;
}

bool is_canonical_dual(const std::vector<std::vector<int>>& adj, const std::vector<int>& seq) {
  Scratch s;
  for (FaceId f1 = 0; f1 < static_cast<FaceId>(adj.size()); ++f1) {
    if (adj[f1].size() != 5) continue;
    for (FaceId f2 : adj[f1])
      for (bool cw : {false, true})
        if (unwind(adj, f1, f2, cw, &seq, s) == Unwind::kLess) return false;
  }
  return true;
}

}  // namespace detail

std::optional<SpiralSequence> spiral_from(const Fullerene& F, FaceId f1, FaceId f2, bool clockwise) {
  if (!F.faces_adjacent(f1, f2)) return std::nullopt;
  Scratch s;
  if (unwind(dual_of(F), f1, f2, clockwise, nullptr, s) == Unwind::kFail) return std::nullopt;
  return SpiralSequence{s.out};
}

CanonicalForm canonical_form(const Fullerene& F) {
  const auto adj = dual_of(F);
  auto best = best_spiral(adj, F.pentagon_ids());
  if (!best) {
    std::vector<FaceId> all(F.face_count());
    std::iota(all.begin(), all.end(), 0);
    best = best_spiral(adj, all);
  }
  if (!best) throw Error(ErrorCode::kNoSpiralFound, "no face spiral exists for this graph");
  return CanonicalForm{SpiralSequence{*best}};
}

bool is_canonical_spiral(const Fullerene& F, const SpiralSequence& seq) {
  if (seq.sizes.empty() || seq.sizes[0] != 5) return canonical_form(F).spiral == seq;
  return detail::is_canonical_dual(dual_of(F), seq.sizes);
}

bool is_chiral(const Fullerene& F) {
  const auto adj = dual_of(F);
  std::vector<FaceId> all(F.face_count());
  std::iota(all.begin(), all.end(), 0);
  const auto& firsts = F.pentagon_ids().empty() ? all : F.pentagon_ids();
  // Spirals of one handedness against those of the other.
  auto ccw = best_spiral(adj, firsts, 1), cw = best_spiral(adj, firsts, 2);
  if (!ccw || !cw) {
    ccw = best_spiral(adj, all, 1);
    cw = best_spiral(adj, all, 2);
  }
  return ccw != cw;
}

bool is_isomorphic(const Fullerene& a, const Fullerene& b) {
  if (a.n() != b.n()) return false;
  return canonical_form(a) == canonical_form(b);
}

Fullerene relabel(const Fullerene& F, std::span<const Vertex> perm) {
  return validate(F.rot().relabeled(perm));
}

Fullerene mirror(const Fullerene& F) { return validate(F.rot().mirrored()); }

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace clarkit
