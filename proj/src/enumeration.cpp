#include "clarkit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include "clarkit/clar.hpp"
#include "clarkit/error.hpp"
#include "clarkit/fragment.hpp"
#include "clarkit/matching.hpp"

namespace clarkit {

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

int default_workers(int fallback) {
  if (const char* env = std::getenv("CLARKIT_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return std::max(1, fallback);
}

namespace {

constexpr int kSplitDepth = 12;

struct SpiralSearch {
  int N;
  std::vector<int> seq;
  std::vector<std::vector<int>> found;

  explicit SpiralSearch(int faces) : N(faces), seq(faces, 6) {}

  void accept_if_canonical() {
    detail::Windup w(N);
    for (int k = 0; k + 1 < N; ++k) w.add(seq[k]);
    w.close(seq[N - 1]);
    const auto adj = detail::dual_rotation(N, w.triangles());
    if (detail::is_canonical_dual(adj, seq)) found.push_back(seq);
  }

  // Extends a feasible prefix of length k with p pentagons. With a stop
  // depth, records prefixes instead of descending further.
  void extend(const detail::Windup& w, int k, int p, int stop, std::vector<std::pair<std::vector<int>, int>>* prefixes) {
    if (k == N - 1) {
      const int last = p == 12 ? 6 : p == 11 ? 5 : 0;
      if (last == 0) return;
      detail::Windup c = w;
      seq[k] = last;
      if (c.close(last)) accept_if_canonical();
      return;
    }
    if (prefixes && k == stop) {
      prefixes->emplace_back(std::vector<int>(seq.begin(), seq.begin() + k), p);
      return;
    }
    const int left = N - k;
    for (int size : {5, 6}) {
      if (k == 0 && size == 6) continue;  // canonical spirals start at a pentagon
      const int q = p + (size == 5);
      if (q > 12 || 12 - q > left - 1) continue;
      detail::Windup c = w;
      if (!c.add(size)) continue;
      seq[k] = size;
      extend(c, k + 1, q, stop, prefixes);
    }
  }
};

}  // namespace

IsomerCatalog enumerate(int n, const EnumerateOptions& opts) {
  if (n < 20 || n > 120 || n % 2 != 0)
    throw Error(ErrorCode::kOutOfSupportedRange, "n = " + std::to_string(n) + " outside the even range 20..120");
  const int N = n / 2 + 2;
  IsomerCatalog cat;
  cat.n = n;

  std::vector<std::pair<std::vector<int>, int>> prefixes;
  {
    SpiralSearch s(N);
    detail::Windup w(N);
    w.set_track_triangles(false);
    s.extend(w, 0, 0, std::min(kSplitDepth, N - 1), &prefixes);
    for (auto& f : s.found) cat.entries.push_back({CanonicalForm{SpiralSequence{std::move(f)}}, std::nullopt});
  }

  std::vector<std::vector<std::vector<int>>> per_task(prefixes.size());
  parallel_for(static_cast<int>(prefixes.size()), opts.workers, [&](int i) {
    const auto& [prefix, p] = prefixes[i];
    SpiralSearch s(N);
    detail::Windup w(N);
    w.set_track_triangles(false);
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      w.add(prefix[k]);
      s.seq[k] = prefix[k];
    }
    s.extend(w, static_cast<int>(prefix.size()), p, -1, nullptr);
    per_task[i] = std::move(s.found);
  });
  for (auto& list : per_task)
    for (auto& f : list) cat.entries.push_back({CanonicalForm{SpiralSequence{std::move(f)}}, std::nullopt});

  std::sort(cat.entries.begin(), cat.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.form < b.form; });
  cat.entries.erase(std::unique(cat.entries.begin(), cat.entries.end(),
                                [](const CatalogEntry& a, const CatalogEntry& b) { return a.form == b.form; }),
                    cat.entries.end());
  return cat;
}

void analyze(IsomerCatalog& catalog, const AnalyzeOptions& opts) {
  parallel_for(catalog.size(), opts.workers, [&](int i) {
    auto& entry = catalog.entries[i];
    const Fullerene F = from_spiral(entry.form.spiral);
    const ClarResult c = clar_number(F, ClarOptions{.with_formulas = true, .formula_cap = opts.formula_cap});
    AnalysisRecord r;
    r.clar = c.clar_number;
    r.bound = c.bound;
    r.extremal = c.extremal;
    r.formula_count = static_cast<int>(c.formulas.size());
    r.formulas_truncated = c.formulas_truncated;
    if (opts.with_fries) r.fries = fries_value(F);
    if (opts.with_structural && F.n() >= 60 && c.extremal) r.structural = theorem2_classify(F);
    entry.analysis = r;
  });
}

std::vector<CanonicalForm> extremal_census(const IsomerCatalog& catalog) {
  std::vector<CanonicalForm> out;
  for (const auto& e : catalog.entries) {
    if (!e.analysis) throw std::logic_error("catalog has not been analysed");
    if (e.analysis->extremal) out.push_back(e.form);
  }
  return out;
}

const char* to_string(CensusClass c) {
  switch (c) {
    case CensusClass::kB3: return "B3";
    case CensusClass::kB1Power: return "B1^k";
    case CensusClass::kB2B1: return "B2*B1";
    case CensusClass::kB1B2Only: return "B1/B2";
  }
  return "?";
}

CensusBreakdown census_breakdown(const std::vector<CanonicalForm>& extremal) {
  CensusBreakdown b;
  for (const auto& form : extremal) {
    const Fullerene F = from_spiral(form.spiral);
    bool b3 = false, p2 = false, pb2 = false, isolated = true;
    for (const auto& comp : pentagon_components(F)) {
      const FragmentTag t = classify_fragment(F, comp).tag;
      b3 = b3 || t == FragmentTag::kB3;
      p2 = p2 || t == FragmentTag::kP2;
      pb2 = pb2 || t == FragmentTag::kPB2 || t == FragmentTag::kPB2P;
      isolated = isolated && t == FragmentTag::kP;
    }
    CensusClass c = b3 ? CensusClass::kB3 : p2 ? CensusClass::kB1Power : pb2 ? CensusClass::kB2B1 : CensusClass::kB1B2Only;
    switch (c) {
      case CensusClass::kB3: ++b.b3; break;
      case CensusClass::kB1Power: ++b.b1_power; break;
      case CensusClass::kB2B1: ++b.b2_b1; break;
      case CensusClass::kB1B2Only: ++b.b1_b2_only; break;
    }
    b.isolated_pentagon_graphs += isolated;
    b.chiral += is_chiral(F);
    b.members.emplace_back(form, c);
  }
  return b;
}

}  // namespace clarkit
