// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures. Independent of the unit tests so it can run on its own.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "clarkit/clar.hpp"
#include "clarkit/enumeration.hpp"
#include "clarkit/error.hpp"
#include "clarkit/fragment.hpp"
#include "clarkit/fullerene.hpp"
#include "clarkit/matching.hpp"

using namespace clarkit;

namespace {

const std::vector<int> kC60 = {1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32};
const std::vector<int> kC70 = {1, 7, 9, 11, 13, 15, 27, 29, 31, 33, 35, 37};

Fullerene at(int n, const std::vector<int>& positions) {
  return from_spiral(SpiralSequence::from_pentagon_positions(n, positions));
}

int workers() { return default_workers(2); }

// Shared n=60 catalog, analysed once.
IsomerCatalog& catalog60() {
  static IsomerCatalog cat = [] {
    auto c = enumerate(60, {.workers = workers()});
    analyze(c, {.workers = workers()});
    return c;
  }();
  return cat;
}

// Plain enumerations, kept for reuse across criteria.
const IsomerCatalog& catalog(int n) {
  static std::map<int, IsomerCatalog> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate(n, {.workers = workers()})).first;
  return it->second;
}

bool isolated_pentagons(const Fullerene& F) {
  for (FaceId a : F.pentagon_ids())
    for (FaceId b : F.pentagon_ids())
      if (a < b && F.faces_adjacent(a, b)) return false;
  return true;
}

int failures = 0;

void report(int id, const char* title, const std::function<std::string(bool&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %2d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str(), secs);
  std::fflush(stdout);
  failures += !ok;
}

}  // namespace

int main() {
  report(1, "isomer count n=60", [](bool& ok) {
    const int n = catalog60().size();
    ok = n == 1812;
    return "isomers=" + std::to_string(n);
  });

  report(2, "extremal census n=60", [](bool& ok) {
    int extremal = 0, eight = 0;
    for (const auto& e : catalog60().entries) {
      extremal += e.analysis->extremal;
      eight += e.analysis->clar == 8;
    }
    ok = extremal == 18 && eight == 18;
    return "extremal=" + std::to_string(extremal) + " clar8=" + std::to_string(eight);
  });

  report(3, "census breakdown", [](bool& ok) {
    const auto census = extremal_census(catalog60());
    const auto b = census_breakdown(census);
    const auto c60 = canonical_form(at(60, kC60));
    int isolated = 0;
    bool c60_is_it = false;
    for (const auto& f : census)
      if (isolated_pentagons(from_spiral(f.spiral))) {
        ++isolated;
        c60_is_it = f == c60;
      }
    ok = b.b3 == 2 && b.b1_power == 6 && b.b2_b1 == 4 && b.b1_b2_only == 6 && b.isolated_pentagon_graphs == 1 &&
         isolated == 1 && c60_is_it;
    return "B3=" + std::to_string(b.b3) + " B1^k=" + std::to_string(b.b1_power) + " B2*B1=" + std::to_string(b.b2_b1) +
           " B1/B2=" + std::to_string(b.b1_b2_only) + " isolated=" + std::to_string(isolated) +
           (c60_is_it ? " (Ih-C60)" : "");
  });

  report(4, "Ih-C60 Clar and Fries", [](bool& ok) {
    const auto F = at(60, kC60);
    const auto r = clar_number(F);
    const auto [fries, w] = fries_number(F);
    const Graph g(F.graph());
    bool pentagon_edge = false;
    for (EdgeId e : w.matching.edges) {
      const auto [u, v] = g.edge(e);
      const auto [f1, f2] = F.edge_faces(u, v);
      pentagon_edge |= F.is_pentagon(f1) || F.is_pentagon(f2);
    }
    const int alternating = static_cast<int>(alternating_hexagons(F, g, w.matching).size());
    ok = r.clar_number == 8 && r.formulas.size() == 5 && fries == 20 && alternating == 20 && alternating == F.n() / 3 &&
         !pentagon_edge && w.matching.is_perfect(g);
    return "clar=" + std::to_string(r.clar_number) + " formulas=" + std::to_string(r.formulas.size()) +
           " fries=" + std::to_string(fries) + " alternating=" + std::to_string(alternating) +
           (pentagon_edge ? " pentagon edge matched" : " no pentagon edge matched");
  });

  report(5, "Clar bound for n=20..60", [](bool& ok) {
    long graphs = 0, violations = 0;
    for (int n = 20; n <= 60; n += 2) {
      const IsomerCatalog& cat = n == 60 ? catalog60() : catalog(n);
      std::vector<int> clar(cat.size());
      parallel_for(cat.size(), workers(), [&](int i) {
        clar[i] = clar_number(from_spiral(cat.entries[i].form.spiral), {.with_formulas = false}).clar_number;
      });
      graphs += cat.size();
      violations += std::count_if(clar.begin(), clar.end(), [&](int c) { return c > (n - 12) / 6; });
    }
    ok = violations == 0 && graphs > 5000;
    return std::to_string(graphs) + " graphs, " + std::to_string(violations) + " above the bound";
  });

  report(6, "branch-and-bound equals brute force, n<=40", [](bool& ok) {
    long graphs = 0, mismatches = 0;
    for (int n = 20; n <= 40; n += 2)
      for (const auto& e : catalog(n).entries) {
        const auto F = from_spiral(e.form.spiral);
        ++graphs;
        mismatches += clar_number(F, {.with_formulas = false}).clar_number != clar_brute_force(F);
      }
    ok = mismatches == 0 && graphs == 92;
    return std::to_string(graphs) + " graphs, " + std::to_string(mismatches) + " mismatches";
  });

  report(7, "structural test agrees with direct extremality, n=60", [](bool& ok) {
    const auto& cat = catalog60();
    std::vector<char> agree(cat.size(), 0);
    parallel_for(cat.size(), workers(), [&](int i) {
      const auto F = from_spiral(cat.entries[i].form.spiral);
      agree[i] = theorem2_classify(F) == cat.entries[i].analysis->extremal;
    });
    const long n = std::count(agree.begin(), agree.end(), 1);
    ok = n == cat.size();
    return std::to_string(n) + "/" + std::to_string(cat.size()) + " agree";
  });

  report(8, "cyclic connectivity, rings, labelings", [](bool& ok) {
    const auto& cat = catalog60();
    std::mt19937_64 rng(60);
    std::uniform_int_distribution<int> pick(0, cat.size() - 1);
    int cl5 = 0;
    for (int t = 0; t < 50; ++t) {
      const auto F = from_spiral(cat.entries[pick(rng)].form.spiral);
      cl5 += cyclic_edge_connectivity_at_least(F.rot(), 5) && !cyclic_edge_connectivity_at_least(F.rot(), 6);
    }
    long big_rings = 0, graphs = 0, labels = 0, long_labels = 0;
    for (int n = 54; n <= 60; n += 2) {
      const IsomerCatalog& c = n == 60 ? cat : catalog(n);
      for (const auto& e : c.entries) {
        const auto F = from_spiral(e.form.spiral);
        ++graphs;
        for (const auto& r : detect_pentagonal_rings(F)) big_rings += r.k >= 7;
        for (const auto& B : pentagon_components(F)) {
          if (!B.is_fragment() || B.W.empty()) continue;
          for (int L : boundary_labeling(B)) {
            ++labels;
            long_labels += L > 5;
          }
        }
      }
    }
    ok = cl5 == 50 && big_rings == 0 && long_labels == 0;
    return "cλ=5 on " + std::to_string(cl5) + "/50, rings k>=7: " + std::to_string(big_rings) + " in " +
           std::to_string(graphs) + " graphs, labels >5: " + std::to_string(long_labels) + " of " +
           std::to_string(labels);
  });

  report(9, "small n and deletion-contraction", [](bool& ok) {
    const int n20 = enumerate(20).size(), n22 = enumerate(22).size();
    std::mt19937_64 rng(9);
    int consistent = 0;
    for (int t = 0; t < 20; ++t) {
      const int n = 20 + 2 * static_cast<int>(rng() % 21);
      const auto& cat = n == 60 ? catalog60() : catalog(n);
      if (cat.size() == 0) {
        --t;
        continue;
      }
      const auto F = from_spiral(cat.entries[rng() % cat.size()].form.spiral);
      const Graph g(F.graph());
      const auto [u, v] = g.edge(static_cast<EdgeId>(rng() % g.edge_count()));
      std::vector<std::pair<Vertex, Vertex>> rest;
      for (const auto& p : g.edges())
        if (p != std::pair{u, v}) rest.push_back(p);
      const std::vector<Vertex> ends{u, v};
      const BigInt whole = count_perfect_matchings(g);
      consistent += whole > 0 &&
                    whole == count_perfect_matchings(Graph(g.order(), rest)) + count_perfect_matchings(g.without_vertices(ends));
    }
    ok = n20 == 1 && n22 == 0 && consistent == 20;
    return "n=20: " + std::to_string(n20) + ", n=22: " + std::to_string(n22) + ", identity holds on " +
           std::to_string(consistent) + "/20";
  });

  report(10, "C70 attains the floor bound", [](bool& ok) {
    const auto F = at(70, kC70);
    const auto r = clar_number(F, {.with_formulas = false});
    const bool witness = [&] {
      const auto f = clar_number(F, {.with_formulas = true, .formula_cap = 1});
      return !f.formulas.empty() && is_sextet_pattern(F, f.formulas.front().hexagons).has_value();
    }();
    ok = r.clar_number == 9 && r.bound == 9 && (70 - 12) / 6 == 9 && isolated_pentagons(F) && witness;
    return "clar=" + std::to_string(r.clar_number) + " bound=floor(58/6)=" + std::to_string(r.bound) +
           (isolated_pentagons(F) ? ", isolated pentagons" : "");
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
