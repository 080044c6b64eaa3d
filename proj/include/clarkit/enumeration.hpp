#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clarkit/fullerene.hpp"

namespace clarkit {

// Per-isomer results attached to a catalog entry.
struct AnalysisRecord {
  int clar = 0;
  int bound = 0;
  bool extremal = false;
  int formula_count = 0;
  bool formulas_truncated = false;
  int fries = 0;
  // Verdict of the structural test, for n >= 60 only.
  std::optional<bool> structural;
};

struct CatalogEntry {
  CanonicalForm form;
  std::optional<AnalysisRecord> analysis;
};

struct IsomerCatalog {
  int n = 0;
  std::vector<CatalogEntry> entries;  // sorted by canonical spiral

  int size() const { return static_cast<int>(entries.size()); }
};

struct EnumerateOptions {
  int workers = 1;
};

// All fullerene isomers on n vertices, one canonical spiral each. Throws
// Error(kOutOfSupportedRange) unless 20 <= n <= 120 and n is even.
IsomerCatalog enumerate(int n, const EnumerateOptions& opts = {});

struct AnalyzeOptions {
  int workers = 1;
  bool with_fries = true;
  int formula_cap = 10000;
  bool with_structural = true;
};

// Fills in the analysis record of every entry.
void analyze(IsomerCatalog& catalog, const AnalyzeOptions& opts = {});

// Canonical spirals of the extremal entries (analysis required).
std::vector<CanonicalForm> extremal_census(const IsomerCatalog& catalog);

// Census classes of the extremal 60-vertex graphs, assigned in this priority
// order so that they partition the census.
enum class CensusClass {
  kB3,          // contains a B3 fragment
  kB1Power,     // contains two adjoining pentagons P^2, i.e. some B1^k with k >= 2
  kB2B1,        // contains P*B2 or P*B2*P and no P^2
  kB1B2Only,    // only isolated pentagons and B2 fragments
};

const char* to_string(CensusClass c);

struct CensusBreakdown {
  int b3 = 0;
  int b1_power = 0;
  int b2_b1 = 0;
  int b1_b2_only = 0;
  int isolated_pentagon_graphs = 0;
  int chiral = 0;
  std::vector<std::pair<CanonicalForm, CensusClass>> members;

  int total() const { return b3 + b1_power + b2_b1 + b1_b2_only; }
};

CensusBreakdown census_breakdown(const std::vector<CanonicalForm>& extremal);

// Runs fn(i) for i in [0, count) on `workers` threads.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

// Worker count from CLARKIT_WORKERS, falling back to `fallback`.
int default_workers(int fallback = 1);

}  // namespace clarkit
