#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clarkit/fullerene.hpp"
#include "clarkit/matching.hpp"

namespace clarkit {

// Pairwise vertex-disjoint hexagons together with a perfect matching that
// alternates on each of them.
struct SextetPattern {
  std::vector<FaceId> hexagons;  // sorted
  Matching witness;
};

struct ClarResult {
  int clar_number = 0;
  std::vector<SextetPattern> formulas;
  bool formulas_truncated = false;
  int bound = 0;  // floor((n - 12) / 6)
  bool extremal = false;
};

struct ClarOptions {
  bool with_formulas = true;
  int formula_cap = 10000;
};

// Witness matching when H is a sextet pattern; throws Error(kNotAHexagon)
// when some id is not a hexagon of F.
std::optional<Matching> is_sextet_pattern(const Fullerene& F, std::span<const FaceId> H);

ClarResult clar_number(const Fullerene& F, const ClarOptions& opts = {});

// All maximum sextet patterns, up to opts.formula_cap.
std::vector<SextetPattern> enumerate_clar_formulas(const Fullerene& F, const ClarOptions& opts = {});

bool is_extremal(const Fullerene& F);

// Exhaustive subset scan, used as a test oracle. Throws
// Error(kTooManyHexagons) above 22 hexagons.
int clar_brute_force(const Fullerene& F);

// Same search on a bare hexagon system (no bound shortcut).
ClarResult clar_number(const HexagonSystem& S, const ClarOptions& opts = {});

}  // namespace clarkit
