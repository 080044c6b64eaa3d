#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clarkit/clar.hpp"
#include "clarkit/enumeration.hpp"
#include "clarkit/fullerene.hpp"

namespace clarkit::io {

// Spiral text: comma-separated face sizes, e.g. "5,6,6,5,...".
std::string format_spiral(const SpiralSequence& seq);
// Throws ParseError naming the offending token; `line` is used for the
// reported position.
SpiralSequence parse_spiral(std::string_view text, int line = 1);
// One spiral per line; blank lines and lines starting with '#' are skipped.
std::vector<SpiralSequence> read_spirals(std::istream& in);

// Adjacency text: first line n, then n lines "v: a b c" with neighbours in
// counterclockwise order.
std::string format_adjacency(const RotationSystem& rot);
// Throws ParseError for malformed text and Error(kNotCubic) when a vertex
// does not list exactly three neighbours.
RotationSystem parse_adjacency(std::istream& in);

// Manifest row: n<TAB>spiral<TAB>clar<TAB>fries.
struct ManifestRow {
  int n = 0;
  SpiralSequence spiral;
  int clar = 0;
  int fries = 0;
};
std::string format_manifest_row(const ManifestRow& row);
ManifestRow parse_manifest_row(std::string_view text, int line = 1);

// Analysis row: spiral<TAB>clar<TAB>bound<TAB>extremal<TAB>formula-count,
// with extremal written as yes or no.
std::string format_analysis_row(const SpiralSequence& spiral, const AnalysisRecord& r);

// Sorted "u-v" tokens (u < v), one per line.
std::string format_matching(const Graph& g, const Matching& m);

// Barycentric layout with the largest face (lowest id on ties) fixed on a
// regular polygon. Coordinates lie in [-1, 1].
std::vector<std::array<double, 2>> tutte_layout(const Fullerene& F);

struct SvgOptions {
  std::optional<SextetPattern> formula;     // circles in its hexagons, matched edges doubled
  std::map<FaceId, std::string> face_fill;  // extra face colours
  int size = 640;
};
std::string render_svg(const Fullerene& F, const SvgOptions& opts = {});

}  // namespace clarkit::io
