#include "clarkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <sstream>

#include "clarkit/error.hpp"

namespace clarkit::io {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::string_view text;
  int column;  // 1-based
};

// Splits on `sep`, trimming blanks; columns point at the token start.
std::vector<Token> split(std::string_view s, char sep) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    std::size_t a = start, b = end == std::string_view::npos ? s.size() : end;
    while (a < b && is_space(s[a])) ++a;
    while (b > a && is_space(s[b - 1])) --b;
    out.push_back({s.substr(a, b - a), static_cast<int>(a) + 1});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<Token> words(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t a = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > a) out.push_back({s.substr(a, i - a), static_cast<int>(a) + 1});
  }
  return out;
}

int to_int(const Token& t, int line, const char* what) {
  int v = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [p, ec] = std::from_chars(t.text.data(), end, v);
  if (t.text.empty() || ec != std::errc() || p != end)
    throw ParseError(line, t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
  return v;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::string format_spiral(const SpiralSequence& seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.sizes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(seq.sizes[i]);
  }
  return s;
}

SpiralSequence parse_spiral(std::string_view text, int line) {
  SpiralSequence seq;
  for (const auto& t : split(text, ',')) {
    if (t.text == "5" || t.text == "6") {
      seq.sizes.push_back(t.text[0] - '0');
      continue;
    }
    throw ParseError(line, t.column,
                     t.text.empty() ? std::string("empty face size") : "bad face size '" + std::string(t.text) + "'");
  }
  return seq;
}

std::vector<SpiralSequence> read_spirals(std::istream& in) {
  std::vector<SpiralSequence> out;
  std::string s;
  for (int line = 1; std::getline(in, s); ++line) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos || s[first] == '#') continue;
    out.push_back(parse_spiral(s, line));
  }
  return out;
}

std::string format_adjacency(const RotationSystem& rot) {
  std::string s = std::to_string(rot.n()) + "\n";
  for (Vertex v = 0; v < rot.n(); ++v) {
    s += std::to_string(v) + ":";
    for (Vertex u : rot.neighbors(v)) s += " " + std::to_string(u);
    s += "\n";
  }
  return s;
}

RotationSystem parse_adjacency(std::istream& in) {
  std::string s;
  int line = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, s)) {
      ++line;
      if (s.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, 1, "missing vertex count");
  const auto head = words(s);
  if (head.size() != 1) throw ParseError(line, head.size() > 1 ? head[1].column : 1, "expected a single vertex count");
  const int n = to_int(head[0], line, "a vertex count");
  if (n <= 0) throw ParseError(line, head[0].column, "vertex count must be positive");

  std::vector<std::vector<Vertex>> adj(n);
  for (int v = 0; v < n; ++v) {
    if (!next_line()) throw ParseError(line + 1, 1, "missing line for vertex " + std::to_string(v));
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(line, 1, "expected 'v: a b c'");
    std::string_view sv(s);
    auto label = words(sv.substr(0, colon));
    if (label.size() != 1) throw ParseError(line, 1, "expected a vertex label before ':'");
    if (to_int(label[0], line, "a vertex label") != v)
      throw ParseError(line, label[0].column, "expected vertex " + std::to_string(v) + ", found '" +
                                                   std::string(label[0].text) + "'");
    for (auto t : words(sv.substr(colon + 1))) {
      t.column += static_cast<int>(colon) + 1;
      const int u = to_int(t, line, "a neighbour id");
      if (u < 0 || u >= n) throw ParseError(line, t.column, "neighbour '" + std::string(t.text) + "' out of range");
      adj[v].push_back(u);
    }
  }
  if (next_line()) throw ParseError(line, 1, "unexpected text after the last vertex");
  std::vector<std::array<Vertex, 3>> triples(n);
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() != 3)
      throw Error(ErrorCode::kNotCubic, "vertex " + std::to_string(v) + " has " + std::to_string(adj[v].size()) +
                                            " neighbours");
    triples[v] = {adj[v][0], adj[v][1], adj[v][2]};
  }
  for (int v = 0; v < n; ++v) {
    const auto& t = triples[v];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2] || std::find(t.begin(), t.end(), v) != t.end())
      throw Error(ErrorCode::kInvalidRotationSystem, "vertex " + std::to_string(v) + " has a loop or repeated neighbour");
    for (Vertex u : t)
      if (std::find(triples[u].begin(), triples[u].end(), v) == triples[u].end())
        throw Error(ErrorCode::kInvalidRotationSystem,
                    "edge " + std::to_string(v) + "-" + std::to_string(u) + " is listed on one side only");
  }
  return RotationSystem(std::move(triples));
}

std::string format_manifest_row(const ManifestRow& row) {
  return std::to_string(row.n) + "\t" + format_spiral(row.spiral) + "\t" + std::to_string(row.clar) + "\t" +
         std::to_string(row.fries);
}

ManifestRow parse_manifest_row(std::string_view text, int line) {
  const auto f = split(text, '\t');
  if (f.size() != 4)
    throw ParseError(line, f.size() > 4 ? f[4].column : static_cast<int>(text.size()) + 1,
                     "expected 4 tab-separated fields, found " + std::to_string(f.size()));
  ManifestRow r;
  r.n = to_int(f[0], line, "a vertex count");
  r.spiral = parse_spiral(f[1].text, line);
  r.clar = to_int(f[2], line, "a Clar number");
  r.fries = to_int(f[3], line, "a Fries number");
  return r;
}

std::string format_analysis_row(const SpiralSequence& spiral, const AnalysisRecord& r) {
  return format_spiral(spiral) + "\t" + std::to_string(r.clar) + "\t" + std::to_string(r.bound) + "\t" +
         (r.extremal ? "yes" : "no") + "\t" + std::to_string(r.formula_count);
}

std::string format_matching(const Graph& g, const Matching& m) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (EdgeId e : m.edges) {
    auto [u, v] = g.edge(e);
    es.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(es.begin(), es.end());
  std::string s;
  for (auto [u, v] : es) s += std::to_string(u) + "-" + std::to_string(v) + "\n";
  return s;
}

std::vector<std::array<double, 2>> tutte_layout(const Fullerene& F) {
  const int n = F.n();
  FaceId outer = 0;
  for (FaceId f = 1; f < F.face_count(); ++f)
    if (F.face_size(f) > F.face_size(outer)) outer = f;
  std::vector<std::array<double, 2>> pos(n, {0, 0});
  std::vector<int> index(n, -1);
  const auto& ring = F.face(outer);
  const int k = static_cast<int>(ring.size());
  std::vector<char> fixed(n, 0);
  for (int i = 0; i < k; ++i) {
    // Reversed so the outer face runs clockwise on the page.
    const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * i / k;
    pos[ring[i]] = {std::cos(a), std::sin(a)};
    fixed[ring[i]] = 1;
  }
  int m = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!fixed[v]) index[v] = m++;
  // Dense solve of 3 x_v - sum of free neighbours = sum of fixed ones.
  std::vector<std::vector<double>> A(m, std::vector<double>(m + 2, 0.0));
  for (Vertex v = 0; v < n; ++v) {
    if (fixed[v]) continue;
    auto& row = A[index[v]];
    row[index[v]] = 3;
    for (Vertex u : F.rot().neighbors(v)) {
      if (fixed[u]) {
        row[m] += pos[u][0];
        row[m + 1] += pos[u][1];
      } else {
        row[index[u]] -= 1;
      }
    }
  }
  for (int c = 0; c < m; ++c) {
    int piv = c;
    for (int r = c + 1; r < m; ++r)
      if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    for (int r = 0; r < m; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const double f = A[r][c] / A[c][c];
      for (int j = c; j < m + 2; ++j) A[r][j] -= f * A[c][j];
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!fixed[v]) {
      const auto& row = A[index[v]];
      pos[v] = {row[m] / row[index[v]], row[m + 1] / row[index[v]]};
    }
  return pos;
}

std::string render_svg(const Fullerene& F, const SvgOptions& opts) {
  const auto pos = tutte_layout(F);
  const double S = opts.size, margin = 24, scale = (S - 2 * margin) / 2;
  auto X = [&](Vertex v) { return margin + (pos[v][0] + 1) * scale; };
  auto Y = [&](Vertex v) { return margin + (1 - pos[v][1]) * scale; };
  FaceId outer = 0;
  for (FaceId f = 1; f < F.face_count(); ++f)
    if (F.face_size(f) > F.face_size(outer)) outer = f;

  std::ostringstream o;
  const std::string sz = std::to_string(opts.size);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << sz << "\" height=\"" << sz << "\" viewBox=\"0 0 " << sz
    << " " << sz << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (FaceId f = 0; f < F.face_count(); ++f) {
    if (f == outer) continue;
    std::string fill;
    if (auto it = opts.face_fill.find(f); it != opts.face_fill.end()) fill = it->second;
    else if (F.is_pentagon(f)) fill = "#f6dcdc";
    if (fill.empty()) continue;
    o << "<polygon fill=\"" << fill << "\" points=\"";
    for (std::size_t i = 0; i < F.face(f).size(); ++i) o << (i ? " " : "") << fmt(X(F.face(f)[i])) << "," << fmt(Y(F.face(f)[i]));
    o << "\"/>\n";
  }
  std::vector<char> doubled;
  const Graph g(F.graph());
  doubled.assign(g.edge_count(), 0);
  if (opts.formula)
    for (EdgeId e : opts.formula->witness.edges) doubled[e] = 1;
  o << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const double x1 = X(u), y1 = Y(u), x2 = X(v), y2 = Y(v);
    if (!doubled[e]) {
      o << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2) << "\"/>\n";
      continue;
    }
    // Double bond: two strokes offset across the edge.
    const double len = std::max(1e-9, std::hypot(x2 - x1, y2 - y1));
    const double dx = -(y2 - y1) / len * 1.8, dy = (x2 - x1) / len * 1.8;
    for (double s : {-1.0, 1.0})
      o << "<line x1=\"" << fmt(x1 + s * dx) << "\" y1=\"" << fmt(y1 + s * dy) << "\" x2=\"" << fmt(x2 + s * dx)
        << "\" y2=\"" << fmt(y2 + s * dy) << "\"/>\n";
  }
  o << "</g>\n";
  if (opts.formula) {
    o << "<g fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\">\n";
    for (FaceId h : opts.formula->hexagons) {
      if (h == outer) continue;
      double cx = 0, cy = 0;
      for (Vertex v : F.face(h)) {
        cx += X(v);
        cy += Y(v);
      }
      cx /= 6;
      cy /= 6;
      double r = 1e9;
      for (Vertex v : F.face(h)) r = std::min(r, std::hypot(X(v) - cx, Y(v) - cy));
      o << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(0.55 * r) << "\"/>\n";
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace clarkit::io
