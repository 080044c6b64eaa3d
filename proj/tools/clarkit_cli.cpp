// Command-line front end. Talks to the library only through clarkit.h.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clarkit/clarkit.h"

namespace {

enum Exit { kOk = 0, kValidation = 1, kParse = 2, kInternal = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_code(clarkit_status s) {
  switch (s) {
    case CLARKIT_OK: return kOk;
    case CLARKIT_E_PARSE: return kParse;
    case CLARKIT_E_INTERNAL:
    case CLARKIT_E_BUFFER: return kInternal;
    default: return kValidation;
  }
}

void check(clarkit_status s) {
  if (s != CLARKIT_OK) throw Failure{exit_code(s), std::string(clarkit_status_name(s)) + " error: " + clarkit_last_error()};
}

// Two-call pattern: ask for the length, then fill.
template <class Fn>
std::string text(Fn&& fn) {
  size_t len = 0;
  const clarkit_status s = fn(nullptr, 0, &len);
  if (s != CLARKIT_E_BUFFER && s != CLARKIT_OK) check(s);
  std::string out(len + 1, '\0');
  check(fn(out.data(), out.size(), &len));
  out.resize(len);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using FullerenePtr = std::unique_ptr<clarkit_fullerene, Deleter<clarkit_fullerene, clarkit_fullerene_free>>;
using ClarPtr = std::unique_ptr<clarkit_clar, Deleter<clarkit_clar, clarkit_clar_free>>;
using CatalogPtr = std::unique_ptr<clarkit_catalog, Deleter<clarkit_catalog, clarkit_catalog_free>>;
using ReportPtr = std::unique_ptr<clarkit_report, Deleter<clarkit_report, clarkit_report_free>>;

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) throw Failure{kInternal, "cannot write " + path};
}

struct Input {
  std::string path;
  std::string spiral;
  std::string format = "auto";

  void add_to(CLI::App* cmd) {
    cmd->add_option("input", path, "graph file (spiral or adjacency text)");
    cmd->add_option("--spiral", spiral, "inline spiral, e.g. 5,5,5,...");
    cmd->add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "spiral", "adjacency"}));
  }

  FullerenePtr load() const {
    if (path.empty() == spiral.empty()) throw Failure{kParse, "give exactly one of a file path or --spiral"};
    const clarkit_format f = format == "spiral"      ? CLARKIT_FORMAT_SPIRAL
                             : format == "adjacency" ? CLARKIT_FORMAT_ADJACENCY
                                                     : CLARKIT_FORMAT_AUTO;
    clarkit_fullerene* raw = nullptr;
    const clarkit_status s = path.empty() ? clarkit_fullerene_parse(spiral.c_str(), CLARKIT_FORMAT_SPIRAL, &raw)
                                          : clarkit_fullerene_load(path.c_str(), f, &raw);
    check(s);
    return FullerenePtr(raw);
  }
};

int cmd_validate(const Input& in) {
  auto F = in.load();
  int k = 0;
  check(clarkit_fullerene_cyclic_connectivity(F.get(), &k));
  std::cout << "fullerene: n=" << clarkit_fullerene_order(F.get()) << ", pentagons=" << clarkit_fullerene_pentagons(F.get())
            << ", hexagons=" << clarkit_fullerene_hexagons(F.get()) << ", cλ=" << k << "\n";
  std::cout << "spiral: " << text([&](char* b, size_t c, size_t* l) { return clarkit_fullerene_spiral(F.get(), b, c, l); })
            << "\n";
  return kOk;
}

int cmd_clar(const Input& in, bool list, int cap, const std::string& svg) {
  auto F = in.load();
  clarkit_clar* raw = nullptr;
  check(clarkit_clar_compute(F.get(), cap, &raw));
  ClarPtr C(raw);
  const int count = clarkit_clar_formula_count(C.get());
  std::cout << "clar=" << clarkit_clar_number(C.get()) << " bound=" << clarkit_clar_bound(C.get())
            << " extremal=" << (clarkit_clar_extremal(C.get()) ? "yes" : "no") << " formulas=" << count
            << (clarkit_clar_truncated(C.get()) ? "+" : "") << "\n";
  if (list)
    for (int i = 0; i < count; ++i) {
      size_t n = 0;
      clarkit_clar_formula_hexagons(C.get(), i, nullptr, 0, &n);
      std::vector<int> ids(n);
      check(clarkit_clar_formula_hexagons(C.get(), i, ids.data(), ids.size(), &n));
      std::cout << "formula " << i + 1 << ":";
      for (size_t j = 0; j < n; ++j) std::cout << " " << ids[j];
      std::cout << "\n";
    }
  if (!svg.empty())
    write_file(svg, text([&](char* b, size_t c, size_t* l) { return clarkit_clar_svg(C.get(), count ? 0 : -1, b, c, l); }));
  return kOk;
}

int cmd_fries(const Input& in, const std::string& out) {
  auto F = in.load();
  int fries = 0, pentagon_free = 0;
  const std::string matching = text(
      [&](char* b, size_t c, size_t* l) { return clarkit_fries(F.get(), &fries, &pentagon_free, b, c, l); });
  std::cout << "fries=" << fries << " pentagon_free=" << (pentagon_free ? "yes" : "no") << "\n";
  if (!out.empty()) write_file(out, matching);
  return kOk;
}

CatalogPtr build_catalog(int n, int workers, bool analyse) {
  clarkit_catalog* raw = nullptr;
  check(clarkit_enumerate(n, workers, &raw));
  CatalogPtr cat(raw);
  if (analyse) check(clarkit_catalog_analyze(cat.get(), workers, 1));
  return cat;
}

std::string rows(const clarkit_catalog* cat, clarkit_status (*row)(const clarkit_catalog*, int, char*, size_t, size_t*)) {
  std::string s;
  for (int i = 0; i < clarkit_catalog_size(cat); ++i)
    s += text([&](char* b, size_t c, size_t* l) { return row(cat, i, b, c, l); }) + "\n";
  return s;
}

std::string sidecar(const std::string& path) {
  std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + ".analysis.tsv")).string();
}

void summary(const clarkit_catalog* cat) {
  const int size = clarkit_catalog_size(cat);
  std::cout << "isomers=" << size;
  if (size > 0 && clarkit_catalog_extremal_count(cat) >= 0) std::cout << " extremal=" << clarkit_catalog_extremal_count(cat);
  std::cout << "\n";
}

int cmd_enumerate(int n, int workers, const std::string& out) {
  auto cat = build_catalog(n, workers, !out.empty());
  if (out.empty()) {
    std::cout << rows(cat.get(), clarkit_catalog_spiral);
    std::cerr << "isomers=" << clarkit_catalog_size(cat.get()) << "\n";
    return kOk;
  }
  write_file(out, rows(cat.get(), clarkit_catalog_manifest_row));
  write_file(sidecar(out), rows(cat.get(), clarkit_catalog_analysis_row));
  summary(cat.get());
  return kOk;
}

int cmd_census(int n, int workers, const std::string& dir) {
  auto cat = build_catalog(n, workers, true);
  const std::filesystem::path d = dir.empty() ? "." : dir;
  std::filesystem::create_directories(d);
  write_file((d / "catalog.tsv").string(), rows(cat.get(), clarkit_catalog_manifest_row));
  write_file((d / "catalog.analysis.tsv").string(), rows(cat.get(), clarkit_catalog_analysis_row));
  std::string extremal;
  for (int i = 0; i < clarkit_catalog_size(cat.get()); ++i)
    if (clarkit_catalog_is_extremal(cat.get(), i) == 1)
      extremal += text([&](char* b, size_t c, size_t* l) { return clarkit_catalog_spiral(cat.get(), i, b, c, l); }) + "\n";
  write_file((d / "extremal.txt").string(), extremal);

  clarkit_breakdown b{};
  const std::string table =
      text([&](char* buf, size_t c, size_t* l) { return clarkit_catalog_breakdown(cat.get(), &b, buf, c, l); });
  write_file((d / "breakdown.tsv").string(), table);
  summary(cat.get());
  if (clarkit_catalog_extremal_count(cat.get()) > 0) {
    std::cout << "class\tcount\n"
              << "B3\t" << b.b3 << "\nB1^k\t" << b.b1_power << "\nB2*B1\t" << b.b2_b1 << "\nB1/B2\t" << b.b1_b2_only
              << "\n";
    std::cout << "isolated_pentagons=" << b.isolated_pentagon_graphs << " chiral=" << b.chiral << "\n";
  }
  return kOk;
}

int cmd_classify(const Input& in) {
  auto F = in.load();
  clarkit_report* raw = nullptr;
  check(clarkit_classify(F.get(), &raw));
  ReportPtr R(raw);
  const int m = clarkit_report_component_count(R.get());
  std::map<std::string, int> tally;
  for (int i = 0; i < m; ++i) {
    clarkit_component c{};
    check(clarkit_report_component(R.get(), i, &c));
    const std::string lab =
        text([&](char* b, size_t cap, size_t* l) { return clarkit_report_labeling(R.get(), i, b, cap, l); });
    std::cout << "component " << i + 1 << ": tag=" << c.tag << " pentagons=" << c.pentagons << " faces=" << c.faces
              << " vertices=" << c.vertices << " gamma=" << c.gamma;
    if (c.u >= 0) std::cout << " U=" << c.u << " normal=" << (c.normal ? "yes" : "no");
    else std::cout << " maximal=no";
    std::cout << " labeling=" << (lab.empty() ? "-" : lab) << "\n";
    ++tally[c.tag];
  }
  std::cout << "components:";
  for (const auto& [tag, k] : tally) std::cout << " " << k << " x " << tag;
  std::cout << "\n";
  const int t = clarkit_report_structural(R.get());
  const char* direct = clarkit_report_direct(R.get()) ? "extremal" : "not-extremal";
  if (t < 0) std::cout << "theorem2=n/a direct=" << direct << "\n";
  else if (t == 1) std::cout << "theorem2=extremal direct=" << direct << "\n";
  else std::cout << "theorem2=not-extremal failed_condition=" << clarkit_report_failed_condition(R.get())
                 << " direct=" << direct << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clar numbers and extremal structure of fullerene graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "clarkit 1.0");

  Input in;
  bool list = false;
  int cap = 10000, n = 0, workers = 0;
  std::string svg, out;

  auto* validate = app.add_subcommand("validate", "check that the input is a fullerene");
  in.add_to(validate);

  auto* clar = app.add_subcommand("clar", "Clar number, bound and formulas");
  in.add_to(clar);
  clar->add_flag("--formulas", list, "list the hexagon ids of every formula");
  clar->add_option("--formula-cap", cap, "stop listing formulas after this many")->check(CLI::PositiveNumber);
  clar->add_option("--svg", svg, "write a drawing of the first formula");

  auto* fries = app.add_subcommand("fries", "Fries number and a witness matching");
  in.add_to(fries);
  fries->add_option("--out", out, "write the witness matching");

  auto* enumerate = app.add_subcommand("enumerate", "all isomers on n vertices");
  enumerate->add_option("--n", n, "vertex count")->required();
  enumerate->add_option("--out", out, "manifest path; also writes <stem>.analysis.tsv");
  enumerate->add_option("--workers", workers, "threads (default CLARKIT_WORKERS or 1)")->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "extremal census with class breakdown");
  census->add_option("--n", n, "vertex count")->required();
  census->add_option("--out", out, "output directory (default .)");
  census->add_option("--workers", workers, "threads (default CLARKIT_WORKERS or 1)")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "pentagonal fragments and the structural extremality test");
  in.add_to(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*validate) return cmd_validate(in);
    if (*clar) return cmd_clar(in, list, cap, svg);
    if (*fries) return cmd_fries(in, out);
    if (*enumerate) return cmd_enumerate(n, workers, out);
    if (*census) return cmd_census(n, workers, out);
    if (*classify) return cmd_classify(in);
  } catch (const Failure& f) {
    std::cerr << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
