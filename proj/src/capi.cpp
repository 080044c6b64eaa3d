#include "clarkit/clarkit.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "clarkit/clar.hpp"
#include "clarkit/enumeration.hpp"
#include "clarkit/error.hpp"
#include "clarkit/fragment.hpp"
#include "clarkit/fullerene.hpp"
#include "clarkit/io.hpp"
#include "clarkit/matching.hpp"

using namespace clarkit;

struct clarkit_fullerene {
  Fullerene F;
};

struct clarkit_clar {
  Fullerene F;
  ClarResult r;
};

struct clarkit_catalog {
  IsomerCatalog cat;
  bool analysed = false;
};

struct clarkit_report {
  struct Component {
    clarkit_component info{};
    std::string labeling;
  };
  std::vector<Component> components;
  int structural = -1;
  int failed_condition = 0;
  int direct = 0;
};

namespace {

struct LastError {
  std::string message;
  std::string kind;
  int line = 0;
  int column = 0;
};

thread_local LastError last;

clarkit_status fail(clarkit_status s, std::string message, std::string kind, int line = 0, int column = 0) {
  last = {std::move(message), std::move(kind), line, column};
  return s;
}

clarkit_status status_of(ErrorCode c) {
  if (c == ErrorCode::kParse) return CLARKIT_E_PARSE;
  if (is_validation_error(c)) return CLARKIT_E_VALIDATION;
  if (c == ErrorCode::kOutOfSupportedRange) return CLARKIT_E_RANGE;
  if (c == ErrorCode::kWrongOrder) return CLARKIT_E_WRONG_ORDER;
  return CLARKIT_E_ARGUMENT;
}

// Runs body, turning exceptions into status codes.
template <class Body>
clarkit_status guarded(Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(CLARKIT_E_PARSE, e.what(), to_string(e.code()), e.line(), e.column());
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what(), to_string(e.code()));
  } catch (const std::bad_alloc&) {
    return fail(CLARKIT_E_INTERNAL, "out of memory", "Internal");
  } catch (const std::exception& e) {
    return fail(CLARKIT_E_INTERNAL, e.what(), "Internal");
  } catch (...) {
    return fail(CLARKIT_E_INTERNAL, "unknown failure", "Internal");
  }
}

clarkit_status bad_argument(const char* what) { return fail(CLARKIT_E_ARGUMENT, what, "Argument"); }

clarkit_status emit(const std::string& s, char* buf, size_t cap, size_t* len) {
  if (!len) return bad_argument("len must not be null");
  *len = s.size();
  if (cap <= s.size())
    return fail(CLARKIT_E_BUFFER, "buffer of " + std::to_string(cap) + " bytes, need " + std::to_string(s.size() + 1),
                "Buffer");
  if (!buf) return bad_argument("buf must not be null when cap > 0");
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  return CLARKIT_OK;
}

// Spiral text never contains a colon; adjacency text always does.
bool looks_like_adjacency(const std::string& text) { return text.find(':') != std::string::npos; }

Fullerene parse_fullerene(const std::string& text, clarkit_format format) {
  if (format == CLARKIT_FORMAT_AUTO) format = looks_like_adjacency(text) ? CLARKIT_FORMAT_ADJACENCY : CLARKIT_FORMAT_SPIRAL;
  std::istringstream in(text);
  if (format == CLARKIT_FORMAT_ADJACENCY) return validate(io::parse_adjacency(in));
  const auto seqs = io::read_spirals(in);
  if (seqs.size() != 1)
    throw ParseError(1, 1, "expected exactly one spiral, found " + std::to_string(seqs.size()));
  return from_spiral(seqs.front());
}

}  // namespace

extern "C" {

const char* clarkit_last_error(void) { return last.message.c_str(); }
const char* clarkit_last_error_kind(void) { return last.kind.c_str(); }
int clarkit_last_error_line(void) { return last.line; }
int clarkit_last_error_column(void) { return last.column; }

const char* clarkit_status_name(clarkit_status s) {
  switch (s) {
    case CLARKIT_OK: return "ok";
    case CLARKIT_E_PARSE: return "parse";
    case CLARKIT_E_VALIDATION: return "validation";
    case CLARKIT_E_RANGE: return "range";
    case CLARKIT_E_ARGUMENT: return "argument";
    case CLARKIT_E_WRONG_ORDER: return "wrong order";
    case CLARKIT_E_INTERNAL: return "internal";
    case CLARKIT_E_BUFFER: return "buffer";
  }
  return "unknown";
}

clarkit_status clarkit_fullerene_parse(const char* text, clarkit_format format, clarkit_fullerene** out) {
  if (!text || !out) return bad_argument("text and out must not be null");
  return guarded([&] {
    *out = new clarkit_fullerene{parse_fullerene(text, format)};
    return CLARKIT_OK;
  });
}

clarkit_status clarkit_fullerene_load(const char* path, clarkit_format format, clarkit_fullerene** out) {
  if (!path || !out) return bad_argument("path and out must not be null");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(CLARKIT_E_ARGUMENT, std::string("cannot open ") + path, "Argument");
  std::ostringstream ss;
  ss << in.rdbuf();
  return clarkit_fullerene_parse(ss.str().c_str(), format, out);
}

void clarkit_fullerene_free(clarkit_fullerene* f) { delete f; }

int clarkit_fullerene_order(const clarkit_fullerene* f) { return f ? f->F.n() : -1; }
int clarkit_fullerene_pentagons(const clarkit_fullerene* f) {
  return f ? static_cast<int>(f->F.pentagon_ids().size()) : -1;
}
int clarkit_fullerene_hexagons(const clarkit_fullerene* f) {
  return f ? static_cast<int>(f->F.hexagon_ids().size()) : -1;
}
int clarkit_fullerene_is_chiral(const clarkit_fullerene* f) {
  if (!f) return -1;
  int r = -1;
  guarded([&] {
    r = is_chiral(f->F) ? 1 : 0;
    return CLARKIT_OK;
  });
  return r;
}

clarkit_status clarkit_fullerene_cyclic_connectivity(const clarkit_fullerene* f, int* out) {
  if (!f || !out) return bad_argument("f and out must not be null");
  return guarded([&] {
    int k = 0;
    while (k < 6 && cyclic_edge_connectivity_at_least(f->F.rot(), k + 1)) ++k;
    *out = k;
    return CLARKIT_OK;
  });
}

clarkit_status clarkit_fullerene_spiral(const clarkit_fullerene* f, char* buf, size_t cap, size_t* len) {
  if (!f) return bad_argument("f must not be null");
  return guarded([&] { return emit(io::format_spiral(canonical_form(f->F).spiral), buf, cap, len); });
}

clarkit_status clarkit_fullerene_adjacency(const clarkit_fullerene* f, char* buf, size_t cap, size_t* len) {
  if (!f) return bad_argument("f must not be null");
  return guarded([&] { return emit(io::format_adjacency(f->F.rot()), buf, cap, len); });
}

clarkit_status clarkit_clar_compute(const clarkit_fullerene* f, int formula_cap, clarkit_clar** out) {
  if (!f || !out) return bad_argument("f and out must not be null");
  return guarded([&] {
    ClarOptions o;
    o.with_formulas = formula_cap > 0;
    o.formula_cap = std::max(formula_cap, 1);
    *out = new clarkit_clar{f->F, clar_number(f->F, o)};
    return CLARKIT_OK;
  });
}

void clarkit_clar_free(clarkit_clar* c) { delete c; }
int clarkit_clar_number(const clarkit_clar* c) { return c ? c->r.clar_number : -1; }
int clarkit_clar_bound(const clarkit_clar* c) { return c ? c->r.bound : -1; }
int clarkit_clar_extremal(const clarkit_clar* c) { return c ? c->r.extremal : -1; }
int clarkit_clar_formula_count(const clarkit_clar* c) { return c ? static_cast<int>(c->r.formulas.size()) : -1; }
int clarkit_clar_truncated(const clarkit_clar* c) { return c ? c->r.formulas_truncated : -1; }

clarkit_status clarkit_clar_formula_hexagons(const clarkit_clar* c, int i, int* ids, size_t cap, size_t* count) {
  if (!c || !count) return bad_argument("c and count must not be null");
  if (i < 0 || i >= static_cast<int>(c->r.formulas.size())) return bad_argument("formula index out of range");
  const auto& h = c->r.formulas[i].hexagons;
  *count = h.size();
  if (cap < h.size()) return fail(CLARKIT_E_BUFFER, "id buffer too small", "Buffer");
  if (!h.empty() && !ids) return bad_argument("ids must not be null");
  std::copy(h.begin(), h.end(), ids);
  return CLARKIT_OK;
}

clarkit_status clarkit_clar_formula_matching(const clarkit_clar* c, int i, char* buf, size_t cap, size_t* len) {
  if (!c) return bad_argument("c must not be null");
  if (i < 0 || i >= static_cast<int>(c->r.formulas.size())) return bad_argument("formula index out of range");
  return guarded([&] { return emit(io::format_matching(Graph(c->F.graph()), c->r.formulas[i].witness), buf, cap, len); });
}

clarkit_status clarkit_clar_svg(const clarkit_clar* c, int i, char* buf, size_t cap, size_t* len) {
  if (!c) return bad_argument("c must not be null");
  if (i >= static_cast<int>(c->r.formulas.size())) return bad_argument("formula index out of range");
  return guarded([&] {
    io::SvgOptions o;
    if (i >= 0) o.formula = c->r.formulas[i];
    return emit(io::render_svg(c->F, o), buf, cap, len);
  });
}

clarkit_status clarkit_fries(const clarkit_fullerene* f, int* fries, int* pentagon_free, char* buf, size_t cap,
                             size_t* len) {
  if (!f || !fries) return bad_argument("f and fries must not be null");
  return guarded([&] {
    auto [value, res] = fries_number(f->F);
    *fries = value;
    if (pentagon_free) *pentagon_free = res.pentagon_free;
    if (len) return emit(io::format_matching(Graph(f->F.graph()), res.matching), buf, cap, len);
    return CLARKIT_OK;
  });
}

clarkit_status clarkit_enumerate(int n, int workers, clarkit_catalog** out) {
  if (!out) return bad_argument("out must not be null");
  return guarded([&] {
    *out = new clarkit_catalog{enumerate(n, {.workers = workers > 0 ? workers : default_workers(1)})};
    return CLARKIT_OK;
  });
}

void clarkit_catalog_free(clarkit_catalog* c) { delete c; }
int clarkit_catalog_order(const clarkit_catalog* c) { return c ? c->cat.n : -1; }
int clarkit_catalog_size(const clarkit_catalog* c) { return c ? c->cat.size() : -1; }

clarkit_status clarkit_catalog_analyze(clarkit_catalog* c, int workers, int with_fries) {
  if (!c) return bad_argument("c must not be null");
  return guarded([&] {
    AnalyzeOptions o;
    o.workers = workers > 0 ? workers : default_workers(1);
    o.with_fries = with_fries != 0;
    analyze(c->cat, o);
    c->analysed = true;
    return CLARKIT_OK;
  });
}

int clarkit_catalog_extremal_count(const clarkit_catalog* c) {
  if (!c || !c->analysed) return -1;
  return static_cast<int>(std::count_if(c->cat.entries.begin(), c->cat.entries.end(),
                                        [](const CatalogEntry& e) { return e.analysis->extremal; }));
}

int clarkit_catalog_is_extremal(const clarkit_catalog* c, int i) {
  if (!c || !c->analysed || i < 0 || i >= c->cat.size()) return -1;
  return c->cat.entries[i].analysis->extremal;
}

clarkit_status clarkit_catalog_spiral(const clarkit_catalog* c, int i, char* buf, size_t cap, size_t* len) {
  if (!c) return bad_argument("c must not be null");
  if (i < 0 || i >= c->cat.size()) return bad_argument("entry index out of range");
  return emit(io::format_spiral(c->cat.entries[i].form.spiral), buf, cap, len);
}

clarkit_status clarkit_catalog_manifest_row(const clarkit_catalog* c, int i, char* buf, size_t cap, size_t* len) {
  if (!c) return bad_argument("c must not be null");
  if (!c->analysed) return bad_argument("catalog has not been analysed");
  if (i < 0 || i >= c->cat.size()) return bad_argument("entry index out of range");
  const auto& e = c->cat.entries[i];
  return emit(io::format_manifest_row({c->cat.n, e.form.spiral, e.analysis->clar, e.analysis->fries}), buf, cap, len);
}

clarkit_status clarkit_catalog_analysis_row(const clarkit_catalog* c, int i, char* buf, size_t cap, size_t* len) {
  if (!c) return bad_argument("c must not be null");
  if (!c->analysed) return bad_argument("catalog has not been analysed");
  if (i < 0 || i >= c->cat.size()) return bad_argument("entry index out of range");
  const auto& e = c->cat.entries[i];
  return emit(io::format_analysis_row(e.form.spiral, *e.analysis), buf, cap, len);
}

clarkit_status clarkit_catalog_breakdown(const clarkit_catalog* c, clarkit_breakdown* out, char* table, size_t cap,
                                         size_t* len) {
  if (!c || !out) return bad_argument("c and out must not be null");
  if (!c->analysed) return bad_argument("catalog has not been analysed");
  return guarded([&] {
    const auto b = census_breakdown(extremal_census(c->cat));
    *out = {b.b3, b.b1_power, b.b2_b1, b.b1_b2_only, b.isolated_pentagon_graphs, b.chiral};
    if (!len) return CLARKIT_OK;
    std::string s;
    for (const auto& [form, cls] : b.members)
      s += io::format_spiral(form.spiral) + "\t" + to_string(cls) + "\t" +
           (is_chiral(from_spiral(form.spiral)) ? "chiral" : "achiral") + "\n";
    return emit(s, table, cap, len);
  });
}

clarkit_status clarkit_classify(const clarkit_fullerene* f, clarkit_report** out) {
  if (!f || !out) return bad_argument("f and out must not be null");
  return guarded([&] {
    const Fullerene& F = f->F;
    auto rep = std::make_unique<clarkit_report>();
    for (const auto& G : pentagon_components(F)) {
      clarkit_report::Component c;
      auto& i = c.info;
      i.faces = static_cast<int>(G.faces.size());
      i.pentagons = pentagon_count(F, G);
      i.vertices = static_cast<int>(G.vertices.size());
      i.is_fragment = G.is_fragment();
      i.maximal = hexagon_extension(F, G).has_value();
      i.gamma = gamma(F, G);
      i.u = -1;
      i.tag = to_string(FragmentTag::kOther);
      if (i.maximal) {
        const auto cls = classify_fragment(F, G);
        i.u = static_cast<int>(cls.clar_set.U.size());
        i.normal = cls.clar_set.normal;
        i.tag = to_string(cls.tag);
        c.labeling = labeling_string(cls.labeling);
      } else if (!G.W.empty() && !G.boundary.empty()) {
        c.labeling = labeling_string(boundary_labeling(G));
      }
      rep->components.push_back(std::move(c));
    }
    if (F.n() >= 60) {
      const auto t = structural_report(F);
      rep->structural = t.extremal;
      rep->failed_condition = t.failed_condition;
    }
    rep->direct = clar_number(F, ClarOptions{.with_formulas = false}).extremal;
    *out = rep.release();
    return CLARKIT_OK;
  });
}

void clarkit_report_free(clarkit_report* r) { delete r; }
int clarkit_report_component_count(const clarkit_report* r) {
  return r ? static_cast<int>(r->components.size()) : -1;
}

clarkit_status clarkit_report_component(const clarkit_report* r, int i, clarkit_component* out) {
  if (!r || !out) return bad_argument("r and out must not be null");
  if (i < 0 || i >= static_cast<int>(r->components.size())) return bad_argument("component index out of range");
  *out = r->components[i].info;
  return CLARKIT_OK;
}

clarkit_status clarkit_report_labeling(const clarkit_report* r, int i, char* buf, size_t cap, size_t* len) {
  if (!r) return bad_argument("r must not be null");
  if (i < 0 || i >= static_cast<int>(r->components.size())) return bad_argument("component index out of range");
  return emit(r->components[i].labeling, buf, cap, len);
}

int clarkit_report_structural(const clarkit_report* r) { return r ? r->structural : -2; }
int clarkit_report_failed_condition(const clarkit_report* r) { return r ? r->failed_condition : -1; }
int clarkit_report_direct(const clarkit_report* r) { return r ? r->direct : -1; }

}  // extern "C"
