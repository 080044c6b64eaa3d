#ifndef CLARKIT_H
#define CLARKIT_H

#include <stddef.h>

#if defined(_WIN32)
#define CLARKIT_API __declspec(dllexport)
#else
#define CLARKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clarkit_status {
  CLARKIT_OK = 0,
  CLARKIT_E_PARSE = 1,        /* malformed text; see clarkit_last_error_line/column */
  CLARKIT_E_VALIDATION = 2,   /* well-formed input that is not a fullerene */
  CLARKIT_E_RANGE = 3,        /* vertex count outside the supported range */
  CLARKIT_E_ARGUMENT = 4,     /* null pointer, bad index, or a precondition of the call */
  CLARKIT_E_WRONG_ORDER = 5,  /* structural test asked for fewer than 60 vertices */
  CLARKIT_E_INTERNAL = 6,
  CLARKIT_E_BUFFER = 7        /* caller buffer too small; *len holds the size needed */
} clarkit_status;

typedef enum clarkit_format {
  CLARKIT_FORMAT_AUTO = 0,  /* adjacency when the text contains a ':' */
  CLARKIT_FORMAT_SPIRAL = 1,
  CLARKIT_FORMAT_ADJACENCY = 2
} clarkit_format;

typedef struct clarkit_fullerene clarkit_fullerene;
typedef struct clarkit_clar clarkit_clar;
typedef struct clarkit_catalog clarkit_catalog;
typedef struct clarkit_report clarkit_report;

/* Errors are per thread. The message stays valid until the next failing call
   on the same thread. Line and column are 0 unless the last error was a parse
   error. */
CLARKIT_API const char* clarkit_last_error(void);
CLARKIT_API const char* clarkit_last_error_kind(void);
CLARKIT_API int clarkit_last_error_line(void);
CLARKIT_API int clarkit_last_error_column(void);
CLARKIT_API const char* clarkit_status_name(clarkit_status s);

/* String outputs: *len always receives the text length without the
   terminator. When cap > *len the text and a NUL are written to buf;
   otherwise CLARKIT_E_BUFFER is returned and buf is untouched. buf may be
   NULL when cap is 0. */

/* ---- single graphs ---- */

CLARKIT_API clarkit_status clarkit_fullerene_parse(const char* text, clarkit_format format, clarkit_fullerene** out);
CLARKIT_API clarkit_status clarkit_fullerene_load(const char* path, clarkit_format format, clarkit_fullerene** out);
CLARKIT_API void clarkit_fullerene_free(clarkit_fullerene* f);

CLARKIT_API int clarkit_fullerene_order(const clarkit_fullerene* f);
CLARKIT_API int clarkit_fullerene_pentagons(const clarkit_fullerene* f);
CLARKIT_API int clarkit_fullerene_hexagons(const clarkit_fullerene* f);
CLARKIT_API int clarkit_fullerene_is_chiral(const clarkit_fullerene* f);
/* Largest k <= 6 with the graph cyclically k-edge-connected. */
CLARKIT_API clarkit_status clarkit_fullerene_cyclic_connectivity(const clarkit_fullerene* f, int* out);
CLARKIT_API clarkit_status clarkit_fullerene_spiral(const clarkit_fullerene* f, char* buf, size_t cap, size_t* len);
CLARKIT_API clarkit_status clarkit_fullerene_adjacency(const clarkit_fullerene* f, char* buf, size_t cap,
                                                       size_t* len);

/* ---- Clar and Fries ---- */

/* formula_cap <= 0 computes the Clar number only. */
CLARKIT_API clarkit_status clarkit_clar_compute(const clarkit_fullerene* f, int formula_cap, clarkit_clar** out);
CLARKIT_API void clarkit_clar_free(clarkit_clar* c);
CLARKIT_API int clarkit_clar_number(const clarkit_clar* c);
CLARKIT_API int clarkit_clar_bound(const clarkit_clar* c);
CLARKIT_API int clarkit_clar_extremal(const clarkit_clar* c);
CLARKIT_API int clarkit_clar_formula_count(const clarkit_clar* c);
CLARKIT_API int clarkit_clar_truncated(const clarkit_clar* c);
/* Face ids of formula i; *count receives the number of hexagons. */
CLARKIT_API clarkit_status clarkit_clar_formula_hexagons(const clarkit_clar* c, int i, int* ids, size_t cap,
                                                         size_t* count);
/* Witness matching of formula i as sorted "u-v" lines. */
CLARKIT_API clarkit_status clarkit_clar_formula_matching(const clarkit_clar* c, int i, char* buf, size_t cap,
                                                         size_t* len);
/* SVG drawing; formula i < 0 draws the bare graph. */
CLARKIT_API clarkit_status clarkit_clar_svg(const clarkit_clar* c, int i, char* buf, size_t cap, size_t* len);

/* Fries number with the witness matching as "u-v" lines. pentagon_free
   tells whether the witness avoids pentagon edges. Outputs other than
   fries may be NULL. */
CLARKIT_API clarkit_status clarkit_fries(const clarkit_fullerene* f, int* fries, int* pentagon_free, char* buf,
                                         size_t cap, size_t* len);

/* ---- catalogs ---- */

/* workers <= 0 takes CLARKIT_WORKERS, else 1. */
CLARKIT_API clarkit_status clarkit_enumerate(int n, int workers, clarkit_catalog** out);
CLARKIT_API void clarkit_catalog_free(clarkit_catalog* c);
CLARKIT_API int clarkit_catalog_order(const clarkit_catalog* c);
CLARKIT_API int clarkit_catalog_size(const clarkit_catalog* c);
CLARKIT_API clarkit_status clarkit_catalog_analyze(clarkit_catalog* c, int workers, int with_fries);
/* -1 until analysed. */
CLARKIT_API int clarkit_catalog_extremal_count(const clarkit_catalog* c);
CLARKIT_API clarkit_status clarkit_catalog_spiral(const clarkit_catalog* c, int i, char* buf, size_t cap, size_t* len);
/* Manifest row n<TAB>spiral<TAB>clar<TAB>fries (needs analysis). */
CLARKIT_API clarkit_status clarkit_catalog_manifest_row(const clarkit_catalog* c, int i, char* buf, size_t cap,
                                                        size_t* len);
/* Analysis row spiral<TAB>clar<TAB>bound<TAB>yes|no<TAB>formulas. */
CLARKIT_API clarkit_status clarkit_catalog_analysis_row(const clarkit_catalog* c, int i, char* buf, size_t cap,
                                                        size_t* len);
CLARKIT_API int clarkit_catalog_is_extremal(const clarkit_catalog* c, int i);

typedef struct clarkit_breakdown {
  int b3;
  int b1_power;
  int b2_b1;
  int b1_b2_only;
  int isolated_pentagon_graphs;
  int chiral;
} clarkit_breakdown;

/* Class counts of the extremal members; the table has one line per member:
   spiral<TAB>class<TAB>chiral|achiral. */
CLARKIT_API clarkit_status clarkit_catalog_breakdown(const clarkit_catalog* c, clarkit_breakdown* out, char* table,
                                                     size_t cap, size_t* len);

/* ---- fragment report ---- */

CLARKIT_API clarkit_status clarkit_classify(const clarkit_fullerene* f, clarkit_report** out);
CLARKIT_API void clarkit_report_free(clarkit_report* r);
CLARKIT_API int clarkit_report_component_count(const clarkit_report* r);

typedef struct clarkit_component {
  int faces;
  int pentagons;
  int vertices;
  int is_fragment;
  int maximal;    /* every adjoining face is a hexagon */
  int gamma;
  int u;          /* |U| of the Clar set, -1 unless maximal */
  int normal;
  const char* tag;  /* "P", "B2", ..., or "Other"; static storage */
} clarkit_component;

CLARKIT_API clarkit_status clarkit_report_component(const clarkit_report* r, int i, clarkit_component* out);
CLARKIT_API clarkit_status clarkit_report_labeling(const clarkit_report* r, int i, char* buf, size_t cap, size_t* len);
/* 1 extremal, 0 not, -1 below 60 vertices. */
CLARKIT_API int clarkit_report_structural(const clarkit_report* r);
CLARKIT_API int clarkit_report_failed_condition(const clarkit_report* r);
CLARKIT_API int clarkit_report_direct(const clarkit_report* r);

#ifdef __cplusplus
}
#endif

#endif
