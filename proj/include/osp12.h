/*
 * osp12 - exact representation-theoretic data of the admissible-level simple
 * affine vertex operator superalgebra of osp(1|2): admissible weights, Zhu
 * algebra and bimodules, fusion rules with an independent oracle, P/Q
 * commutation identities, singular-vector projection formulas, and
 * annihilation checks in truncated Verma modules.
 *
 * C ABI: every command produces an opaque document handle that can be
 * rendered to JSON (source of truth), CSV, or LaTeX. Status codes mirror the
 * CLI exit codes so callers can distinguish user error from mathematical
 * regression. All arithmetic is exact; rendered output is byte-deterministic
 * for fixed inputs, independent of the worker count.
 */
#ifndef OSP12_H
#define OSP12_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OSP12_API __declspec(dllexport)
#else
#define OSP12_API __attribute__((visibility("default")))
#endif

typedef enum osp12_status {
  OSP12_OK = 0,               /* command succeeded */
  OSP12_VERIFY_FAILED = 1,    /* an asserted verification check failed */
  OSP12_INVALID_INPUT = 2,    /* invalid pair/weight/suite */
  OSP12_THEOREM_MISMATCH = 3, /* internal theorem cross-check failed */
  OSP12_BAD_ARGUMENT = 4      /* null pointer or malformed call */
} osp12_status;

typedef enum osp12_format {
  OSP12_FORMAT_JSON = 0,
  OSP12_FORMAT_CSV = 1,
  OSP12_FORMAT_TEX = 2
} osp12_format;

/* Opaque result document. */
typedef struct osp12_doc osp12_doc;

/* Admissible weights of the pair (p, q), with the vacuum polynomial and the
 * ordinary (integer) weights. On invalid input a document naming the failed
 * condition is still produced. */
OSP12_API osp12_status osp12_weights(int p, int q, osp12_doc** out);

/* Fusion L(l,j1) x L(l,j2) for grid weights (m1,s1), (m2,s2): closed-form
 * window and bimodule-tensor oracle, with their agreement flag. */
OSP12_API osp12_status osp12_fuse(int p, int q, int m1, int s1, int m2, int s2,
                                  osp12_doc** out);

/* Full fusion table over all admissible weights of (p, q), cross-checked
 * closed vs oracle per cell, plus ring checks (commutativity, vacuum unit,
 * closure; associativity asserted only for q = 1). workers <= 0 reads
 * OSP12_WORKERS, defaulting to 1; output does not depend on it. */
OSP12_API osp12_status osp12_table(int p, int q, int workers, osp12_doc** out);

typedef struct osp12_verify_opts {
  const char* suite; /* "pq"|"factorization"|"projection"|"singular"|"oracle"|"all";
                        NULL means "all" */
  int max_pq;        /* <= 0: suite default (oracle 81, projection/singular 32) */
  int depth;         /* <= 0: default 6 */
  int gamma_max;     /* <= 0: default 6 */
  int workers;       /* <= 0: env OSP12_WORKERS, default 1 */
} osp12_verify_opts;

/* Verification sweeps with per-instance pass/fail/skip lines. Fractional
 * MFF instances are reported as skipped, never silently passed. */
OSP12_API osp12_status osp12_verify(const osp12_verify_opts* opts, osp12_doc** out);

/* Renders a document; returns a NUL-terminated string owned by the caller
 * (release with osp12_string_free), or NULL on a bad format. */
OSP12_API char* osp12_doc_render(const osp12_doc* doc, osp12_format fmt);

/* "pass", "fail" or "report-only"; pointer valid while doc lives. */
OSP12_API const char* osp12_doc_status(const osp12_doc* doc);

/* Exit-code view of the document status: 0/1/2/3 as in osp12_status. */
OSP12_API int osp12_doc_exit_code(const osp12_doc* doc);

OSP12_API void osp12_doc_free(osp12_doc* doc);
OSP12_API void osp12_string_free(char* s);

OSP12_API const char* osp12_version(void);

#ifdef __cplusplus
}
#endif

#endif /* OSP12_H */
