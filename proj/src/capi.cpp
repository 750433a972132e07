#include "osp12.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "osp12/parallel.hpp"
#include "osp12/report.hpp"

struct osp12_doc {
  osp12::ReportDocument doc;
  std::string status_cache;
};

namespace {

osp12_status wrap(osp12::ReportDocument inner, osp12_doc** out) {
  auto* d = new (std::nothrow) osp12_doc{std::move(inner), {}};
  if (!d) return OSP12_BAD_ARGUMENT;
  d->status_cache = osp12::status_str(d->doc.status);
  *out = d;
  switch (d->doc.exit_code) {
    case 0: return OSP12_OK;
    case 1: return OSP12_VERIFY_FAILED;
    case 2: return OSP12_INVALID_INPUT;
    default: return OSP12_THEOREM_MISMATCH;
  }
}

}  // namespace

extern "C" {

osp12_status osp12_weights(int p, int q, osp12_doc** out) {
  if (!out) return OSP12_BAD_ARGUMENT;
  *out = nullptr;
  try {
    return wrap(osp12::doc_weights(p, q), out);
  } catch (...) {
    return OSP12_BAD_ARGUMENT;
  }
}

osp12_status osp12_fuse(int p, int q, int m1, int s1, int m2, int s2, osp12_doc** out) {
  if (!out) return OSP12_BAD_ARGUMENT;
  *out = nullptr;
  try {
    return wrap(osp12::doc_fuse(p, q, m1, s1, m2, s2), out);
  } catch (...) {
    return OSP12_BAD_ARGUMENT;
  }
}

osp12_status osp12_table(int p, int q, int workers, osp12_doc** out) {
  if (!out) return OSP12_BAD_ARGUMENT;
  *out = nullptr;
  try {
    return wrap(osp12::doc_table(p, q, osp12::resolve_workers(workers)), out);
  } catch (...) {
    return OSP12_BAD_ARGUMENT;
  }
}

osp12_status osp12_verify(const osp12_verify_opts* opts, osp12_doc** out) {
  if (!out) return OSP12_BAD_ARGUMENT;
  *out = nullptr;
  try {
    osp12::VerifyOptions o;
    if (opts) {
      if (opts->suite) o.suite = opts->suite;
      if (opts->max_pq > 0) o.max_pq = opts->max_pq;
      if (opts->depth > 0) o.depth = opts->depth;
      if (opts->gamma_max > 0) o.gamma_max = opts->gamma_max;
      o.workers = osp12::resolve_workers(opts->workers);
    } else {
      o.workers = osp12::resolve_workers(0);
    }
    return wrap(osp12::doc_verify(o), out);
  } catch (...) {
    return OSP12_BAD_ARGUMENT;
  }
}

char* osp12_doc_render(const osp12_doc* doc, osp12_format fmt) {
  if (!doc) return nullptr;
  osp12::DocFormat f;
  switch (fmt) {
    case OSP12_FORMAT_JSON: f = osp12::DocFormat::Json; break;
    case OSP12_FORMAT_CSV: f = osp12::DocFormat::Csv; break;
    case OSP12_FORMAT_TEX: f = osp12::DocFormat::Tex; break;
    default: return nullptr;
  }
  try {
    const std::string s = doc->doc.render(f);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) return nullptr;
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
  } catch (...) {
    return nullptr;
  }
}

const char* osp12_doc_status(const osp12_doc* doc) {
  return doc ? doc->status_cache.c_str() : nullptr;
}

int osp12_doc_exit_code(const osp12_doc* doc) { return doc ? doc->doc.exit_code : 4; }

void osp12_doc_free(osp12_doc* doc) { delete doc; }

void osp12_string_free(char* s) { std::free(s); }

const char* osp12_version(void) { return "1.0.0"; }

}  // extern "C"
