#pragma once

#include <string>
#include <variant>
#include <vector>

#include "osp12/admissible.hpp"
#include "osp12/fusion.hpp"

namespace osp12 {

enum class DocFormat { Json, Csv, Tex };
enum class DocStatus { Pass, Fail, ReportOnly };

std::string status_str(DocStatus s);

struct WeightRow {
  long m = 0, s = 0;
  std::string j;  // reduced "num/den"
};

struct WeightsPayload {
  bool valid = false;
  std::vector<std::string> violations;
  std::vector<WeightRow> weights;
  std::string vacuum_poly;
  std::vector<long> ordinary;
};

struct FusePayload {
  WeightRow w1, w2;
  std::vector<WeightRow> closed;
  std::vector<WeightRow> oracle;
  bool agree = false;
};

struct TableCell {
  WeightRow w1, w2;
  std::vector<WeightRow> summands;
};

struct TablePayload {
  std::vector<WeightRow> weights;
  std::vector<TableCell> cells;  // row-major in enumeration order
  RingCheckReport checks;
};

struct VerifyLine {
  std::string instance;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

struct VerifyPayload {
  std::string suite;
  long max_pq = 0, depth = 0, gamma_max = 0;
  std::vector<VerifyLine> lines;
  std::size_t passed = 0, failed = 0, skipped = 0;
};

/// Deterministic result document of one CLI/API command. JSON is the source
/// of truth; CSV and TeX are cosmetic renderings of the same payload.
struct ReportDocument {
  std::string command;
  long p = 0, q = 0;      // 0 when not pair-scoped (verify)
  std::string level;      // reduced "num/den"; empty when not pair-scoped
  DocStatus status = DocStatus::Pass;
  int exit_code = 0;      // 0 ok, 1 verify failure, 2 invalid input, 3 theorem mismatch
  std::string message;    // human summary on failure
  std::variant<std::monostate, WeightsPayload, FusePayload, TablePayload, VerifyPayload>
      payload;

  std::string render(DocFormat fmt) const;
};

ReportDocument doc_weights(long p, long q);
ReportDocument doc_fuse(long p, long q, long m1, long s1, long m2, long s2);
ReportDocument doc_table(long p, long q, unsigned workers);

struct VerifyOptions {
  std::string suite = "all";  // pq|factorization|projection|singular|oracle|all
  long max_pq = 0;            // 0: per-suite default (oracle 81, projection/singular 32)
  long depth = 6;
  long gamma_max = 6;
  unsigned workers = 1;
};

ReportDocument doc_verify(const VerifyOptions& opts);

}  // namespace osp12
