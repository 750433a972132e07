#pragma once

#include <string>
#include <vector>

#include "osp12/admissible.hpp"
#include "osp12/zhu.hpp"

namespace osp12 {

/// Multiset of summands of a fusion product (empty means the product is 0).
/// All paper-covered cases are multiplicity-free; keeping a multiset makes
/// that a testable fact rather than an assumption.
struct FusionResult {
  std::vector<AdmissibleWeight> summands;  // sorted by (s, m), duplicates kept

  bool empty() const { return summands.empty(); }
  friend bool operator==(const FusionResult&, const FusionResult&) = default;
  std::string str(const AdmissiblePair& pair) const;
};

/// Closed-form window: if s2 <= q-s1-1, the summands are j1+j2-n for
/// n in [max(0, m1+m2-p), min(m1-1, m2-1)]; otherwise the product is 0.
FusionResult fuse_closed(const AdmissiblePair& pair, const AdmissibleWeight& w1,
                         const AdmissibleWeight& w2);

/// Independent oracle through the bimodule tensor quotient: the surviving
/// basis is {t2^n : n < m1, g_n(j2) = 0}, each survivor carrying left
/// eigenvalue j1+j2-n. Throws TheoremError if an eigenvalue fails to be an
/// admissible weight (that would falsify closure).
FusionResult fuse_oracle(const AdmissiblePair& pair, const AdmissibleWeight& w1,
                         const AdmissibleWeight& w2);
FusionResult fuse_oracle(const BimodulePresentation& P1, const AdmissiblePair& pair,
                         const AdmissibleWeight& w1, const AdmissibleWeight& w2);

/// Positive integer level l (pair (2l+3, 1)): all integer j in
/// [|j1-j2|, j1+j2] with j+j1+j2 <= 2l+1. Throws on out-of-range weights.
FusionResult integrable_fuse(long level, long j1, long j2);

struct FusionTable {
  AdmissiblePair pair;
  std::vector<AdmissibleWeight> weights;             // enumeration order
  std::vector<std::vector<FusionResult>> cells;      // cells[i][k] = w_i x w_k
};

/// Full table in enumerate_weights order; every cell is computed closed-form
/// and cross-checked against the oracle. A mismatch aborts with a diagnostic
/// naming (pair, w1, w2).
FusionTable fusion_table(const AdmissiblePair& pair, unsigned workers = 1);

struct RingCheckReport {
  bool commutative = false;
  bool vacuum_unit = false;
  bool closure = false;       // summands match (m1+m2-1-2n, s1+s2) on the grid
  bool associative = false;   // measured exhaustively
  bool associative_asserted = false;  // true when q = 1 (integrable tables)
  std::string detail;

  bool asserted_ok() const {
    return commutative && vacuum_unit && closure && (!associative_asserted || associative);
  }
};

RingCheckReport ring_checks(const FusionTable& table);

}  // namespace osp12
