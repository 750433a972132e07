#pragma once

#include <vector>

#include "osp12/report.hpp"

namespace osp12 {

/// Verification sweeps backing `verify`. Each returns deterministic
/// per-instance lines; "skip" lines mark fractional MFF instances.
std::vector<VerifyLine> pq_suite(long gamma_max);
std::vector<VerifyLine> factorization_suite(long a_max = 8);
std::vector<VerifyLine> projection_suite(long max_pq, unsigned workers);
std::vector<VerifyLine> singular_suite(long max_pq, long depth, unsigned workers);
std::vector<VerifyLine> oracle_suite(long max_pq, unsigned workers);

/// The pinned 10-element rational grid for the P/Q identity sweep.
std::vector<Rational> pq_identity_grid();

}  // namespace osp12
