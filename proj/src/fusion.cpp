#include "osp12/fusion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "osp12/parallel.hpp"

namespace osp12 {

std::string FusionResult::str(const AdmissiblePair& pair) const {
  if (summands.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) os << " + ";
    os << "L(j=" << summands[i].value(pair).str() << ")";
  }
  return os.str();
}

namespace {

void sort_summands(FusionResult& r) { std::sort(r.summands.begin(), r.summands.end()); }

AdmissibleWeight identify(const AdmissiblePair& pair, const Rational& j,
                          const std::string& where) {
  auto w = unique_ms(pair, j);
  if (!w)
    throw TheoremError(where + ": value " + j.str() + " is not an admissible weight for (p,q)=(" +
                       std::to_string(pair.p) + "," + std::to_string(pair.q) + ")");
  return *w;
}

}  // namespace

FusionResult fuse_closed(const AdmissiblePair& pair, const AdmissibleWeight& w1,
                         const AdmissibleWeight& w2) {
  FusionResult r;
  if (w2.s > pair.q - w1.s - 1) return r;
  const Rational j12 = w1.value(pair) + w2.value(pair);
  const long lo = std::max(0L, w1.m + w2.m - pair.p);
  const long hi = std::min(w1.m - 1, w2.m - 1);
  for (long n = lo; n <= hi; ++n)
    r.summands.push_back(identify(pair, j12 - Rational(n), "fuse_closed"));
  sort_summands(r);
  return r;
}

FusionResult fuse_oracle(const BimodulePresentation& P1, const AdmissiblePair& pair,
                         const AdmissibleWeight& w1, const AdmissibleWeight& w2) {
  FusionResult r;
  const Rational j2 = w2.value(pair);
  const Rational j12 = w1.value(pair) + j2;
  for (long n = 0; n < P1.strata(); ++n) {
    if (!P1.reducers[static_cast<std::size_t>(n)].eval(j2).is_zero()) continue;
    r.summands.push_back(identify(pair, j12 - Rational(n), "fuse_oracle"));
  }
  sort_summands(r);
  return r;
}

FusionResult fuse_oracle(const AdmissiblePair& pair, const AdmissibleWeight& w1,
                         const AdmissibleWeight& w2) {
  return fuse_oracle(bimodule_build(pair, w1), pair, w1, w2);
}

FusionResult integrable_fuse(long level, long j1, long j2) {
  if (level < 1) throw std::invalid_argument("integrable_fuse: level must be a positive integer");
  if (j1 < 0 || j1 > level || j2 < 0 || j2 > level)
    throw std::invalid_argument("integrable_fuse: weights must satisfy 0 <= j <= level");
  FusionResult r;
  for (long j = std::labs(j1 - j2); j <= j1 + j2; ++j) {
    if (j + j1 + j2 > 2 * level + 1) break;
    r.summands.push_back({2 * j + 1, 0});
  }
  sort_summands(r);
  return r;
}

FusionTable fusion_table(const AdmissiblePair& pair, unsigned workers) {
  FusionTable t;
  t.pair = pair;
  t.weights = enumerate_weights(pair);
  const std::size_t n = t.weights.size();
  std::vector<BimodulePresentation> pres(n);
  for (std::size_t i = 0; i < n; ++i) pres[i] = bimodule_build(pair, t.weights[i]);

  auto rows = parallel_map<std::vector<FusionResult>>(n, workers, [&](std::size_t i) {
    std::vector<FusionResult> row(n);
    for (std::size_t k = 0; k < n; ++k) {
      FusionResult closed = fuse_closed(pair, t.weights[i], t.weights[k]);
      FusionResult oracle = fuse_oracle(pres[i], pair, t.weights[i], t.weights[k]);
      if (!(closed == oracle)) {
        std::ostringstream os;
        os << "fusion closed/oracle mismatch at (p,q)=(" << pair.p << "," << pair.q
           << "), w1=(" << t.weights[i].m << "," << t.weights[i].s << "), w2=("
           << t.weights[k].m << "," << t.weights[k].s << "): closed has "
           << closed.summands.size() << " summands, oracle has " << oracle.summands.size();
        throw TheoremError(os.str());
      }
      row[k] = std::move(closed);
    }
    return row;
  });
  t.cells = std::move(rows);
  return t;
}

namespace {

// w x (multiset of weights), extended additively over precomputed cells.
FusionResult fuse_into(const FusionTable& t, const std::map<AdmissibleWeight, std::size_t>& idx,
                       std::size_t w, const FusionResult& rs, bool weight_on_left) {
  FusionResult out;
  for (const auto& u : rs.summands) {
    const std::size_t ui = idx.at(u);
    const FusionResult& one = weight_on_left ? t.cells[w][ui] : t.cells[ui][w];
    out.summands.insert(out.summands.end(), one.summands.begin(), one.summands.end());
  }
  std::sort(out.summands.begin(), out.summands.end());
  return out;
}

}  // namespace

RingCheckReport ring_checks(const FusionTable& t) {
  RingCheckReport rep;
  const auto& ws = t.weights;
  const std::size_t n = ws.size();
  std::ostringstream detail;

  rep.commutative = true;
  for (std::size_t i = 0; i < n && rep.commutative; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!(t.cells[i][k] == t.cells[k][i])) {
        rep.commutative = false;
        detail << "commutativity fails at (" << ws[i].m << "," << ws[i].s << ")x("
               << ws[k].m << "," << ws[k].s << "); ";
        break;
      }

  // The vacuum (1,0) is first in enumeration order.
  rep.vacuum_unit = n > 0 && ws[0].m == 1 && ws[0].s == 0;
  for (std::size_t k = 0; rep.vacuum_unit && k < n; ++k) {
    const FusionResult expect{{ws[k]}};
    if (!(t.cells[0][k] == expect) || !(t.cells[k][0] == expect)) {
      rep.vacuum_unit = false;
      detail << "vacuum unit fails at (" << ws[k].m << "," << ws[k].s << "); ";
    }
  }

  rep.closure = true;
  for (std::size_t i = 0; i < n && rep.closure; ++i)
    for (std::size_t k = 0; k < n && rep.closure; ++k) {
      const long lo = std::max(0L, ws[i].m + ws[k].m - t.pair.p);
      const long hi = std::min(ws[i].m - 1, ws[k].m - 1);
      for (std::size_t idx = 0; idx < t.cells[i][k].summands.size(); ++idx) {
        // Re-derive the window index from the summand: m = m1+m2-1-2n.
        const auto& u = t.cells[i][k].summands[idx];
        const long two_n = ws[i].m + ws[k].m - 1 - u.m;
        const bool ok = two_n % 2 == 0 && two_n / 2 >= lo && two_n / 2 <= hi &&
                        u.s == ws[i].s + ws[k].s && u.m >= 1 && u.m <= t.pair.p - 1 &&
                        u.s <= t.pair.q - 1;
        if (!ok) {
          rep.closure = false;
          detail << "closure fails at (" << ws[i].m << "," << ws[i].s << ")x(" << ws[k].m
                 << "," << ws[k].s << ") summand (" << u.m << "," << u.s << "); ";
          break;
        }
      }
    }

  std::map<AdmissibleWeight, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx.emplace(ws[i], i);
  rep.associative = true;
  rep.associative_asserted = t.pair.q == 1;
  for (std::size_t i = 0; i < n && rep.associative; ++i)
    for (std::size_t k = 0; k < n && rep.associative; ++k)
      for (std::size_t r = 0; r < n; ++r) {
        const FusionResult left = fuse_into(t, idx, r, t.cells[i][k], false);
        const FusionResult right = fuse_into(t, idx, i, t.cells[k][r], true);
        if (!(left == right)) {
          rep.associative = false;
          detail << "associativity fails at (" << ws[i].m << "," << ws[i].s << ")x("
                 << ws[k].m << "," << ws[k].s << ")x(" << ws[r].m << "," << ws[r].s
                 << "); ";
          break;
        }
      }

  rep.detail = detail.str();
  return rep;
}

}  // namespace osp12
