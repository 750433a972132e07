#include "osp12/verify.hpp"

#include <sstream>

#include "osp12/parallel.hpp"
#include "osp12/pbw.hpp"
#include "osp12/verma.hpp"

namespace osp12 {

namespace {

VerifyLine from_check(const pbw::CheckLine& c) {
  VerifyLine l;
  l.instance = c.name;
  l.status = c.skipped ? "skip" : (c.pass ? "pass" : "fail");
  l.detail = c.detail;
  return l;
}

std::string pair_tag(const AdmissiblePair& pr) {
  return "(p,q)=(" + std::to_string(pr.p) + "," + std::to_string(pr.q) + ")";
}

}  // namespace

std::vector<Rational> pq_identity_grid() {
  return {Rational(0),      Rational(1),      Rational(-1),    Rational(1, 2),
          Rational(-1, 2),  Rational(3, 2),   Rational(-3, 2), Rational(5, 6),
          Rational(-5, 6),  Rational(11, 6)};
}

std::vector<VerifyLine> pq_suite(long gamma_max) {
  std::vector<VerifyLine> out;
  const auto grid = pq_identity_grid();
  for (const auto alg : {pbw::Algebra::UG, pbw::Algebra::UL0}) {
    const auto rep = pbw::verify_pq_identities(alg, gamma_max, grid);
    for (const auto& line : rep.lines) out.push_back(from_check(line));
  }
  return out;
}

std::vector<VerifyLine> factorization_suite(long a_max) {
  std::vector<VerifyLine> out;
  for (long a = 1; a <= a_max; ++a) out.push_back(from_check(pbw::xy_power_factorization(a)));
  return out;
}

std::vector<VerifyLine> projection_suite(long max_pq, unsigned workers) {
  const auto pairs = valid_pairs_pq(max_pq);
  struct Instance {
    AdmissiblePair pair;
    AdmissibleWeight w;
    pbw::MFFKind which;
    pbw::Target target;
  };
  std::vector<Instance> insts;
  for (const auto& pr : pairs)
    for (const auto& w : enumerate_weights(pr))
      for (const auto which : {pbw::MFFKind::F1, pbw::MFFKind::F2})
        for (const auto target : {pbw::Target::Pi, pbw::Target::Pi1})
          insts.push_back({pr, w, which, target});
  return parallel_map<VerifyLine>(insts.size(), workers, [&](std::size_t i) {
    const auto& in = insts[i];
    return from_check(pbw::verify_projection(in.pair, in.w.m, in.w.s, in.which, in.target));
  });
}

std::vector<VerifyLine> singular_suite(long max_pq, long depth, unsigned workers) {
  const auto pairs = valid_pairs_pq(max_pq);
  struct Instance {
    AdmissiblePair pair;
    AdmissibleWeight w;   // ignored for the remark check
    pbw::MFFKind which;
    bool remark = false;  // generalized-module vacuum check
  };
  std::vector<Instance> insts;
  for (const auto& pr : pairs) {
    for (const auto& w : enumerate_weights(pr))
      for (const auto which : {pbw::MFFKind::F1, pbw::MFFKind::F2})
        insts.push_back({pr, w, which, false});
    insts.push_back({pr, {}, pbw::MFFKind::F2, true});
  }
  return parallel_map<VerifyLine>(insts.size(), workers, [&](std::size_t i) {
    const auto& in = insts[i];
    VerifyLine l;
    if (in.remark) {
      l.instance = pair_tag(in.pair) + " remark: y(0)1 = 0 and F2(1,0)1 singular in V(l,C)";
      const auto word = pbw::mff_word(in.pair, 1, 0, pbw::MFFKind::F2);
      if (word.integer_instance && word.depth() > Rational(depth)) {
        l.status = "skip";
        l.detail = "t-degree " + word.depth().str() + " beyond depth bound " +
                   std::to_string(depth);
        return l;
      }
      const auto rc = verma::remark_maximal_check(in.pair, static_cast<unsigned>(depth) + 1);
      if (rc.fractional) {
        l.status = "skip";
        l.detail = rc.detail;
      } else {
        l.status = rc.ok() ? "pass" : "fail";
        if (!rc.ok()) l.detail = rc.detail;
      }
      return l;
    }
    std::ostringstream name;
    name << pair_tag(in.pair) << (in.which == pbw::MFFKind::F1 ? " F1(" : " F2(") << in.w.m
         << "," << in.w.s << ") annihilated by N+";
    l.instance = name.str();
    const auto word = pbw::mff_word(in.pair, in.w.m, in.w.s, in.which);
    if (!word.integer_instance) {
      l.status = "skip";
      l.detail = "fractional - out of scope (" + word.str() + ")";
      return l;
    }
    if (!word.faithful) {
      l.status = "skip";
      l.detail = "consolidated projection word only, not a U(g~) word (" + word.str() + ")";
      return l;
    }
    if (word.depth() > Rational(depth)) {
      l.status = "skip";
      l.detail = "t-degree " + word.depth().str() + " beyond depth bound " +
                 std::to_string(depth);
      return l;
    }
    verma::Module mod(verma::Config{in.pair.level(), in.w.value(in.pair), false,
                                    static_cast<unsigned>(depth) + 1});
    const auto sv = mod.singular_vector(in.pair, in.w.m, in.w.s, in.which);
    bool ok = !sv.v.is_zero() && mod.is_singular(sv.v);
    // Bigrading cross-check against the word's exponent sums.
    for (const auto& [mono, c] : sv.v.terms())
      if (Rational(verma::t_degree(mono)) != word.depth() ||
          Rational(verma::h_drop(mono)) != word.h_drop())
        ok = false;
    l.status = ok ? "pass" : "fail";
    if (!ok) l.detail = "vector " + sv.v.str();
    return l;
  });
}

std::vector<VerifyLine> oracle_suite(long max_pq, unsigned workers) {
  const auto pairs = valid_pairs_pq(max_pq);
  return parallel_map<VerifyLine>(pairs.size(), workers, [&](std::size_t i) {
    const auto& pr = pairs[i];
    VerifyLine l;
    const auto n = enumerate_weights(pr).size();
    l.instance = pair_tag(pr) + " fuse_closed = fuse_oracle over " + std::to_string(n) +
                 "x" + std::to_string(n) + " weight pairs";
    try {
      fusion_table(pr, 1);
      l.status = "pass";
    } catch (const TheoremError& e) {
      l.status = "fail";
      l.detail = e.what();
    }
    return l;
  });
}

}  // namespace osp12
