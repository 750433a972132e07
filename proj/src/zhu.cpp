#include "osp12/zhu.hpp"

namespace osp12 {

ZhuAlgebra zhu_build(const AdmissiblePair& pair) {
  return {pair, vacuum_polynomial(pair)};
}

UniPoly zhu_mul(const ZhuAlgebra& A, const UniPoly& a, const UniPoly& b) {
  return UniPoly::divmod(a * b, A.modulus).second;
}

BimodulePresentation bimodule_build(const AdmissiblePair& pair, const AdmissibleWeight& w) {
  const Rational l = pair.shifted_level();
  BimodulePresentation P;
  P.pair = pair;
  P.weight = w;
  P.j = w.value(pair);
  P.reducers.reserve(static_cast<std::size_t>(w.m));
  for (long n = 0; n < w.m; ++n) {
    UniPoly g(Rational(1));
    for (long jp = 0; jp <= pair.q - w.s - 1; ++jp)
      for (long i = 0; i <= pair.p - w.m - 1; ++i)
        if ((i + n + jp) % 2 == 0)
          g = g * UniPoly::linear_root(Rational(i + n, 2) - Rational(jp) * l);
    P.reducers.push_back(std::move(g));
  }
  return P;
}

BimodulePresentation universal_bimodule(const AdmissiblePair& pair, const Rational& j) {
  BimodulePresentation P;
  P.pair = pair;
  P.j = j;
  return P;
}

BiPoly bimodule_nf(const BimodulePresentation& P, const BiPoly& v) {
  if (P.universal()) return v;
  BiPoly out;
  for (long n = 0; n < P.strata(); ++n) {
    const UniPoly part = v.t2_stratum(static_cast<int>(n));
    if (part.is_zero()) continue;
    const UniPoly rem = UniPoly::divmod(part, P.reducers[static_cast<std::size_t>(n)]).second;
    out = out + BiPoly::from_t1(rem, static_cast<int>(n));
  }
  return out;
}

BiPoly bimodule_left(const BimodulePresentation& P, const BiPoly& v) {
  const BiPoly acted =
      BiPoly::monomial(1, 0, Rational(1)) * v + P.j * v - BiPoly::monomial(0, 1, Rational(1)) * v.d_dt2();
  return bimodule_nf(P, acted);
}

BiPoly bimodule_right(const BimodulePresentation& P, const BiPoly& v) {
  return bimodule_nf(P, BiPoly::monomial(1, 0, Rational(1)) * v);
}

BiPoly bimodule_left_poly(const BimodulePresentation& P, const UniPoly& a, const BiPoly& v) {
  // a(L) v where L is the generator's left action; powers of L are cached
  // stepwise up to deg a.
  BiPoly out;
  BiPoly power = bimodule_nf(P, v);
  int k = 0;
  for (const auto& [deg, coeff] : a.coeffs()) {
    while (k < deg) {
      power = bimodule_left(P, power);
      ++k;
    }
    out = out + coeff * power;
  }
  return bimodule_nf(P, out);
}

BiPoly bimodule_right_poly(const BimodulePresentation& P, const UniPoly& a, const BiPoly& v) {
  BiPoly a1;
  for (const auto& [deg, coeff] : a.coeffs()) a1.add(deg, 0, coeff);
  return bimodule_nf(P, a1 * v);
}

long bimodule_dim(const BimodulePresentation& P) {
  if (P.universal()) throw std::domain_error("bimodule_dim: universal bimodule is infinite-dimensional");
  long dim = 0;
  for (const auto& g : P.reducers) dim += g.degree();
  return dim;
}

}  // namespace osp12
