#pragma once

#include <optional>
#include <vector>

#include "osp12/admissible.hpp"
#include "osp12/poly.hpp"

namespace osp12 {

/// Signals a computation that contradicts a theorem the artifact checks
/// (closed-form/oracle mismatch, inadmissible fusion eigenvalue, ...).
struct TheoremError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The Zhu algebra A(L(l,0)) = C[t]/<f(t)> with f the vacuum polynomial.
struct ZhuAlgebra {
  AdmissiblePair pair;
  UniPoly modulus;  // monic, = vacuum_polynomial(pair)
};

ZhuAlgebra zhu_build(const AdmissiblePair& pair);

/// (a*b) mod modulus; the commutative product descends to the quotient.
UniPoly zhu_mul(const ZhuAlgebra& A, const UniPoly& a, const UniPoly& b);

/// Finite presentation of the bimodule A(L(l,j)) inside C[t1,t2]:
/// the quotient by C[t1,t2]t2^m + sum_n C[t1] g_n(t1) t2^n with
///   g_n(t1) = prod_{i+n+j' even, 0<=j'<=q-s-1, 0<=i<=p-m-1} (t1 - (i+n)/2 + j'l).
/// The universal bimodule A(M(l,j)) is the same data with no strata bound
/// and no reducers (nothing reduces).
struct BimodulePresentation {
  AdmissiblePair pair;
  Rational j;                               // highest weight parameter
  std::optional<AdmissibleWeight> weight;   // nullopt for the universal case
  std::vector<UniPoly> reducers;            // size m; empty for universal

  bool universal() const { return !weight.has_value(); }
  long strata() const { return static_cast<long>(reducers.size()); }
};

BimodulePresentation bimodule_build(const AdmissiblePair& pair, const AdmissibleWeight& w);
BimodulePresentation universal_bimodule(const AdmissiblePair& pair, const Rational& j);

/// Canonical representative: drop t2-degrees >= m, then reduce each stratum's
/// t1-part mod g_n. Idempotent.
BiPoly bimodule_nf(const BimodulePresentation& P, const BiPoly& v);

/// Left action of the Zhu generator t: (t1 + j - t2 d/dt2) v, then nf.
BiPoly bimodule_left(const BimodulePresentation& P, const BiPoly& v);
/// Right action of t: t1 * v, then nf.
BiPoly bimodule_right(const BimodulePresentation& P, const BiPoly& v);

/// Actions of a full Zhu-algebra element a(t) (the generator actions extend
/// multiplicatively).
BiPoly bimodule_left_poly(const BimodulePresentation& P, const UniPoly& a, const BiPoly& v);
BiPoly bimodule_right_poly(const BimodulePresentation& P, const UniPoly& a, const BiPoly& v);

/// sum_n deg g_n. Precondition: not universal.
long bimodule_dim(const BimodulePresentation& P);

}  // namespace osp12
