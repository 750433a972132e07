#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osp12/poly.hpp"
#include "osp12/rational.hpp"

namespace osp12 {

/// An admissible level datum: l + 3/2 = p/(2q) with p >= 2, p = q (mod 2)
/// and gcd((p-q)/2, q) = 1.
struct AdmissiblePair {
  long p = 0;
  long q = 0;

  /// Shifted level l = p/(2q).
  Rational shifted_level() const { return Rational(p, 2 * q); }
  /// Level l = p/(2q) - 3/2.
  Rational level() const { return shifted_level() - Rational(3, 2); }

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// Admissible weight j = (m-1)/2 - l*s on the (m, s) grid of a pair.
struct AdmissibleWeight {
  long m = 0;
  long s = 0;

  Rational value(const AdmissiblePair& pair) const {
    return Rational(m - 1, 2) - Rational(s) * pair.shifted_level();
  }
  friend bool operator==(const AdmissibleWeight&, const AdmissibleWeight&) = default;
  friend auto operator<=>(const AdmissibleWeight& a, const AdmissibleWeight& b) {
    // Lexicographic in (s, m): matches the enumeration order.
    if (a.s != b.s) return a.s <=> b.s;
    return a.m <=> b.m;
  }
};

struct PairValidation {
  std::optional<AdmissiblePair> pair;
  std::vector<std::string> violations;  // empty iff pair is set
  bool ok() const { return pair.has_value(); }
};

/// Checks p >= 2 (and positivity), p = q (mod 2), gcd((p-q)/2, q) = 1,
/// reporting each violated condition distinctly.
PairValidation validate_pair(long p, long q);

/// All admissible weights of the pair, sorted lexicographically by (s, m).
std::vector<AdmissibleWeight> enumerate_weights(const AdmissiblePair& pair);

/// The unique (m, s) with value j, if j is admissible for the pair.
std::optional<AdmissibleWeight> unique_ms(const AdmissiblePair& pair, const Rational& j);

/// The vacuum polynomial
///   f(t) = prod_{i+j odd, 0<=j<=q-1, 1<=i<=p-1} (t - (i-1)/2 + j*l),
/// monic, expanded exactly.
UniPoly vacuum_polynomial(const AdmissiblePair& pair);

/// Highest weights of the irreducible ordinary modules: the integers
/// (m-1)/2 for odd m, 1 <= m <= p-1 (all lie in [0, (p-2)/2]).
std::vector<long> ordinary_weights(const AdmissiblePair& pair);

/// Integer solutions (m, s) of j = (m-1)/2 - s(l+3/2) with |s| <= s_bound,
/// m+s odd and (m>0, s>=0) or (m<0, s<0). An empty result within the bound
/// is not a proof of irreducibility; the search is explicitly bounded.
/// Precondition: level != -3/2.
std::vector<std::pair<long, long>> reducibility_witnesses(const Rational& level,
                                                          const Rational& j,
                                                          long s_bound);

/// The xi-shifted grading data of the algebra: omega_xi = omega + (xi/2)L(-1)h
/// with kappa_1 = 0 and kappa_2 = level.
struct GradingShift {
  Rational xi;
  Rational kappa1{0};
  Rational kappa2;  // = level

  GradingShift(const Rational& xi_, const Rational& level) : xi(xi_), kappa2(level) {
    if (!(Rational(0) < xi && xi < Rational(1)))
      throw std::domain_error("GradingShift: xi must satisfy 0 < xi < 1");
  }
};

/// L'(0)-weight of the generator state a(-1)|0> under L'(n) = L(n) - (xi/2)(n+1)h_n:
/// h -> 1, e -> 1-xi, f -> 1+xi, x -> 1-xi/2, y -> 1+xi/2.
/// Throws on an unknown generator name.
Rational xi_weight(char generator, const Rational& xi);

/// The central charge shift -6*xi^2*level added to the (symbolic) base charge.
Rational central_charge_shift(const Rational& xi, const Rational& level);

/// All valid pairs with p <= p_max, q <= q_max, ordered by (q, p).
std::vector<AdmissiblePair> valid_pairs_upto(long p_max, long q_max);

/// All valid pairs with p*q <= bound, ordered by (q, p).
std::vector<AdmissiblePair> valid_pairs_pq(long bound);

}  // namespace osp12
