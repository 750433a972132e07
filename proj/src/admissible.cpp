#include "osp12/admissible.hpp"

#include <numeric>

namespace osp12 {

PairValidation validate_pair(long p, long q) {
  PairValidation v;
  if (p < 2) v.violations.push_back("p must satisfy p >= 2");
  if (q < 1) v.violations.push_back("q must be a positive integer");
  if (q >= 1 && p >= 1 && ((p - q) % 2) != 0)
    v.violations.push_back("parity condition failed: p and q must have equal parity");
  if (v.violations.empty()) {
    const long g = std::gcd(std::abs((p - q) / 2), q);
    if (g != 1)
      v.violations.push_back("gcd condition failed: gcd((p-q)/2, q) = " +
                             std::to_string(g) + " != 1");
  }
  if (v.violations.empty()) v.pair = AdmissiblePair{p, q};
  return v;
}

std::vector<AdmissibleWeight> enumerate_weights(const AdmissiblePair& pair) {
  std::vector<AdmissibleWeight> ws;
  for (long s = 0; s <= pair.q - 1; ++s)
    for (long m = 1; m <= pair.p - 1; ++m)
      if ((m + s) % 2 == 1) ws.push_back({m, s});
  return ws;
}

std::optional<AdmissibleWeight> unique_ms(const AdmissiblePair& pair, const Rational& j) {
  // Invert j = (m-1)/2 - l*s over s; m is then forced.
  const Rational l = pair.shifted_level();
  for (long s = 0; s <= pair.q - 1; ++s) {
    const Rational m_val = Rational(2) * (j + Rational(s) * l) + Rational(1);
    if (!m_val.is_integer()) continue;
    const long m = m_val.to_long();
    if (m >= 1 && m <= pair.p - 1 && (m + s) % 2 == 1) return AdmissibleWeight{m, s};
  }
  return std::nullopt;
}

UniPoly vacuum_polynomial(const AdmissiblePair& pair) {
  const Rational l = pair.shifted_level();
  UniPoly f(Rational(1));
  for (long j = 0; j <= pair.q - 1; ++j)
    for (long i = 1; i <= pair.p - 1; ++i)
      if ((i + j) % 2 == 1)
        f = f * UniPoly::linear_root(Rational(i - 1, 2) - Rational(j) * l);
  return f;
}

std::vector<long> ordinary_weights(const AdmissiblePair& pair) {
  std::vector<long> js;
  for (long m = 1; m <= pair.p - 1; m += 2) js.push_back((m - 1) / 2);
  return js;
}

std::vector<std::pair<long, long>> reducibility_witnesses(const Rational& level,
                                                          const Rational& j, long s_bound) {
  if (level == Rational(-3, 2))
    throw std::domain_error("reducibility_witnesses: level -3/2 excluded");
  const Rational l = level + Rational(3, 2);
  std::vector<std::pair<long, long>> out;
  for (long s = -s_bound; s <= s_bound; ++s) {
    const Rational m_val = Rational(2) * (j + Rational(s) * l) + Rational(1);
    if (!m_val.is_integer()) continue;
    const long m = m_val.to_long();
    if ((m + s) % 2 == 0) continue;
    if ((m > 0 && s >= 0) || (m < 0 && s < 0)) out.emplace_back(m, s);
  }
  return out;
}

Rational xi_weight(char generator, const Rational& xi) {
  if (!(Rational(0) < xi && xi < Rational(1)))
    throw std::domain_error("xi_weight: xi must satisfy 0 < xi < 1");
  switch (generator) {
    case 'h': return Rational(1);
    case 'e': return Rational(1) - xi;
    case 'f': return Rational(1) + xi;
    case 'x': return Rational(1) - xi / Rational(2);
    case 'y': return Rational(1) + xi / Rational(2);
    default: throw std::invalid_argument("xi_weight: unknown generator");
  }
}

Rational central_charge_shift(const Rational& xi, const Rational& level) {
  if (!(Rational(0) < xi && xi < Rational(1)))
    throw std::domain_error("central_charge_shift: xi must satisfy 0 < xi < 1");
  return Rational(-6) * xi * xi * level;
}

std::vector<AdmissiblePair> valid_pairs_upto(long p_max, long q_max) {
  std::vector<AdmissiblePair> out;
  for (long q = 1; q <= q_max; ++q)
    for (long p = 2; p <= p_max; ++p)
      if (validate_pair(p, q).ok()) out.push_back({p, q});
  return out;
}

std::vector<AdmissiblePair> valid_pairs_pq(long bound) {
  std::vector<AdmissiblePair> out;
  for (long q = 1; q <= bound; ++q)
    for (long p = 2; p * q <= bound; ++p)
      if (validate_pair(p, q).ok()) out.push_back({p, q});
  return out;
}

}  // namespace osp12
