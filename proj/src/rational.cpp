#include "osp12/rational.hpp"

#include <ostream>

namespace osp12 {

Rational Rational::parse(const std::string& s) {
  Rational r;
  if (s.empty() || mpq_set_str(r.q_, s.c_str(), 10) != 0)
    throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
  if (mpz_sgn(mpq_denref(r.q_)) == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
  mpq_canonicalize(r.q_);
  return r;
}

static std::string mpz_str(const mpz_t z) {
  char* raw = mpz_get_str(nullptr, 10, z);
  std::string s(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, s.size() + 1);
  return s;
}

std::string Rational::str() const {
  std::string s = mpz_str(mpq_numref(q_));
  if (!is_integer()) {
    s += '/';
    s += mpz_str(mpq_denref(q_));
  }
  return s;
}

std::string Rational::num_str() const { return mpz_str(mpq_numref(q_)); }
std::string Rational::den_str() const { return mpz_str(mpq_denref(q_)); }

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  Rational base(*this);
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace osp12
