#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace osp12 {

/// Exact arbitrary-precision rational number. Always stored reduced with a
/// positive denominator, so equality and hashing are structural.
class Rational {
public:
  Rational() { mpq_init(q_); }
  Rational(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {  // GMP takes the denominator unsigned
      num = -num;
      den = -den;
    }
    mpq_init(q_);
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
  }
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "num" or "num/den"; throws std::invalid_argument on junk.
  static Rational parse(const std::string& s);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  /// Value as long; precondition: integer and in range.
  long to_long() const {
    if (!is_integer() || !mpz_fits_slong_p(mpq_numref(q_)))
      throw std::domain_error("Rational: not a machine integer");
    return mpz_get_si(mpq_numref(q_));
  }

  /// "num/den", with "/den" omitted when den == 1.
  std::string str() const;
  std::string num_str() const;
  std::string den_str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational& operator+=(const Rational& b) {
    mpq_add(q_, q_, b.q_);
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    mpq_sub(q_, q_, b.q_);
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    mpq_mul(q_, q_, b.q_);
    return *this;
  }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational pow(unsigned e) const;

private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace osp12
