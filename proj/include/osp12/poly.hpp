#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "osp12/rational.hpp"

namespace osp12 {

/// Sparse univariate polynomial over the rationals. Zero coefficients are
/// never stored; the zero polynomial has degree -1.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(const Rational& c) { set(0, c); }

  static UniPoly monomial(int deg, const Rational& c) {
    UniPoly p;
    p.set(deg, c);
    return p;
  }
  /// t - root
  static UniPoly linear_root(const Rational& root) {
    UniPoly p;
    p.set(1, Rational(1));
    p.set(0, -root);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  Rational coeff(int deg) const {
    auto it = coeffs_.find(deg);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  Rational leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
  }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  void set(int deg, const Rational& c) {
    if (c.is_zero())
      coeffs_.erase(deg);
    else
      coeffs_[deg] = c;
  }
  void add(int deg, const Rational& c) {
    auto it = coeffs_.find(deg);
    if (it == coeffs_.end()) {
      if (!c.is_zero()) coeffs_.emplace(deg, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Exact division with remainder: a = q*b + r, deg r < deg b.
  /// Throws std::domain_error on zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  UniPoly make_monic() const;
  static UniPoly gcd(UniPoly a, UniPoly b);
  bool is_squarefree() const;

  /// Human/serialization form, descending degrees, e.g. "t^2 - 1/2*t".
  std::string str(const std::string& var = "t") const;

private:
  std::map<int, Rational> coeffs_;
};

/// Sparse bivariate polynomial in t1, t2 over the rationals.
class BiPoly {
public:
  using Key = std::pair<int, int>;  // (deg_t1, deg_t2)

  BiPoly() = default;
  explicit BiPoly(const Rational& c) { set(0, 0, c); }

  static BiPoly monomial(int d1, int d2, const Rational& c) {
    BiPoly p;
    p.set(d1, d2, c);
    return p;
  }
  /// Embeds a univariate polynomial as t1-only (times t2^d2).
  static BiPoly from_t1(const UniPoly& p, int d2 = 0);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Key, Rational>& coeffs() const { return coeffs_; }
  int degree_t2() const;

  void set(int d1, int d2, const Rational& c) {
    if (c.is_zero())
      coeffs_.erase({d1, d2});
    else
      coeffs_[{d1, d2}] = c;
  }
  void add(int d1, int d2, const Rational& c) {
    auto it = coeffs_.find({d1, d2});
    if (it == coeffs_.end()) {
      if (!c.is_zero()) coeffs_.emplace(Key{d1, d2}, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  friend BiPoly operator*(const Rational& c, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Formal partial derivative in t2.
  BiPoly d_dt2() const;

  /// The t1-polynomial multiplying t2^d2.
  UniPoly t2_stratum(int d2) const;

  std::string str() const;

private:
  std::map<Key, Rational> coeffs_;
};

}  // namespace osp12
