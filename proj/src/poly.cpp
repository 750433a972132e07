#include "osp12/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace osp12 {

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  for (const auto& [d, c] : b.coeffs_) r.add(d, c);
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  for (const auto& [d, c] : b.coeffs_) r.add(d, -c);
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r;
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, -c);
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) r.add(da + db, ca * cb);
  return r;
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
  UniPoly r;
  if (c.is_zero()) return r;
  for (const auto& [d, x] : a.coeffs_) r.coeffs_.emplace(d, c * x);
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly::divmod: zero divisor");
  UniPoly q;
  UniPoly r = a;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const int d = r.degree() - db;
    const Rational c = r.leading() / lb;
    q.add(d, c);
    for (const auto& [bd, bc] : b.coeffs_) r.add(bd + d, -(c * bc));
  }
  return {q, r};
}

UniPoly UniPoly::derivative() const {
  UniPoly r;
  for (const auto& [d, c] : coeffs_)
    if (d > 0) r.set(d - 1, Rational(d) * c);
  return r;
}

Rational UniPoly::eval(const Rational& x) const {
  // Horner over the sparse support.
  Rational acc(0);
  int prev = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev >= 0) acc = acc * x.pow(static_cast<unsigned>(prev - it->first));
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc = acc * x.pow(static_cast<unsigned>(prev));
  return acc;
}

UniPoly UniPoly::make_monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * (*this);
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.make_monic();
  }
  return a.make_monic();
}

bool UniPoly::is_squarefree() const {
  if (is_zero()) return false;
  if (degree() == 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

static void append_term(std::ostringstream& os, bool& first, const Rational& c,
                        const std::string& mono) {
  Rational a = c;
  if (first) {
    if (a.sign() < 0) {
      os << "-";
      a = -a;
    }
    first = false;
  } else {
    os << (a.sign() < 0 ? " - " : " + ");
    if (a.sign() < 0) a = -a;
  }
  if (mono.empty()) {
    os << a.str();
  } else {
    if (!(a == Rational(1))) os << a.str() << "*";
    os << mono;
  }
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::string mono;
    if (it->first == 1)
      mono = var;
    else if (it->first > 1)
      mono = var + "^" + std::to_string(it->first);
    append_term(os, first, it->second, mono);
  }
  return os.str();
}

BiPoly BiPoly::from_t1(const UniPoly& p, int d2) {
  BiPoly r;
  for (const auto& [d, c] : p.coeffs()) r.set(d, d2, c);
  return r;
}

int BiPoly::degree_t2() const {
  int d = -1;
  for (const auto& [k, c] : coeffs_)
    if (k.second > d) d = k.second;
  return d;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.coeffs_) r.add(k.first, k.second, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.coeffs_) r.add(k.first, k.second, -c);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_)
      r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BiPoly operator*(const Rational& c, const BiPoly& a) {
  BiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : a.coeffs_) r.coeffs_.emplace(k, c * x);
  return r;
}

BiPoly BiPoly::d_dt2() const {
  BiPoly r;
  for (const auto& [k, c] : coeffs_)
    if (k.second > 0) r.set(k.first, k.second - 1, Rational(k.second) * c);
  return r;
}

UniPoly BiPoly::t2_stratum(int d2) const {
  UniPoly r;
  for (const auto& [k, c] : coeffs_)
    if (k.second == d2) r.set(k.first, c);
  return r;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  // Order: t2-degree, then t1-degree, both descending.
  std::map<std::pair<int, int>, Rational> by_t2;
  for (const auto& [k, c] : coeffs_) by_t2[{-k.second, -k.first}] = c;
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : by_t2) {
    const int d1 = -k.second, d2 = -k.first;
    std::string mono;
    if (d1 == 1)
      mono = "t1";
    else if (d1 > 1)
      mono = "t1^" + std::to_string(d1);
    if (d2 >= 1) {
      if (!mono.empty()) mono += "*";
      mono += d2 == 1 ? "t2" : "t2^" + std::to_string(d2);
    }
    append_term(os, first, c, mono);
  }
  return os.str();
}

}  // namespace osp12
