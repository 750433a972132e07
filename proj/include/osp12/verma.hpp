#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "osp12/admissible.hpp"
#include "osp12/pbw.hpp"
#include "osp12/rational.hpp"

namespace osp12::verma {

struct DepthOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A loop-algebra factor a(mode) = a (x) t^mode. Basis factors have mode <= 0;
/// canonical order is modes descending (0 first), then generator slot
/// f, y, h, x, e within a mode.
struct ModeGen {
  int mode = 0;
  pbw::Gen gen = pbw::GF;

  friend auto operator<=>(const ModeGen& a, const ModeGen& b) {
    if (a.mode != b.mode) return (-a.mode) <=> (-b.mode);
    return a.gen <=> b.gen;
  }
  friend bool operator==(const ModeGen&, const ModeGen&) = default;
};

/// PBW monomial in the lowering operators, applied to the highest weight
/// vector: sorted factor list, exponents >= 1, odd generators capped at 1
/// per mode (x(-n)^2 = e(-2n), y(-n)^2 = -f(-2n)).
using Monomial = std::vector<std::pair<ModeGen, unsigned>>;

long t_degree(const Monomial& m);
long h_drop(const Monomial& m);
std::string monomial_str(const Monomial& m);

/// Vector in a (generalized) Verma module, as an exact linear combination of
/// basis monomials acting on the highest weight vector.
class Vector {
public:
  Vector() = default;
  static Vector vacuum() {
    Vector v;
    v.terms_.emplace(Monomial{}, Rational(1));
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Rational& c);

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Rational& c, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b) { return a.terms_ == b.terms_; }

  /// Max t-degree over the support (-1 for zero).
  long max_degree() const;
  std::string str() const;

private:
  std::map<Monomial, Rational> terms_;
};

struct Config {
  Rational level;
  Rational j;
  bool generalized = false;  // V(l,C): the whole of g kills the vacuum, j = 0
  unsigned depth_bound = 6;
};

/// Truncated bigraded realization of M(l,j) or V(l,C) with exact mode action.
/// The only shared state is the slice cache (a concurrent memo table).
class Module {
public:
  explicit Module(Config cfg);
  const Config& config() const { return cfg_; }

  /// Exact action of a(mode) by straightening through the PBW monomials with
  /// the affine bracket (central element acting as the level).
  /// Throws DepthOverflow when the target slice exceeds depth_bound.
  Vector act(pbw::Gen g, int mode, const Vector& v) const;

  /// All basis monomials of t-degree d and h-weight drop `drop`,
  /// deterministically ordered.
  std::vector<Monomial> slice_basis(long d, long drop) const;

  /// True iff v != 0 and e(0), x(0), f(1), y(1), h(1) all annihilate v.
  /// Those five generate N_+ as a Lie superalgebra.
  bool is_singular(const Vector& v) const;

  struct SingularVector {
    bool fractional = false;  // word has non-integer exponents; v not built
    pbw::MFFWord word;
    Vector v;
  };

  /// F_which(m,s) applied to the highest weight vector via repeated act.
  /// Precondition (checked): cfg.j = (m-1)/2 - l*s for Verma kind.
  SingularVector singular_vector(const AdmissiblePair& pair, long m, long s,
                                 pbw::MFFKind which) const;

private:
  Config cfg_;
  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<long, long>, std::vector<Monomial>> slice_cache_;
};

struct RemarkCheck {
  bool f1_vanishes = false;   // F1(1,0)1 = y(0)1 = 0 in V(l,C)
  bool f2_singular = false;   // F2(1,0)1 is singular
  bool fractional = false;    // F2(1,0) not an integer instance; nothing checked
  std::string detail;
  bool ok() const { return fractional || (f1_vanishes && f2_singular); }
};

/// Checks the vacuum-module remark: y(0)1 = 0 and F2(1,0)1 generates the
/// maximal proper submodule of V(l,C) (singularity is what is checkable).
RemarkCheck remark_maximal_check(const AdmissiblePair& pair, unsigned depth_bound = 8);

}  // namespace osp12::verma
