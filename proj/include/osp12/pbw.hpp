#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osp12/admissible.hpp"
#include "osp12/rational.hpp"

namespace osp12::pbw {

/// Which enveloping superalgebra the engine works in. The two share one
/// rewriting engine; only the bracket tables differ.
///   UG : U(osp(1|2)), generators {h, e, f, x, y}
///   UL0: U(L0) with L0 = N_-/B_0, generators {T_h, T_e, T_f, T_x, T_y}
enum class Algebra { UG, UL0 };

/// Generator slots in the fixed PBW normal order f^a y^eps h^c x^delta e^b.
enum Gen : int { GF = 0, GY = 1, GH = 2, GX = 3, GE = 4 };

constexpr bool gen_is_odd(Gen g) { return g == GY || g == GX; }
char gen_letter(Gen g);
std::optional<Gen> gen_from_letter(char c);

/// Super-bracket [u,v] (anticommutator on odd-odd pairs) as coeff * gen;
/// coeff = 0 means the bracket vanishes.
struct BracketTerm {
  int coeff;
  Gen gen;
};
BracketTerm bracket(Algebra alg, Gen u, Gen v);

/// Coefficient kappa in u^2 = kappa * g for an odd generator:
/// x^2 = e resp. -T_e, y^2 = -f resp. -T_f.
BracketTerm odd_square(Algebra alg, Gen u);

/// A PBW-ordered super-monomial f^a y^eps h^c x^delta e^b.
struct Monomial {
  std::uint32_t a = 0;  // f power
  std::uint32_t c = 0;  // h power
  std::uint32_t b = 0;  // e power
  std::uint8_t eps = 0;    // y in {0,1}
  std::uint8_t delta = 0;  // x in {0,1}

  friend auto operator<=>(const Monomial& l, const Monomial& r) {
    // Order by exponent tuple in slot order (a, eps, c, delta, b).
    if (l.a != r.a) return l.a <=> r.a;
    if (l.eps != r.eps) return l.eps <=> r.eps;
    if (l.c != r.c) return l.c <=> r.c;
    if (l.delta != r.delta) return l.delta <=> r.delta;
    return l.b <=> r.b;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  int parity() const { return (eps + delta) & 1; }
  std::uint64_t degree() const {
    return std::uint64_t(a) + eps + c + delta + b;
  }
  bool is_one() const { return a == 0 && eps == 0 && c == 0 && delta == 0 && b == 0; }
  std::string str() const;
};

/// Finite linear combination of PBW monomials; canonically sorted, no zero
/// coefficients, no duplicate exponent tuples. Value type, immutable in use.
class Element {
public:
  Element() = default;
  static Element zero() { return {}; }
  static Element one() { return scalar(Rational(1)); }
  static Element scalar(const Rational& c);
  static Element generator(Gen g);
  static Element monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  Element operator-() const;
  friend Element operator*(const Rational& c, const Element& a);
  friend bool operator==(const Element& a, const Element& b) {
    return a.terms_ == b.terms_;
  }

  /// Parity if all monomials agree, nullopt for mixed (or zero) elements.
  std::optional<int> homogeneous_parity() const;

  std::string str() const;

private:
  std::map<Monomial, Rational> terms_;
};

/// Product in PBW normal form: straightens with the algebra's relation table,
/// applying the super-sign on each odd-odd transposition and collapsing
/// x^2, y^2 through the anticommutators.
Element nf_mul(const Element& x, const Element& y, Algebra alg);

/// A word as a list of (generator, power) factors, normalized.
Element word(const std::vector<std::pair<Gen, unsigned>>& factors, Algebra alg);

/// Power of a single generator (odd powers collapse).
Element gen_pow(Gen g, unsigned n, Algebra alg);

enum class PQKind { P, Q };

/// P(alpha) = xy + alpha, Q(alpha) = yx - alpha in U(g);
/// P1(alpha) = TxTy - alpha, Q1(alpha) = TyTx + alpha in U(L0).
Element pq(const Rational& alpha, PQKind kind, Algebra alg);

/// The anti-automorphism with sigma(a) = -a on generators (U(g) flavor);
/// reverses factors with super-signs and renormalizes.
Element sigma(const Element& v, Algebra alg);

// ---------------------------------------------------------------------------
// MFF singular-vector words and their P/Q-product projections.

/// One factor of an MFF word: a power of y(0) (consolidated y(0)(y(0)^2)^A
/// with exponent 2A+1) or a power of e(-1).
struct MFFFactor {
  enum Kind { YPow, EPow } kind;
  Rational exponent;
};

enum class MFFKind { F1, F2 };
enum class Target { Pi, Pi1 };  // pi: modes forgotten into U(g); pi1: U(L0)

struct MFFWord {
  MFFKind which;
  long m = 0, s = 0;
  std::vector<MFFFactor> factors;
  /// True iff every consolidated exponent is a nonnegative integer, so the
  /// mode-forgetting projections can expand the word.
  bool integer_instance = false;
  /// Stricter: every y-factor exponent is odd (the underlying (y(0)^2)^A has
  /// A in N), so the word is literally an element of U(g~) and acts on Verma
  /// modules. Consolidated-only instances (even y-exponents) satisfy the
  /// projection identities but are not affine words.
  bool faithful = false;

  /// Total e(-1) exponent = t-degree of the singular vector.
  Rational depth() const;
  /// Total y exponent minus twice the total e exponent (h-weight drop).
  Rational h_drop() const;
  std::string str() const;
};

/// The alternating word F1(m,s) or F2(m,s) for the pair. (m, s) need not be
/// restricted to the admissible grid; exponents are generated exactly.
MFFWord mff_word(const AdmissiblePair& pair, long m, long s, MFFKind which);

/// Expands an integer-instance word under the projection (y(0) -> y or T_y,
/// e(-1) -> e or T_e). Precondition: word.integer_instance.
Element mff_expand(const MFFWord& w, Target target);

/// Closed P/Q-product form of the projected word, with the sign theta
/// attached only for pi1.
struct PQWord {
  std::vector<std::pair<PQKind, Rational>> factors;
  Gen tail_gen;
  long tail_exp = 0;
  int theta = 1;  // +1 or -1
  std::string str() const;
};

PQWord closed_form_projection(const AdmissiblePair& pair, long m, long s,
                              MFFKind which, Target target);

Element pq_expand(const PQWord& w, Algebra alg);

/// theta_{(m,s)} = (-1)^{(m(1+(-1)^m) + s(1+(-1)^s))/4}.
int theta_sign(long m, long s);

// ---------------------------------------------------------------------------
// Mechanical verification of the identity lemmas.

struct CheckLine {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;  // mismatch diagnostics or skip reason
};

struct CheckReport {
  std::vector<CheckLine> lines;
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool all_passed() const { return failed == 0; }
  void add(CheckLine line);
};

/// Instantiates every commutation/shift identity of the P/Q calculus for
/// integer gamma in [0, gamma_max] and alpha, beta over the grid, comparing
/// both sides in normal form.
CheckReport verify_pq_identities(Algebra alg, long gamma_max,
                                 const std::vector<Rational>& grid);

/// x^a y^a against the P/Q product with p-1 = a, by normal-form equality.
CheckLine xy_power_factorization(long a);

/// Expands the MFF word under the projection and compares with the closed
/// P/Q form. Fractional instances are reported as skipped, never passed.
CheckLine verify_projection(const AdmissiblePair& pair, long m, long s,
                            MFFKind which, Target target);

}  // namespace osp12::pbw
