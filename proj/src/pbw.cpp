#include "osp12/pbw.hpp"

#include <array>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace osp12::pbw {

char gen_letter(Gen g) {
  switch (g) {
    case GF: return 'f';
    case GY: return 'y';
    case GH: return 'h';
    case GX: return 'x';
    case GE: return 'e';
  }
  return '?';
}

std::optional<Gen> gen_from_letter(char c) {
  switch (c) {
    case 'f': return GF;
    case 'y': return GY;
    case 'h': return GH;
    case 'x': return GX;
    case 'e': return GE;
  }
  return std::nullopt;
}

namespace {

struct BE {
  int c;
  Gen g;
};

// Super-bracket tables [u][v], u, v in slot order f, y, h, x, e.
// Rows follow from the primitive relations by super-antisymmetry.
constexpr std::array<std::array<BE, 5>, 5> kBracketUG = {{
    // [f, .]
    {{{0, GF}, {0, GF}, {2, GF}, {-1, GY}, {-1, GH}}},
    // [y, .]
    {{{0, GF}, {-2, GF}, {1, GY}, {1, GH}, {1, GX}}},
    // [h, .]
    {{{-2, GF}, {-1, GY}, {0, GF}, {1, GX}, {2, GE}}},
    // [x, .]
    {{{1, GY}, {1, GH}, {-1, GX}, {2, GE}, {0, GF}}},
    // [e, .]
    {{{1, GH}, {-1, GX}, {-2, GE}, {0, GF}, {0, GF}}},
}};

constexpr std::array<std::array<BE, 5>, 5> kBracketUL0 = {{
    // [Tf, .]
    {{{0, GF}, {0, GF}, {-2, GF}, {1, GY}, {-1, GH}}},
    // [Ty, .]
    {{{0, GF}, {-2, GF}, {-1, GY}, {1, GH}, {1, GX}}},
    // [Th, .]
    {{{2, GF}, {1, GY}, {0, GF}, {-1, GX}, {-2, GE}}},
    // [Tx, .]
    {{{-1, GY}, {1, GH}, {1, GX}, {-2, GE}, {0, GF}}},
    // [Te, .]
    {{{1, GH}, {-1, GX}, {2, GE}, {0, GF}, {0, GF}}},
}};

}  // namespace

BracketTerm bracket(Algebra alg, Gen u, Gen v) {
  const BE& e = (alg == Algebra::UG ? kBracketUG : kBracketUL0)[u][v];
  return {e.c, e.g};
}

BracketTerm odd_square(Algebra alg, Gen u) {
  if (u == GX) return alg == Algebra::UG ? BracketTerm{1, GE} : BracketTerm{-1, GE};
  if (u == GY) return BracketTerm{-1, GF};
  throw std::invalid_argument("odd_square: even generator");
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  auto emit = [&](char l, unsigned n) {
    if (!n) return;
    if (os.tellp() > 0) os << "*";
    os << l;
    if (n > 1) os << "^" << n;
  };
  emit('f', a);
  emit('y', eps);
  emit('h', c);
  emit('x', delta);
  emit('e', b);
  return os.str();
}

Element Element::scalar(const Rational& c) {
  Element e;
  e.add_term(Monomial{}, c);
  return e;
}

Element Element::generator(Gen g) {
  Monomial m;
  switch (g) {
    case GF: m.a = 1; break;
    case GY: m.eps = 1; break;
    case GH: m.c = 1; break;
    case GX: m.delta = 1; break;
    case GE: m.b = 1; break;
  }
  return monomial(m, Rational(1));
}

Element Element::monomial(const Monomial& m, const Rational& c) {
  Element e;
  e.add_term(m, c);
  return e;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element operator+(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Element operator-(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Element Element::operator-() const {
  Element r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element operator*(const Rational& c, const Element& a) {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a.terms_) r.terms_.emplace(m, c * x);
  return r;
}

std::optional<int> Element::homogeneous_parity() const {
  if (terms_.empty()) return std::nullopt;
  const int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return std::nullopt;
  return p;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
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
    if (m.is_one())
      os << a.str();
    else if (a == Rational(1))
      os << m.str();
    else
      os << a.str() << "*" << m.str();
  }
  return os.str();
}

namespace {

using Factor = std::pair<Gen, unsigned>;
using Word = std::vector<Factor>;

// Appends g^n, collapsing odd squares (x^2 -> kappa*e stays left of e^b,
// y^2 -> kappa*f stays right of f^a) and merging with an equal trailing gen.
void push_factor(Word& w, Gen g, unsigned n, Algebra alg, Rational& coeff) {
  if (n == 0) return;
  auto raw_push = [&](Gen gg, unsigned nn) {
    if (!nn) return;
    if (!w.empty() && w.back().first == gg && !gen_is_odd(gg)) {
      w.back().second += nn;
    } else {
      w.emplace_back(gg, nn);
    }
  };
  if (!gen_is_odd(g)) {
    raw_push(g, n);
    return;
  }
  const unsigned pairs = n / 2;
  const unsigned rem = n & 1u;
  if (pairs) {
    const BracketTerm sq = odd_square(alg, g);
    if (sq.coeff < 0 && (pairs & 1u)) coeff = -coeff;
    if (g == GX) {
      raw_push(GX, rem);
      raw_push(sq.gen, pairs);  // x commutes with e
      return;
    }
    raw_push(sq.gen, pairs);  // f commutes with y
    raw_push(GY, rem);
    return;
  }
  raw_push(g, rem);
}

Monomial word_to_monomial(const Word& w) {
  Monomial m;
  for (const auto& [g, n] : w) {
    switch (g) {
      case GF: m.a = n; break;
      case GY: m.eps = static_cast<std::uint8_t>(n); break;
      case GH: m.c = n; break;
      case GX: m.delta = static_cast<std::uint8_t>(n); break;
      case GE: m.b = n; break;
    }
  }
  return m;
}

// Straightening worklist. Each rewrite either shortens the word (bracket
// branch) or lowers the inversion count (swap branch), so it terminates.
void normalize_into(Element& out, Rational coeff, Word w, Algebra alg) {
  std::vector<std::pair<Rational, Word>> stack;
  stack.emplace_back(std::move(coeff), std::move(w));
  while (!stack.empty()) {
    auto [cf, wd] = std::move(stack.back());
    stack.pop_back();
    if (cf.is_zero()) continue;

  rescan:
    bool dirty = false;
    for (std::size_t i = 0; i + 1 < wd.size(); ++i) {
      const auto [u, ju] = wd[i];
      const auto [v, jv] = wd[i + 1];
      if (u == v) {
        // Merge; odd generators collapse through the anticommutator.
        Word nw(wd.begin(), wd.begin() + i);
        Rational nc = cf;
        push_factor(nw, u, ju + jv, alg, nc);
        for (std::size_t k = i + 2; k < wd.size(); ++k)
          push_factor(nw, wd[k].first, wd[k].second, alg, nc);
        cf = std::move(nc);
        wd = std::move(nw);
        dirty = true;
        break;
      }
      if (u > v) {
        // u^{ju} v = s v u (peeling one u) + [u,v] stitched in place.
        const bool both_odd = gen_is_odd(u) && gen_is_odd(v);
        const BracketTerm br = bracket(alg, u, v);
        if (br.coeff != 0) {
          Word bw(wd.begin(), wd.begin() + i);
          Rational bc = cf * Rational(br.coeff);
          push_factor(bw, u, ju - 1, alg, bc);
          push_factor(bw, br.gen, 1, alg, bc);
          push_factor(bw, v, jv - 1, alg, bc);
          for (std::size_t k = i + 2; k < wd.size(); ++k)
            push_factor(bw, wd[k].first, wd[k].second, alg, bc);
          stack.emplace_back(std::move(bc), std::move(bw));
        }
        Word sw(wd.begin(), wd.begin() + i);
        Rational sc = both_odd ? -cf : cf;
        push_factor(sw, u, ju - 1, alg, sc);
        push_factor(sw, v, 1, alg, sc);
        push_factor(sw, u, 1, alg, sc);
        push_factor(sw, v, jv - 1, alg, sc);
        for (std::size_t k = i + 2; k < wd.size(); ++k)
          push_factor(sw, wd[k].first, wd[k].second, alg, sc);
        cf = std::move(sc);
        wd = std::move(sw);
        dirty = true;
        break;
      }
    }
    if (dirty) goto rescan;
    out.add_term(word_to_monomial(wd), cf);
  }
}

Word monomial_word(const Monomial& m) {
  Word w;
  if (m.a) w.emplace_back(GF, m.a);
  if (m.eps) w.emplace_back(GY, m.eps);
  if (m.c) w.emplace_back(GH, m.c);
  if (m.delta) w.emplace_back(GX, m.delta);
  if (m.b) w.emplace_back(GE, m.b);
  return w;
}

}  // namespace

namespace {

// One generator on the right of a normal element. Only a single misplaced
// letter ever enters the straightener, which keeps the worklist polynomial;
// like terms merge in the result map after every letter.
Element mul_by_gen(const Element& x, Gen g, Algebra alg) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Rational cf = c;
    Word w = monomial_word(m);
    push_factor(w, g, 1, alg, cf);
    normalize_into(out, std::move(cf), std::move(w), alg);
  }
  return out;
}

}  // namespace

Element nf_mul(const Element& x, const Element& y, Algebra alg) {
  Element out;
  for (const auto& [my, cy] : y.terms()) {
    Element cur = cy * x;
    for (const auto& [g, n] : monomial_word(my))
      for (unsigned k = 0; k < n && !cur.is_zero(); ++k) cur = mul_by_gen(cur, g, alg);
    out = out + cur;
  }
  return out;
}

Element word(const std::vector<std::pair<Gen, unsigned>>& factors, Algebra alg) {
  Rational cf(1);
  Word w;
  for (const auto& [g, n] : factors) push_factor(w, g, n, alg, cf);
  Element out;
  normalize_into(out, std::move(cf), std::move(w), alg);
  return out;
}

Element gen_pow(Gen g, unsigned n, Algebra alg) { return word({{g, n}}, alg); }

Element pq(const Rational& alpha, PQKind kind, Algebra alg) {
  const Element prod = kind == PQKind::P ? word({{GX, 1}, {GY, 1}}, alg)
                                         : word({{GY, 1}, {GX, 1}}, alg);
  Rational cst;
  if (alg == Algebra::UG)
    cst = kind == PQKind::P ? alpha : -alpha;  // P = xy + a, Q = yx - a
  else
    cst = kind == PQKind::P ? -alpha : alpha;  // P1 = TxTy - a, Q1 = TyTx + a
  return prod + Element::scalar(cst);
}

Element sigma(const Element& v, Algebra alg) {
  Element out;
  for (const auto& [m, c] : v.terms()) {
    const std::uint64_t letters = m.degree();
    const int odd_letters = m.eps + m.delta;
    Rational cf = c;
    if (letters & 1u) cf = -cf;           // sigma(a) = -a on each letter
    if (odd_letters == 2) cf = -cf;       // super-sign of the reversal
    Element cur = Element::scalar(cf);
    const Word reversed = {{GE, m.b}, {GX, m.delta}, {GH, m.c}, {GY, m.eps}, {GF, m.a}};
    for (const auto& [g, n] : reversed)
      for (unsigned k = 0; k < n && !cur.is_zero(); ++k) cur = mul_by_gen(cur, g, alg);
    out = out + cur;
  }
  return out;
}

// ---------------------------------------------------------------------------

Rational MFFWord::depth() const {
  Rational d(0);
  for (const auto& f : factors)
    if (f.kind == MFFFactor::EPow) d += f.exponent;
  return d;
}

Rational MFFWord::h_drop() const {
  Rational d(0);
  for (const auto& f : factors)
    d += f.kind == MFFFactor::YPow ? f.exponent : Rational(-2) * f.exponent;
  return d;
}

std::string MFFWord::str() const {
  std::ostringstream os;
  bool nonzero = false;
  for (const auto& f : factors) {
    if (f.exponent.is_zero()) continue;
    nonzero = true;
    os << (f.kind == MFFFactor::YPow ? "y(0)^" : "e(-1)^") << f.exponent.str() << " ";
  }
  if (!nonzero) return "1";
  std::string s = os.str();
  s.pop_back();
  return s;
}

MFFWord mff_word(const AdmissiblePair& pair, long m, long s, MFFKind which) {
  const Rational l = pair.shifted_level();
  MFFWord w;
  w.which = which;
  w.m = m;
  w.s = s;
  if (which == MFFKind::F1) {
    if (s < 0) throw std::invalid_argument("mff_word: F1 needs s >= 0");
    for (long t = 0; t <= 2 * s; ++t) {
      const Rational k(s - t);
      if (t % 2 == 0)
        w.factors.push_back({MFFFactor::YPow, Rational(m) + Rational(2) * l * k});
      else
        w.factors.push_back({MFFFactor::EPow, Rational(m, 2) + l * k});
    }
  } else {
    const long M = pair.p - m, S = pair.q - s;
    if (S < 1) throw std::invalid_argument("mff_word: F2 needs s <= q-1");
    for (long t = 0; t <= 2 * (S - 1); ++t) {
      const Rational k(S - 1 - t);
      if (t % 2 == 0)
        w.factors.push_back({MFFFactor::EPow, Rational(M, 2) + l * k});
      else
        w.factors.push_back({MFFFactor::YPow, Rational(M) + Rational(2) * l * k});
    }
  }
  w.integer_instance = true;
  w.faithful = true;
  for (const auto& f : w.factors) {
    if (!f.exponent.is_integer() || f.exponent.sign() < 0) {
      w.integer_instance = false;
      w.faithful = false;
      break;
    }
    if (f.kind == MFFFactor::YPow && f.exponent.to_long() % 2 == 0) w.faithful = false;
  }
  return w;
}

Element mff_expand(const MFFWord& w, Target target) {
  if (!w.integer_instance)
    throw std::domain_error("mff_expand: fractional instance is not expandable");
  const Algebra alg = target == Target::Pi ? Algebra::UG : Algebra::UL0;
  Element prod = Element::one();
  for (const auto& f : w.factors) {
    const Gen g = f.kind == MFFFactor::YPow ? GY : GE;
    prod = nf_mul(prod, gen_pow(g, static_cast<unsigned>(f.exponent.to_long()), alg), alg);
  }
  return prod;
}

int theta_sign(long m, long s) {
  long exp = 0;
  if (m % 2 == 0) exp += m / 2;
  if (s % 2 == 0) exp += s / 2;
  return (exp % 2 == 0) ? 1 : -1;
}

std::string PQWord::str() const {
  std::ostringstream os;
  if (theta < 0) os << "-";
  for (const auto& [k, a] : factors)
    os << (k == PQKind::P ? "P(" : "Q(") << a.str() << ")";
  os << gen_letter(tail_gen);
  if (tail_exp != 1) os << "^" << tail_exp;
  return os.str();
}

PQWord closed_form_projection(const AdmissiblePair& pair, long m, long s,
                              MFFKind which, Target target) {
  const Rational l = pair.shifted_level();
  PQWord w;
  if (which == MFFKind::F1) {
    for (long j = 1; j <= s; ++j)
      for (long i = 1; i <= m; ++i) {
        if ((i + j) % 2 == 0)
          w.factors.emplace_back(PQKind::Q, Rational(-(i - 1), 2) - Rational(j) * l);
        else
          w.factors.emplace_back(PQKind::P, Rational(i, 2) + Rational(j) * l);
      }
    w.tail_gen = GY;
    w.tail_exp = m;
    w.theta = target == Target::Pi1 ? theta_sign(m, s) : 1;
  } else {
    const long M = pair.p - m, S = pair.q - s;
    for (long j = 1; j <= S - 1; ++j)
      for (long i = 1; i <= M; ++i) {
        if ((i + j) % 2 == 0)
          w.factors.emplace_back(PQKind::Q, Rational(i, 2) + Rational(j) * l);
        else
          w.factors.emplace_back(PQKind::P, Rational(-(i - 1), 2) - Rational(j) * l);
      }
    w.tail_gen = GX;
    w.tail_exp = M;
    w.theta = target == Target::Pi1 ? theta_sign(M, S) : 1;
  }
  return w;
}

Element pq_expand(const PQWord& w, Algebra alg) {
  Element prod = Element::one();
  for (const auto& [k, a] : w.factors) prod = nf_mul(prod, pq(a, k, alg), alg);
  prod = nf_mul(prod, gen_pow(w.tail_gen, static_cast<unsigned>(w.tail_exp), alg), alg);
  if (w.theta < 0) prod = -prod;
  return prod;
}

// ---------------------------------------------------------------------------

void CheckReport::add(CheckLine line) {
  if (line.skipped)
    ++skipped;
  else if (line.pass)
    ++passed;
  else
    ++failed;
  lines.push_back(std::move(line));
}

namespace {

CheckLine compare_line(std::string name, const Element& lhs, const Element& rhs) {
  CheckLine line;
  line.name = std::move(name);
  line.pass = lhs == rhs;
  if (!line.pass) line.detail = "lhs = " + lhs.str() + " ; rhs = " + rhs.str();
  return line;
}

}  // namespace

CheckReport verify_pq_identities(Algebra alg, long gamma_max,
                                 const std::vector<Rational>& grid) {
  CheckReport rep;
  const bool l0 = alg == Algebra::UL0;
  const std::string Ps = l0 ? "P1" : "P";
  const std::string Qs = l0 ? "Q1" : "Q";
  const std::string tag = l0 ? " [U(L0)]" : " [U(g)]";
  auto P = [&](const Rational& a) { return pq(a, PQKind::P, alg); };
  auto Q = [&](const Rational& a) { return pq(a, PQKind::Q, alg); };
  auto mul = [&](const Element& a, const Element& b) { return nf_mul(a, b, alg); };
  auto gp = [&](Gen g, long n) { return gen_pow(g, static_cast<unsigned>(n), alg); };

  // Commutation set over the full grid square.
  {
    std::size_t n = 0;
    CheckLine fail;
    bool bad = false;
    for (const auto& a : grid)
      for (const auto& b : grid) {
        struct Case {
          Element l, r;
          const char* nm;
        } cases[] = {
            {mul(P(a), P(b)), mul(P(b), P(a)), "P,P"},
            {mul(P(a), Q(b)), mul(Q(b), P(a)), "P,Q"},
            {mul(Q(a), Q(b)), mul(Q(b), Q(a)), "Q,Q"},
        };
        for (auto& cs : cases) {
          ++n;
          if (!bad && !(cs.l == cs.r)) {
            bad = true;
            fail = compare_line("[" + Ps + "(" + a.str() + ")," + Qs + "(" + b.str() +
                                    ")] commutation (" + cs.nm + ")" + tag,
                                cs.l, cs.r);
          }
        }
      }
    CheckLine line;
    line.name = "[" + Ps + "," + Ps + "]=[" + Ps + "," + Qs + "]=[" + Qs + "," + Qs +
                "]=0" + tag + " (" + std::to_string(n) + " instances)";
    line.pass = !bad;
    if (bad) line.detail = fail.name + ": " + fail.detail;
    rep.add(std::move(line));
  }

  // Shift identities through powers of e and f.
  struct Shift {
    Gen g;
    PQKind in, out;
    int arg_shift;  // argument of the out factor: alpha + arg_shift*gamma
    std::string name;
  };
  const std::string es = l0 ? "Te" : "e";
  const std::string fs = l0 ? "Tf" : "f";
  const Shift shifts[] = {
      {GE, PQKind::P, PQKind::P, -1, es + "^g " + Ps + "(a) = " + Ps + "(a-g) " + es + "^g"},
      {GE, PQKind::Q, PQKind::Q, +1, es + "^g " + Qs + "(a) = " + Qs + "(a+g) " + es + "^g"},
      {GF, PQKind::P, PQKind::P, +1, fs + "^g " + Ps + "(a) = " + Ps + "(a+g) " + fs + "^g"},
      {GF, PQKind::Q, PQKind::Q, -1, fs + "^g " + Qs + "(a) = " + Qs + "(a-g) " + fs + "^g"},
  };
  for (const auto& sh : shifts) {
    std::size_t n = 0;
    CheckLine fail;
    bool bad = false;
    for (long g = 0; g <= gamma_max; ++g)
      for (const auto& a : grid) {
        const Element lhs = mul(gp(sh.g, g), pq(a, sh.in, alg));
        const Element rhs = mul(pq(a + Rational(sh.arg_shift) * Rational(g), sh.out, alg),
                                gp(sh.g, g));
        ++n;
        if (!bad && !(lhs == rhs)) {
          bad = true;
          fail = compare_line(sh.name + " @ g=" + std::to_string(g) + ", a=" + a.str(),
                              lhs, rhs);
        }
      }
    CheckLine line;
    line.name = sh.name + tag + " (" + std::to_string(n) + " instances)";
    line.pass = !bad;
    if (bad) line.detail = fail.name + ": " + fail.detail;
    rep.add(std::move(line));
  }

  // Swap identities through a single x or y.
  struct Swap {
    Gen g;
    PQKind in, out;
    int arg_scale;  // out argument = arg_base + arg_scale * alpha
    Rational arg_base;
    std::string name;
  };
  const std::string xs = l0 ? "Tx" : "x";
  const std::string ys = l0 ? "Ty" : "y";
  const Swap swaps[] = {
      {GX, PQKind::P, PQKind::Q, -1, Rational(1), xs + " " + Ps + "(a) = " + Qs + "(1-a) " + xs},
      {GX, PQKind::Q, PQKind::P, -1, Rational(0), xs + " " + Qs + "(a) = " + Ps + "(-a) " + xs},
      {GY, PQKind::P, PQKind::Q, -1, Rational(0), ys + " " + Ps + "(a) = " + Qs + "(-a) " + ys},
      {GY, PQKind::Q, PQKind::P, -1, Rational(1), ys + " " + Qs + "(a) = " + Ps + "(1-a) " + ys},
  };
  for (const auto& sw : swaps) {
    std::size_t n = 0;
    CheckLine fail;
    bool bad = false;
    for (const auto& a : grid) {
      const Element lhs = mul(Element::generator(sw.g), pq(a, sw.in, alg));
      const Element rhs =
          mul(pq(sw.arg_base + Rational(sw.arg_scale) * a, sw.out, alg),
              Element::generator(sw.g));
      ++n;
      if (!bad && !(lhs == rhs)) {
        bad = true;
        fail = compare_line(sw.name + " @ a=" + a.str(), lhs, rhs);
      }
    }
    CheckLine line;
    line.name = sw.name + tag + " (" + std::to_string(n) + " instances)";
    line.pass = !bad;
    if (bad) line.detail = fail.name + ": " + fail.detail;
    rep.add(std::move(line));
  }

  // Word identities. The U(g) and U(L0) lists differ by signs on the two
  // gamma >= 1 forms.
  for (long form = 0; form < 4; ++form) {
    std::size_t n = 0;
    CheckLine fail;
    bool bad = false;
    std::string name;
    for (long g = (form == 0 || form == 2) ? 1 : 0; g <= gamma_max; ++g) {
      Element lhs, rhs;
      switch (form) {
        case 0:  // e^g y = Q(g) x e^{g-1}   /  Te^g Ty = -Q1(g) Tx Te^{g-1}
          name = es + "^g " + ys + " = " + std::string(l0 ? "-" : "") + Qs + "(g) " + xs +
                 " " + es + "^(g-1)";
          lhs = mul(gp(GE, g), Element::generator(GY));
          rhs = mul(mul(Q(Rational(g)), Element::generator(GX)), gp(GE, g - 1));
          if (l0) rhs = -rhs;
          break;
        case 1:  // x e^g y = P(-g) e^g
          name = xs + " " + es + "^g " + ys + " = " + Ps + "(-g) " + es + "^g";
          lhs = mul(mul(Element::generator(GX), gp(GE, g)), Element::generator(GY));
          rhs = mul(P(Rational(-g)), gp(GE, g));
          break;
        case 2:  // f^g x = -P(g) y f^{g-1}  (both algebras carry the minus)
          name = fs + "^g " + xs + " = -" + Ps + "(g) " + ys + " " + fs + "^(g-1)";
          lhs = mul(gp(GF, g), Element::generator(GX));
          rhs = -mul(mul(P(Rational(g)), Element::generator(GY)), gp(GF, g - 1));
          break;
        case 3:  // y f^g x = Q(-g) f^g
          name = ys + " " + fs + "^g " + xs + " = " + Qs + "(-g) " + fs + "^g";
          lhs = mul(mul(Element::generator(GY), gp(GF, g)), Element::generator(GX));
          rhs = mul(Q(Rational(-g)), gp(GF, g));
          break;
      }
      ++n;
      if (!bad && !(lhs == rhs)) {
        bad = true;
        fail = compare_line(name + " @ g=" + std::to_string(g), lhs, rhs);
      }
    }
    CheckLine line;
    line.name = name + tag + " (" + std::to_string(n) + " instances)";
    line.pass = !bad;
    if (bad) line.detail = fail.name + ": " + fail.detail;
    rep.add(std::move(line));
  }
  return rep;
}

CheckLine xy_power_factorization(long a) {
  const Algebra alg = Algebra::UG;
  Element lhs = nf_mul(gen_pow(GX, static_cast<unsigned>(a), alg),
                       gen_pow(GY, static_cast<unsigned>(a), alg), alg);
  Element rhs = Element::one();
  std::ostringstream rhs_name;
  for (long i = 1; i <= a; i += 2) {
    rhs = nf_mul(rhs, pq(Rational(-(i - 1), 2), PQKind::P, alg), alg);
    rhs_name << "P(" << Rational(-(i - 1), 2).str() << ")";
  }
  for (long i = 2; i <= a; i += 2) {
    rhs = nf_mul(rhs, pq(Rational(i, 2), PQKind::Q, alg), alg);
    rhs_name << "Q(" << Rational(i, 2).str() << ")";
  }
  CheckLine line = compare_line(
      "x^" + std::to_string(a) + " y^" + std::to_string(a) + " = " + rhs_name.str(), lhs,
      rhs);
  return line;
}

CheckLine verify_projection(const AdmissiblePair& pair, long m, long s, MFFKind which,
                            Target target) {
  const MFFWord w = mff_word(pair, m, s, which);
  std::ostringstream name;
  name << "(p,q)=(" << pair.p << "," << pair.q << ") "
       << (which == MFFKind::F1 ? "F1(" : "F2(") << m << "," << s << ") "
       << (target == Target::Pi ? "pi" : "pi1");
  if (!w.integer_instance) {
    CheckLine line;
    line.name = name.str();
    line.skipped = true;
    line.detail = "fractional - out of scope (" + w.str() + ")";
    return line;
  }
  const Algebra alg = target == Target::Pi ? Algebra::UG : Algebra::UL0;
  const Element lhs = mff_expand(w, target);
  const PQWord cf = closed_form_projection(pair, m, s, which, target);
  const Element rhs = pq_expand(cf, alg);
  CheckLine line = compare_line(name.str() + ": nf(" + w.str() + ") = " + cf.str(), lhs, rhs);
  return line;
}

}  // namespace osp12::pbw
