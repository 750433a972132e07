#include "osp12/verma.hpp"

#include <algorithm>
#include <sstream>

namespace osp12::verma {

using pbw::Gen;
using pbw::GF;
using pbw::GY;
using pbw::GH;
using pbw::GX;
using pbw::GE;

namespace {

// Invariant bilinear form: (e,f)=(f,e)=1, (h,h)=2, (x,y)=2, (y,x)=-2.
int form(Gen a, Gen b) {
  if ((a == GE && b == GF) || (a == GF && b == GE)) return 1;
  if (a == GH && b == GH) return 2;
  if (a == GX && b == GY) return 2;
  if (a == GY && b == GX) return -2;
  return 0;
}

int drop_per_unit(Gen g) {
  switch (g) {
    case GF: return 2;
    case GY: return 1;
    case GH: return 0;
    case GX: return -1;
    case GE: return -2;
  }
  return 0;
}

}  // namespace

long t_degree(const Monomial& m) {
  long d = 0;
  for (const auto& [mg, n] : m) d += static_cast<long>(n) * (-mg.mode);
  return d;
}

long h_drop(const Monomial& m) {
  long d = 0;
  for (const auto& [mg, n] : m) d += static_cast<long>(n) * drop_per_unit(mg.gen);
  return d;
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "vac";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << "*";
    os << pbw::gen_letter(m[i].first.gen) << "(" << m[i].first.mode << ")";
    if (m[i].second > 1) os << "^" << m[i].second;
  }
  return os.str();
}

void Vector::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Vector operator*(const Rational& c, const Vector& v) {
  Vector r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : v.terms_) r.terms_.emplace(m, c * x);
  return r;
}

long Vector::max_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, t_degree(m));
  return d;
}

std::string Vector::str() const {
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
    if (!(a == Rational(1))) os << a.str() << "*";
    os << monomial_str(m);
  }
  return os.str();
}

Module::Module(Config cfg) : cfg_(std::move(cfg)) {
  if (cfg_.generalized && !cfg_.j.is_zero())
    throw std::invalid_argument("Module: generalized Verma requires j = 0");
}

namespace {

struct Factor {
  ModeGen mg;
  unsigned exp;
};
using Word = std::vector<Factor>;

// Basis factors are the lowering operators that survive in the PBW basis;
// everything else eventually evaluates against the highest weight vector.
bool is_basis(const ModeGen& mg, bool generalized) {
  if (mg.mode < 0) return true;
  if (mg.mode > 0) return false;
  return !generalized && (mg.gen == GF || mg.gen == GY);
}

// Sort key: basis factors in canonical order, then evaluators.
std::tuple<int, int, int> sort_key(const ModeGen& mg, bool generalized) {
  return {is_basis(mg, generalized) ? 0 : 1, -mg.mode, static_cast<int>(mg.gen)};
}

// Appends a(mode)^n, collapsing odd squares x(m)^2 = e(2m), y(m)^2 = -f(2m)
// and merging an equal even trailing factor.
void push_factor(Word& w, ModeGen mg, unsigned n, Rational& coeff, bool generalized) {
  if (n == 0) return;
  auto raw_push = [&](ModeGen g, unsigned k) {
    if (!k) return;
    if (!w.empty() && w.back().mg == g && !pbw::gen_is_odd(g.gen)) {
      w.back().exp += k;
    } else {
      w.push_back({g, k});
    }
  };
  if (!pbw::gen_is_odd(mg.gen)) {
    raw_push(mg, n);
    return;
  }
  const unsigned pairs = n / 2, rem = n & 1u;
  if (pairs) {
    const pbw::BracketTerm sq = pbw::odd_square(pbw::Algebra::UG, mg.gen);
    if (sq.coeff < 0 && (pairs & 1u)) coeff = -coeff;
    const ModeGen sqg{2 * mg.mode, sq.gen};
    // Emit in sort order; the square commutes with the leftover odd factor.
    if (sort_key(sqg, generalized) < sort_key(mg, generalized)) {
      raw_push(sqg, pairs);
      raw_push(mg, rem);
    } else {
      raw_push(mg, rem);
      raw_push(sqg, pairs);
    }
    return;
  }
  raw_push(mg, rem);
}

}  // namespace

Vector Module::act(Gen g, int mode, const Vector& v) const {
  const bool gnl = cfg_.generalized;
  const long vdeg = v.max_degree();
  if (vdeg >= 0 && vdeg - mode > static_cast<long>(cfg_.depth_bound))
    throw DepthOverflow("act: target slice t-degree " + std::to_string(vdeg - mode) +
                        " exceeds depth bound " + std::to_string(cfg_.depth_bound));

  Vector out;
  std::vector<std::pair<Rational, Word>> stack;
  for (const auto& [mono, c] : v.terms()) {
    Word w;
    Rational cf = c;
    push_factor(w, ModeGen{mode, g}, 1, cf, gnl);
    for (const auto& [mg, n] : mono) push_factor(w, mg, n, cf, gnl);
    stack.emplace_back(std::move(cf), std::move(w));
  }

  while (!stack.empty()) {
    auto [cf, wd] = std::move(stack.back());
    stack.pop_back();
    if (cf.is_zero()) continue;

  rescan:
    // Evaluate trailing factors against the highest weight vector.
    while (!wd.empty() && !is_basis(wd.back().mg, gnl)) {
      const Factor f = wd.back();
      wd.pop_back();
      if (f.mg.mode > 0 || f.mg.gen == GE || f.mg.gen == GX) {
        cf = Rational(0);  // N_+ kills the highest weight vector
        break;
      }
      if (f.mg.gen == GH) {
        for (unsigned k = 0; k < f.exp; ++k) cf *= cfg_.j;
        if (cf.is_zero()) break;
      } else {
        cf = Rational(0);  // f(0), y(0) in the generalized module
        break;
      }
    }
    if (cf.is_zero()) continue;

    bool dirty = false;
    for (std::size_t i = 0; i + 1 < wd.size(); ++i) {
      const auto [u, ju] = wd[i];
      const auto [vv, jv] = wd[i + 1];
      if (u == vv) {
        Word nw(wd.begin(), wd.begin() + i);
        Rational nc = cf;
        push_factor(nw, u, ju + jv, nc, gnl);
        for (std::size_t k = i + 2; k < wd.size(); ++k)
          push_factor(nw, wd[k].mg, wd[k].exp, nc, gnl);
        cf = std::move(nc);
        wd = std::move(nw);
        dirty = true;
        break;
      }
      if (sort_key(u, gnl) > sort_key(vv, gnl)) {
        const bool both_odd = pbw::gen_is_odd(u.gen) && pbw::gen_is_odd(vv.gen);
        // Bracket branch: [u(mu), v(mv)] = [u,v](mu+mv) + mu d_{mu+mv,0} (u,v) level.
        const pbw::BracketTerm br = pbw::bracket(pbw::Algebra::UG, u.gen, vv.gen);
        if (br.coeff != 0) {
          Word bw(wd.begin(), wd.begin() + i);
          Rational bc = cf * Rational(br.coeff);
          push_factor(bw, u, ju - 1, bc, gnl);
          push_factor(bw, ModeGen{u.mode + vv.mode, br.gen}, 1, bc, gnl);
          push_factor(bw, vv, jv - 1, bc, gnl);
          for (std::size_t k = i + 2; k < wd.size(); ++k)
            push_factor(bw, wd[k].mg, wd[k].exp, bc, gnl);
          stack.emplace_back(std::move(bc), std::move(bw));
        }
        if (u.mode + vv.mode == 0 && form(u.gen, vv.gen) != 0) {
          Word zw(wd.begin(), wd.begin() + i);
          Rational zc = cf * Rational(u.mode) * Rational(form(u.gen, vv.gen)) * cfg_.level;
          push_factor(zw, u, ju - 1, zc, gnl);
          push_factor(zw, vv, jv - 1, zc, gnl);
          for (std::size_t k = i + 2; k < wd.size(); ++k)
            push_factor(zw, wd[k].mg, wd[k].exp, zc, gnl);
          stack.emplace_back(std::move(zc), std::move(zw));
        }
        Word sw(wd.begin(), wd.begin() + i);
        Rational sc = both_odd ? -cf : cf;
        push_factor(sw, u, ju - 1, sc, gnl);
        push_factor(sw, vv, 1, sc, gnl);
        push_factor(sw, u, 1, sc, gnl);
        push_factor(sw, vv, jv - 1, sc, gnl);
        for (std::size_t k = i + 2; k < wd.size(); ++k)
          push_factor(sw, wd[k].mg, wd[k].exp, sc, gnl);
        cf = std::move(sc);
        wd = std::move(sw);
        dirty = true;
        break;
      }
    }
    if (dirty) goto rescan;

    Monomial mono;
    mono.reserve(wd.size());
    for (const auto& f : wd) mono.emplace_back(f.mg, f.exp);
    out.add_term(mono, cf);
  }
  return out;
}

std::vector<Monomial> Module::slice_basis(long d, long drop) const {
  if (d < 0 || d > static_cast<long>(cfg_.depth_bound))
    throw DepthOverflow("slice_basis: t-degree outside depth bound");
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = slice_cache_.find({d, drop});
    if (it != slice_cache_.end()) return it->second;
  }

  // Negative-mode generator pool in canonical order.
  std::vector<ModeGen> pool;
  for (int mode = -1; mode >= -d; --mode)
    for (Gen g : {GF, GY, GH, GX, GE}) pool.push_back({mode, g});
  std::sort(pool.begin(), pool.end());

  std::vector<Monomial> out;
  Monomial current;
  auto emit = [&](long rem_drop) {
    // Solve the t-degree-0 part: f(0)^a y(0)^eps with 2a + eps = rem_drop.
    if (cfg_.generalized) {
      if (rem_drop != 0) return;
      out.push_back(current);
      return;
    }
    if (rem_drop < 0) return;
    const unsigned eps = static_cast<unsigned>(rem_drop & 1L);
    const long a = (rem_drop - eps) / 2;
    Monomial m;
    if (a > 0) m.emplace_back(ModeGen{0, GF}, static_cast<unsigned>(a));
    if (eps) m.emplace_back(ModeGen{0, GY}, 1u);
    m.insert(m.end(), current.begin(), current.end());
    out.push_back(std::move(m));
  };
  // Depth-first over the pool with exact remaining degree; h-drop settled at
  // the leaf through the mode-0 part.
  auto rec = [&](auto&& self, std::size_t idx, long rem_deg, long acc_drop) -> void {
    if (idx == pool.size()) {
      if (rem_deg == 0) emit(drop - acc_drop);
      return;
    }
    const ModeGen mg = pool[idx];
    const long unit = -mg.mode;
    const long by_degree = rem_deg / unit;
    const long max_exp = pbw::gen_is_odd(mg.gen) ? std::min<long>(1, by_degree) : by_degree;
    for (long n = 0; n <= max_exp; ++n) {
      if (n > 0) {
        if (n == 1)
          current.emplace_back(mg, 1u);
        else
          current.back().second = static_cast<unsigned>(n);
      }
      self(self, idx + 1, rem_deg - n * unit,
           acc_drop + n * drop_per_unit(mg.gen));
    }
    if (max_exp > 0) current.pop_back();
  };
  rec(rec, 0, d, 0);

  for (auto& m : out) {
    // Monomial factors must follow canonical order (mode 0 block first).
    std::sort(m.begin(), m.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::sort(out.begin(), out.end());

  std::lock_guard<std::mutex> lock(cache_mu_);
  auto [it, inserted] = slice_cache_.emplace(std::make_pair(d, drop), std::move(out));
  return it->second;
}

bool Module::is_singular(const Vector& v) const {
  if (v.is_zero()) return false;
  const std::pair<Gen, int> gens[] = {{GE, 0}, {GX, 0}, {GF, 1}, {GY, 1}, {GH, 1}};
  for (const auto& [g, mode] : gens)
    if (!act(g, mode, v).is_zero()) return false;
  return true;
}

Module::SingularVector Module::singular_vector(const AdmissiblePair& pair, long m, long s,
                                               pbw::MFFKind which) const {
  SingularVector sv;
  sv.word = pbw::mff_word(pair, m, s, which);
  if (!cfg_.generalized) {
    const Rational expect = Rational(m - 1, 2) - Rational(s) * pair.shifted_level();
    if (!(cfg_.j == expect))
      throw std::invalid_argument("singular_vector: module weight does not match (m,s)");
  }
  if (!sv.word.faithful) {
    sv.fractional = true;
    return sv;
  }
  Vector v = Vector::vacuum();
  for (auto it = sv.word.factors.rbegin(); it != sv.word.factors.rend(); ++it) {
    const Gen g = it->kind == pbw::MFFFactor::YPow ? GY : GE;
    const int mode = it->kind == pbw::MFFFactor::YPow ? 0 : -1;
    const long n = it->exponent.to_long();
    for (long k = 0; k < n; ++k) v = act(g, mode, v);
  }
  sv.v = std::move(v);
  return sv;
}

RemarkCheck remark_maximal_check(const AdmissiblePair& pair, unsigned depth_bound) {
  RemarkCheck rc;
  Module mod(Config{pair.level(), Rational(0), true, depth_bound});
  rc.f1_vanishes = mod.act(GY, 0, Vector::vacuum()).is_zero();
  const auto sv = mod.singular_vector(pair, 1, 0, pbw::MFFKind::F2);
  if (sv.fractional) {
    rc.fractional = true;
    rc.detail = "F2(1,0) is a fractional instance: " + sv.word.str();
    return rc;
  }
  rc.f2_singular = mod.is_singular(sv.v);
  rc.detail = "F2(1,0)1 = " + sv.v.str();
  return rc;
}

}  // namespace osp12::verma
