#include "spinflow/spinor_calculus.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace spinflow {

std::pair<int, Blade> blade_product(Blade a, Blade b) {
  int sign = 1;
  Blade m = a;
  while (b) {
    int i = std::countr_zero(b);
    b &= b - 1;
    // Move generator i across the higher-index factors of m.
    if (std::popcount(m >> (i + 1)) & 1) sign = -sign;
    Blade bit = Blade(1) << i;
    if (m & bit) {
      sign = -sign;  // g_i g_i = -1
      m &= ~bit;
    } else {
      m |= bit;
    }
  }
  return {sign, m};
}

VarId omega_var(int j, int k) {
  if (j < 1 || k <= j) throw std::invalid_argument("omega variable needs 1 <= j < k");
  return 2 + (j << 8) + k;
}

std::string var_name(VarId v) {
  if (v == kAlphaVar) return "alpha";
  if (v == kBetaVar) return "beta";
  int packed = v - 2;
  return "w[" + std::to_string(packed >> 8) + "," + std::to_string(packed & 0xff) + "]";
}

SpinorExpr SpinorExpr::unit() { return blade(0); }

SpinorExpr SpinorExpr::blade(Blade b, const Poly& coeff) {
  SpinorExpr e;
  e.add_term(b, coeff);
  return e;
}

void SpinorExpr::add_term(Blade b, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_[b] = coeff;
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpinorExpr SpinorExpr::operator+(const SpinorExpr& o) const {
  SpinorExpr r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, c);
  return r;
}

SpinorExpr SpinorExpr::operator-(const SpinorExpr& o) const {
  SpinorExpr r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
  return r;
}

SpinorExpr SpinorExpr::scaled(const Poly& c) const {
  SpinorExpr r;
  for (const auto& [b, p] : terms_) r.add_term(b, p * c);
  return r;
}

SpinorExpr SpinorExpr::substitute(const std::map<VarId, Rational>& assignment) const {
  SpinorExpr r;
  for (const auto& [b, p] : terms_) r.add_term(b, p.substitute(assignment));
  return r;
}

std::string SpinorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, p] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << p.to_string(var_name) << ")";
    if (b == 0) {
      out << " psi";
      continue;
    }
    out << " ";
    for (int i = 0; i < 32; ++i)
      if (b & (1u << i)) out << (i == 0 ? std::string("xi.") : "e" + std::to_string(i) + ".");
    out << "psi";
  }
  return out.str();
}

SpinorExpr clifford_product(const SpinorExpr& a, const SpinorExpr& b) {
  SpinorExpr r;
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      auto [sign, m] = blade_product(ba, bb);
      r.add_term(m, ca * cb * Rational(sign));
    }
  return r;
}

SpinorExpr normalize(const std::vector<int>& word, const Poly& coeff) {
  int sign = 1;
  Blade m = 0;
  for (int g : word) {
    if (g < 0 || g >= 32) throw std::invalid_argument("generator index out of range");
    auto [s, next] = blade_product(m, Blade(1) << g);
    sign *= s;
    m = next;
  }
  return SpinorExpr::blade(m, coeff * Rational(sign));
}

DerivativeRules symbolic_rules(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("transversal dimension must be even and positive");
  DerivativeRules r;
  r.n = n;
  r.alpha = Poly::var(kAlphaVar);
  r.beta = Poly::var(kBetaVar);
  r.omega.assign(n + 1, std::vector<Poly>(n + 1));
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      Poly w = Poly::var(omega_var(j, k));
      r.omega[j][k] = w;
      r.omega[k][j] = -w;
    }
  return r;
}

DerivativeRules concrete_rules(int n, const Rational& alpha, const Rational& beta,
                               const SkewForm& omega) {
  if (omega.n() != n) throw std::invalid_argument("form dimension mismatch");
  DerivativeRules r;
  r.n = n;
  r.alpha = Poly(alpha);
  r.beta = Poly(beta);
  r.omega.assign(n + 1, std::vector<Poly>(n + 1));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (j != k) r.omega[j][k] = Poly(omega.at(j, k));
  return r;
}

namespace {

// Covariant derivative of frame field g along direction dir, as (index,
// coefficient) pairs.  Encodes: the flow is geodesic, frame fields rotate
// into the flow direction through the O'Neill form, and transversal frame
// derivatives vanish at the point except for their flow component.
std::vector<std::pair<int, Poly>> frame_derivative(const DerivativeRules& rules, int dir,
                                                   int g) {
  std::vector<std::pair<int, Poly>> out;
  if (dir == 0) {
    if (g == 0) return out;  // geodesic flow
    for (int l = 1; l <= rules.n; ++l)
      if (!rules.w(g, l).is_zero()) out.emplace_back(l, rules.w(g, l));
    return out;
  }
  if (g == 0) {
    for (int l = 1; l <= rules.n; ++l)
      if (!rules.w(dir, l).is_zero()) out.emplace_back(l, rules.w(dir, l));
    return out;
  }
  if (!rules.w(dir, g).is_zero()) out.emplace_back(0, -rules.w(dir, g));
  return out;
}

}  // namespace

SpinorExpr spinor_derivative(const DerivativeRules& rules, int dir) {
  if (dir < 0 || dir > rules.n) throw std::invalid_argument("direction out of range");
  SpinorExpr e;
  if (dir == 0) {
    // alpha xi.psi + (1/2) Omega.psi
    e.add_term(Blade(1), rules.alpha);
    for (int j = 1; j <= rules.n; ++j)
      for (int k = j + 1; k <= rules.n; ++k)
        e.add_term((Blade(1) << j) | (Blade(1) << k), rules.w(j, k) * rat(1, 2));
    return e;
  }
  // beta xi.e_dir.psi + (1/2) xi.h(e_dir).psi
  e.add_term(Blade(1) | (Blade(1) << dir), rules.beta);
  Rational half = rules.corrupted ? rat(-1, 2) : rat(1, 2);
  for (int l = 1; l <= rules.n; ++l) {
    if (l == dir) continue;
    e.add_term(Blade(1) | (Blade(1) << l), rules.w(dir, l) * half);
  }
  return e;
}

SpinorExpr covariant_derivative(const DerivativeRules& rules, const SpinorExpr& e,
                                int dir) {
  SpinorExpr out;
  const SpinorExpr dpsi = spinor_derivative(rules, dir);
  for (const auto& [blade, coeff] : e.terms()) {
    // Leibniz over the frame factors of the blade.
    for (int g = 0; g <= rules.n; ++g) {
      if (!(blade & (Blade(1) << g))) continue;
      Blade pre = blade & ((Blade(1) << g) - 1);
      Blade post = blade & ~((Blade(1) << (g + 1)) - 1);
      for (const auto& [u, dcoeff] : frame_derivative(rules, dir, g)) {
        auto [s1, m1] = blade_product(pre, Blade(1) << u);
        auto [s2, m2] = blade_product(m1, post);
        out.add_term(m2, coeff * dcoeff * Rational(s1 * s2));
      }
    }
    // Transport of the trailing spinor.
    for (const auto& [b2, c2] : dpsi.terms()) {
      auto [s, m] = blade_product(blade, b2);
      out.add_term(m, coeff * c2 * Rational(s));
    }
  }
  return out;
}

SpinorExpr dirac(const DerivativeRules& rules, const SpinorExpr& e) {
  SpinorExpr out;
  for (int dir = 0; dir <= rules.n; ++dir) {
    SpinorExpr d = covariant_derivative(rules, e, dir);
    for (const auto& [b, c] : d.terms()) {
      auto [s, m] = blade_product(Blade(1) << dir, b);
      out.add_term(m, c * Rational(s));
    }
  }
  return out;
}

namespace {

SpinorExpr omega_expr(const DerivativeRules& rules) {
  SpinorExpr e;
  for (int j = 1; j <= rules.n; ++j)
    for (int k = j + 1; k <= rules.n; ++k)
      e.add_term((Blade(1) << j) | (Blade(1) << k), rules.w(j, k));
  return e;
}

}  // namespace

IdentityCheck check_dirac_identity(const DerivativeRules& rules) {
  IdentityCheck chk;
  chk.lhs = dirac(rules, SpinorExpr::unit());

  SpinorExpr omega = omega_expr(rules);
  SpinorExpr xi = SpinorExpr::blade(Blade(1));
  chk.rhs = SpinorExpr::unit().scaled(-rules.alpha) +
            xi.scaled(rules.beta * Rational(rules.n)) +
            clifford_product(xi, omega).scaled(Poly(rat(-1, 2)));
  chk.residual = chk.lhs - chk.rhs;
  chk.ok = chk.residual.is_zero();
  return chk;
}

IdentityCheck check_dirac_square_identity(const DerivativeRules& rules) {
  IdentityCheck chk;
  chk.lhs = dirac(rules, dirac(rules, SpinorExpr::unit()));

  SpinorExpr omega = omega_expr(rules);
  SpinorExpr xi = SpinorExpr::blade(Blade(1));
  const Poly& a = rules.alpha;
  const Poly& b = rules.beta;
  Poly n(Rational(rules.n));
  chk.rhs = SpinorExpr::unit().scaled(a * a + n * n * b * b) +
            clifford_product(omega, omega).scaled(Poly(rat(-1, 4))) +
            clifford_product(xi, omega).scaled(a) + omega.scaled(b * Rational(2)) +
            xi.scaled(a * b * n * Rational(-2));
  chk.residual = chk.lhs - chk.rhs;
  chk.ok = chk.residual.is_zero();
  return chk;
}

Spinor eval_expr(const CliffordRep& rep, const SpinorExpr& e, const Spinor& psi) {
  Spinor out(rep.spinor_dim);
  for (const auto& [b, c] : e.terms()) {
    if (!c.is_constant()) throw std::invalid_argument("expression still has free variables");
    Rational coeff = c.eval({});
    out = add(out, scale(blade_matrix(rep, b).apply(psi), GaussRat(coeff)));
  }
  return out;
}

CMat expr_matrix(const CliffordRep& rep, const SpinorExpr& e) {
  CMat out(rep.spinor_dim, rep.spinor_dim);
  for (const auto& [b, c] : e.terms()) {
    if (!c.is_constant()) throw std::invalid_argument("expression still has free variables");
    out = out + blade_matrix(rep, b) * GaussRat(c.eval({}));
  }
  return out;
}

}  // namespace spinflow
