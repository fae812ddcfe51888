#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinflow/clifford.hpp"
#include "spinflow/poly.hpp"

namespace spinflow {

// A blade is a product of distinct frame generators in ascending index
// order, stored as a bitmask.  Bit 0 is the flow direction.
using Blade = unsigned;

// Product of two blades in the Clifford algebra: returns the sign picked up
// by commuting generators into ascending order (squares contribute g^2=-1)
// and the resulting blade.
std::pair<int, Blade> blade_product(Blade a, Blade b);

// Variable ids of the symbolic coefficient ring.
inline constexpr VarId kAlphaVar = 0;
inline constexpr VarId kBetaVar = 1;
VarId omega_var(int j, int k);  // 1 <= j < k
std::string var_name(VarId v);

// Formal linear combination of blades applied to one abstract spinor, with
// polynomial coefficients.  This is the normal form: distinct ascending
// blades, no zero coefficients.
class SpinorExpr {
 public:
  SpinorExpr() = default;

  static SpinorExpr unit();  // the abstract spinor itself
  static SpinorExpr blade(Blade b, const Poly& coeff = Poly(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Blade, Poly>& terms() const { return terms_; }

  void add_term(Blade b, const Poly& coeff);

  SpinorExpr operator+(const SpinorExpr& o) const;
  SpinorExpr operator-(const SpinorExpr& o) const;
  SpinorExpr scaled(const Poly& c) const;

  SpinorExpr substitute(const std::map<VarId, Rational>& assignment) const;

  std::string to_string() const;

 private:
  std::map<Blade, Poly> terms_;
};

// Clifford product: a (as an algebra element) acting on b from the left.
SpinorExpr clifford_product(const SpinorExpr& a, const SpinorExpr& b);

// Reduction of an arbitrary generator word (repetitions allowed, any order)
// to normal form.
SpinorExpr normalize(const std::vector<int>& word, const Poly& coeff = Poly(1));

// Derivative rules at a point for a minimal Riemannian flow carrying a
// transversal Killing spinor: the flow is geodesic with vanishing mean
// curvature, the O'Neill tensor is parallel, and the transversal frame is
// chosen parallel at the point.  alpha/beta are the Killing constants,
// omega the O'Neill form components on the transversal frame (1-based).
struct DerivativeRules {
  int n = 0;  // transversal dimension
  Poly alpha, beta;
  std::vector<std::vector<Poly>> omega;  // (n+1)x(n+1), entries [j][k] for j,k >= 1
  // Test hook: flips one sign in the transversal spinor rule so that the
  // identity checks must detect the corruption.
  bool corrupted = false;

  const Poly& w(int j, int k) const { return omega[j][k]; }
};

// Fully symbolic rules: alpha, beta and all omega_jk are free variables.
DerivativeRules symbolic_rules(int n);
// Rules with concrete rational constants.
DerivativeRules concrete_rules(int n, const Rational& alpha, const Rational& beta,
                               const SkewForm& omega);

// Spinor derivative along frame direction dir (0 = flow).
SpinorExpr spinor_derivative(const DerivativeRules& rules, int dir);

// Covariant derivative of a blade expression along frame direction dir,
// using the Leibniz rule on frame factors and the spinor rule on the
// trailing spinor.
SpinorExpr covariant_derivative(const DerivativeRules& rules, const SpinorExpr& e,
                                int dir);

// Dirac operator: sum over the frame of generator times covariant derivative.
SpinorExpr dirac(const DerivativeRules& rules, const SpinorExpr& e);

struct IdentityCheck {
  bool ok = false;
  SpinorExpr lhs, rhs, residual;
};

// D psi = -alpha psi + n beta xi.psi - (1/2) xi.Omega.psi
IdentityCheck check_dirac_identity(const DerivativeRules& rules);

// D^2 psi = (alpha^2 + n^2 beta^2) psi - (1/4) Omega.Omega.psi
//           + alpha xi.Omega.psi + 2 beta Omega.psi - 2 n alpha beta xi.psi
IdentityCheck check_dirac_square_identity(const DerivativeRules& rules);

// Matrix evaluation oracle: applies a (constant-coefficient) expression to
// a concrete spinor through an explicit representation.
Spinor eval_expr(const CliffordRep& rep, const SpinorExpr& e, const Spinor& psi);
CMat expr_matrix(const CliffordRep& rep, const SpinorExpr& e);

}  // namespace spinflow
