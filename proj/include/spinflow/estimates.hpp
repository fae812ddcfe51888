#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinflow/models.hpp"
#include "spinflow/pivalue.hpp"

namespace spinflow {

// Weights of the two extremal transversal components of a test spinor.
struct SpinorProfile {
  Rational w0{1}, wm{0};

  static SpinorProfile sigma0() { return {Rational(1), Rational(0)}; }
  static SpinorProfile sigmam() { return {Rational(0), Rational(1)}; }
  static SpinorProfile mixture(const Rational& w0, const Rational& wm) { return {w0, wm}; }

  bool mixed() const { return w0 > 0 && wm > 0; }
  void validate() const;  // weights nonnegative and summing to one
};

enum class Branch { Sigma0, SigmaM };

// The closed 3-dimensional formulas are written once, over an arbitrary
// commutative ring, so the same source instantiates both the exact
// pi-number evaluation and the polynomial identity checks.

template <typename V>
V scal_flow_expr(const V& alpha, const V& beta, const V& b) {
  // 2 (4 beta^2 - b^2 - 4 alpha b)
  return beta * beta * Rational(8) - b * b * Rational(2) - alpha * b * Rational(8);
}

template <typename V>
V upper_3d_expr(const V& alpha, const V& beta, const V& b) {
  // 4 beta^2 + (b/2 - alpha)^2
  V edge = b * rat(1, 2) - alpha;
  return beta * beta * Rational(4) + edge * edge;
}

// Frame matrix (rows and columns ordered xi, e1, e2) of the spinor's
// energy-momentum tensor: -(b/2 + alpha) on the flow, b/2 Id minus beta
// times the rotation on the transversal plane.
template <typename V>
std::array<std::array<V, 3>, 3> emomentum_3d_expr(const V& alpha, const V& beta, const V& b) {
  V zero((Rational(0)));
  V half_b = b * rat(1, 2);
  return {{{-(half_b + alpha), zero, zero}, {zero, half_b, beta}, {zero, -beta, half_b}}};
}

template <typename V>
V frobenius_expr(const std::array<std::array<V, 3>, 3>& e) {
  V s((Rational(0)));
  for (const auto& row : e)
    for (const V& entry : row) s += entry * entry;
  return s;
}

template <typename V>
V hijazi_3d_expr(const V& alpha, const V& beta, const V& b) {
  return scal_flow_expr(alpha, beta, b) * rat(1, 4) +
         frobenius_expr(emomentum_3d_expr(alpha, beta, b));
}

// Rayleigh quotient of the squared operator at a transversal Killing
// spinor, with the two spinor-dependent averages supplied by the caller:
// alpha^2 + n^2 beta^2 + omega_sq_avg/4 + alpha * xi_omega_avg.
PiValue upper_bound_general(const PiValue& alpha, const Rational& beta, int n,
                            const Rational& omega_sq_avg, const Rational& xi_omega_avg);

// Sasakian specialization: the averages are determined by the profile.
// Requires alpha * beta = 0.
PiValue upper_bound_sasakian(const PiValue& alpha, const Rational& beta, int m,
                             const SpinorProfile& profile);

// Profile-independent Sasakian bound: 4 m^2 beta^2 plus the worst
// transversal component.
PiValue remark_bound(const PiValue& alpha, const Rational& beta, int m);

PiValue upper_bound_3d(const PiValue& alpha, const Rational& beta, const Rational& b);

// Same bound with a non-constant transversal rotation scalar given as
// weighted samples (value, volume weight); weights must be nonnegative
// with positive total.
PiValue upper_bound_3d_averaged(const PiValue& alpha, const Rational& beta,
                                const std::vector<std::pair<Rational, Rational>>& b_samples);

// dim/(4(dim-1)) times the infimum of the scalar curvature; negative
// results are meaningful (the bound carries no information there).
PiValue friedrich_bound(int dim, const PiValue& inf_scal);

struct EnergyMomentum {
  std::vector<std::vector<PiValue>> matrix;  // frame order: xi, then the transversal frame
  PiValue frobenius_sq;                      // sum of squared entries
};

EnergyMomentum emomentum_3d(const PiValue& alpha, const Rational& beta, const Rational& b);

// Curvature term plus the squared norm of the energy-momentum tensor of
// the flow spinor.  Built from the tensor itself, not from the upper
// bound; that the two agree is a theorem the tests check.
PiValue hijazi_bound_3d(const PiValue& alpha, const Rational& beta, const Rational& b);

enum class MomentumStatus { Valid, NotASolution };

struct SasakianMomentum {
  MomentumStatus status = MomentumStatus::Valid;
  std::optional<EnergyMomentum> tensor;  // set iff status == Valid
};

// Energy-momentum tensor of an (alpha, 0)-spinor with the given profile on
// a Sasakian flow of transversal dimension 2m.  Pure profiles and odd m
// give a diagonal tensor; a genuine mixture with even m admits no tensor
// at all (the flow derivative demands opposite constants on the two
// components).
SasakianMomentum emomentum_sasakian(const PiValue& alpha, int m, const SpinorProfile& profile);

// Killing constants after scaling the metric by t along the flow; the
// second constant scales by 1/sqrt(t), so its square is reported.
struct DeformedConstants {
  PiValue alpha;
  Rational beta_sq;
};
DeformedConstants deform_constants(const PiValue& alpha, const Rational& beta, const Rational& t);

// Eigenvalue of the squared basic operator on the deformed structure:
// (m/2 - alpha/t)^2 on the first branch, (m/2 + (-1)^m alpha/t)^2 on the
// second.
PiValue deformed_eigenvalue(int m, const PiValue& alpha, const Rational& t, Branch branch);

// Deformation parameter at which the branch becomes harmonic, when the
// sign conditions allow one: t = 2 alpha/m on the first branch iff
// alpha > 0, t = (-1)^{m+1} 2 alpha/m on the second iff that is positive.
std::optional<Rational> harmonic_t(int m, const Rational& alpha, Branch branch);

struct BoundReport {
  std::string model;
  PiValue lambda1;
  std::vector<std::pair<std::string, PiValue>> upper;  // labels: dim3, sasakian, remark
  std::vector<std::pair<std::string, PiValue>> lower;  // labels: friedrich, hijazi
  std::optional<PiValue> scal;
  std::vector<std::pair<std::string, bool>> flags;     // per-bound equality with lambda1,
                                                       // plus hijazi_equals_dim3
  double tolerance = 0;                                // 0 = exact comparison
  std::string provenance;                              // how lambda1 was obtained
};

// Every bound applicable to the model's flow data, each compared exactly
// against the first eigenvalue.  Throws CapabilityError when the model has
// no first eigenvalue to compare against.
BoundReport equality_report(const ModelInstance& model, const FlowData& flow,
                            const SpinorProfile& profile = SpinorProfile::sigma0());

}  // namespace spinflow
