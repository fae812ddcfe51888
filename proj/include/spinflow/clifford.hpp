#pragma once

#include <vector>

#include "spinflow/matrix.hpp"
#include "spinflow/rational.hpp"

namespace spinflow {

using Spinor = CVec;

// Two unitarily equivalent but distinct-looking representations; every
// verification that claims convention independence runs under both.
enum class RepConvention { Standard, Conjugated };

// Irreducible complex Clifford module for an odd-dimensional oriented
// manifold carrying a unit flow field.  Frame index 0 is the flow
// direction, indices 1..2m span the transversal distribution.  Generators
// satisfy g_i g_j + g_j g_i = -2 delta_ij, are skew-adjoint, and the
// complex volume element i^{m+1} g_0 g_1 ... g_2m acts as the identity.
struct CliffordRep {
  int dim = 0;         // 2m + 1
  int m = 0;
  int spinor_dim = 0;  // 2^m
  RepConvention convention = RepConvention::Standard;
  std::vector<CMat> gamma;
};

// dim must be odd and between 1 and 13.  The flow generator is a scalar
// multiple of the product of the transversal ones; the scalar is selected
// by testing the four candidates {+-1, +-i} against g_0^2 = -Id and the
// volume normalization, and exactly one survives.
CliffordRep build_rep(int dim, RepConvention conv = RepConvention::Standard);

// Clifford action of the tangent vector v (v[0] along the flow).
Spinor vector_action(const CliffordRep& rep, const std::vector<Rational>& v,
                     const Spinor& s);

// Skew bilinear form on the transversal distribution, indices 1..n.  It
// doubles as the endomorphism h via h(e_j) = sum_k at(j,k) e_k, so a
// complex structure is the case h^2 = -Id.
class SkewForm {
 public:
  explicit SkewForm(int n);

  // omega(e_{2t-1}, e_{2t}) = 1, the canonical Sasakian form (n even).
  static SkewForm standard_sasakian(int n);
  // n = 2 with omega(e_1, e_2) = b.
  static SkewForm scaled_rotation(const Rational& b);

  int n() const { return n_; }
  const Rational& at(int j, int k) const;
  void set(int j, int k, const Rational& w);  // also sets (k,j) to -w

  std::vector<Rational> image(int j) const;  // coefficients of h(e_j)
  bool is_complex_structure() const;

 private:
  int n_;
  std::vector<Rational> w_;  // row-major n x n, kept skew by set()
};

// Action of the associated 2-form: sum_{j<k} omega_jk g_j g_k.
CMat two_form_matrix(const CliffordRep& rep, const SkewForm& omega);
Spinor two_form_action(const CliffordRep& rep, const SkewForm& omega, const Spinor& s);

// Eigenspace data of the 2-form action when h is a complex structure: the
// spinor module splits into m+1 blocks with eigenvalue i(2r-m) and
// multiplicity binom(m, r).  Projectors are exact idempotents.
struct OmegaBlock {
  int r = 0;
  GaussRat eigenvalue;
  int multiplicity = 0;
  CMat projector;
};

std::vector<OmegaBlock> omega_eigendecomposition(const CliffordRep& rep,
                                                 const SkewForm& omega);

// Product g_{i1} ... g_{ik} over the set bits of mask, ascending (bit 0 is
// the flow direction).  Shared with the symbolic layer as its evaluation
// oracle.
CMat blade_matrix(const CliffordRep& rep, unsigned mask);

long binomial(int n, int k);

}  // namespace spinflow
