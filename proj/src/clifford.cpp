#include "spinflow/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace spinflow {

namespace {

CMat kron(const CMat& a, const CMat& b) {
  CMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return r;
}

CMat pauli(int which) {
  CMat s(2, 2);
  const GaussRat one{Rational(1)}, I = GaussRat::i();
  switch (which) {
    case 1: s.at(0, 1) = one; s.at(1, 0) = one; break;
    case 2: s.at(0, 1) = -I; s.at(1, 0) = I; break;
    default: s.at(0, 0) = one; s.at(1, 1) = -one; break;
  }
  return s;
}

// sigma3^(t-1) (x) factor (x) Id^(m-t)
CMat chain(int m, int t, const CMat& factor) {
  CMat r = CMat::identity(1);
  for (int p = 1; p < t; ++p) r = kron(r, pauli(3));
  r = kron(r, factor);
  for (int p = t; p < m; ++p) r = kron(r, CMat::identity(2));
  return r;
}

}  // namespace

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CliffordRep build_rep(int dim, RepConvention conv) {
  if (dim < 1 || dim > 13 || dim % 2 == 0)
    throw std::invalid_argument("representation dimension must be odd and between 1 and 13");

  CliffordRep rep;
  rep.dim = dim;
  rep.m = (dim - 1) / 2;
  rep.spinor_dim = 1 << rep.m;
  rep.convention = conv;
  rep.gamma.resize(dim);

  const GaussRat I = GaussRat::i();
  for (int t = 1; t <= rep.m; ++t) {
    rep.gamma[2 * t - 1] = chain(rep.m, t, pauli(1) * I);
    rep.gamma[2 * t] = chain(rep.m, t, pauli(2) * I);
  }

  // Transversal volume element g_1 ... g_2m.
  CMat tv = CMat::identity(rep.spinor_dim);
  for (int k = 1; k < dim; ++k) tv = tv * rep.gamma[k];

  const CMat id = CMat::identity(rep.spinor_dim);
  bool found = false;
  for (long k = 0; k < 4 && !found; ++k) {
    GaussRat c = GaussRat::i_pow(k);
    CMat cand = tv * c;
    if (cand * cand == -id) {
      // volume normalization: i^(m+1) g_0 g_1 ... g_2m = Id
      CMat vol = (cand * tv) * GaussRat::i_pow(rep.m + 1);
      if (vol == id) {
        rep.gamma[0] = cand;
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("no flow generator satisfies the volume normalization");

  if (conv == RepConvention::Conjugated && rep.m >= 1) {
    // Conjugate by U = P D: P the index bit-reversal permutation, D the
    // diagonal of i^popcount.  U is unitary with Gaussian rational entries.
    const int N = rep.spinor_dim;
    CMat U(N, N);
    for (int col = 0; col < N; ++col) {
      unsigned rev = 0;
      for (int b = 0; b < rep.m; ++b)
        if (col & (1 << b)) rev |= 1u << (rep.m - 1 - b);
      U.at(int(rev), col) = GaussRat::i_pow(std::popcount(unsigned(col)));
    }
    const CMat Uinv = U.adjoint();
    for (auto& g : rep.gamma) g = U * g * Uinv;
  }
  return rep;
}

Spinor vector_action(const CliffordRep& rep, const std::vector<Rational>& v,
                     const Spinor& s) {
  if (int(v.size()) != rep.dim) throw std::invalid_argument("vector has wrong dimension");
  if (int(s.size()) != rep.spinor_dim) throw std::invalid_argument("spinor has wrong dimension");
  Spinor r(rep.spinor_dim);
  for (int k = 0; k < rep.dim; ++k) {
    if (v[k] == 0) continue;
    r = add(r, scale(rep.gamma[k].apply(s), GaussRat(v[k])));
  }
  return r;
}

SkewForm::SkewForm(int n) : n_(n), w_(size_t(n) * n, Rational(0)) {
  if (n < 0) throw std::invalid_argument("negative form dimension");
}

SkewForm SkewForm::standard_sasakian(int n) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("sasakian form needs even positive dimension");
  SkewForm f(n);
  for (int t = 1; 2 * t <= n; ++t) f.set(2 * t - 1, 2 * t, Rational(1));
  return f;
}

SkewForm SkewForm::scaled_rotation(const Rational& b) {
  SkewForm f(2);
  f.set(1, 2, b);
  return f;
}

const Rational& SkewForm::at(int j, int k) const {
  if (j < 1 || j > n_ || k < 1 || k > n_) throw std::out_of_range("form index out of range");
  return w_[size_t(j - 1) * n_ + (k - 1)];
}

void SkewForm::set(int j, int k, const Rational& w) {
  if (j < 1 || j > n_ || k < 1 || k > n_) throw std::out_of_range("form index out of range");
  if (j == k && w != 0) throw std::invalid_argument("diagonal of a skew form must vanish");
  w_[size_t(j - 1) * n_ + (k - 1)] = w;
  w_[size_t(k - 1) * n_ + (j - 1)] = -w;
}

std::vector<Rational> SkewForm::image(int j) const {
  std::vector<Rational> img(n_);
  for (int k = 1; k <= n_; ++k) img[k - 1] = at(j, k);
  return img;
}

bool SkewForm::is_complex_structure() const {
  // (h^2)_jl = sum_k omega_jk omega_kl must equal -delta_jl.
  for (int j = 1; j <= n_; ++j)
    for (int l = 1; l <= n_; ++l) {
      Rational s(0);
      for (int k = 1; k <= n_; ++k) s += at(j, k) * at(k, l);
      if (s != (j == l ? Rational(-1) : Rational(0))) return false;
    }
  return true;
}

CMat two_form_matrix(const CliffordRep& rep, const SkewForm& omega) {
  if (omega.n() != rep.dim - 1)
    throw std::invalid_argument("form dimension does not match the transversal frame");
  CMat r(rep.spinor_dim, rep.spinor_dim);
  for (int j = 1; j <= omega.n(); ++j)
    for (int k = j + 1; k <= omega.n(); ++k) {
      if (omega.at(j, k) == 0) continue;
      r = r + (rep.gamma[j] * rep.gamma[k]) * GaussRat(omega.at(j, k));
    }
  return r;
}

Spinor two_form_action(const CliffordRep& rep, const SkewForm& omega, const Spinor& s) {
  return two_form_matrix(rep, omega).apply(s);
}

std::vector<OmegaBlock> omega_eigendecomposition(const CliffordRep& rep,
                                                 const SkewForm& omega) {
  if (!omega.is_complex_structure())
    throw std::domain_error("eigendecomposition requires h^2 = -Id");

  const int m = rep.m;
  const CMat M = two_form_matrix(rep, omega);
  std::vector<OmegaBlock> blocks;
  blocks.reserve(m + 1);
  for (int r = 0; r <= m; ++r) {
    OmegaBlock blk;
    blk.r = r;
    blk.eigenvalue = GaussRat(Rational(0), Rational(2 * r - m));
    blk.multiplicity = int(binomial(m, r));
    // Lagrange projector: prod_{s != r} (M - lambda_s) / (lambda_r - lambda_s).
    CMat P = CMat::identity(rep.spinor_dim);
    for (int s = 0; s <= m; ++s) {
      if (s == r) continue;
      GaussRat ls(Rational(0), Rational(2 * s - m));
      P = (M - CMat::identity(rep.spinor_dim) * ls) * P;
      P = P * (GaussRat(Rational(1)) / (blk.eigenvalue - ls));
    }
    if (!(P * P == P) || P.trace() != GaussRat(Rational(blk.multiplicity)))
      throw std::logic_error("projector consistency check failed");
    blk.projector = std::move(P);
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

CMat blade_matrix(const CliffordRep& rep, unsigned mask) {
  if (mask >> rep.dim) throw std::invalid_argument("blade index outside the frame");
  CMat r = CMat::identity(rep.spinor_dim);
  for (int k = 0; k < rep.dim; ++k)
    if (mask & (1u << k)) r = r * rep.gamma[k];
  return r;
}

}  // namespace spinflow
