#include "spinflow/models.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace spinflow {

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Rational det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 inverse3(const Mat3& a) {
  Rational d = det3(a);
  if (d == 0) throw std::invalid_argument("degenerate lattice basis");
  Mat3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i), expanded by hand
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
    }
  return inv;
}

Mat3 gram_of_rows(const Mat3& b) {
  Mat3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g[i][j] = 0;
      for (int k = 0; k < 3; ++k) g[i][j] += b[i][k] * b[j][k];
    }
  return g;
}

// Unit lower-triangular L and positive diagonal d with g = L diag(d) L^T.
void ldl3(const Mat3& g, Mat3& L, std::array<Rational, 3>& d) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) L[i][j] = (i == j) ? Rational(1) : Rational(0);
  for (int j = 0; j < 3; ++j) {
    d[j] = g[j][j];
    for (int k = 0; k < j; ++k) d[j] -= L[j][k] * L[j][k] * d[k];
    if (d[j] <= 0) throw std::invalid_argument("lattice Gram matrix is not positive definite");
    for (int i = j + 1; i < 3; ++i) {
      L[i][j] = g[i][j];
      for (int k = 0; k < j; ++k) L[i][j] -= L[i][k] * L[j][k] * d[k];
      L[i][j] /= d[j];
    }
  }
}

// ---- family construction ------------------------------------------------
// All values are eigenvalues of the squared operator divided by pi^2.

std::vector<SpectralFamily> torus_families(const ModelInstance& M) {
  Mat3 gstar = inverse3(gram_of_rows(M.basis));
  Mat3 L;
  std::array<Rational, 3> d;
  ldl3(gstar, L, d);

  // Introduce variables from the last lattice coordinate down, so that each
  // triangular term only references earlier ones.
  SpectralFamily fam;
  fam.name = "dual_lattice";
  for (int p = 0; p < 3; ++p) {
    int j = 2 - p;
    QuadTerm term;
    term.coeff = 4 * d[j];
    Rational off = Rational(M.spin[j]) / 2;
    for (int s = 0; s < p; ++s) {
      int i = 2 - s;
      term.lin.push_back(L[i][j]);
      off += L[i][j] * Rational(M.spin[i]) / 2;
    }
    term.offset = off;
    fam.vars.push_back("n" + std::to_string(j + 1));
    fam.terms.push_back(std::move(term));
  }
  return {fam};
}

std::vector<SpectralFamily> screw_families(const ModelInstance& M) {
  const Rational H2 = M.H * M.H, L2 = M.L * M.L;
  const int d1 = M.spin[0];
  std::vector<SpectralFamily> fams;

  SpectralFamily a;
  a.name = "rotation_trivial";
  a.vars = {"k", "l", "m"};
  QuadTerm tk{Rational(4) / H2, {}, rat(1, 2)};
  QuadTerm tl{Rational(4) / L2, {Rational(0)}, Rational(0)};
  QuadTerm tm;

  SpectralFamily b;
  b.name = "rotation_twisted";
  b.vars = {"mu"};

  switch (M.kind) {
    case ModelKind::BieberbachG2: {
      tm = QuadTerm{Rational(4) / (M.S * M.S), {Rational(0), -M.T / M.L}, Rational(0)};
      a.admissible = [](const std::vector<long>& x) {
        return x[2] >= 1 || (x[2] == 0 && x[1] >= 1);
      };
      b.terms = {QuadTerm{Rational(16) / H2, {}, d1 ? rat(3, 4) : rat(1, 4)}};
      break;
    }
    case ModelKind::BieberbachG3: {
      if (d1) tk.offset = 0;
      tm = QuadTerm{Rational(16) / (3 * L2), {Rational(0), rat(-1, 2)}, Rational(0)};
      a.admissible = [](const std::vector<long>& x) {
        return x[1] >= 1 && x[2] >= 0 && x[2] <= x[1] - 1;
      };
      b.terms = {d1 ? QuadTerm{Rational(36) / H2, {}, rat(2, 3)}
                    : QuadTerm{Rational(64) / H2, {}, rat(1, 8)}};
      break;
    }
    case ModelKind::BieberbachG4: {
      tm = QuadTerm{Rational(4) / L2, {Rational(0), Rational(-1)}, Rational(0)};
      a.admissible = [](const std::vector<long>& x) {
        return x[1] >= 1 && x[2] >= 0 && x[2] <= 2 * x[1] - 1;
      };
      b.terms = {QuadTerm{Rational(64) / H2, {}, d1 ? rat(5, 8) : rat(1, 8)}};
      break;
    }
    case ModelKind::BieberbachG5: {
      tm = QuadTerm{Rational(4) / (3 * L2), {Rational(0), Rational(-2)}, Rational(0)};
      a.admissible = [](const std::vector<long>& x) {
        return x[1] >= 1 && x[2] >= 0 && x[2] <= x[1] - 1;
      };
      b.terms = {QuadTerm{Rational(144) / H2, {}, d1 ? rat(7, 12) : rat(1, 12)}};
      break;
    }
    default:
      throw std::logic_error("not a screw-motion quotient");
  }
  a.terms = {tk, tl, tm};
  fams.push_back(std::move(a));
  fams.push_back(std::move(b));
  return fams;
}

SpectrumInfo spectrum_info(const ModelInstance& M) {
  switch (M.kind) {
    case ModelKind::Torus:
      return SpectrumInfo::Explicit;
    case ModelKind::BieberbachG2:
    case ModelKind::BieberbachG4:
      // explicit families are only known for the untwisted transversal
      // spin directions
      return (M.spin[1] == 0 && M.spin[2] == 0) ? SpectrumInfo::Explicit
                                                : SpectrumInfo::None;
    case ModelKind::BieberbachG3:
    case ModelKind::BieberbachG5:
      return SpectrumInfo::Explicit;
    case ModelKind::Heisenberg:
    case ModelKind::ProductS1S2:
    case ModelKind::RoundSphere:
    case ModelKind::SphereQuotient:
      return SpectrumInfo::FirstEigenvalue;
    case ModelKind::DeformedSphere:
      return SpectrumInfo::KnownEigenvalue;
    case ModelKind::Psl2rQuotient:
      return SpectrumInfo::None;
  }
  throw std::logic_error("unreachable");
}

PiValue stored_lambda1(const ModelInstance& M) {
  switch (M.kind) {
    case ModelKind::Heisenberg:
      return PiValue(rat(1, 4));
    case ModelKind::ProductS1S2:
      return PiValue(Rational(1));
    case ModelKind::RoundSphere: {
      Rational q(2 * M.m + 1);
      return PiValue(q * q / 4);
    }
    case ModelKind::SphereQuotient:
      return PiValue(rat(9, 4));
    default:
      throw CapabilityError("model '" + kind_name(M.kind) + "' has no stored first eigenvalue");
  }
}

std::vector<SpectralFamily> spectral_families(const ModelInstance& M) {
  if (spectrum_info(M) != SpectrumInfo::Explicit)
    throw CapabilityError("model '" + kind_name(M.kind) + "' has no explicit spectrum");
  if (M.kind == ModelKind::Torus) return torus_families(M);
  return screw_families(M);
}

// Rational bound on value/pi^2 that safely contains every eigenvalue below
// the cutoff; hits are filtered exactly afterwards.
Rational pi_sq_budget(const PiValue& cutoff) {
  if (auto q = cutoff.pure(2)) return *q;
  if (cutoff.is_zero()) return Rational(0);
  // 1/pi^2 < 10133/100000
  double c = cutoff.to_double();
  if (c < 0) return Rational(-1);
  Rational bound(c);  // exact binary value of the double
  return bound * rat(10133, 100000) + 1;
}

SpectrumSlice package_slice(std::vector<LatticePoint>&& hits, const PiValue& cutoff,
                            EnumerationCertificate&& cert) {
  std::map<Rational, long> grouped;
  for (const LatticePoint& p : hits) {
    PiValue v = PiValue::pi_sq(p.value);
    if (PiValue::compare(v, cutoff) <= 0) ++grouped[p.value];
  }
  SpectrumSlice slice;
  slice.cutoff = cutoff;
  slice.certificate = std::move(cert);
  for (const auto& [q, count] : grouped)
    slice.values.push_back({PiValue::pi_sq(q), count});
  return slice;
}

}  // namespace

std::string kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::Torus: return "torus";
    case ModelKind::BieberbachG2: return "bieberbach_g2";
    case ModelKind::BieberbachG3: return "bieberbach_g3";
    case ModelKind::BieberbachG4: return "bieberbach_g4";
    case ModelKind::BieberbachG5: return "bieberbach_g5";
    case ModelKind::Heisenberg: return "heisenberg";
    case ModelKind::ProductS1S2: return "product_s1_s2";
    case ModelKind::RoundSphere: return "round_sphere";
    case ModelKind::SphereQuotient: return "sphere_quotient";
    case ModelKind::DeformedSphere: return "deformed_sphere";
    case ModelKind::Psl2rQuotient: return "psl2r_quotient";
  }
  throw std::logic_error("unreachable");
}

std::optional<ModelKind> kind_from_name(const std::string& name) {
  static const std::vector<ModelKind> all = {
      ModelKind::Torus,        ModelKind::BieberbachG2, ModelKind::BieberbachG3,
      ModelKind::BieberbachG4, ModelKind::BieberbachG5, ModelKind::Heisenberg,
      ModelKind::ProductS1S2,  ModelKind::RoundSphere,  ModelKind::SphereQuotient,
      ModelKind::DeformedSphere, ModelKind::Psl2rQuotient};
  for (ModelKind k : all)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

void ModelInstance::validate() const {
  for (int s : spin)
    if (s != 0 && s != 1) throw std::invalid_argument("spin parameters must be 0 or 1");

  switch (kind) {
    case ModelKind::Torus: {
      if (det3(basis) == 0) throw std::invalid_argument("degenerate lattice basis");
      Rational n2(0);
      for (const Rational& c : xi) n2 += c * c;
      if (n2 != 1) throw std::invalid_argument("flow direction must be a unit vector");
      break;
    }
    case ModelKind::BieberbachG2:
      if (H <= 0 || L <= 0 || S <= 0) throw std::invalid_argument("lattice constants must be positive");
      break;
    case ModelKind::BieberbachG3:
    case ModelKind::BieberbachG5:
      if (H <= 0 || L <= 0) throw std::invalid_argument("lattice constants must be positive");
      if (spin[1] != 0 || spin[2] != 0)
        throw std::invalid_argument("this quotient has only the flow spin parameter");
      break;
    case ModelKind::BieberbachG4:
      if (H <= 0 || L <= 0) throw std::invalid_argument("lattice constants must be positive");
      if (spin[1] != spin[2])
        throw std::invalid_argument("the two transversal spin parameters must agree here");
      break;
    case ModelKind::Heisenberg:
      if (level < 1) throw std::invalid_argument("lattice level must be at least 1");
      if (spin != std::array<int, 3>{0, 0, 0})
        throw std::invalid_argument("only the canonical spin structure is supported");
      break;
    case ModelKind::RoundSphere:
    case ModelKind::DeformedSphere:
      if (m < 1 || m > 6) throw std::invalid_argument("sphere parameter m must be in 1..6");
      if (kind == ModelKind::DeformedSphere && t <= 0)
        throw std::invalid_argument("deformation parameter must be positive");
      break;
    case ModelKind::Psl2rQuotient:
      if (alpha <= 0) throw std::invalid_argument("the flow constant of this family is positive");
      break;
    case ModelKind::ProductS1S2:
    case ModelKind::SphereQuotient:
      break;
  }
}

SpectrumSlice dirac_square_spectrum(const ModelInstance& model, const PiValue& cutoff) {
  model.validate();
  Rational budget = pi_sq_budget(cutoff);
  std::vector<LatticePoint> hits;
  EnumerationCertificate cert;
  for (const SpectralFamily& fam : spectral_families(model)) {
    std::vector<LatticePoint> h = enumerate_below(fam, budget, &cert);
    hits.insert(hits.end(), std::make_move_iterator(h.begin()), std::make_move_iterator(h.end()));
  }
  return package_slice(std::move(hits), cutoff, std::move(cert));
}

Lambda1Result lambda1(const ModelInstance& model) {
  model.validate();
  SpectrumInfo info = spectrum_info(model);
  if (info == SpectrumInfo::Explicit) {
    MinimumResult min = minimum_over(spectral_families(model));
    Lambda1Result r;
    r.value = PiValue::pi_sq(min.value);
    r.attained = std::move(min.attained);
    r.provenance = "enumeration";
    r.certificate = std::move(min.certificate);
    return r;
  }
  if (info == SpectrumInfo::FirstEigenvalue) {
    Lambda1Result r;
    r.value = stored_lambda1(model);
    r.provenance = "catalog";
    return r;
  }
  throw CapabilityError("model '" + kind_name(model.kind) + "' does not expose its first eigenvalue");
}

SpectrumSlice torus_fourier_oracle(const ModelInstance& model, const PiValue& cutoff) {
  model.validate();
  if (model.kind != ModelKind::Torus)
    throw std::invalid_argument("the Fourier oracle is defined for tori only");

  Rational budget = pi_sq_budget(cutoff);
  Mat3 V = inverse3(model.basis);

  SpectrumSlice slice;
  slice.cutoff = cutoff;
  slice.certificate.cutoff = budget;
  std::map<Rational, long> grouped;

  if (budget >= 0) {
    // |c|^2 <= (sum of squared basis entries) * |v|^2 bounds each shifted
    // coordinate of the Fourier index.
    Rational frob(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) frob += model.basis[i][j] * model.basis[i][j];
    Rational coord_sq = frob * budget / 4;

    EnumerationCertificate::FamilyBox box;
    box.family = "fourier_box";
    std::array<std::pair<long, long>, 3> range;
    for (int j = 0; j < 3; ++j) {
      // (n + delta/2)^2 <= coord_sq
      long root = floor_sqrt(coord_sq).get_si() + 1;
      range[j] = {-root - 1, root + 1};
      box.bounds.emplace_back(range[j].first, range[j].second);
    }
    slice.certificate.boxes.push_back(std::move(box));

    for (long n1 = range[0].first; n1 <= range[0].second; ++n1)
      for (long n2 = range[1].first; n2 <= range[1].second; ++n2)
        for (long n3 = range[2].first; n3 <= range[2].second; ++n3) {
          std::array<Rational, 3> c = {Rational(n1) + Rational(model.spin[0]) / 2,
                                       Rational(n2) + Rational(model.spin[1]) / 2,
                                       Rational(n3) + Rational(model.spin[2]) / 2};
          Rational v2(0);
          for (int i = 0; i < 3; ++i) {
            Rational vi(0);
            for (int j = 0; j < 3; ++j) vi += V[i][j] * c[j];
            v2 += vi * vi;
          }
          ++slice.certificate.points_scanned;
          Rational q = 4 * v2;
          if (q <= budget && PiValue::compare(PiValue::pi_sq(q), cutoff) <= 0) ++grouped[q];
        }
  }
  for (const auto& [q, count] : grouped) slice.values.push_back({PiValue::pi_sq(q), count});
  return slice;
}

namespace {

struct Congruence {
  Rational target;  // value of H*(alpha/pi) mod modulus
  long modulus;
};

bool congruence_holds_exact(const Rational& x, const Congruence& c) {
  Rational r = (x - c.target) / c.modulus;
  return is_integer(r);
}

bool congruence_holds_float(double x, const Congruence& c, double tol) {
  double r = (x - to_double(c.target)) / double(c.modulus);
  return std::abs(r - std::round(r)) <= tol * std::max(1.0, std::abs(r));
}

TksCheck screw_tks(const ModelInstance& M, const PiValue& alpha, double tol) {
  TksCheck chk;
  long step = 0, d1 = M.spin[0];
  switch (M.kind) {
    case ModelKind::BieberbachG2: step = 2; break;
    case ModelKind::BieberbachG3: step = 3; break;
    case ModelKind::BieberbachG4: step = 4; break;
    case ModelKind::BieberbachG5: step = 6; break;
    default: throw std::logic_error("not a screw-motion quotient");
  }
  if ((M.kind == ModelKind::BieberbachG2 && (M.spin[1] || M.spin[2])) ||
      (M.kind == ModelKind::BieberbachG4 && M.spin[1])) {
    chk.admits = false;
    chk.detail = "twisted transversal spin directions rule the spinor out";
    return chk;
  }
  Congruence c{Rational(1 + step * d1), 2 * step};
  if (auto a = alpha.pure(1)) {
    Rational x = M.H * *a;
    chk.admits = is_integer(x) && congruence_holds_exact(x, c);
    chk.detail = "requires H*alpha/pi = " + to_string(c.target) + " modulo " +
                 std::to_string(c.modulus) + ", got " + to_string(x);
  } else {
    double x = to_double(M.H) * alpha.to_double() / M_PI;
    chk.admits = congruence_holds_float(x, c, tol);
    chk.detail = "float congruence check at tolerance " + std::to_string(tol);
  }
  return chk;
}

TksCheck torus_tks(const ModelInstance& M, const PiValue& alpha, double tol) {
  TksCheck chk;
  chk.admits = true;
  for (int j = 0; j < 3; ++j) {
    Rational pairing(0);
    for (int i = 0; i < 3; ++i) pairing += M.basis[j][i] * M.xi[i];
    Congruence c{Rational(M.spin[j]), 2};
    if (auto a = alpha.pure(1)) {
      Rational x = pairing * *a;
      if (!congruence_holds_exact(x, c)) chk.admits = false;
    } else {
      double x = to_double(pairing) * alpha.to_double() / M_PI;
      if (!congruence_holds_float(x, c, tol)) chk.admits = false;
    }
  }
  chk.detail = "lattice pairings against the flow, reduced modulo 2";
  return chk;
}

TksCheck canonical_constant_tks(const PiValue& alpha, const PiValue& canonical,
                                const std::string& what) {
  TksCheck chk;
  chk.admits = (alpha == canonical);
  chk.detail = "the " + what + " carries the one-parameter family at alpha = " +
               canonical.to_string();
  return chk;
}

}  // namespace

TksCheck admits_tks(const ModelInstance& model, const PiValue& alpha, double tol) {
  model.validate();
  if (alpha.is_zero()) {
    TksCheck chk;
    chk.applicable = false;
    chk.detail = "a vanishing flow constant is the parallel case, not decided here";
    return chk;
  }
  switch (model.kind) {
    case ModelKind::Torus:
      return torus_tks(model, alpha, tol);
    case ModelKind::BieberbachG2:
    case ModelKind::BieberbachG3:
    case ModelKind::BieberbachG4:
    case ModelKind::BieberbachG5:
      return screw_tks(model, alpha, tol);
    case ModelKind::Heisenberg: {
      TksCheck chk;
      chk.admits = false;
      chk.detail = "only transversally parallel spinors live here";
      return chk;
    }
    case ModelKind::ProductS1S2: {
      TksCheck chk;
      chk.applicable = false;
      chk.detail = "the product family has zero flow constant and nonzero transversal one";
      return chk;
    }
    case ModelKind::RoundSphere:
      return canonical_constant_tks(alpha, PiValue(Rational(-(model.m + 1)) / 2), "round sphere");
    case ModelKind::SphereQuotient:
      return canonical_constant_tks(alpha, PiValue(Rational(-1)), "spherical quotient");
    case ModelKind::DeformedSphere:
      return canonical_constant_tks(alpha, PiValue(Rational(-(model.m + 1)) / (2 * model.t)),
                                    "deformed sphere");
    case ModelKind::Psl2rQuotient:
      return canonical_constant_tks(alpha, PiValue(model.alpha), "unit tangent bundle quotient");
  }
  throw std::logic_error("unreachable");
}

PiValue scal_from_flow(const FlowData& flow) {
  if (flow.m != 1)
    throw std::invalid_argument("the scalar curvature formula applies to 3-dimensional flows");
  // 2 (4 beta^2 - b^2 - 4 alpha b)
  PiValue r(8 * flow.beta * flow.beta - 2 * flow.b * flow.b);
  return r - flow.alpha * (8 * flow.b);
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> entries;

  {
    CatalogEntry e;
    e.name = "torus_half_spin";
    e.model.kind = ModelKind::Torus;
    e.model.spin = {1, 0, 0};
    e.info = SpectrumInfo::Explicit;
    e.flow = FlowData{1, PiValue::pi(), Rational(0), Rational(0)};
    e.description = "flat torus on the unit cubic lattice, spin shifted along the flow";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "torus_trivial_spin";
    e.model.kind = ModelKind::Torus;
    e.info = SpectrumInfo::Explicit;
    e.flow = FlowData{1, PiValue::pi(Rational(2)), Rational(0), Rational(0)};
    e.description = "flat torus on the unit cubic lattice, trivial spin structure";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "bieberbach_g2";
    e.model.kind = ModelKind::BieberbachG2;
    e.model.spin = {1, 0, 0};
    e.info = SpectrumInfo::Explicit;
    e.flow = FlowData{1, PiValue::pi(Rational(-1)), Rational(0), Rational(0)};
    e.description = "half-turn screw quotient, H = L = S = 1";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "bieberbach_g3";
    e.model.kind = ModelKind::BieberbachG3;
    e.model.spin = {1, 0, 0};
    e.info = SpectrumInfo::Explicit;
    e.flow = FlowData{1, PiValue::pi(Rational(-2)), Rational(0), Rational(0)};
    e.description = "third-turn screw quotient on the hexagonal lattice, H = L = 1";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "bieberbach_g4";
    e.model.kind = ModelKind::BieberbachG4;
    e.model.spin = {1, 0, 0};
    e.model.H = 2;
    e.info = SpectrumInfo::Explicit;
    e.flow = FlowData{1, PiValue::pi(rat(-3, 2)), Rational(0), Rational(0)};
    e.description = "quarter-turn screw quotient on the square lattice, H = 2, L = 1";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "bieberbach_g5";
    e.model.kind = ModelKind::BieberbachG5;
    e.model.spin = {1, 0, 0};
    e.model.H = 2;
    e.info = SpectrumInfo::Explicit;
    e.flow = FlowData{1, PiValue::pi(rat(-5, 2)), Rational(0), Rational(0)};
    e.description = "sixth-turn screw quotient on the hexagonal lattice, H = 2, L = 1";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "heisenberg";
    e.model.kind = ModelKind::Heisenberg;
    e.info = SpectrumInfo::FirstEigenvalue;
    e.lambda1_hint = PiValue(rat(1, 4));
    e.flow = FlowData{1, PiValue(), Rational(0), Rational(1)};
    e.description = "nilmanifold fibering over the torus, canonical spin structure";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "product_s1_s2";
    e.model.kind = ModelKind::ProductS1S2;
    e.info = SpectrumInfo::FirstEigenvalue;
    e.lambda1_hint = PiValue(Rational(1));
    e.flow = FlowData{1, PiValue(), rat(1, 2), Rational(0)};
    e.description = "product of the circle with the unit round two-sphere";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "round_sphere";
    e.model.kind = ModelKind::RoundSphere;
    e.info = SpectrumInfo::FirstEigenvalue;
    e.lambda1_hint = PiValue(rat(9, 4));
    e.flow = FlowData{1, PiValue(Rational(-1)), Rational(0), Rational(1)};
    e.description = "round three-sphere with its Hopf flow (set m for higher odd spheres)";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "sphere_quotient";
    e.model.kind = ModelKind::SphereQuotient;
    e.info = SpectrumInfo::FirstEigenvalue;
    e.lambda1_hint = PiValue(rat(9, 4));
    e.flow = FlowData{1, PiValue(Rational(-1)), Rational(0), Rational(1)};
    e.description = "quotient of the round three-sphere by a finite unitary group";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "deformed_sphere";
    e.model.kind = ModelKind::DeformedSphere;
    e.model.t = 2;
    e.info = SpectrumInfo::KnownEigenvalue;
    e.known_eigenvalue = PiValue(Rational(1));  // (m/2 + (m+1)/(2t))^2 at m=1, t=2
    e.flow = FlowData{1, PiValue(rat(-1, 2)), Rational(0), Rational(1)};
    e.description = "three-sphere after a homothetic change of metric along the flow, t = 2";
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "psl2r_quotient";
    e.model.kind = ModelKind::Psl2rQuotient;
    e.info = SpectrumInfo::None;
    e.flow = FlowData{1, PiValue(Rational(1)), Rational(0), Rational(1)};
    e.description = "quotient of the universal cover of the unit tangent bundle of the hyperbolic plane";
    entries.push_back(std::move(e));
  }

  for (CatalogEntry& e : entries) e.model.validate();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  static const std::vector<CatalogEntry> entries = catalog();
  for (const CatalogEntry& e : entries)
    if (e.name == name) return e;
  throw std::invalid_argument("no catalog entry named '" + name + "'");
}

}  // namespace spinflow
