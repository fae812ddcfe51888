#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinflow/pivalue.hpp"
#include "spinflow/quadform.hpp"

namespace spinflow {

// Raised when a model cannot answer the question at all (no explicit
// spectrum, no stored first eigenvalue), as opposed to a malformed request.
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ModelKind {
  Torus,
  BieberbachG2,
  BieberbachG3,
  BieberbachG4,
  BieberbachG5,
  Heisenberg,
  ProductS1S2,
  RoundSphere,
  SphereQuotient,
  DeformedSphere,
  Psl2rQuotient,
};

std::string kind_name(ModelKind k);
std::optional<ModelKind> kind_from_name(const std::string& name);

struct ModelInstance {
  ModelKind kind = ModelKind::Torus;
  std::array<int, 3> spin{0, 0, 0};

  // torus: lattice rows and the unit flow direction
  std::array<std::array<Rational, 3>, 3> basis{{{Rational(1), Rational(0), Rational(0)},
                                                {Rational(0), Rational(1), Rational(0)},
                                                {Rational(0), Rational(0), Rational(1)}}};
  std::array<Rational, 3> xi{Rational(1), Rational(0), Rational(0)};

  // screw-motion quotients: lattice constants (T only enters the second kind)
  Rational H{1}, L{1}, S{1}, T{0};

  // spheres and nilmanifolds
  int m = 1;
  Rational t{1};
  int level = 1;

  // stub parameter of the unit tangent bundle quotient
  Rational alpha{1};

  void validate() const;  // throws std::invalid_argument on bad parameters
};

// Transversal Killing data canonically attached to a catalog model: the
// two Killing constants and the O'Neill scalar of the transversal rotation
// (b = 1 for the normalized Sasakian structures, 0 for flat fibrations).
struct FlowData {
  int m = 1;  // transversal dimension is 2m
  PiValue alpha;
  Rational beta{0};
  Rational b{0};
};

enum class SpectrumInfo {
  Explicit,         // complete slice by enumeration
  FirstEigenvalue,  // stored smallest eigenvalue of the squared operator
  KnownEigenvalue,  // one certified point of the spectrum, not the smallest
  None,             // structural example only
};

struct CatalogEntry {
  std::string name;
  ModelInstance model;
  SpectrumInfo info = SpectrumInfo::None;
  std::optional<PiValue> lambda1_hint;      // set for FirstEigenvalue models
  std::optional<PiValue> known_eigenvalue;  // set for KnownEigenvalue models
  std::optional<FlowData> flow;
  std::string description;
};

std::vector<CatalogEntry> catalog();
const CatalogEntry& catalog_entry(const std::string& name);

struct EigenvalueGroup {
  PiValue value;
  long hits = 0;  // admissible index tuples attaining the value, over all families
};

struct SpectrumSlice {
  std::vector<EigenvalueGroup> values;  // ascending, distinct
  PiValue cutoff;
  EnumerationCertificate certificate;
};

// Complete spectrum of the squared operator up to the cutoff.  Only models
// with SpectrumInfo::Explicit support this; others raise CapabilityError.
SpectrumSlice dirac_square_spectrum(const ModelInstance& model, const PiValue& cutoff);

struct Lambda1Result {
  PiValue value;
  std::vector<LatticePoint> attained;  // empty when the value is stored, not enumerated
  std::string provenance;              // "enumeration" or "catalog"
  std::optional<EnumerationCertificate> certificate;
};

// Smallest eigenvalue of the squared operator: certified enumeration for
// explicit models, the stored constant otherwise; CapabilityError if neither.
Lambda1Result lambda1(const ModelInstance& model);

// Independent check route for the torus: instead of the triangular
// decomposition of the dual Gram matrix, scan a plain coordinate box sized
// by a trace bound and filter exactly.  Torus models only.
SpectrumSlice torus_fourier_oracle(const ModelInstance& model, const PiValue& cutoff);

// Whether the model admits a transversal Killing spinor with the given
// flow constant (alpha, 0).  Flat models reduce to exact congruences on
// alpha/pi; curved catalog models compare against their canonical family.
struct TksCheck {
  bool applicable = true;  // false when alpha = 0 or the notion does not apply
  bool admits = false;
  std::string detail;
};
TksCheck admits_tks(const ModelInstance& model, const PiValue& alpha, double tol = 1e-9);

// Scalar curvature of a 3-dimensional minimal flow with constant data:
// 2 (4 beta^2 - b^2 - 4 alpha b).  Defined for m = 1 only.
PiValue scal_from_flow(const FlowData& flow);

}  // namespace spinflow
