#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinflow/rational.hpp"

namespace spinflow {

// One variable of a triangular quadratic form: contributes
// coeff * (x + sum_s lin[s] * x_s + offset)^2, where x_s runs over the
// variables introduced before this one.  coeff must be positive, which
// makes the form coercive and the sublevel enumeration finite.
struct QuadTerm {
  Rational coeff;
  std::vector<Rational> lin;
  Rational offset;
};

// Family of values q(x) over integer tuples, optionally restricted by an
// admissibility predicate on the whole tuple (predicates cannot prune the
// search, they only filter leaves).
struct SpectralFamily {
  std::string name;
  std::vector<std::string> vars;  // in introduction order
  std::vector<QuadTerm> terms;    // one per variable, same order
  std::function<bool(const std::vector<long>&)> admissible;  // null = all

  void validate() const;  // throws on non-positive coefficients or shape mismatch
};

struct LatticePoint {
  Rational value;
  std::vector<long> idx;
  std::string family;
};

// Audit record of a completed scan: the exact cutoff and, per family, a
// conservative outer box that provably contains every admissible tuple
// with value <= cutoff.
struct EnumerationCertificate {
  Rational cutoff;
  struct FamilyBox {
    std::string family;
    std::vector<std::pair<long, long>> bounds;
  };
  std::vector<FamilyBox> boxes;
  long points_scanned = 0;
};

// Every admissible tuple with q(x) <= cutoff, in no particular order.
// Ranges per level are computed exactly (rational predicate, double seed
// with exact fix-up), so the scan is complete by construction.
std::vector<LatticePoint> enumerate_below(const SpectralFamily& fam, const Rational& cutoff,
                                          EnumerationCertificate* cert = nullptr);

// Minimal admissible value of the family: a small origin-centred box scan
// seeds an upper bound, then a pruned complete enumeration below the seed
// certifies the minimum.
LatticePoint family_minimum(const SpectralFamily& fam);

// Convenience: minimum over several families plus the complete attaining
// set at that value.
struct MinimumResult {
  Rational value;
  std::vector<LatticePoint> attained;
  EnumerationCertificate certificate;
};
MinimumResult minimum_over(const std::vector<SpectralFamily>& families);

}  // namespace spinflow
