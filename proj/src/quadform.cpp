#include "spinflow/quadform.hpp"

#include <cmath>
#include <stdexcept>

namespace spinflow {

void SpectralFamily::validate() const {
  if (vars.size() != terms.size())
    throw std::invalid_argument("family has mismatched vars/terms");
  if (vars.empty()) throw std::invalid_argument("family needs at least one variable");
  for (size_t t = 0; t < terms.size(); ++t) {
    if (terms[t].coeff <= 0)
      throw std::invalid_argument("family '" + name + "' has a non-positive coefficient");
    if (terms[t].lin.size() != t)
      throw std::invalid_argument("family '" + name + "' has a malformed linear part");
  }
}

namespace {

constexpr long kIndexGuard = 1000000;

// Exact integer solutions of coeff*(x + center)^2 <= budget.
std::optional<std::pair<long, long>> exact_range(const Rational& coeff,
                                                 const Rational& center,
                                                 const Rational& budget) {
  if (budget < 0) return std::nullopt;
  Rational T = budget / coeff;
  auto inside = [&](long x) {
    Rational v = Rational(x) + center;
    return v * v <= T;
  };

  double c = to_double(center);
  double s = std::sqrt(std::max(0.0, to_double(T)));
  if (-c + s > double(kIndexGuard) || -c - s < -double(kIndexGuard))
    throw std::domain_error("enumeration range exceeds the index guard; cutoff too large");

  long hi = long(std::floor(-c + s));
  int iter = 0;
  while (inside(hi + 1)) {
    ++hi;
    if (++iter > 64) throw std::runtime_error("range fix-up failed to converge");
  }
  while (!inside(hi)) {
    --hi;
    if (++iter > 128) return std::nullopt;  // interval holds no integer
  }

  long lo = long(std::ceil(-c - s));
  iter = 0;
  while (inside(lo - 1)) {
    --lo;
    if (++iter > 64) throw std::runtime_error("range fix-up failed to converge");
  }
  while (!inside(lo)) {
    ++lo;
    if (++iter > 128) return std::nullopt;
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

Rational term_center(const QuadTerm& term, const std::vector<long>& fixed) {
  Rational c = term.offset;
  for (size_t s = 0; s < term.lin.size(); ++s) c += term.lin[s] * Rational(fixed[s]);
  return c;
}

// Depth-first scan with exact per-level ranges.  budget may shrink between
// leaves (branch and bound); visit returns the new budget.
void scan(const SpectralFamily& fam, size_t depth, std::vector<long>& idx,
          const Rational& partial, Rational& budget, long& scanned,
          const std::function<void(const std::vector<long>&, const Rational&)>& visit) {
  const QuadTerm& term = fam.terms[depth];
  Rational center = term_center(term, idx);
  auto range = exact_range(term.coeff, center, budget - partial);
  if (!range) return;
  for (long x = range->first; x <= range->second; ++x) {
    Rational v = Rational(x) + center;
    Rational sum = partial + term.coeff * v * v;
    if (sum > budget) continue;  // budget may have shrunk mid-range
    idx.push_back(x);
    if (depth + 1 == fam.terms.size()) {
      ++scanned;
      if (!fam.admissible || fam.admissible(idx)) visit(idx, sum);
    } else {
      scan(fam, depth + 1, idx, sum, budget, scanned, visit);
    }
    idx.pop_back();
  }
}

// Conservative outer box: level ranges computed against the full cutoff
// with interval bounds on the centers from the outer levels.
std::vector<std::pair<long, long>> outer_box(const SpectralFamily& fam,
                                             const Rational& cutoff) {
  std::vector<std::pair<long, long>> box;
  std::vector<std::pair<Rational, Rational>> var_range;  // real bounds per var
  for (size_t t = 0; t < fam.terms.size(); ++t) {
    const QuadTerm& term = fam.terms[t];
    // center interval from already-boxed variables
    Rational clo = term.offset, chi = term.offset;
    for (size_t s = 0; s < term.lin.size(); ++s) {
      Rational a = term.lin[s] * var_range[s].first;
      Rational b = term.lin[s] * var_range[s].second;
      clo += std::min(a, b);
      chi += std::max(a, b);
    }
    // |x + c| <= sqrt(cutoff/coeff) <= root+1 with integer root
    Rational s_up = Rational(floor_sqrt(cutoff / term.coeff) + 1);
    Rational xlo = -chi - s_up, xhi = -clo + s_up;
    if (xlo < -kIndexGuard || xhi > kIndexGuard)
      throw std::domain_error("certificate box exceeds the index guard");
    // floor/ceil to integers
    long lo = long(std::ceil(to_double(xlo))) - 1;
    long hi = long(std::floor(to_double(xhi))) + 1;
    box.emplace_back(lo, hi);
    var_range.emplace_back(Rational(lo), Rational(hi));
  }
  return box;
}

}  // namespace

std::vector<LatticePoint> enumerate_below(const SpectralFamily& fam, const Rational& cutoff,
                                          EnumerationCertificate* cert) {
  fam.validate();
  std::vector<LatticePoint> hits;
  if (cutoff >= 0) {
    Rational budget = cutoff;
    std::vector<long> idx;
    long scanned = 0;
    scan(fam, 0, idx, Rational(0), budget, scanned,
         [&](const std::vector<long>& point, const Rational& value) {
           hits.push_back({value, point, fam.name});
         });
    if (cert) {
      cert->points_scanned += scanned;
      cert->boxes.push_back({fam.name, outer_box(fam, cutoff)});
    }
  } else if (cert) {
    cert->boxes.push_back({fam.name, {}});
  }
  if (cert) cert->cutoff = cutoff;
  return hits;
}

LatticePoint family_minimum(const SpectralFamily& fam) {
  fam.validate();
  const size_t d = fam.vars.size();

  // Seed: best admissible value in a small origin-centred box.
  std::optional<LatticePoint> seed;
  for (long radius : {3L, 6L, 12L}) {
    std::vector<long> idx(d, -radius);
    while (true) {
      if (!fam.admissible || fam.admissible(idx)) {
        Rational v(0);
        for (size_t t = 0; t < d; ++t) {
          Rational c = Rational(idx[t]) + term_center(fam.terms[t], idx);
          v += fam.terms[t].coeff * c * c;
        }
        if (!seed || v < seed->value) seed = LatticePoint{v, idx, fam.name};
      }
      size_t t = 0;
      while (t < d && ++idx[t] > radius) idx[t++] = -radius;
      if (t == d) break;
    }
    if (seed) break;
  }
  if (!seed) throw std::domain_error("family '" + fam.name + "' has no admissible point near the origin");

  // Certify: complete pruned scan below the seed value.
  Rational budget = seed->value;
  LatticePoint best = *seed;
  std::vector<long> idx;
  long scanned = 0;
  scan(fam, 0, idx, Rational(0), budget, scanned,
       [&](const std::vector<long>& point, const Rational& value) {
         if (value < best.value) {
           best = LatticePoint{value, point, fam.name};
           budget = value;  // tighten the bound for the remaining subtree
         }
       });
  return best;
}

MinimumResult minimum_over(const std::vector<SpectralFamily>& families) {
  if (families.empty()) throw std::invalid_argument("no families given");
  std::optional<Rational> best;
  for (const SpectralFamily& fam : families) {
    LatticePoint p = family_minimum(fam);
    if (!best || p.value < *best) best = p.value;
  }
  MinimumResult result;
  result.value = *best;
  result.certificate.cutoff = *best;
  for (const SpectralFamily& fam : families) {
    for (LatticePoint& p : enumerate_below(fam, *best, &result.certificate))
      if (p.value == *best) result.attained.push_back(std::move(p));
  }
  return result;
}

}  // namespace spinflow
