#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spinflow/rational.hpp"

namespace spinflow {

using VarId = int;

// Multivariate polynomial over the rationals with sparse monomial storage.
// Used as the coefficient ring of symbolic spinor expressions, where the
// variables are the two Killing constants and the entries of the O'Neill
// form.  Everything stays exact; identity checks reduce to "all
// coefficients vanish".
class Poly {
 public:
  // Sorted (variable, exponent) pairs with positive exponents.
  using Monomial = std::vector<std::pair<VarId, int>>;

  Poly() = default;
  Poly(const Rational& c);
  Poly(long c) : Poly(Rational(c)) {}

  static Poly var(VarId v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Replaces the listed variables by constants; unlisted ones survive.
  Poly substitute(const std::map<VarId, Rational>& assignment) const;
  // Full evaluation; throws if any variable is missing from the assignment.
  Rational eval(const std::map<VarId, Rational>& assignment) const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  std::string to_string(const std::function<std::string(VarId)>& namer) const;

 private:
  std::map<Monomial, Rational> terms_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

}  // namespace spinflow
