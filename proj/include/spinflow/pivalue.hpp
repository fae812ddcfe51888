#pragma once

#include <array>
#include <optional>
#include <string>

#include "spinflow/rational.hpp"

namespace spinflow {

// Exact value of the form c0 + c1*pi + c2*pi^2 + c3*pi^3 + c4*pi^4 with
// rational coefficients.  Flat-model eigenvalues are rational multiples of
// pi^2 and Killing constants are rational multiples of pi, so this ring is
// closed under every quantity the bounds produce.  Products that would
// exceed degree four throw instead of silently truncating.
class PiValue {
 public:
  static constexpr int kMaxDeg = 4;

  PiValue() = default;
  PiValue(const Rational& plain) { c_[0] = plain; }
  PiValue(long plain) { c_[0] = Rational(plain); }

  static PiValue pi(const Rational& coeff = Rational(1));
  static PiValue pi_sq(const Rational& coeff = Rational(1));
  static PiValue monomial(int degree, const Rational& coeff);

  const Rational& coeff(int degree) const { return c_.at(degree); }
  bool is_zero() const;
  bool is_plain() const;                   // no pi part at all
  std::optional<Rational> plain() const;   // value if is_plain()
  // coefficient of pi^d if the value is exactly coeff*pi^d
  std::optional<Rational> pure(int degree) const;

  PiValue operator-() const;
  PiValue operator+(const PiValue& o) const;
  PiValue operator-(const PiValue& o) const;
  PiValue operator*(const PiValue& o) const;
  PiValue operator*(const Rational& s) const;
  PiValue& operator+=(const PiValue& o) { return *this = *this + o; }
  PiValue& operator-=(const PiValue& o) { return *this = *this - o; }

  bool operator==(const PiValue& o) const { return c_ == o.c_; }
  bool operator!=(const PiValue& o) const { return !(*this == o); }
  bool operator<(const PiValue& o) const { return compare(*this, o) < 0; }
  bool operator<=(const PiValue& o) const { return compare(*this, o) <= 0; }
  bool operator>(const PiValue& o) const { return compare(*this, o) > 0; }
  bool operator>=(const PiValue& o) const { return compare(*this, o) >= 0; }

  // Sign of a-b, certified through interval arithmetic on a 200-digit
  // rational enclosure of pi.  Equal coefficient vectors short-circuit to 0;
  // distinct vectors whose gap underflows the enclosure throw.
  static int compare(const PiValue& a, const PiValue& b);

  double to_double() const;
  std::string to_string() const;  // e.g. "9/4", "-2 pi", "25/4 pi^2", "1 + 1/2 pi^2"

 private:
  std::array<Rational, kMaxDeg + 1> c_{Rational(0), Rational(0), Rational(0),
                                       Rational(0), Rational(0)};
};

inline PiValue operator*(const Rational& s, const PiValue& v) { return v * s; }

}  // namespace spinflow
