#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spinflow {

// All internal arithmetic is exact.  Rationals are GMP-backed because
// eigenvalue comparisons accumulate denominators from many independent
// sources (metric entries, spin shifts, deformation parameters) and the
// common denominator quickly outgrows 64 bits.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "p/q" and plain decimals ("-0.25").  Returns nothing on any
// other shape; callers decide whether that is a usage error.
std::optional<Rational> parse_rational(std::string_view s);

// Largest integer x with x*x <= q (q >= 0), used to seed enumeration ranges.
BigInt floor_sqrt(const Rational& q);

// Complex numbers with exact rational parts.  This is the scalar field of
// every spinor representation here; all matrix entries stay in it.
struct GaussRat {
  Rational re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rational r) : re(std::move(r)), im(0) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }
  // i^k for any integer k.
  static GaussRat i_pow(long k);

  bool is_zero() const { return re == 0 && im == 0; }

  GaussRat conj() const { return GaussRat(re, -im); }
  Rational norm() const { return re * re + im * im; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussRat operator/(const GaussRat& o) const;

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

std::string to_string(const GaussRat& z);

}  // namespace spinflow
