#include "spinflow/pivalue.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinflow {

namespace {

// First 200 decimals of pi; lower bound of the enclosure, upper bound is
// one ulp (10^-200) above.
const char* const kPiDigits =
    "14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679"
    "82148086513282306647093844609550582231725359408128"
    "48111745028410270193852110555964462294895493038196";

struct PiEnclosure {
  Rational lo, hi;
};

const PiEnclosure& pi_enclosure() {
  static const PiEnclosure enc = [] {
    BigInt den(1);
    for (int i = 0; i < 200; ++i) den *= 10;
    BigInt num = den * 3;
    BigInt frac(kPiDigits);
    num += frac;
    PiEnclosure e;
    e.lo = Rational(num, den);
    e.lo.canonicalize();
    e.hi = Rational(num + 1, den);
    e.hi.canonicalize();
    return e;
  }();
  return enc;
}

struct Interval {
  Rational lo, hi;
};

Interval interval_mul(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Interval r{p1, p1};
  for (const Rational* p : {&p2, &p3, &p4}) {
    if (*p < r.lo) r.lo = *p;
    if (*p > r.hi) r.hi = *p;
  }
  return r;
}

}  // namespace

PiValue PiValue::pi(const Rational& coeff) { return monomial(1, coeff); }

PiValue PiValue::pi_sq(const Rational& coeff) { return monomial(2, coeff); }

PiValue PiValue::monomial(int degree, const Rational& coeff) {
  if (degree < 0 || degree > kMaxDeg) throw std::invalid_argument("pi power out of range");
  PiValue v;
  v.c_[degree] = coeff;
  return v;
}

bool PiValue::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool PiValue::is_plain() const {
  for (int d = 1; d <= kMaxDeg; ++d)
    if (c_[d] != 0) return false;
  return true;
}

std::optional<Rational> PiValue::plain() const {
  if (!is_plain()) return std::nullopt;
  return c_[0];
}

std::optional<Rational> PiValue::pure(int degree) const {
  for (int d = 0; d <= kMaxDeg; ++d)
    if (d != degree && c_[d] != 0) return std::nullopt;
  return c_[degree];
}

PiValue PiValue::operator-() const {
  PiValue r;
  for (int d = 0; d <= kMaxDeg; ++d) r.c_[d] = -c_[d];
  return r;
}

PiValue PiValue::operator+(const PiValue& o) const {
  PiValue r;
  for (int d = 0; d <= kMaxDeg; ++d) r.c_[d] = c_[d] + o.c_[d];
  return r;
}

PiValue PiValue::operator-(const PiValue& o) const {
  PiValue r;
  for (int d = 0; d <= kMaxDeg; ++d) r.c_[d] = c_[d] - o.c_[d];
  return r;
}

PiValue PiValue::operator*(const PiValue& o) const {
  PiValue r;
  for (int d1 = 0; d1 <= kMaxDeg; ++d1) {
    if (c_[d1] == 0) continue;
    for (int d2 = 0; d2 <= kMaxDeg; ++d2) {
      if (o.c_[d2] == 0) continue;
      if (d1 + d2 > kMaxDeg) throw std::domain_error("pi-polynomial degree overflow");
      r.c_[d1 + d2] += c_[d1] * o.c_[d2];
    }
  }
  return r;
}

PiValue PiValue::operator*(const Rational& s) const {
  PiValue r;
  for (int d = 0; d <= kMaxDeg; ++d) r.c_[d] = c_[d] * s;
  return r;
}

int PiValue::compare(const PiValue& a, const PiValue& b) {
  PiValue d = a - b;
  if (d.is_zero()) return 0;

  const PiEnclosure& enc = pi_enclosure();
  Interval pow{Rational(1), Rational(1)};
  Interval acc{d.c_[0], d.c_[0]};
  for (int deg = 1; deg <= kMaxDeg; ++deg) {
    pow = interval_mul(pow, Interval{enc.lo, enc.hi});
    Interval term = interval_mul(Interval{d.c_[deg], d.c_[deg]}, pow);
    acc.lo += term.lo;
    acc.hi += term.hi;
  }
  if (acc.lo > 0) return 1;
  if (acc.hi < 0) return -1;
  // Coefficients differ yet the 200-digit enclosure cannot separate the
  // values; refuse to guess.
  throw std::runtime_error("pi-value comparison below enclosure resolution");
}

double PiValue::to_double() const {
  const double kPi = 3.14159265358979323846;
  double acc = 0.0, p = 1.0;
  for (int d = 0; d <= kMaxDeg; ++d) {
    acc += spinflow::to_double(c_[d]) * p;
    p *= kPi;
  }
  return acc;
}

std::string PiValue::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int d = 0; d <= kMaxDeg; ++d) {
    if (c_[d] == 0) continue;
    Rational c = c_[d];
    if (first) {
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    out << spinflow::to_string(c);
    if (d == 1) out << " pi";
    if (d >= 2) out << " pi^" << d;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace spinflow
