#include "spinflow/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace spinflow {

std::optional<Rational> parse_rational(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
  }

  std::string intpart, fracpart, denpart;
  std::string* cur = &intpart;
  for (char c : s) {
    if (c == '.') {
      if (cur != &intpart || !denpart.empty()) return std::nullopt;
      cur = &fracpart;
    } else if (c == '/') {
      if (cur == &denpart || !fracpart.empty()) return std::nullopt;
      cur = &denpart;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur->push_back(c);
    } else {
      return std::nullopt;
    }
  }
  if (intpart.empty() && fracpart.empty()) return std::nullopt;

  Rational q;
  if (cur == &denpart) {
    if (intpart.empty() || denpart.empty()) return std::nullopt;
    BigInt den(denpart);
    if (den == 0) return std::nullopt;
    q = Rational(BigInt(intpart), den);
  } else {
    BigInt num(intpart.empty() ? "0" : intpart);
    BigInt den(1);
    for (char c : fracpart) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    q = Rational(num, den);
  }
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

BigInt floor_sqrt(const Rational& q) {
  if (q < 0) throw std::domain_error("floor_sqrt of negative value");
  // floor(sqrt(n/d)) = floor(sqrt(floor(n*d))/d); work with n*d to stay integral.
  BigInt nd = q.get_num() * q.get_den();
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), nd.get_mpz_t());
  BigInt r = root / q.get_den();
  // Adjust for the division floor: r is the candidate, verify exactly.
  while (Rational(r + 1) * Rational(r + 1) <= q) r += 1;
  while (r > 0 && Rational(r) * Rational(r) > q) r -= 1;
  return r;
}

GaussRat GaussRat::i_pow(long k) {
  k %= 4;
  if (k < 0) k += 4;
  switch (k) {
    case 0: return GaussRat(Rational(1));
    case 1: return GaussRat(Rational(0), Rational(1));
    case 2: return GaussRat(Rational(-1));
    default: return GaussRat(Rational(0), Rational(-1));
  }
}

GaussRat GaussRat::operator/(const GaussRat& o) const {
  Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero Gaussian rational");
  GaussRat p = *this * o.conj();
  return GaussRat(p.re / n, p.im / n);
}

std::string to_string(const GaussRat& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im = to_string(z.im) + "i";
  if (z.re == 0) return im;
  if (z.im > 0) return to_string(z.re) + "+" + im;
  return to_string(z.re) + im;
}

}  // namespace spinflow
