#include "spinflow/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace spinflow {

namespace {

Poly::Monomial merge_monomials(const Poly::Monomial& a, const Poly::Monomial& b) {
  Poly::Monomial r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  while (i < a.size()) r.push_back(a[i++]);
  while (j < b.size()) r.push_back(b[j++]);
  return r;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

Poly Poly::var(VarId v) {
  Poly p;
  p.terms_[Monomial{{v, 1}}] = Rational(1);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int Poly::total_degree() const {
  int deg = 0;
  for (const auto& [mono, c] : terms_) {
    int d = 0;
    for (const auto& [v, e] : mono) d += e;
    if (d > deg) deg = d;
  }
  return deg;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [mono, c] : terms_) r.terms_[mono] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [mono, c] : o.terms_) {
    auto it = r.terms_.find(mono);
    if (it == r.terms_.end()) {
      r.terms_[mono] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = merge_monomials(ma, mb);
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        Rational c = ca * cb;
        if (c != 0) r.terms_[std::move(m)] = c;
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return Poly();
  Poly r;
  for (const auto& [mono, c] : terms_) r.terms_[mono] = c * s;
  return r;
}

Poly Poly::substitute(const std::map<VarId, Rational>& assignment) const {
  Poly r;
  for (const auto& [mono, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [v, e] : mono) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        rest.emplace_back(v, e);
      } else {
        for (int k = 0; k < e; ++k) coeff *= it->second;
      }
    }
    if (coeff == 0) continue;
    Poly term;
    term.terms_[std::move(rest)] = coeff;
    r += term;
  }
  return r;
}

Rational Poly::eval(const std::map<VarId, Rational>& assignment) const {
  Poly r = substitute(assignment);
  if (r.is_zero()) return Rational(0);
  if (!r.is_constant()) throw std::invalid_argument("evaluation left free variables");
  return r.terms_.begin()->second;
}

std::string Poly::to_string(const std::function<std::string(VarId)>& namer) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational a = c;
    if (first) {
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::vector<std::string> parts;
    if (mono.empty() || a != 1) parts.push_back(spinflow::to_string(a));
    for (const auto& [v, e] : mono) {
      std::string t = namer(v);
      if (e > 1) t += "^" + std::to_string(e);
      parts.push_back(std::move(t));
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out << "*";
      out << parts[i];
    }
  }
  return out.str();
}

}  // namespace spinflow
