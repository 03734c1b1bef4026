#include "flatder/uvy_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace flatder {

UVYPoly::UVYPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

UVYPoly UVYPoly::term(const Rational& c, Monomial m) {
  UVYPoly out;
  if (sgn(c) != 0) out.terms_.emplace(m, c);
  return out;
}

UVYPoly UVYPoly::from_ypoly(const YPoly& p) {
  UVYPoly out;
  const auto coeffs = p.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) != 0) out.terms_.emplace(Monomial{0, 0, static_cast<int>(k)}, Rational(coeffs[k]));
  }
  return out;
}

Rational UVYPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> UVYPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Monomial{}) return terms_.begin()->second;
  return std::nullopt;
}

Monomial UVYPoly::max_degrees() const {
  Monomial out;
  for (const auto& [m, c] : terms_) {
    out.u = std::max(out.u, m.u);
    out.v = std::max(out.v, m.v);
    out.y = std::max(out.y, m.y);
  }
  return out;
}

void UVYPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

UVYPoly& UVYPoly::operator+=(const UVYPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

UVYPoly& UVYPoly::operator-=(const UVYPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

UVYPoly& UVYPoly::operator*=(const UVYPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

UVYPoly operator*(const UVYPoly& lhs, const UVYPoly& rhs) {
  UVYPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  Rational product;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      product = ca * cb;
      out.add_term({ma.u + mb.u, ma.v + mb.v, ma.y + mb.y}, product);
    }
  }
  return out;
}

UVYPoly operator-(UVYPoly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

UVYPoly UVYPoly::times_monomial(Monomial shift) const {
  UVYPoly out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), Monomial{m.u + shift.u, m.v + shift.v, m.y + shift.y}, c);
  }
  return out;
}

UVYPoly UVYPoly::substitute(const Substitution& s) const {
  UVYPoly out;
  for (const auto& [m, c] : terms_) {
    const Monomial image{m.u * s.u_to.u + m.v * s.v_to.u, m.u * s.u_to.v + m.v * s.v_to.v, m.y};
    out.add_term(image, c);
  }
  return out;
}

UVYPoly UVYPoly::at_v_zero() const {
  UVYPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.v == 0) out.terms_.emplace(m, c);
  }
  return out;
}

UVYPoly UVYPoly::divide_one_minus_v() const {
  // Group by (u, y); within a group P(v) = (1 - v) Q(v) forces
  // Q_k = P_0 + ... + P_k and P(1) = 0.
  std::map<std::pair<int, int>, std::map<int, Rational>> groups;
  for (const auto& [m, c] : terms_) groups[{m.u, m.y}][m.v] = c;
  UVYPoly out;
  for (const auto& [key, by_v] : groups) {
    const int top = by_v.rbegin()->first;
    Rational running = 0;
    for (int k = 0; k <= top; ++k) {
      auto it = by_v.find(k);
      if (it != by_v.end()) running += it->second;
      if (k < top) {
        out.add_term({key.first, k, key.second}, running);
      } else if (sgn(running) != 0) {
        throw std::domain_error("polynomial is not divisible by (1 - v)");
      }
    }
  }
  return out;
}

UVYPoly UVYPoly::divide_u() const {
  UVYPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.u == 0) throw std::domain_error("polynomial is not divisible by u");
    out.terms_.emplace(Monomial{m.u - 1, m.v, m.y}, c);
  }
  return out;
}

UVYPoly UVYPoly::y_part(int k) const {
  UVYPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.y == k) out.terms_.emplace(Monomial{m.u, m.v, 0}, c);
  }
  return out;
}

YPoly UVYPoly::at_uv_one() const {
  std::vector<Rational> sums;
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(sums.size()) <= m.y) sums.resize(static_cast<std::size_t>(m.y) + 1, Rational(0));
    sums[static_cast<std::size_t>(m.y)] += c;
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(sums.size());
  for (const auto& s : sums) coeffs.push_back(to_integer(s));
  return YPoly(std::move(coeffs));
}

std::string UVYPoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto power = [](char var, int e) {
    std::string out(1, var);
    if (e > 1) out += "^" + std::to_string(e);
    return out;
  };
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    std::vector<std::string> factors;
    if (magnitude != 1 || m == Monomial{}) factors.push_back(flatder::to_string(magnitude));
    if (m.u) factors.push_back(power('u', m.u));
    if (m.v) factors.push_back(power('v', m.v));
    if (m.y) factors.push_back(power('y', m.y));
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

}  // namespace flatder
