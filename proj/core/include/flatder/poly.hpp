#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flatder/bigint.hpp"
#include "flatder/ring.hpp"

namespace flatder {

/// Dense univariate polynomial in y over an exact coefficient ring.
///
/// Always stored in canonical form: the leading coefficient is nonzero and
/// the zero polynomial has no coefficients at all, so structural equality
/// is polynomial equality.
template <class Coeff>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(Coeff c) { return Poly(std::vector<Coeff>{std::move(c)}); }

  static Poly monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> coeffs(degree + 1, Coeff(0));
    coeffs[degree] = std::move(c);
    return Poly(std::move(coeffs));
  }

  /// The indeterminate y itself.
  static Poly y() { return monomial(Coeff(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree in y; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  /// Constant term as a ring element when the polynomial is constant.
  std::optional<Coeff> as_constant() const {
    if (coeffs_.empty()) return Coeff(0);
    if (coeffs_.size() == 1) return coeffs_[0];
    return std::nullopt;
  }

  Coeff evaluate(const Coeff& at) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
  }

  Poly& operator*=(const Coeff& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  /// Multiplies by y^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> coeffs(k, Coeff(0));
    coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(coeffs));
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Coeff& scalar) { return lhs *= scalar; }
  friend Poly operator*(const Coeff& scalar, Poly rhs) { return rhs *= scalar; }

  friend Poly operator-(Poly p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Coeff> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (sgn(lhs.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// Human-readable form, ascending in y: "5y + 2y^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Coeff& c = coeffs_[k];
      if (sgn(c) == 0) continue;
      Coeff magnitude = abs(c);
      if (out.empty()) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      const std::string digits = flatder::to_string(magnitude);
      const bool fraction = digits.find('/') != std::string::npos;
      if (k == 0) {
        out += digits;
      } else {
        if (magnitude != 1) out += fraction ? "(" + digits + ")" : digits;
        out += "y";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using YPoly = Poly<BigInt>;
using RationalYPoly = Poly<Rational>;

/// Exact conversion of a rational polynomial whose coefficients are all
/// integers; throws std::domain_error otherwise.
inline YPoly to_integer_poly(const RationalYPoly& p) {
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_integer(c));
  return YPoly(std::move(out));
}

inline RationalYPoly to_rational_poly(const YPoly& p) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  return RationalYPoly(std::move(out));
}

template <class Coeff>
struct RingTraits<Poly<Coeff>> {
  static Poly<Coeff> zero() { return {}; }
  static Poly<Coeff> one() { return Poly<Coeff>::constant(Coeff(1)); }
  static bool is_zero(const Poly<Coeff>& a) { return a.is_zero(); }
  static std::optional<Poly<Coeff>> invert(const Poly<Coeff>& a) {
    if (a.degree() != 0) return std::nullopt;
    auto inverse = RingTraits<Coeff>::invert(a.coeff(0));
    if (!inverse) return std::nullopt;
    return Poly<Coeff>::constant(*inverse);
  }
};

}  // namespace flatder
