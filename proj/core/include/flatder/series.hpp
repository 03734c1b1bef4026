#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "flatder/ring.hpp"

namespace flatder {

/// Power series in x truncated after x^order, with coefficients in an
/// exact ring. Arithmetic is exact below the truncation order; operands
/// must share the same order.
template <ExactRing R>
class Series {
 public:
  explicit Series(int order = 0) : coeffs_(checked_size(order), RingTraits<R>::zero()) {}

  static Series from_coeffs(int order, std::vector<R> coeffs) {
    Series out(order);
    for (std::size_t n = 0; n < coeffs.size() && n < out.coeffs_.size(); ++n) {
      out.coeffs_[n] = std::move(coeffs[n]);
    }
    return out;
  }

  /// The constant series c.
  static Series constant(int order, R c) {
    Series out(order);
    out.coeffs_[0] = std::move(c);
    return out;
  }

  /// c x^k.
  static Series monomial(int order, R c, int k) {
    Series out(order);
    if (k <= order) out.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    return out;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  R& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Coefficient of x^n, zero beyond the truncation order.
  R coeff(int n) const {
    return (n >= 0 && n <= order()) ? coeffs_[static_cast<std::size_t>(n)] : RingTraits<R>::zero();
  }

  const std::vector<R>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient; order()+1 for the zero series.
  int valuation() const {
    for (int n = 0; n <= order(); ++n) {
      if (!RingTraits<R>::is_zero(coeffs_[static_cast<std::size_t>(n)])) return n;
    }
    return order() + 1;
  }

  bool is_zero() const { return valuation() > order(); }

  Series truncated(int order) const {
    Series out(order);
    for (int n = 0; n <= order && n <= this->order(); ++n) {
      out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)];
    }
    return out;
  }

  /// Multiplies by x^k, dropping what falls past the order.
  Series shifted(int k) const {
    Series out(order());
    for (int n = order() - k; n >= 0; --n) {
      out.coeffs_[static_cast<std::size_t>(n + k)] = coeffs_[static_cast<std::size_t>(n)];
    }
    return out;
  }

  Series& operator+=(const Series& rhs) {
    require_same_order(rhs);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
  }

  Series& operator-=(const Series& rhs) {
    require_same_order(rhs);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
  }

  /// Coefficientwise scaling by a ring element.
  Series& operator*=(const R& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  Series& operator*=(const Series& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const R& scalar) { return lhs *= scalar; }

  friend Series operator-(const Series& s) {
    Series out(s.order());
    for (std::size_t n = 0; n < s.coeffs_.size(); ++n) out.coeffs_[n] -= s.coeffs_[n];
    return out;
  }

  friend Series operator*(const Series& lhs, const Series& rhs) {
    lhs.require_same_order(rhs);
    const int order = lhs.order();
    Series out(order);
    for (int i = 0; i <= order; ++i) {
      const R& a = lhs.coeffs_[static_cast<std::size_t>(i)];
      if (RingTraits<R>::is_zero(a)) continue;
      for (int j = 0; i + j <= order; ++j) {
        const R& b = rhs.coeffs_[static_cast<std::size_t>(j)];
        if (RingTraits<R>::is_zero(b)) continue;
        R product = a;
        product *= b;
        out.coeffs_[static_cast<std::size_t>(i + j)] += product;
      }
    }
    return out;
  }

  friend bool operator==(const Series& lhs, const Series& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// Applies `f` to every coefficient.
  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(coeffs_[0]))>;
    Series<Out> out(order());
    for (int n = 0; n <= order(); ++n) out[n] = f(coeffs_[static_cast<std::size_t>(n)]);
    return out;
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    return static_cast<std::size_t>(order) + 1;
  }

  void require_same_order(const Series& rhs) const {
    if (rhs.order() != order()) {
      throw std::invalid_argument("series orders differ: " + std::to_string(order()) + " vs " +
                                  std::to_string(rhs.order()));
    }
  }

  std::vector<R> coeffs_;
};

/// q with den * q = num, for a denominator whose constant term is a unit.
/// Throws std::domain_error otherwise.
template <ExactRing R>
Series<R> divide(const Series<R>& num, const Series<R>& den) {
  if (num.order() != den.order()) throw std::invalid_argument("series orders differ");
  auto inverse = RingTraits<R>::invert(den[0]);
  if (!inverse) throw std::domain_error("denominator constant term is not a unit");
  const int order = num.order();
  Series<R> out(order);
  for (int n = 0; n <= order; ++n) {
    R acc = num[n];
    for (int k = 1; k <= n; ++k) {
      if (RingTraits<R>::is_zero(den[k])) continue;
      R product = den[k];
      product *= out[n - k];
      acc -= product;
    }
    acc *= *inverse;
    out[n] = std::move(acc);
  }
  return out;
}

template <ExactRing R>
Series<R> reciprocal(const Series<R>& s) {
  return divide(Series<R>::constant(s.order(), RingTraits<R>::one()), s);
}

/// s / (1 - c x), by b_n = s_n + c b_{n-1}.
template <ExactRing R>
Series<R> divide_one_minus_cx(const Series<R>& s, const R& c) {
  Series<R> out(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    R value = s[n];
    if (n > 0) {
      R carry = out[n - 1];
      carry *= c;
      value += carry;
    }
    out[n] = std::move(value);
  }
  return out;
}

}  // namespace flatder
