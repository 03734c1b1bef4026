#include "flatder/closedform.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace flatder::closedform {

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

// Rows of the Stirling triangle, grown on demand and shared across calls.
class StirlingTable {
 public:
  BigInt get(int n, int k) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) extend();
    if (k < 0 || k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  void extend() {
    const int n = static_cast<int>(rows_.size());
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows_.back();
      for (int k = 1; k <= n; ++k) {
        BigInt value = k < n ? BigInt(k * prev[static_cast<std::size_t>(k)]) : BigInt(0);
        value += prev[static_cast<std::size_t>(k - 1)];
        row[static_cast<std::size_t>(k)] = value;
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

Rational signed_term(int j, const BigInt& magnitude) {
  return j % 2 == 0 ? Rational(magnitude) : Rational(-magnitude);
}

}  // namespace

BigInt binomial(long a, long b) {
  require_nonnegative(a, "binomial top");
  if (b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

BigInt stirling2(int n, int k) {
  require_nonnegative(n, "stirling n");
  return stirling_table().get(n, k);
}

BigInt bell(int n) {
  require_nonnegative(n, "bell n");
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

BigInt catalan(int n) {
  require_nonnegative(n, "catalan n");
  // C_{n+1} = sum_{k=0}^{n} C_k C_{n-k}
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 0; k < m; ++k) {
      c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

YPoly fibonacci_poly(int n) {
  require_nonnegative(n, "fibonacci index");
  std::vector<BigInt> coeffs;
  for (int k = 0; 2 * k <= n; ++k) coeffs.push_back(binomial(n - k, k));
  return YPoly(std::move(coeffs));
}

BigInt catalan_power_coeff(int a, int b) {
  require_nonnegative(a, "catalan power exponent a");
  if (b < 1) throw std::invalid_argument("catalan power b must be at least 1");
  return to_integer(ratio(binomial(2L * a + b - 1, a) * b, a + b));
}

BigInt count_31_2_by_cycles(int n, int m) {
  if (m < 1 || n < 2 || 2 * m > n) return 0;
  const long nl = n;
  const long ml = m;
  Rational first = 0;
  for (long j = 0; j <= ml - 2; ++j) {
    first += signed_term(static_cast<int>(j),
                         binomial(ml - 2, j) * binomial(2 * nl - 2 * j - 3, nl - ml - 2));
  }
  first *= ratio(2 * (ml - 1), nl - ml);
  Rational second = 0;
  for (long j = 0; j <= ml - 1; ++j) {
    second += signed_term(static_cast<int>(j),
                          binomial(ml - 1, j) * binomial(2 * nl - 2 * j - 2, nl - ml - 1));
  }
  second /= Rational(nl - ml);
  return to_integer(first + second);
}

IdentitySides matching_identity_sides(int m) {
  require_nonnegative(m, "identity m");
  const long ml = m;
  Rational first = 0;
  for (long j = 0; j <= ml - 1; ++j) {
    first += signed_term(static_cast<int>(j), binomial(ml - 1, j) * binomial(4 * ml - 2 * j + 1, ml - 1));
  }
  first *= ratio(2 * ml, ml + 1);
  Rational second = 0;
  for (long j = 0; j <= ml; ++j) {
    second += signed_term(static_cast<int>(j), binomial(ml, j) * binomial(4 * ml - 2 * j + 2, ml));
  }
  second /= Rational(ml + 1);
  return {Rational(pow_int(2, static_cast<unsigned>(m))), first + second};
}

bool identity_cor_matchings(int m) {
  const auto sides = matching_identity_sides(m);
  return sides.lhs == sides.rhs;
}

BigInt count_12_3_total(int n) {
  if (n < 3) throw std::invalid_argument("count_12_3_total needs n >= 3");
  BigInt sum = bell(n - 2);
  for (int j = 1; j <= n - 3; ++j) {
    for (int r = j; r <= n - 3; ++r) {
      // pow_int follows mpz_pow_ui, which gives 0^0 = 1.
      sum += j * stirling2(r, j) * pow_int(j - 1, static_cast<unsigned>(n - r - 3));
    }
  }
  return sum;
}

RationalYPoly e_coeff_a(int n) {
  if (n < 2) throw std::invalid_argument("e_coeff_a needs n >= 2");
  const RationalYPoly y = RationalYPoly::y();
  RationalYPoly back2 = y * ratio(1, 2);   // a_2
  if (n == 2) return back2;
  RationalYPoly back1 = y * ratio(-1, 6);  // a_3
  for (int k = 2; k + 2 <= n; ++k) {
    // a_{k+2} = (y + (y+1)k) / ((k+1)(k+2)) a_k - k/(k+2) a_{k+1}
    const RationalYPoly numerator = RationalYPoly{Rational(k), Rational(k + 1)};
    RationalYPoly next = numerator * back2 * ratio(1, (k + 1) * (k + 2)) -
                         back1 * ratio(k, k + 2);
    back2 = std::move(back1);
    back1 = std::move(next);
  }
  return back1;
}

YPoly e_poly_via_stirling(int n) {
  if (n < 2) throw std::invalid_argument("e_poly_via_stirling needs n >= 2");
  RationalYPoly sum;
  for (int k = 2; k <= n; ++k) {
    sum += e_coeff_a(k) * Rational(stirling2(n, k) * factorial(static_cast<unsigned>(k)));
  }
  return to_integer_poly(sum);
}

TridiagonalSpec::TridiagonalSpec(int size) : size_(size) {
  require_nonnegative(size, "matrix size");
}

RationalYPoly TridiagonalSpec::entry(int row, int col) const {
  if (row < 1 || col < 1 || row > size_ || col > size_) {
    throw std::out_of_range("matrix index out of range");
  }
  if (row == col) return RationalYPoly::constant(Rational(-row));
  if (col == row + 1) return RationalYPoly::constant(Rational(-(row + 2)));
  if (row == col + 1) {
    // Row r carries y + r/(r+1) on the subdiagonal.
    return RationalYPoly{ratio(row, row + 1), Rational(1)};
  }
  return {};
}

RationalYPoly TridiagonalSpec::determinant() const {
  RationalYPoly back2 = RationalYPoly::constant(1);  // det of the empty leading block
  if (size_ == 0) return back2;
  RationalYPoly back1 = entry(1, 1);
  for (int k = 2; k <= size_; ++k) {
    RationalYPoly next = entry(k, k) * back1 - entry(k, k - 1) * entry(k - 1, k) * back2;
    back2 = std::move(back1);
    back1 = std::move(next);
  }
  return back1;
}

YPoly e_poly_via_determinant(int n) {
  if (n < 2) throw std::invalid_argument("e_poly_via_determinant needs n >= 2");
  RationalYPoly sum;
  for (int k = 2; k <= n; ++k) {
    sum += TridiagonalSpec(k - 2).determinant() * Rational(stirling2(n, k));
  }
  return to_integer_poly(RationalYPoly::y() * sum);
}

}  // namespace flatder::closedform
