#include "flatder/recurrence.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "flatder/oracle.hpp"
#include "flatder/vincular.hpp"

namespace flatder::recurrence {

namespace {

const YPoly kY = YPoly::y();

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
}

BigInt binomial(unsigned long top, unsigned long bottom) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), top, bottom);
  return out;
}

// Row of a single-index triangle as a dense vector indexed by i; the
// vector has size n+1 and unused slots stay zero.
using DenseRow = std::vector<YPoly>;

RefinedTable table_from_dense(const char* pattern, int n, const DenseRow& row, int first, int last) {
  RefinedTable table{pattern, n, {}, {}};
  for (int i = first; i <= last; ++i) table.entries[{i, 0}] = row[static_cast<std::size_t>(i)];
  return table;
}

YPoly dense_total(const DenseRow& row) {
  YPoly sum;
  for (const auto& p : row) sum += p;
  return sum;
}

// Square table indexed [i][j] with 1 <= i < j <= n.
using PairRow = std::vector<std::vector<YPoly>>;

PairRow make_pair_row(int n) {
  return PairRow(static_cast<std::size_t>(n) + 1, std::vector<YPoly>(static_cast<std::size_t>(n) + 1));
}

YPoly pair_total(const PairRow& row, int n) {
  YPoly sum;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) sum += row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return sum;
}

void store_pairs(std::map<TableKey, YPoly>& out, const PairRow& row, int n) {
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out[{i, j}] = row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
}

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

}  // namespace

YPoly dist_13_2(int n) {
  require_positive(n);
  if (n == 1) return {};
  // f_0 = f_1 = 1, f_k = f_{k-1} + y f_{k-2}.
  YPoly previous = YPoly::constant(1);
  YPoly current = YPoly::constant(1);
  for (int k = 2; k <= n - 2; ++k) {
    YPoly next = current + kY * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return kY * current;
}

RefinedTable row_31_2(int n) {
  require_positive(n);
  if (n == 1) return {"31-2", 1, {}, {}};
  DenseRow row(3);
  row[2] = kY;
  YPoly total_back2;  // a_{k-2}
  YPoly total_back1 = kY;  // a_{k-1}
  for (int k = 3; k <= n; ++k) {
    DenseRow next(idx(k) + 1);
    next[2] = total_back1 + kY * total_back2;
    next[idx(k)] = kY;
    // suffix[j] = sum_{l=j}^{k-1} a_{k-1,l}
    DenseRow suffix(idx(k) + 1);
    for (int j = k - 1; j >= 2; --j) suffix[idx(j)] = suffix[idx(j) + 1] + row[idx(j)];
    for (int i = 3; i <= k - 1; ++i) {
      next[idx(i)] = suffix[idx(i - 1)];
      if (i == 3) next[idx(i)] += kY * total_back2;
    }
    total_back2 = std::move(total_back1);
    total_back1 = dense_total(next);
    row = std::move(next);
  }
  return table_from_dense("31-2", n, row, 2, n);
}

YPoly dist_31_2(int n) { return row_31_2(n).total(); }

RefinedTable row_21_3(int n) {
  require_positive(n);
  if (n == 1) return {"21-3", 1, {}, {}};
  DenseRow row(3);
  row[2] = kY;
  YPoly total_back2;
  YPoly total_back1 = kY;
  for (int k = 3; k <= n; ++k) {
    DenseRow next(idx(k) + 1);
    const YPoly edge = total_back1 + kY * total_back2;
    next[2] = edge;
    next[idx(k)] = edge;
    DenseRow suffix(idx(k) + 1);
    for (int j = k - 1; j >= 2; --j) suffix[idx(j)] = suffix[idx(j) + 1] + row[idx(j)];
    for (int i = 3; i <= k - 1; ++i) next[idx(i)] = suffix[idx(i)];
    total_back2 = std::move(total_back1);
    total_back1 = dense_total(next);
    row = std::move(next);
  }
  return table_from_dense("21-3", n, row, 2, n);
}

YPoly dist_21_3(int n) { return row_21_3(n).total(); }

RefinedTable row_12_3(int n) {
  if (n < 3) throw std::invalid_argument("the third-letter triangle needs n >= 3");
  // Seeds: w_{3,2} = y; w_{4,2} = y^2 + y, w_{4,3} = y.
  DenseRow row3(4);
  row3[2] = kY;
  if (n == 3) return table_from_dense("12-3", 3, row3, 2, 2);
  DenseRow row(5);
  row[2] = kY * kY + kY;
  row[3] = kY;
  YPoly total_back2 = dense_total(row3);
  YPoly total_back1 = dense_total(row);
  for (int k = 5; k <= n; ++k) {
    DenseRow next(idx(k) + 1);
    next[2] = (YPoly::constant(1) + kY) * total_back2;
    next[idx(k - 1)] = total_back1;
    YPoly prefix;  // sum_{j=2}^{i-1} w_{k-1,j}
    for (int i = 3; i <= k - 2; ++i) {
      prefix += row[idx(i - 1)];
      next[idx(i)] = total_back2 + prefix;
    }
    total_back2 = std::move(total_back1);
    total_back1 = dense_total(next);
    row = std::move(next);
  }
  return table_from_dense("12-3", n, row, 2, n - 1);
}

YPoly dist_12_3(int n) {
  require_positive(n);
  if (n == 1) return {};
  if (n == 2) return kY;
  return row_12_3(n).total();
}

YPoly dist_23_1(int n) {
  require_positive(n);
  std::vector<YPoly> e(idx(n) + 1);
  if (n >= 2) e[2] = kY;
  for (int k = 3; k <= n; ++k) {
    YPoly value = kY + e[idx(k - 1)];
    for (int i = 1; i <= k - 3; ++i) {
      const auto ui = static_cast<unsigned long>(i);
      YPoly weight = YPoly::constant(binomial(static_cast<unsigned long>(k - 2), ui)) +
                     kY * binomial(static_cast<unsigned long>(k - 1), ui);
      value += weight * e[idx(k - i - 1)];
    }
    e[idx(k)] = std::move(value);
  }
  return e[idx(n)];
}

RefinedTable row_3_12(int n) {
  require_positive(n);
  if (n == 1) return {"3-12", 1, {}, {}};
  PairRow row = make_pair_row(2);
  row[1][2] = kY;
  YPoly total_back2;  // z_{k-2}
  YPoly total_back1 = kY;
  for (int k = 3; k <= n; ++k) {
    PairRow next = make_pair_row(k);
    for (int i = 1; i <= k - 2; ++i) {
      // suffix over the previous row's last letter: sum_{l=j}^{k-1} z_{k-1,i,l}
      YPoly suffix;
      for (int j = k - 1; j >= i + 1; --j) {
        suffix += row[idx(i)][idx(j)];
        next[idx(i)][idx(j)] = suffix;
      }
      YPoly closing;  // sum_{l=1}^{i-1} z_{k-1,l,i}
      for (int l = 1; l < i; ++l) closing += row[idx(l)][idx(i)];
      next[idx(i)][idx(k)] = suffix + kY * closing;
    }
    next[idx(k - 1)][idx(k)] = kY * total_back2;
    total_back2 = std::move(total_back1);
    total_back1 = pair_total(next, k);
    row = std::move(next);
  }
  RefinedTable table{"3-12", n, {}, {}};
  store_pairs(table.entries, row, n);
  return table;
}

YPoly dist_3_12(int n) { return row_3_12(n).total(); }

RefinedTable rows_3_21(int n) {
  require_positive(n);
  if (n == 1) return {"3-21", 1, {}, {}};
  PairRow r = make_pair_row(2);
  PairRow s = make_pair_row(2);
  r[1][2] = kY;
  for (int k = 3; k <= n; ++k) {
    PairRow r_next = make_pair_row(k);
    PairRow s_next = make_pair_row(k);
    for (int i = 1; i <= k - 1; ++i) {
      YPoly closing;  // y * sum_{l=1}^{i-1} s_{k-1,l,i}
      for (int l = 1; l < i; ++l) closing += s[idx(l)][idx(i)];
      closing = kY * closing;
      YPoly between;  // sum_{m=i+1}^{j-1} r_{k-1,i,m}
      for (int j = i + 1; j <= k; ++j) {
        if (j >= i + 2) between += r[idx(i)][idx(j - 1)];
        YPoly value = between + closing;
        if (j < k) value += r[idx(i)][idx(k - 1)];
        s_next[idx(i)][idx(j)] = value - closing;
        r_next[idx(i)][idx(j)] = std::move(value);
      }
    }
    r = std::move(r_next);
    s = std::move(s_next);
  }
  RefinedTable table{"3-21", n, {}, {}};
  store_pairs(table.entries, r, n);
  store_pairs(table.long_final, s, n);
  return table;
}

YPoly dist_3_21(int n) { return rows_3_21(n).total(); }

YPoly dist_1_23(int n) {
  require_positive(n);
  return n >= 2 ? kY : YPoly{};
}

bool has_recurrence(std::string_view name) {
  static const char* const kNames[] = {"12-3", "13-2", "1-32", "21-3", "23-1",
                                       "32-1", "31-2", "1-23", "3-12", "3-21"};
  for (const char* known : kNames) {
    if (name == known) return true;
  }
  return false;
}

DistResult dist(std::string_view name, int n, int workers) {
  require_positive(n);
  if (name == "12-3") return {dist_12_3(n)};
  if (name == "13-2") return {dist_13_2(n)};
  if (name == "1-32") return {dist_1_32(n)};
  if (name == "21-3") return {dist_21_3(n)};
  if (name == "23-1") return {dist_23_1(n)};
  if (name == "32-1") return {dist_32_1(n)};
  if (name == "31-2") return {dist_31_2(n)};
  if (name == "1-23") return {dist_1_23(n)};
  if (name == "3-12") return {dist_3_12(n)};
  if (name == "3-21") return {dist_3_21(n)};
  if (name == "2-13" || name == "2-31" || name == "2-1-3" || name == "2-3-1") {
    return {oracle::distribution(parse_pattern(name), n, workers), Backing::oracle};
  }
  throw std::invalid_argument("unknown pattern name: " + std::string(name));
}

}  // namespace flatder::recurrence
