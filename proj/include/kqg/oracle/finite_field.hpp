#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kqg/laurent_poly.hpp"

namespace kqg::oracle {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Inverse of a modulo m for gcd(a, m) = 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - quot * s1);
  }
  if (r0 != 1) throw std::domain_error("element is not invertible");
  return ((s0 % m) + m) % m;
}

/// Dense matrix over the prime field F_p, entries kept in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

  static FpMatrix identity(int p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  int prime() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  int operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, long v) { data_[index(i, j)] = static_cast<int>(((v % p_) + p_) % p_); }

  friend FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
    if (x.cols_ != y.rows_ || x.p_ != y.p_) throw std::invalid_argument("matrix shape mismatch");
    FpMatrix r(x.p_, x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < y.cols_; ++j) {
        long s = 0;
        for (int k = 0; k < x.cols_; ++k) s += static_cast<long>(x(i, k)) * y(k, j);
        r.set(i, j, s);
      }
    return r;
  }

  FpMatrix transposed() const {
    FpMatrix r(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
    return r;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;

  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(i * cols_ + j);
  }
};

/// Rank by Gaussian elimination.
inline int rank(FpMatrix m) {
  const int p = m.prime();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) {
        const int tmp = m(r, j);
        m.set(r, j, m(pivot, j));
        m.set(pivot, j, tmp);
      }
    const long inv = inverse_mod(m(r, c), p);
    for (int i = r + 1; i < m.rows(); ++i) {
      const long f = m(i, c) * inv % p;
      if (f == 0) continue;
      for (int j = c; j < m.cols(); ++j) m.set(i, j, m(i, j) - f * m(r, j));
    }
    ++r;
  }
  return r;
}

/// Number of k-dimensional subspaces of F_p^n, from the product formula
/// prod_{i<k} (p^{n-i} - 1) / (p^{k-i} - 1).
inline Integer count_subspaces(long n, long k, long p) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(k - i)) - 1;
  }
  return num / den;
}

/// Calls f(basis) for every k-dimensional subspace of F_p^n, where basis is
/// the k x n reduced row echelon matrix of the subspace. Pivot sets run in
/// lexicographic order, free entries in lexicographic order within each.
template <class F>
void for_each_subspace(int n, int k, int p, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> pivots(static_cast<std::size_t>(k));
  FpMatrix basis(p, k, n);
  // Free slots are (row, col) with col > pivot[row] and col not a pivot.
  auto fill = [&](auto&& self, const std::vector<std::pair<int, int>>& slots, std::size_t idx) -> void {
    if (idx == slots.size()) {
      f(static_cast<const FpMatrix&>(basis));
      return;
    }
    for (int v = 0; v < p; ++v) {
      basis.set(slots[idx].first, slots[idx].second, v);
      self(self, slots, idx + 1);
    }
    basis.set(slots[idx].first, slots[idx].second, 0);
  };
  auto choose = [&](auto&& self, int row, int start) -> void {
    if (row == k) {
      basis = FpMatrix(p, k, n);
      std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
      for (int i = 0; i < k; ++i) {
        basis.set(i, pivots[static_cast<std::size_t>(i)], 1);
        is_pivot[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = true;
      }
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < k; ++i)
        for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < n; ++c)
          if (!is_pivot[static_cast<std::size_t>(c)]) slots.emplace_back(i, c);
      fill(fill, slots, 0);
      return;
    }
    for (int c = start; c <= n - (k - row); ++c) {
      pivots[static_cast<std::size_t>(row)] = c;
      self(self, row + 1, c + 1);
    }
  };
  choose(choose, 0, 0);
}

/// Reduced row echelon representatives of all k-dimensional subspaces of
/// F_p^n. Restricted to n <= 6 and p in {2, 3, 5}.
inline std::vector<FpMatrix> enumerate_subspaces(int n, int k, int p) {
  if (n < 0 || n > 6 || k < 0 || k > n) throw std::invalid_argument("enumerate_subspaces: need 0 <= k <= n <= 6");
  if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("enumerate_subspaces: p must be 2, 3 or 5");
  std::vector<FpMatrix> out;
  for_each_subspace(n, k, p, [&](const FpMatrix& b) { out.push_back(b); });
  return out;
}

}  // namespace kqg::oracle
