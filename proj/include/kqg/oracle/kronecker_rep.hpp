#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kqg/kronecker.hpp"
#include "kqg/laurent_poly.hpp"
#include "kqg/oracle/finite_field.hpp"

namespace kqg::oracle {

/// Concrete Kronecker representation over F_p: two maps alpha, beta from the
/// vertex-2 space F_p^dim2 to the vertex-1 space F_p^dim1.
struct MatrixRep {
  int p = 2;
  int dim1 = 0;
  int dim2 = 0;
  FpMatrix alpha;
  FpMatrix beta;
};

/// Raised when F_p has too few closed points of some degree for the
/// requested regular summands.
class RealizabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monic irreducible polynomials of the given degree over F_p, as
/// coefficient vectors c_0..c_{d-1} of x^d + c_{d-1} x^{d-1} + ... + c_0,
/// in lexicographic order of (c_{d-1}, ..., c_0).
inline std::vector<std::vector<int>> monic_irreducibles(int degree, int p) {
  auto poly_mod_is_zero = [p](std::vector<int> num, const std::vector<int>& den) {
    // den monic, both as full coefficient vectors (ascending, den.back() == 1).
    const std::size_t dd = den.size() - 1;
    for (std::size_t top = num.size(); top-- > dd;) {
      const int c = num[top];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) num[top - dd + i] = ((num[top - dd + i] - c * den[i]) % p + p) % p;
    }
    for (std::size_t i = 0; i < dd; ++i)
      if (num[i] != 0) return false;
    return true;
  };
  auto all_monic = [p](int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
      long x = code;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
        x /= p;
      }
      std::vector<int> full = c;
      full.push_back(1);
      out.push_back(full);
    }
    return out;
  };
  std::vector<std::vector<int>> result;
  for (const auto& f : all_monic(degree)) {
    bool irreducible = true;
    for (int d = 1; d <= degree / 2 && irreducible; ++d)
      for (const auto& g : all_monic(d))
        if (poly_mod_is_zero(f, g)) {
          irreducible = false;
          break;
        }
    if (irreducible) result.emplace_back(f.begin(), f.end() - 1);
  }
  return result;
}

/// Number of closed points of degree d on the projective line over F_p.
inline int point_capacity(int degree, int p) {
  if (degree == 1) return p + 1;
  return static_cast<int>(monic_irreducibles(degree, p).size());
}

struct BuildOptions {
  /// Rotates which concrete points are assigned to the labels of each degree.
  int point_offset = 0;
};

namespace detail {

inline void place(FpMatrix& target, const FpMatrix& block, int row0, int col0) {
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j) target.set(row0 + i, col0 + j, block(i, j));
}

/// Companion matrix of a monic polynomial given by c_0..c_{D-1}.
inline FpMatrix companion(const std::vector<int>& coeffs, int p) {
  const int n = static_cast<int>(coeffs.size());
  FpMatrix m(p, n, n);
  for (int i = 1; i < n; ++i) m.set(i, i - 1, 1);
  for (int i = 0; i < n; ++i) m.set(i, n - 1, -coeffs[static_cast<std::size_t>(i)]);
  return m;
}

/// Coefficients (without leading 1) of f^t for monic f.
inline std::vector<int> monic_power(const std::vector<int>& f, int t, int p) {
  std::vector<long> acc{1};
  std::vector<long> full(f.begin(), f.end());
  full.push_back(1);
  for (int k = 0; k < t; ++k) {
    std::vector<long> next(acc.size() + full.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < full.size(); ++j) next[i + j] = (next[i + j] + acc[i] * full[j]) % p;
    acc = std::move(next);
  }
  return std::vector<int>(acc.begin(), acc.end() - 1);
}

inline FpMatrix jordan_block(int p, int t, int eigenvalue) {
  FpMatrix m(p, t, t);
  for (int i = 0; i < t; ++i) {
    m.set(i, i, eigenvalue);
    if (i + 1 < t) m.set(i, i + 1, 1);
  }
  return m;
}

}  // namespace detail

/// Block-diagonal matrix model of a descriptor over F_p.
///
/// P_n: alpha = [I_n; 0], beta = [0; I_n]. I_n: alpha = [I_n | 0],
/// beta = [0 | I_n]. R_p(t) at a degree-one point lambda: alpha = I_t,
/// beta = J_t(lambda); at infinity: alpha = J_t(0), beta = I_t. At a point
/// of degree d given by an irreducible f: alpha = I_{dt}, beta = companion(f^t).
/// Distinct labels go to distinct points.
inline MatrixRep build_rep(const KroneckerDescriptor& m, int p, BuildOptions options = {}) {
  if (!is_prime(p)) throw std::invalid_argument("build_rep: p must be prime");
  const DimVector dim = m.dim_vector();
  MatrixRep rep{p, static_cast<int>(dim.a), static_cast<int>(dim.b), FpMatrix(p, static_cast<int>(dim.a), static_cast<int>(dim.b)),
                FpMatrix(p, static_cast<int>(dim.a), static_cast<int>(dim.b))};
  int r0 = 0, c0 = 0;
  auto put = [&](const FpMatrix& a, const FpMatrix& b) {
    detail::place(rep.alpha, a, r0, c0);
    detail::place(rep.beta, b, r0, c0);
    r0 += a.rows();
    c0 += a.cols();
  };

  for (const auto& [n, mult] : m.preprojective())
    for (int k = 0; k < mult; ++k) {
      FpMatrix a(p, n + 1, n), b(p, n + 1, n);
      for (int i = 0; i < n; ++i) {
        a.set(i, i, 1);
        b.set(i + 1, i, 1);
      }
      put(a, b);
    }

  std::map<int, int> used_by_degree;
  std::map<int, std::vector<std::vector<int>>> irreducibles;
  for (const auto& [label, comp] : m.regular()) {
    const int d = comp.degree;
    const int capacity = point_capacity(d, p);
    const int slot = used_by_degree[d]++;
    if (slot >= capacity)
      throw RealizabilityError("F_" + std::to_string(p) + " has only " + std::to_string(capacity) + " point(s) of degree " +
                               std::to_string(d) + ", cannot realize point '" + label + "'");
    const int choice = (slot + options.point_offset) % capacity;
    for (int t : comp.partition.parts()) {
      if (d == 1) {
        if (choice < p)
          put(FpMatrix::identity(p, t), detail::jordan_block(p, t, choice));
        else
          put(detail::jordan_block(p, t, 0), FpMatrix::identity(p, t));
      } else {
        auto& list = irreducibles[d];
        if (list.empty()) list = monic_irreducibles(d, p);
        const auto& f = list[static_cast<std::size_t>(choice)];
        put(FpMatrix::identity(p, d * t), detail::companion(detail::monic_power(f, t, p), p));
      }
    }
  }

  for (const auto& [n, mult] : m.preinjective())
    for (int k = 0; k < mult; ++k) {
      FpMatrix a(p, n, n + 1), b(p, n, n + 1);
      for (int i = 0; i < n; ++i) {
        a.set(i, i, 1);
        b.set(i, i + 1, 1);
      }
      put(a, b);
    }
  return rep;
}

namespace detail {

/// dim(alpha(U2) + beta(U2)) for U2 spanned by the rows of basis.
inline int image_dim(const MatrixRep& rep, const FpMatrix& basis) {
  const int k = basis.rows();
  FpMatrix images(rep.p, 2 * k, rep.dim1);
  for (int r = 0; r < k; ++r)
    for (int i = 0; i < rep.dim1; ++i) {
      long sa = 0, sb = 0;
      for (int j = 0; j < rep.dim2; ++j) {
        sa += static_cast<long>(rep.alpha(i, j)) * basis(r, j);
        sb += static_cast<long>(rep.beta(i, j)) * basis(r, j);
      }
      images.set(r, i, sa);
      images.set(k + r, i, sb);
    }
  return rank(images);
}

}  // namespace detail

/// table[a][b] = number of submodules of dimension vector (a, b), for
/// 0 <= a <= dim1, 0 <= b <= dim2. Enumerates U2 and counts the U1 that
/// contain alpha(U2) + beta(U2) by the subspace formula.
inline std::vector<std::vector<Integer>> submodule_table(const MatrixRep& rep) {
  std::vector<std::vector<Integer>> table(static_cast<std::size_t>(rep.dim1) + 1,
                                          std::vector<Integer>(static_cast<std::size_t>(rep.dim2) + 1, Integer(0)));
  std::vector<Integer> containing_counts;  // indexed by (w, a)
  for (int b = 0; b <= rep.dim2; ++b) {
    std::vector<long> by_w(static_cast<std::size_t>(rep.dim1) + 1, 0);
    for_each_subspace(rep.dim2, b, rep.p, [&](const FpMatrix& basis) { ++by_w[static_cast<std::size_t>(detail::image_dim(rep, basis))]; });
    for (int w = 0; w <= rep.dim1; ++w) {
      if (by_w[static_cast<std::size_t>(w)] == 0) continue;
      for (int a = w; a <= rep.dim1; ++a)
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
            by_w[static_cast<std::size_t>(w)] * count_subspaces(rep.dim1 - w, a - w, rep.p);
    }
  }
  return table;
}

/// Number of submodules with dimension vector (a, b); zero out of range.
inline Integer count_submodules(const MatrixRep& rep, long a, long b) {
  if (a < 0 || b < 0 || a > rep.dim1 || b > rep.dim2) return 0;
  Integer total = 0;
  for_each_subspace(rep.dim2, static_cast<int>(b), rep.p, [&](const FpMatrix& basis) {
    const int w = detail::image_dim(rep, basis);
    total += count_subspaces(rep.dim1 - w, a - w, rep.p);
  });
  return total;
}

/// Double enumeration over (U1, U2) pairs, checking alpha(U2), beta(U2) in U1.
inline Integer count_submodules_naive(const MatrixRep& rep, long a, long b) {
  if (a < 0 || b < 0 || a > rep.dim1 || b > rep.dim2) return 0;
  Integer total = 0;
  for_each_subspace(rep.dim1, static_cast<int>(a), rep.p, [&](const FpMatrix& u1) {
    for_each_subspace(rep.dim2, static_cast<int>(b), rep.p, [&](const FpMatrix& u2) {
      FpMatrix stacked(rep.p, static_cast<int>(a + 2 * b), rep.dim1);
      for (int r = 0; r < a; ++r)
        for (int i = 0; i < rep.dim1; ++i) stacked.set(r, i, u1(r, i));
      for (int r = 0; r < b; ++r)
        for (int i = 0; i < rep.dim1; ++i) {
          long sa = 0, sb = 0;
          for (int j = 0; j < rep.dim2; ++j) {
            sa += static_cast<long>(rep.alpha(i, j)) * u2(r, j);
            sb += static_cast<long>(rep.beta(i, j)) * u2(r, j);
          }
          stacked.set(static_cast<int>(a) + r, i, sa);
          stacked.set(static_cast<int>(a + b) + r, i, sb);
        }
      if (rank(stacked) == a) ++total;
    });
  });
  return total;
}

/// dim_Fp of the space of pairs (f1, f2) with f1 alpha_X = alpha_Y f2 and
/// f1 beta_X = beta_Y f2.
inline int hom_dim_numeric(const MatrixRep& x, const MatrixRep& y) {
  if (x.p != y.p) throw std::invalid_argument("hom_dim_numeric: representations over different fields");
  const int p = x.p;
  const int n1 = y.dim1 * x.dim1;  // f1 unknowns, f1(i,k) at i * x.dim1 + k
  const int n2 = y.dim2 * x.dim2;  // f2 unknowns, f2(k,j) at n1 + k * x.dim2 + j
  const int unknowns = n1 + n2;
  const int equations = 2 * y.dim1 * x.dim2;
  if (unknowns == 0) return 0;
  if (equations == 0) return unknowns;
  FpMatrix sys(p, equations, unknowns);
  int row = 0;
  for (int which = 0; which < 2; ++which) {
    const FpMatrix& mx = which == 0 ? x.alpha : x.beta;
    const FpMatrix& my = which == 0 ? y.alpha : y.beta;
    for (int i = 0; i < y.dim1; ++i)
      for (int j = 0; j < x.dim2; ++j, ++row) {
        for (int k = 0; k < x.dim1; ++k) sys.set(row, i * x.dim1 + k, sys(row, i * x.dim1 + k) + mx(k, j));
        for (int k = 0; k < y.dim2; ++k) sys.set(row, n1 + k * x.dim2 + j, sys(row, n1 + k * x.dim2 + j) - my(i, k));
      }
  }
  return unknowns - rank(sys);
}

}  // namespace kqg::oracle
