#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kqg/hall.hpp"
#include "kqg/laurent_poly.hpp"
#include "kqg/oracle/finite_field.hpp"
#include "kqg/partition.hpp"

namespace kqg::oracle {

/// (type of subgroup, type of quotient) -> number of such subgroups.
using SubgroupCensus = std::map<std::pair<Partition, Partition>, Integer>;

namespace detail {

/// Elementary divisors of an integer r x r matrix whose cokernel is a
/// p-group of exponent at most p^max_exp, returned as the partition of
/// exponents. Works modulo p^(max_exp + 1) with valuation pivoting.
inline Partition cokernel_type(std::vector<std::int64_t> m, int r, std::int64_t p, int max_exp) {
  std::int64_t modulus = 1;
  for (int i = 0; i <= max_exp; ++i) modulus *= p;
  auto at = [&](int i, int j) -> std::int64_t& { return m[static_cast<std::size_t>(i * r + j)]; };
  auto valuation = [&](std::int64_t v) {
    int e = 0;
    while (v % p == 0 && e <= max_exp) {
      v /= p;
      ++e;
    }
    return e;
  };
  for (auto& v : m) v = ((v % modulus) + modulus) % modulus;

  std::vector<int> exps;
  for (int k = 0; k < r; ++k) {
    int best = max_exp + 1, bi = -1, bj = -1;
    for (int i = k; i < r && best > 0; ++i)
      for (int j = k; j < r; ++j) {
        if (at(i, j) == 0) continue;
        const int v = valuation(at(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) throw std::logic_error("cokernel exponent exceeds the declared bound");
    for (int j = 0; j < r; ++j) std::swap(at(k, j), at(bi, j));
    for (int i = 0; i < r; ++i) std::swap(at(i, k), at(i, bj));
    std::int64_t pk = 1;
    for (int e = 0; e < best; ++e) pk *= p;
    const std::int64_t unit = at(k, k) / pk;
    const std::int64_t inv = inverse_mod(unit, modulus);
    for (int i = k + 1; i < r; ++i) {
      if (at(i, k) == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((static_cast<__int128>(at(i, k) / pk) * inv) % modulus);
      for (int j = k; j < r; ++j)
        at(i, j) = static_cast<std::int64_t>(((at(i, j) - static_cast<__int128>(f) * at(k, j)) % modulus + modulus) % modulus);
    }
    for (int j = k + 1; j < r; ++j) {
      if (at(k, j) == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((static_cast<__int128>(at(k, j) / pk) * inv) % modulus);
      for (int i = k; i < r; ++i)
        at(i, j) = static_cast<std::int64_t>(((at(i, j) - static_cast<__int128>(f) * at(i, k)) % modulus + modulus) % modulus);
    }
    if (best > 0) exps.push_back(best);
  }
  return Partition::from_unsorted(std::move(exps));
}

}  // namespace detail

/// Brute-force census of all subgroups of the abelian p-group
/// Z/p^{lambda_1} (+) ... (+) Z/p^{lambda_r}.
///
/// Subgroups H correspond to lattices L with D Z^r <= L <= Z^r,
/// D = diag(p^{lambda_i}). Each L is enumerated once through its Hermite
/// normal form B (upper triangular, diagonal p^{e_i}, entries reduced modulo
/// their row's diagonal); G/H = Z^r / B Z^r and H = Z^r / (B^{-1} D) Z^r, whose
/// types come from Smith normal forms.
inline SubgroupCensus subgroup_census(const Partition& lambda, int p) {
  if (!is_prime(p)) throw std::invalid_argument("subgroup_census: p must be prime");
  SubgroupCensus census;
  const int r = static_cast<int>(lambda.length());
  if (r == 0) {
    census[{Partition{}, Partition{}}] = 1;
    return census;
  }
  const int max_exp = lambda[0];
  const bool elementary = max_exp == 1;
  std::vector<std::int64_t> ppow(static_cast<std::size_t>(max_exp) + 1, 1);
  for (int i = 1; i <= max_exp; ++i) ppow[static_cast<std::size_t>(i)] = ppow[static_cast<std::size_t>(i) - 1] * p;

  std::vector<int> e(static_cast<std::size_t>(r), 0);
  std::vector<std::int64_t> b(static_cast<std::size_t>(r * r), 0);  // row-major HNF
  std::vector<std::int64_t> x(static_cast<std::size_t>(r * r), 0);  // column j solves B x = p^{lambda_j} e_j
  std::map<std::pair<Partition, Partition>, std::uint64_t> tally;
  std::vector<std::uint64_t> by_codim(static_cast<std::size_t>(r) + 1, 0);  // elementary case

  auto B = [&](int i, int j) -> std::int64_t& { return b[static_cast<std::size_t>(i * r + j)]; };
  auto X = [&](int i, int j) -> std::int64_t& { return x[static_cast<std::size_t>(i * r + j)]; };

  auto record = [&] {
    if (elementary) {
      int codim = 0;
      for (int v : e) codim += v;
      ++by_codim[static_cast<std::size_t>(codim)];
      return;
    }
    const Partition quotient = detail::cokernel_type(b, r, p, max_exp);
    const Partition sub = detail::cokernel_type(x, r, p, max_exp);
    ++tally[{sub, quotient}];
  };

  // Row i is filled after rows i+1..r-1; its solve step checks that each
  // D e_j (j >= i) stays integral.
  auto fill_row = [&](auto&& self, int i) -> void {
    if (i < 0) {
      record();
      return;
    }
    for (int ei = 0; ei <= lambda[static_cast<std::size_t>(i)]; ++ei) {
      e[static_cast<std::size_t>(i)] = ei;
      B(i, i) = ppow[static_cast<std::size_t>(ei)];
      const std::int64_t mod = ppow[static_cast<std::size_t>(ei)];
      const int free_count = r - 1 - i;
      std::int64_t combos = 1;
      for (int k = 0; k < free_count; ++k) combos *= mod;
      for (std::int64_t code = 0; code < combos; ++code) {
        std::int64_t c = code;
        for (int k = i + 1; k < r; ++k) {
          B(i, k) = c % mod;
          c /= mod;
        }
        bool ok = true;
        X(i, i) = ppow[static_cast<std::size_t>(lambda[static_cast<std::size_t>(i)] - ei)];
        for (int j = i + 1; j < r && ok; ++j) {
          std::int64_t s = 0;
          for (int k = i + 1; k <= j; ++k) s += B(i, k) * X(k, j);
          if (s % mod != 0) {
            ok = false;
            break;
          }
          X(i, j) = -s / mod;
        }
        if (ok) self(self, i - 1);
      }
      for (int k = i + 1; k < r; ++k) B(i, k) = 0;
    }
  };
  fill_row(fill_row, r - 1);

  for (int codim = 0; codim <= r && elementary; ++codim)
    if (by_codim[static_cast<std::size_t>(codim)] > 0)
      tally[{Partition(std::vector<int>(static_cast<std::size_t>(r - codim), 1)), Partition(std::vector<int>(static_cast<std::size_t>(codim), 1))}] =
          by_codim[static_cast<std::size_t>(codim)];

  for (const auto& [key, count] : tally) census[key] = Integer(count);
  return census;
}

/// Brute-force value of g^lambda_{nu mu}(p).
inline Integer count_subgroups(const HallTriple& t, int p) {
  const SubgroupCensus census = subgroup_census(t.lambda, p);
  auto it = census.find({t.mu, t.nu});
  return it == census.end() ? Integer(0) : it->second;
}

/// Census results memoized per (lambda, p); safe for concurrent use.
class CensusCache {
 public:
  const SubgroupCensus& get(const Partition& lambda, int p) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(lambda, p);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    return cache_.emplace(key, subgroup_census(lambda, p)).first->second;
  }

  Integer count(const HallTriple& t, int p) {
    const SubgroupCensus& census = get(t.lambda, p);
    auto it = census.find({t.mu, t.nu});
    return it == census.end() ? Integer(0) : it->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<Partition, int>, SubgroupCensus> cache_;
};

/// Hall polynomial reconstructed from brute-force counts at the given
/// primes by exact interpolation. Needs more primes than the degree.
inline LaurentPoly interpolate_hall_polynomial(const HallTriple& t, std::span<const int> primes, CensusCache& cache) {
  std::vector<std::pair<Integer, Integer>> points;
  for (int p : primes) points.emplace_back(Integer(p), cache.count(t, p));
  return interpolate(points);
}

}  // namespace kqg::oracle
