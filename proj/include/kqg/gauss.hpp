#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "kqg/laurent_poly.hpp"

namespace kqg {

namespace detail {

class GaussCache {
 public:
  static GaussCache& instance() {
    static GaussCache cache;
    return cache;
  }

  const LaurentPoly* find(long l, long a) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key(l, a));
    return it == table_.end() ? nullptr : &it->second;
  }

  // Node-based storage keeps references valid across rehashing.
  const LaurentPoly& insert(long l, long a, LaurentPoly value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key(l, a), std::move(value)).first->second;
  }

 private:
  static std::uint64_t key(long l, long a) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l)) << 32) | static_cast<std::uint32_t>(a);
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, LaurentPoly> table_;
};

inline const LaurentPoly& zero_poly() {
  static const LaurentPoly z;
  return z;
}

inline const LaurentPoly& one_poly() {
  static const LaurentPoly o(1);
  return o;
}

}  // namespace detail

/// Gaussian coefficient G^l_a(q) for arbitrary integers l, a.
///
/// Zero for l < 0 and for 0 <= a < l, one for l = 0. A negative upper
/// argument is folded onto a nonnegative one by
///   G^l_a = (-1)^l q^{la - l(l-1)/2} G^l_{l-1-a},
/// so every value lives in Z[q, q^-1]. Results are memoized process-wide.
inline const LaurentPoly& gauss(long l, long a) {
  if (l < 0) return detail::zero_poly();
  if (l == 0) return detail::one_poly();
  if (a >= 0 && a < l) return detail::zero_poly();

  auto& cache = detail::GaussCache::instance();
  if (const LaurentPoly* hit = cache.find(l, a)) return *hit;

  LaurentPoly value;
  if (a < 0) {
    const long shift = l * a - l * (l - 1) / 2;
    value = gauss(l, l - 1 - a).shifted(static_cast<int>(shift));
    if (l % 2 != 0) value = -value;
  } else if (2 * l > a) {
    value = gauss(a - l, a);
  } else {
    // Pascal rule G^l_a = G^{l-1}_{a-1} + q^l G^l_{a-1}.
    value = gauss(l - 1, a - 1) + gauss(l, a - 1).shifted(static_cast<int>(l));
  }
  return cache.insert(l, a, std::move(value));
}

/// Sum of f(j) for lo <= j <= hi; empty when hi < lo.
inline LaurentPoly finite_sum(long lo, long hi, const std::function<LaurentPoly(long)>& f) {
  LaurentPoly total;
  for (long j = lo; j <= hi; ++j) total += f(j);
  return total;
}

/// Right-hand side of the q-Vandermonde convolution for G^l_{a+b}:
/// sum_j q^{j(a-l+j)} G^{l-j}_a G^j_b. Terms vanish outside 0 <= j <= l.
inline LaurentPoly q_vandermonde_sum(long l, long a, long b) {
  return finite_sum(0, l, [&](long j) {
    const LaurentPoly& left = gauss(l - j, a);
    const LaurentPoly& right = gauss(j, b);
    if (left.is_zero() || right.is_zero()) return LaurentPoly{};
    return (left * right).shifted(static_cast<int>(j * (a - l + j)));
  });
}

/// Left-hand side of the q-Nanjundiah identity
///   sum_r q^{(m-mu+nu-r)(p-r)} G^r_{m-mu+nu} G^{p-r}_{p+mu-nu} G^{m+p}_{mu+r},
/// which equals G^m_mu G^p_nu. Terms vanish outside 0 <= r <= p.
inline LaurentPoly q_nanjundiah_sum(long m, long p, long mu, long nu) {
  const long top = m - mu + nu;
  return finite_sum(0, p, [&](long r) {
    const LaurentPoly& g1 = gauss(r, top);
    if (g1.is_zero()) return LaurentPoly{};
    const LaurentPoly& g2 = gauss(p - r, p + mu - nu);
    if (g2.is_zero()) return LaurentPoly{};
    const LaurentPoly& g3 = gauss(m + p, mu + r);
    if (g3.is_zero()) return LaurentPoly{};
    return (g1 * g2 * g3).shifted(static_cast<int>((top - r) * (p - r)));
  });
}

/// Generalized binomial coefficient C(a, l): zero for l < 0, and
/// a(a-1)...(a-l+1)/l! otherwise (a may be negative). Equals G^l_a(1).
inline Integer binomial(long a, long l) {
  if (l < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < l; ++i) {
    num *= (a - i);
    den *= (i + 1);
  }
  return num / den;
}

}  // namespace kqg
