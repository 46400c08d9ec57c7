#pragma once

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "kqg/closed_form.hpp"
#include "kqg/gauss.hpp"
#include "kqg/hall.hpp"
#include "kqg/kronecker.hpp"

namespace kqg {

/// A Grassmannian cardinality query |Gr_(a,b)(M)|.
struct CountQuery {
  KroneckerDescriptor module;
  DimVector dim;

  std::string key() const { return module.canonical_key() + "|" + std::to_string(dim.a) + "," + std::to_string(dim.b); }
};

struct EngineOptions {
  /// Answer single indecomposables with the closed formulas. Disable to
  /// force every query through the recursions.
  bool use_closed_forms = true;
  bool use_cache = true;
};

/// Counts points of Kronecker quiver Grassmannians as polynomials in q.
///
/// Preprojective summands are peeled off with the sink recursion, then
/// preinjective ones with the source recursion; purely regular modules are
/// pushed to the diagonal by the sink recursion and finished with Hall
/// polynomials. The cache is shared by concurrent callers.
class Engine {
 public:
  explicit Engine(EngineOptions options = {}) : options_(options) {}

  const EngineOptions& options() const noexcept { return options_; }

  LaurentPoly count(const KroneckerDescriptor& m, long a, long b) {
    const DimVector dim = m.dim_vector();
    if (a < 0 || b < 0 || a > dim.a || b > dim.b) return {};
    if ((a == 0 && b == 0) || (a == dim.a && b == dim.b)) return 1;

    std::string key;
    if (options_.use_cache) {
      key = CountQuery{m, {a, b}}.key();
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }

    LaurentPoly result = dispatch(m, a, b);
    if (!result.is_polynomial())
      throw std::logic_error("negative exponents survived in |Gr_" + DimVector{a, b}.to_string() + "(" + m.to_string() + ")|");

    if (options_.use_cache) {
      std::unique_lock lock(mutex_);
      cache_.try_emplace(std::move(key), result);
    }
    return result;
  }

  LaurentPoly count(const CountQuery& query) { return count(query.module, query.dim.a, query.dim.b); }

  /// Sink recursion: with M = sS_1 (+) M' (+) tS_2, l = a - b, dim M = (m, n)
  /// and N = reflect_plus(M' (+) tS_2),
  ///   A^M_{a,b} = sum_c q^{c(b-l+c)} G^c_{m-2b} A^N_{a-l, b-l+c}.
  LaurentPoly recursion_a(const KroneckerDescriptor& m, long a, long b) {
    if (a < 0 || b < 0) return {};
    const SocleSplit split = split_socle(m);
    KroneckerDescriptor inner = split.rest;
    inner.add_preinjective(0, split.t);
    const KroneckerDescriptor reflected = reflect_plus(inner);
    const long m1 = m.dim_vector().a;
    const long l = a - b;
    const long n_reflected = reflected.dim_vector().b;
    // G^c vanishes for c < 0; the A factor vanishes once b-l+c leaves [0, n_N].
    const long c_lo = std::max(0L, l - b);
    const long c_hi = n_reflected - (b - l);
    LaurentPoly total;
    for (long c = c_lo; c <= c_hi; ++c) {
      const LaurentPoly& g = gauss(c, m1 - 2 * b);
      if (g.is_zero()) continue;
      const LaurentPoly inner_count = count(reflected, a - l, b - l + c);
      if (inner_count.is_zero()) continue;
      total += (g * inner_count).shifted(static_cast<int>(c * (b - l + c)));
    }
    return total;
  }

  /// Source recursion, the dual of recursion_a: with N = reflect_minus(sS_1 (+) M'),
  ///   A^M_{a,b} = sum_d q^{d(2m-n-2a+b+d)} G^d_{2a-2m+n} A^N_{t+a+l-d, a}.
  /// For t = 0 this is the same as the usual statement.
  LaurentPoly recursion_b(const KroneckerDescriptor& m, long a, long b) {
    if (a < 0 || b < 0) return {};
    const SocleSplit split = split_socle(m);
    KroneckerDescriptor inner = split.rest;
    inner.add_preprojective(0, split.s);
    const KroneckerDescriptor reflected = reflect_minus(inner);
    const DimVector dim = m.dim_vector();
    const long t = split.t;
    const long l = a - b;
    const long m_reflected = reflected.dim_vector().a;
    // G^d vanishes for d < 0; the A factor vanishes once t+a+l-d leaves [0, m_N].
    const long d_lo = std::max(0L, t + a + l - m_reflected);
    const long d_hi = t + a + l;
    LaurentPoly total;
    for (long d = d_lo; d <= d_hi; ++d) {
      const LaurentPoly& g = gauss(d, 2 * a - 2 * dim.a + dim.b);
      if (g.is_zero()) continue;
      const LaurentPoly inner_count = count(reflected, t + a + l - d, a);
      if (inner_count.is_zero()) continue;
      total += (g * inner_count).shifted(static_cast<int>(d * (2 * dim.a - dim.b - 2 * a + b + d)));
    }
    return total;
  }

  std::size_t cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }

  void clear_cache() {
    std::unique_lock lock(mutex_);
    cache_.clear();
  }

 private:
  LaurentPoly dispatch(const KroneckerDescriptor& m, long a, long b) {
    if (options_.use_closed_forms) {
      if (auto single = m.as_indecomposable(); single && (single->family != Family::regular || single->degree == 1))
        return count_indecomposable(*single, a, b);
    }
    if (m.has_preprojective()) return recursion_a(m, a, b);
    if (m.has_preinjective()) return recursion_b(m, a, b);
    // Regular: a preinjective cannot embed, so a < b gives nothing.
    if (a < b) return {};
    if (a > b) return recursion_a(m, a, b);
    return regular_diagonal_count(m, a);
  }

  EngineOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, LaurentPoly> cache_;
};

}  // namespace kqg
