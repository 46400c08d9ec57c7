#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kqg/gauss.hpp"
#include "kqg/kronecker.hpp"
#include "kqg/partition.hpp"

namespace kqg {

/// Triple (lambda; nu, mu) indexing the Hall polynomial g^lambda_{nu mu}:
/// submodules of type mu with quotient of type nu inside a module of type
/// lambda.
struct HallTriple {
  Partition lambda;
  Partition nu;
  Partition mu;

  /// Necessary condition for g^lambda_{nu mu} != 0.
  bool may_be_nonzero() const {
    return lambda.weight() == nu.weight() + mu.weight() && lambda.contains(mu) && lambda.contains(nu);
  }

  /// n(lambda) - n(mu) - n(nu), the degree of a nonzero Hall polynomial.
  int degree_bound() const { return lambda.n() - mu.n() - nu.n(); }
};

namespace hall {

/// Element of the Hall algebra of a discrete valuation ring: coefficients
/// on the basis u_lambda.
using Element = std::map<Partition, LaurentPoly>;

/// Partitions lambda with lambda / mu a vertical m-strip (at most one new
/// box per row).
inline std::vector<Partition> vertical_strip_extensions(const Partition& mu, int m) {
  std::vector<Partition> out;
  const std::size_t rows = mu.length() + static_cast<std::size_t>(m);
  std::vector<int> current;
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == rows) {
      if (left == 0) {
        std::vector<int> parts;
        for (int p : current)
          if (p > 0) parts.push_back(p);
        out.emplace_back(std::move(parts));
      }
      return;
    }
    const int base = mu[row];
    for (int add = 1; add >= 0; --add) {
      if (add > left) continue;
      const int part = base + add;
      if (row > 0 && part > current.back()) continue;
      if (part == 0 && add == 0 && left > 0) {
        // Rows below an empty row cannot receive boxes.
        continue;
      }
      current.push_back(part);
      self(self, row + 1, left - add);
      current.pop_back();
    }
  };
  rec(rec, 0, m);
  return out;
}

/// Coefficient of u_lambda in u_{(1^m)} u_mu, where lambda / mu is a vertical
/// m-strip:
///   q^{n(lambda) - n(mu) - n(1^m)} prod_i [lambda'_i - lambda'_{i+1} choose lambda'_i - mu'_i]_{q^{-1}}.
inline LaurentPoly vertical_strip_coefficient(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return {};
  for (std::size_t i = 0; i < lambda.length(); ++i)
    if (lambda[i] - mu[i] > 1) return {};
  const long m = lambda.weight() - mu.weight();
  const Partition lc = lambda.conjugate();
  const Partition mc = mu.conjugate();
  LaurentPoly value = LaurentPoly::q(static_cast<int>(lambda.n() - mu.n() - m * (m - 1) / 2));
  for (std::size_t i = 0; i < lc.length(); ++i) {
    const LaurentPoly& g = gauss(lc[i] - mc[i], lc[i] - lc[i + 1]);
    value *= g.substitute_power(-1);
  }
  return value;
}

/// u_{(1^m)} * x.
inline Element multiply_elementary(int m, const Element& x) {
  Element out;
  for (const auto& [mu, coef] : x) {
    for (const Partition& lambda : vertical_strip_extensions(mu, m)) {
      LaurentPoly term = coef * vertical_strip_coefficient(lambda, mu);
      auto& slot = out[lambda];
      slot += term;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// Structure constants of the Hall algebra, computed from the elementary
/// (vertical strip) products: u_lambda is written as a polynomial in the
/// u_{(1^r)} by unitriangular inversion, then multiplied out.
class HallAlgebra {
 public:
  /// Words are column sizes (the factors u_{(1^r)}), sorted decreasingly.
  using Word = std::vector<int>;
  using Expansion = std::map<Word, LaurentPoly>;

  static HallAlgebra& shared() {
    static HallAlgebra algebra;
    return algebra;
  }

  /// u_lambda as a combination of products of elementary generators.
  Expansion expansion(const Partition& lambda) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = expansions_.find(lambda); it != expansions_.end()) return it->second;
    }
    const Word word = lambda.conjugate().parts();
    Element product = apply(word, Element{{Partition{}, LaurentPoly(1)}});
    auto lead = product.find(lambda);
    if (lead == product.end() || !lead->second.is_one())
      throw std::logic_error("elementary product is not unitriangular at " + lambda.to_string());
    Expansion result{{word, LaurentPoly(1)}};
    for (const auto& [kappa, coef] : product) {
      if (kappa == lambda) continue;
      if (!lambda.dominates(kappa)) throw std::logic_error("unexpected term outside dominance order");
      for (const auto& [w, c] : expansion(kappa)) result[w] -= coef * c;
    }
    std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
    std::unique_lock lock(mutex_);
    return expansions_.try_emplace(lambda, std::move(result)).first->second;
  }

  /// u_nu * u_mu.
  Element product(const Partition& nu, const Partition& mu) {
    const auto key = std::make_pair(nu, mu);
    {
      std::shared_lock lock(mutex_);
      if (auto it = products_.find(key); it != products_.end()) return it->second;
    }
    Element result;
    const Element start{{mu, LaurentPoly(1)}};
    for (const auto& [word, coef] : expansion(nu)) {
      for (const auto& [lambda, c] : apply(word, start)) result[lambda] += coef * c;
    }
    std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
    std::unique_lock lock(mutex_);
    return products_.try_emplace(key, std::move(result)).first->second;
  }

 private:
  static Element apply(const Word& word, Element x) {
    for (int m : word) x = multiply_elementary(m, x);
    return x;
  }

  std::shared_mutex mutex_;
  std::map<Partition, Expansion> expansions_;
  std::map<std::pair<Partition, Partition>, Element> products_;
};

}  // namespace hall

/// Classical Hall polynomial g^lambda_{nu mu}(x): its value at a prime p
/// counts subgroups of type mu with quotient of type nu in the abelian
/// p-group of type lambda.
inline LaurentPoly hall_polynomial(const HallTriple& t) {
  if (!t.may_be_nonzero()) return {};
  const hall::Element prod = hall::HallAlgebra::shared().product(t.nu, t.mu);
  auto it = prod.find(t.lambda);
  if (it == prod.end()) return {};
  if (!it->second.is_polynomial()) throw std::logic_error("Hall polynomial with negative exponents");
  return it->second;
}

inline LaurentPoly hall_polynomial(const Partition& lambda, const Partition& nu, const Partition& mu) {
  return hall_polynomial(HallTriple{lambda, nu, mu});
}

/// |Gr_(a,a)| of a purely regular module, via the tube factorization of
/// Hall numbers:
///   sum over (nu^i, mu^i) with sum d_i |mu^i| = a of prod_i g^{lambda^i}_{nu^i mu^i}(q^{d_i}).
inline LaurentPoly regular_diagonal_count(const KroneckerDescriptor& r, long a) {
  if (!r.is_regular()) throw std::invalid_argument("regular_diagonal_count expects a regular module");
  const long n = r.dim_vector().a;
  if (a < 0 || a > n) return {};

  // by_dim[k] = sum over tubes processed so far with total dimension k.
  std::vector<LaurentPoly> by_dim(1, LaurentPoly(1));
  for (const auto& [label, comp] : r.regular()) {
    const Partition& lambda = comp.partition;
    const int w = lambda.weight();
    std::vector<LaurentPoly> per_size(static_cast<std::size_t>(w) + 1);
    const auto subs = sub_partitions(lambda);
    for (const Partition& mu : subs)
      for (const Partition& nu : subs) {
        if (mu.weight() + nu.weight() != w) continue;
        per_size[static_cast<std::size_t>(mu.weight())] += hall_polynomial(lambda, nu, mu).substitute_power(comp.degree);
      }
    std::vector<LaurentPoly> next(by_dim.size() + static_cast<std::size_t>(w) * comp.degree);
    for (std::size_t i = 0; i < by_dim.size(); ++i) {
      if (by_dim[i].is_zero()) continue;
      for (int k = 0; k <= w; ++k) {
        if (per_size[static_cast<std::size_t>(k)].is_zero()) continue;
        next[i + static_cast<std::size_t>(k) * comp.degree] += by_dim[i] * per_size[static_cast<std::size_t>(k)];
      }
    }
    by_dim = std::move(next);
  }
  return by_dim[static_cast<std::size_t>(a)];
}

}  // namespace kqg
