#pragma once

#include <stdexcept>

#include "kqg/gauss.hpp"
#include "kqg/kronecker.hpp"

namespace kqg {

/// |Gr_(a,b)(P_n)| over F_q.
inline LaurentPoly count_preprojective(long n, long a, long b) {
  if (a < 0 || b < 0) return {};
  if (a == 0 && b == 0) return 1;
  return gauss(n + 1 - a, n + 1 - b) * gauss(a - b - 1, a - 1);
}

/// |Gr_(a,b)(I_n)| over F_q.
inline LaurentPoly count_preinjective(long n, long a, long b) {
  if (a > n || b > n + 1) return {};
  if (a == n && b == n + 1) return 1;
  return gauss(a - b, n - b) * gauss(b, a + 1);
}

/// |Gr_(a,b)(R_p(t))| for a point p of degree 1. Not valid for higher
/// degree points, whose diagonal counts follow a different pattern.
inline LaurentPoly count_regular_deg1(long t, long a, long b) {
  if (a < 0 || b < 0) return {};
  return gauss(t - a, t - b) * gauss(a - b, a);
}

/// Closed form for an indecomposable; regular summands must sit at a degree
/// one point.
inline LaurentPoly count_indecomposable(const Indecomposable& x, long a, long b) {
  switch (x.family) {
    case Family::preprojective: return count_preprojective(x.index, a, b);
    case Family::preinjective: return count_preinjective(x.index, a, b);
    case Family::regular:
      if (x.degree != 1) throw std::invalid_argument("no closed form for regular modules at points of degree > 1");
      return count_regular_deg1(x.index, a, b);
  }
  return {};
}

enum class ClosedFormKind { preprojective, preinjective, regular_deg1 };

/// Euler characteristic of the complex quiver Grassmannian, from the
/// binomial-product formulas (the q = 1 specialization of the counts).
inline Integer euler_char(ClosedFormKind kind, long index, long a, long b) {
  switch (kind) {
    case ClosedFormKind::preprojective:
      if (a < 0 || b < 0) return 0;
      if (a == 0 && b == 0) return 1;
      return binomial(index + 1 - b, index + 1 - a) * binomial(a - 1, a - b - 1);
    case ClosedFormKind::preinjective:
      if (a > index || b > index + 1) return 0;
      if (a == index && b == index + 1) return 1;
      return binomial(index - b, a - b) * binomial(a + 1, b);
    case ClosedFormKind::regular_deg1:
      if (a < 0 || b < 0) return 0;
      return binomial(index - b, index - a) * binomial(a, a - b);
  }
  return 0;
}

}  // namespace kqg
