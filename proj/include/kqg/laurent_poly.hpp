#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kqg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised by the text parsers; `position()` is the 0-based offset of the
/// offending character in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exact Laurent polynomial in one variable over the integers.
///
/// Stored densely as a run of coefficients starting at exponent `low_`.
/// The run is trimmed on both ends, so the zero polynomial is the empty run
/// and equal values always have identical representations.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT: constants read naturally
  LaurentPoly(long long c) : LaurentPoly(Integer(c)) {}  // NOLINT
  explicit LaurentPoly(Integer c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }

  static LaurentPoly monomial(Integer c, int exponent) {
    LaurentPoly r(std::move(c));
    r.low_ = r.coeffs_.empty() ? 0 : exponent;
    return r;
  }
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

  /// Builds from a coefficient map; zero entries are dropped.
  static LaurentPoly from_terms(const std::map<int, Integer>& terms) {
    LaurentPoly r;
    if (terms.empty()) return r;
    r.low_ = terms.begin()->first;
    r.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - r.low_ + 1), Integer(0));
    for (const auto& [e, c] : terms) r.coeffs_[static_cast<std::size_t>(e - r.low_)] = c;
    r.normalize();
    return r;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

  /// Lowest and highest exponent with a nonzero coefficient. Zero has neither.
  int low_degree() const {
    require_nonzero();
    return low_;
  }
  int high_degree() const {
    require_nonzero();
    return low_ + static_cast<int>(coeffs_.size()) - 1;
  }

  Integer coefficient(int exponent) const {
    if (exponent < low_ || exponent >= low_ + static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }

  /// Nonzero terms as an exponent -> coefficient map.
  std::map<int, Integer> terms() const {
    std::map<int, Integer> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  /// True when no negative exponent occurs.
  bool is_polynomial() const noexcept { return coeffs_.empty() || low_ >= 0; }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& y) { return accumulate(y, 1); }
  LaurentPoly& operator-=(const LaurentPoly& y) { return accumulate(y, -1); }

  LaurentPoly& operator*=(const LaurentPoly& y) {
    *this = *this * y;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }

  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    if (x.is_zero() || y.is_zero()) return r;
    r.low_ = x.low_ + y.low_;
    r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, Integer(0));
    Integer tmp;
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        if (y.coeffs_[j] == 0) continue;
        boost::multiprecision::multiply(tmp, x.coeffs_[i], y.coeffs_[j]);
        r.coeffs_[i + j] += tmp;
      }
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    return x.low_ == y.low_ && x.coeffs_ == y.coeffs_;
  }

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// Substitutes q -> q^d (d may be negative; d = 0 collapses to the value at 1).
  LaurentPoly substitute_power(int d) const {
    std::map<int, Integer> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out[d * (low_ + static_cast<int>(i))] += coeffs_[i];
    return from_terms(out);
  }

  Rational eval_at(const Rational& q0) const {
    if (is_zero()) return 0;
    if (q0 == 0) {
      if (low_ < 0) throw std::domain_error("evaluation at 0 of a Laurent polynomial with negative exponents");
      return Rational(coefficient(0));
    }
    // Horner on the polynomial part, then scale by q0^low.
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + Rational(*it);
    return acc * rational_power(q0, low_);
  }

  /// Value at q0, required to be an integer.
  Integer eval_integer(const Rational& q0) const {
    Rational v = eval_at(q0);
    if (boost::multiprecision::denominator(v) != 1)
      throw std::domain_error("value " + v.str() + " is not an integer");
    return boost::multiprecision::numerator(v);
  }

  /// Terms in decreasing exponent order, e.g. `q^4 + q^3 + 2*q^2 + q + 1`.
  std::string to_string(char var = 'q') const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
      const Integer& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const int e = low_ + i;
      const bool negative = c < 0;
      const Integer mag = negative ? Integer(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  /// Inverse of to_string. Accepts any term order and repeated exponents.
  static LaurentPoly parse(std::string_view text, char var = 'q');

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << x.to_string(); }

 private:
  int low_ = 0;
  std::vector<Integer> coeffs_;

  void require_nonzero() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no degree");
  }

  void normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
      coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
      low_ += static_cast<int>(first);
    }
  }

  LaurentPoly& accumulate(const LaurentPoly& y, int sign) {
    if (y.is_zero()) return *this;
    if (is_zero()) {
      *this = sign > 0 ? y : -y;
      return *this;
    }
    const int lo = std::min(low_, y.low_);
    const int hi = std::max(low_ + static_cast<int>(coeffs_.size()), y.low_ + static_cast<int>(y.coeffs_.size()));
    if (lo < low_ || hi > low_ + static_cast<int>(coeffs_.size())) {
      std::vector<Integer> grown(static_cast<std::size_t>(hi - lo), Integer(0));
      for (std::size_t i = 0; i < coeffs_.size(); ++i) grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
      coeffs_ = std::move(grown);
      low_ = lo;
    }
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      auto& slot = coeffs_[static_cast<std::size_t>(y.low_ - low_) + j];
      if (sign > 0)
        slot += y.coeffs_[j];
      else
        slot -= y.coeffs_[j];
    }
    normalize();
    return *this;
  }

  static Rational rational_power(const Rational& base, int e) {
    Rational r = 1;
    const Rational b = e < 0 ? Rational(1) / base : base;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    return r;
  }
};

inline LaurentPoly LaurentPoly::parse(std::string_view text, char var) {
  std::map<int, Integer> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&](std::string& into) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) into += text[pos++];
  };

  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;

    Integer coef = 1;
    int exponent = 0;
    std::string digits;
    read_digits(digits);
    bool have_var = false;
    if (!digits.empty()) {
      coef = Integer(digits);
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos >= text.size() || text[pos] != var) throw ParseError(std::string("expected '") + var + "'", pos);
      }
    }
    if (pos < text.size() && text[pos] == var) {
      have_var = true;
      ++pos;
      exponent = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        bool neg_exp = false;
        if (pos < text.size() && text[pos] == '-') {
          neg_exp = true;
          ++pos;
        }
        std::string exp_digits;
        read_digits(exp_digits);
        if (exp_digits.empty()) throw ParseError("expected exponent", pos);
        exponent = std::stoi(exp_digits) * (neg_exp ? -1 : 1);
      }
    }
    if (digits.empty() && !have_var) throw ParseError("expected term", pos);
    terms[exponent] += negative ? Integer(-coef) : coef;

    skip_ws();
    if (pos == text.size()) break;
  }
  return from_terms(terms);
}

/// Exact quotient num / den; throws when den does not divide num in the
/// Laurent ring.
inline LaurentPoly exact_quotient(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return {};
  const int dlow = den.low_degree();
  const int dhigh = den.high_degree();
  const Integer lead = den.coefficient(dhigh);
  LaurentPoly rem = num;
  std::map<int, Integer> quot;
  while (!rem.is_zero() && rem.high_degree() - dhigh >= rem.low_degree() - dlow) {
    const int e = rem.high_degree() - dhigh;
    const Integer c = rem.coefficient(rem.high_degree());
    if (c % lead != 0) throw std::domain_error("inexact polynomial division");
    const Integer t = c / lead;
    quot[e] += t;
    rem -= LaurentPoly::monomial(t, e) * den;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return LaurentPoly::from_terms(quot);
}

/// Unique polynomial of degree < points.size() through the given (x, y)
/// pairs, with distinct x. Throws if the coefficients are not integers.
inline LaurentPoly interpolate(std::span<const std::pair<Integer, Integer>> points) {
  // Newton divided differences over the rationals.
  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rational(points[i].second);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - k].first);

  std::vector<Rational> coeffs(1, Rational(0));  // ascending powers
  for (std::size_t k = n; k-- > 0;) {
    // coeffs = coeffs * (x - x_k) + dd[k]
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * Rational(points[k].first);
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  std::map<int, Integer> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (boost::multiprecision::denominator(coeffs[i]) != 1)
      throw std::domain_error("interpolated polynomial has non-integer coefficients");
    terms[static_cast<int>(i)] = boost::multiprecision::numerator(coeffs[i]);
  }
  return LaurentPoly::from_terms(terms);
}

}  // namespace kqg
