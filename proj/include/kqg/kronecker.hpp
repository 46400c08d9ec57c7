#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "kqg/laurent_poly.hpp"
#include "kqg/partition.hpp"

namespace kqg {

/// Dimension vector (a, b): dimension at vertex 1 and at vertex 2. Either
/// component may be negative when used as a query guard.
struct DimVector {
  long a = 0;
  long b = 0;

  friend DimVector operator+(DimVector x, DimVector y) { return {x.a + y.a, x.b + y.b}; }
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Euler form of the Kronecker quiver (arrows from vertex 2 to vertex 1).
inline long euler_form(DimVector x, DimVector y) { return x.a * y.a + x.b * y.b - 2 * x.b * y.a; }

enum class Family { preprojective, regular, preinjective };

/// An indecomposable Kronecker module: P_n, I_n, or R_p(t) at a point of
/// degree d.
struct Indecomposable {
  Family family = Family::preprojective;
  int index = 0;  // n for P_n and I_n, regular length t for R_p(t)
  std::string point;
  int degree = 1;

  static Indecomposable P(int n) { return {Family::preprojective, n, {}, 1}; }
  static Indecomposable I(int n) { return {Family::preinjective, n, {}, 1}; }
  static Indecomposable R(std::string point, int t, int degree = 1) {
    return {Family::regular, t, std::move(point), degree};
  }

  DimVector dim() const {
    switch (family) {
      case Family::preprojective: return {index + 1, index};
      case Family::preinjective: return {index, index + 1};
      case Family::regular: return {static_cast<long>(index) * degree, static_cast<long>(index) * degree};
    }
    return {};
  }

  friend bool operator==(const Indecomposable&, const Indecomposable&) = default;
};

/// Regular part of a descriptor living in one tube: R_p(lambda) at a point
/// of the given degree.
struct RegularComponent {
  int degree = 1;
  Partition partition;

  friend bool operator==(const RegularComponent&, const RegularComponent&) = default;
};

/// Formal direct sum of indecomposables
///   (+) mult * P_n  (+)  R_p(lambda_p)  (+)  mult * I_n.
class KroneckerDescriptor {
 public:
  KroneckerDescriptor() = default;

  void add_preprojective(int n, int mult = 1) { add_indexed(preprojective_, n, mult); }
  void add_preinjective(int n, int mult = 1) { add_indexed(preinjective_, n, mult); }

  /// Adds R_p(lambda); merges with an existing entry for the same point.
  void add_regular(const std::string& label, int degree, const Partition& lambda) {
    if (label.empty()) throw std::invalid_argument("regular point label must be nonempty");
    if (degree < 1) throw std::invalid_argument("point degree must be positive");
    if (lambda.empty()) return;
    auto [it, inserted] = regular_.try_emplace(label, RegularComponent{degree, lambda});
    if (!inserted) {
      if (it->second.degree != degree)
        throw std::invalid_argument("point '" + label + "' used with degrees " + std::to_string(it->second.degree) +
                                    " and " + std::to_string(degree));
      it->second.partition = it->second.partition.merged_with(lambda);
    }
  }

  void add(const Indecomposable& x, int mult = 1) {
    switch (x.family) {
      case Family::preprojective: add_preprojective(x.index, mult); break;
      case Family::preinjective: add_preinjective(x.index, mult); break;
      case Family::regular:
        if (x.index < 1 || mult < 1) throw std::invalid_argument("regular length and multiplicity must be positive");
        add_regular(x.point, x.degree, Partition(std::vector<int>(static_cast<std::size_t>(mult), x.index)));
        break;
    }
  }

  const std::map<int, int>& preprojective() const noexcept { return preprojective_; }
  const std::map<int, int>& preinjective() const noexcept { return preinjective_; }
  const std::map<std::string, RegularComponent>& regular() const noexcept { return regular_; }

  bool empty() const noexcept { return preprojective_.empty() && preinjective_.empty() && regular_.empty(); }
  bool has_preprojective() const noexcept { return !preprojective_.empty(); }
  bool has_preinjective() const noexcept { return !preinjective_.empty(); }
  bool is_regular() const noexcept { return preprojective_.empty() && preinjective_.empty(); }

  int max_preprojective_index() const { return preprojective_.empty() ? -1 : preprojective_.rbegin()->first; }
  int max_preinjective_index() const { return preinjective_.empty() ? -1 : preinjective_.rbegin()->first; }

  DimVector dim_vector() const {
    DimVector d;
    for (const auto& [n, mult] : preprojective_) d = d + DimVector{static_cast<long>(mult) * (n + 1), static_cast<long>(mult) * n};
    for (const auto& [n, mult] : preinjective_) d = d + DimVector{static_cast<long>(mult) * n, static_cast<long>(mult) * (n + 1)};
    for (const auto& [label, comp] : regular_) {
      const long w = static_cast<long>(comp.degree) * comp.partition.weight();
      d = d + DimVector{w, w};
    }
    return d;
  }

  /// Every indecomposable summand, repeated by multiplicity.
  std::vector<Indecomposable> summands() const {
    std::vector<Indecomposable> out;
    for (const auto& [n, mult] : preprojective_) out.insert(out.end(), static_cast<std::size_t>(mult), Indecomposable::P(n));
    for (const auto& [label, comp] : regular_)
      for (int t : comp.partition.parts()) out.push_back(Indecomposable::R(label, t, comp.degree));
    for (const auto& [n, mult] : preinjective_) out.insert(out.end(), static_cast<std::size_t>(mult), Indecomposable::I(n));
    return out;
  }

  /// The single summand when the module is indecomposable.
  std::optional<Indecomposable> as_indecomposable() const {
    auto all = summands();
    if (all.size() != 1) return std::nullopt;
    return all.front();
  }

  /// Key that identifies the module up to the relabeling of points of equal
  /// degree. Counting results depend only on this key.
  std::string canonical_key() const {
    std::string key;
    for (const auto& [n, mult] : preprojective_) key += "P" + std::to_string(n) + "x" + std::to_string(mult) + ";";
    std::vector<std::pair<int, Partition>> tubes;
    for (const auto& [label, comp] : regular_) tubes.emplace_back(comp.degree, comp.partition);
    std::sort(tubes.begin(), tubes.end());
    for (const auto& [deg, lambda] : tubes) key += "R" + std::to_string(deg) + "[" + lambda.to_string() + "];";
    for (const auto& [n, mult] : preinjective_) key += "I" + std::to_string(n) + "x" + std::to_string(mult) + ";";
    return key;
  }

  /// Canonical text form, e.g. `2*P0 + P3 + R(p1,[2,1]) + R(p2@2,[1]) + I1`.
  std::string to_string() const {
    std::vector<std::string> pieces;
    auto with_mult = [](int mult, const std::string& s) { return mult == 1 ? s : std::to_string(mult) + "*" + s; };
    for (const auto& [n, mult] : preprojective_) pieces.push_back(with_mult(mult, "P" + std::to_string(n)));
    for (const auto& [label, comp] : regular_) {
      std::string s = "R(" + label;
      if (comp.degree != 1) s += "@" + std::to_string(comp.degree);
      s += ",[" + comp.partition.to_string() + "])";
      pieces.push_back(s);
    }
    for (const auto& [n, mult] : preinjective_) pieces.push_back(with_mult(mult, "I" + std::to_string(n)));
    if (pieces.empty()) return "0";
    std::string out = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) out += " + " + pieces[i];
    return out;
  }

  static KroneckerDescriptor parse(std::string_view text);

  friend bool operator==(const KroneckerDescriptor&, const KroneckerDescriptor&) = default;

 private:
  std::map<int, int> preprojective_;
  std::map<int, int> preinjective_;
  std::map<std::string, RegularComponent> regular_;

  static void add_indexed(std::map<int, int>& m, int n, int mult) {
    if (n < 0) throw std::invalid_argument("indecomposable index must be nonnegative");
    if (mult < 0) throw std::invalid_argument("multiplicity must be nonnegative");
    if (mult > 0) m[n] += mult;
  }
};

inline KroneckerDescriptor KroneckerDescriptor::parse(std::string_view text) {
  KroneckerDescriptor out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };
  auto expect = [&](char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto read_nat = [&](const char* what) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(std::string("expected ") + what, pos);
    if (pos - start > 6) throw ParseError(std::string(what) + " too large", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  skip_ws();
  if (peek() == '0') {
    ++pos;
    skip_ws();
    if (pos == text.size()) return out;
    pos = 0;
    skip_ws();
  }
  if (pos == text.size()) throw ParseError("empty module description", pos);

  while (true) {
    skip_ws();
    int mult = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t at = pos;
      mult = read_nat("multiplicity");
      if (mult < 1) throw ParseError("multiplicity must be positive", at);
      expect('*');
      skip_ws();
    }
    const char kind = peek();
    if (kind == 'P' || kind == 'I') {
      ++pos;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected index after summand letter", pos);
      const int n = read_nat("index");
      if (kind == 'P')
        out.add_preprojective(n, mult);
      else
        out.add_preinjective(n, mult);
    } else if (kind == 'R') {
      ++pos;
      expect('(');
      skip_ws();
      const std::size_t label_start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      if (label_start == pos) throw ParseError("expected point label", pos);
      const std::string label(text.substr(label_start, pos - label_start));
      skip_ws();
      int degree = 1;
      if (peek() == '@') {
        ++pos;
        const std::size_t at = pos;
        degree = read_nat("point degree");
        if (degree < 1) throw ParseError("point degree must be positive", at);
      }
      expect(',');
      expect('[');
      std::vector<int> parts;
      while (true) {
        const std::size_t at = pos;
        const int part = read_nat("partition part");
        if (part < 1) throw ParseError("partition parts must be positive", at);
        parts.push_back(part);
        skip_ws();
        if (peek() == ',') {
          ++pos;
          continue;
        }
        break;
      }
      expect(']');
      expect(')');
      std::vector<int> repeated;
      for (int i = 0; i < mult; ++i) repeated.insert(repeated.end(), parts.begin(), parts.end());
      try {
        out.add_regular(label, degree, Partition::from_unsorted(repeated));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), label_start);
      }
    } else {
      throw ParseError("expected summand 'P', 'I' or 'R('", pos);
    }
    skip_ws();
    if (pos == text.size()) break;
    expect('+');
  }
  return out;
}

inline KroneckerDescriptor direct_sum(const KroneckerDescriptor& x, const KroneckerDescriptor& y) {
  KroneckerDescriptor out = x;
  for (const auto& [n, mult] : y.preprojective()) out.add_preprojective(n, mult);
  for (const auto& [n, mult] : y.preinjective()) out.add_preinjective(n, mult);
  for (const auto& [label, comp] : y.regular()) out.add_regular(label, comp.degree, comp.partition);
  return out;
}

/// M = s*S_1 (+) M' (+) t*S_2 where S_1 = P_0 and S_2 = I_0.
struct SocleSplit {
  int s = 0;
  KroneckerDescriptor rest;
  int t = 0;
};

inline SocleSplit split_socle(const KroneckerDescriptor& m) {
  SocleSplit out;
  for (const auto& [n, mult] : m.preprojective()) {
    if (n == 0)
      out.s = mult;
    else
      out.rest.add_preprojective(n, mult);
  }
  for (const auto& [n, mult] : m.preinjective()) {
    if (n == 0)
      out.t = mult;
    else
      out.rest.add_preinjective(n, mult);
  }
  for (const auto& [label, comp] : m.regular()) out.rest.add_regular(label, comp.degree, comp.partition);
  return out;
}

/// Reflection at the sink followed by relabeling: P_n -> P_{n-1},
/// I_n -> I_{n+1}. Regular summands keep their point label and degree, which
/// preserves every count. Defined on modules without a P_0 summand.
inline KroneckerDescriptor reflect_plus(const KroneckerDescriptor& m) {
  if (m.preprojective().contains(0)) throw std::invalid_argument("reflect_plus: module has a P0 summand");
  KroneckerDescriptor out;
  for (const auto& [n, mult] : m.preprojective()) out.add_preprojective(n - 1, mult);
  for (const auto& [n, mult] : m.preinjective()) out.add_preinjective(n + 1, mult);
  for (const auto& [label, comp] : m.regular()) out.add_regular(label, comp.degree, comp.partition);
  return out;
}

/// Inverse of reflect_plus: P_n -> P_{n+1}, I_n -> I_{n-1}. Defined on
/// modules without an I_0 summand.
inline KroneckerDescriptor reflect_minus(const KroneckerDescriptor& m) {
  if (m.preinjective().contains(0)) throw std::invalid_argument("reflect_minus: module has an I0 summand");
  KroneckerDescriptor out;
  for (const auto& [n, mult] : m.preprojective()) out.add_preprojective(n + 1, mult);
  for (const auto& [n, mult] : m.preinjective()) out.add_preinjective(n - 1, mult);
  for (const auto& [label, comp] : m.regular()) out.add_regular(label, comp.degree, comp.partition);
  return out;
}

namespace detail {

inline bool same_tube(const Indecomposable& x, const Indecomposable& y) {
  if (x.point != y.point) return false;
  if (x.degree != y.degree) throw std::invalid_argument("point '" + x.point + "' given two different degrees");
  return true;
}

}  // namespace detail

/// dim_k Hom(X, Y) for indecomposables.
inline long hom_dim(const Indecomposable& x, const Indecomposable& y) {
  using F = Family;
  const long n = x.index;
  const long m = y.index;
  switch (x.family) {
    case F::preprojective:
      if (y.family == F::preprojective) return n <= m ? m - n + 1 : 0;
      if (y.family == F::preinjective) return n + m;
      return static_cast<long>(y.degree) * m;
    case F::regular:
      if (y.family == F::preprojective) return 0;
      if (y.family == F::preinjective) return static_cast<long>(x.degree) * n;
      return detail::same_tube(x, y) ? static_cast<long>(x.degree) * std::min(n, m) : 0;
    case F::preinjective:
      if (y.family == F::preinjective) return n >= m ? n - m + 1 : 0;
      return 0;
  }
  return 0;
}

/// dim_k Ext^1(X, Y) for indecomposables.
inline long ext_dim(const Indecomposable& x, const Indecomposable& y) {
  using F = Family;
  const long n = x.index;
  const long m = y.index;
  switch (x.family) {
    case F::preprojective:
      if (y.family == F::preprojective) return n <= m ? 0 : n - m - 1;
      return 0;
    case F::regular:
      if (y.family == F::preprojective) return static_cast<long>(x.degree) * n;
      if (y.family == F::preinjective) return 0;
      return detail::same_tube(x, y) ? static_cast<long>(x.degree) * std::min(n, m) : 0;
    case F::preinjective:
      if (y.family == F::preinjective) return n >= m ? 0 : m - n - 1;
      if (y.family == F::preprojective) return n + m + 2;
      return static_cast<long>(y.degree) * m;
  }
  return 0;
}

/// Additive extension of hom_dim over direct sums.
inline long hom_dim(const KroneckerDescriptor& x, const KroneckerDescriptor& y) {
  long total = 0;
  for (const auto& u : x.summands())
    for (const auto& v : y.summands()) total += hom_dim(u, v);
  return total;
}

inline long ext_dim(const KroneckerDescriptor& x, const KroneckerDescriptor& y) {
  long total = 0;
  for (const auto& u : x.summands())
    for (const auto& v : y.summands()) total += ext_dim(u, v);
  return total;
}

}  // namespace kqg
