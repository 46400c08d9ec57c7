#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kqg {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  /// Sorts and validates arbitrary positive parts.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part, 0-based; zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// n(lambda) = sum (i-1) lambda_i.
  int n() const {
    int s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
    return s;
  }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_)
      for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
  }

  /// mu is contained in *this (mu_i <= lambda_i for all i).
  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
      if (mu.parts_[i] > parts_[i]) return false;
    return true;
  }

  /// Dominance order: partial sums of *this are >= those of mu (equal weights).
  bool dominates(const Partition& mu) const {
    if (weight() != mu.weight()) return false;
    int s = 0, t = 0;
    for (std::size_t i = 0; i < std::max(length(), mu.length()); ++i) {
      s += (*this)[i];
      t += mu[i];
      if (s < t) return false;
    }
    return true;
  }

  /// Union of parts (the partition of a direct sum).
  Partition merged_with(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return from_unsorted(std::move(all));
  }

  /// Comma-separated parts, e.g. "2,1"; empty partition renders as "".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of `weight` with parts at most `max_part`, in reverse
/// lexicographic order.
inline std::vector<Partition> partitions_of(int weight, int max_part = -1) {
  if (max_part < 0) max_part = weight;
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  if (weight >= 0) rec(rec, weight, max_part);
  return out;
}

/// All partitions mu contained in lambda (including empty and lambda itself).
inline std::vector<Partition> sub_partitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
    out.emplace_back(current);
    if (i >= lambda.length()) return;
    for (int part = std::min(cap, lambda[i]); part >= 1; --part) {
      current.push_back(part);
      self(self, i + 1, part);
      current.pop_back();
    }
  };
  rec(rec, 0, lambda.empty() ? 0 : lambda[0]);
  return out;
}

}  // namespace kqg
