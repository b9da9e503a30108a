#pragma once

#include <optional>
#include <string>
#include <vector>

namespace betalag {

// Integer partition: weakly decreasing positive parts, trailing zeros stripped.
// Immutable value type; the comparison operator fixes the deterministic basis
// order used by every graded matrix: weight ascending, then reverse-lexicographic
// within a weight (lexicographically larger parts first, so dominance-larger
// partitions always come earlier).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Text form "2,1"; the empty string denotes ().
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  // 0-based, zero-padded access.
  int part(int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  // B(lambda) = sum (i-1) lambda_i
  long b_stat() const;
  // lambda_(i) with 1-based row index; nullopt when the decrement breaks
  // monotonicity (the operator term vanishes).
  std::optional<Partition> lower(int row) const;
  bool contains(const Partition& mu) const;
  // dominance order (assumes equal weight for the usual meaning; defined via
  // prefix sums in general)
  bool dominates(const Partition& mu) const;

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend bool operator<(const Partition& a, const Partition& b);
  friend bool operator>(const Partition& a, const Partition& b) { return b < a; }

 private:
  std::vector<int> parts_;
};

// All mu with mu_i <= lmax_i and l(mu) <= n_vars, sorted in the basis order.
std::vector<Partition> enumerate_contained(const Partition& lmax, int n_vars);

// All partitions of `weight` with at most max_len parts (and parts <= max_part
// when max_part >= 0), sorted descending-lexicographically.
std::vector<Partition> partitions_of(int weight, int max_len, int max_part = -1);

}  // namespace betalag
