#pragma once

#include <compare>
#include <string>
#include <vector>

namespace invschub {

// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything else out of order throws PreconditionError.
  explicit Partition(std::vector<int> parts);
  static Partition sorted_from(std::vector<int> values);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }
  bool is_strict() const;
  Partition transpose() const;
  bool contains(const Partition& mu) const;
  // mu_i < lambda_i or mu_i = lambda_i = 0 for every i.
  bool strictly_contains(const Partition& mu) const;
  bool is_rectangle() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

// Strictly decreasing sequence of positive parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }
  Partition as_partition() const { return Partition(parts_); }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Partial-sum comparison; false when sizes differ.
bool dominance_leq(const Partition& lambda, const Partition& mu);
bool dominance_leq(const StrictPartition& lambda, const StrictPartition& mu);

// Partitions of n in decreasing lexicographic order (a linear extension of dominance).
std::vector<Partition> partitions(int n);
std::vector<StrictPartition> strict_partitions(int n);
// delta_n = (n-1, ..., 2, 1).
Partition staircase(int n);

std::string to_string(const Partition& p);
std::string to_string(const StrictPartition& p);

}  // namespace invschub
