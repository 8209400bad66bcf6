#include "invschub/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "invschub/error.hpp"

namespace invschub {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw PreconditionError("not a partition");
  }
  parts_ = std::move(parts);
}

Partition Partition::sorted_from(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  while (!values.empty() && values.back() == 0) values.pop_back();
  return Partition(std::move(values));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::is_strict() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (parts_.empty()) return {};
  for (int j = 1; j <= parts_[0]; ++j) {
    int c = 0;
    for (int p : parts_)
      if (p >= j) ++c;
    t.push_back(c);
  }
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

bool Partition::strictly_contains(const Partition& mu) const {
  int n = std::max(length(), mu.length());
  for (int i = 0; i < n; ++i) {
    if (mu[i] == 0 && (*this)[i] == 0) continue;
    if (!(mu[i] < (*this)[i])) return false;
  }
  return true;
}

bool Partition::is_rectangle() const {
  return parts_.empty() || parts_.front() == parts_.back();
}

StrictPartition::StrictPartition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] >= parts[i - 1]))
      throw PreconditionError("not a strict partition");
  }
  parts_ = std::move(parts);
}

int StrictPartition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int n = std::max(lambda.length(), mu.length());
  int a = 0, b = 0;
  for (int i = 0; i < n; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a > b) return false;
  }
  return true;
}

bool dominance_leq(const StrictPartition& lambda, const StrictPartition& mu) {
  return dominance_leq(lambda.as_partition(), mu.as_partition());
}

namespace {

void gen_partitions(int remaining, int max_part, bool strict, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, strict ? p - 1 : p, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  gen_partitions(n, n, false, cur, raw);
  std::vector<Partition> out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<StrictPartition> strict_partitions(int n) {
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  gen_partitions(n, n, true, cur, raw);
  std::vector<StrictPartition> out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

Partition staircase(int n) {
  std::vector<int> p;
  for (int i = n - 1; i >= 1; --i) p.push_back(i);
  return Partition(std::move(p));
}

namespace {
std::string join_parts(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}
}  // namespace

std::string to_string(const Partition& p) { return join_parts(p.parts()); }
std::string to_string(const StrictPartition& p) { return join_parts(p.parts()); }

}  // namespace invschub
