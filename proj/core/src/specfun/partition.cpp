#include "ehrenfest/specfun/partition.hpp"

#include <algorithm>
#include <numeric>

#include "ehrenfest/errors.hpp"

namespace ehrenfest::specfun {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ParameterError("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ParameterError("partition parts must be non-increasing: " + to_string());
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

PartitionGenerator::PartitionGenerator(int weight, std::size_t max_parts)
    : weight_(weight), max_parts_(max_parts) {
  if (weight < 0) throw ParameterError("partition weight must be non-negative");
}

std::optional<Partition> PartitionGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (weight_ == 0) {
      done_ = true;
      return Partition{};
    }
    if (max_parts_ == 0) {
      done_ = true;
      return std::nullopt;
    }
    current_.assign(1, weight_);
    return Partition(current_);
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Partition(current_);
}

// Rightmost part that can be lowered by one while the remainder still fits
// into the free slots with parts no larger than the lowered value.
bool PartitionGenerator::advance() {
  int suffix = 0;
  for (std::size_t i = current_.size(); i-- > 0;) {
    const int v = current_[i] - 1;
    const int remainder = suffix + 1;
    suffix += current_[i];
    if (v < 1) continue;
    const auto free_slots = static_cast<long long>(max_parts_ - (i + 1));
    if (remainder > free_slots * v) continue;
    current_.resize(i + 1);
    current_[i] = v;
    int left = remainder;
    while (left > 0) {
      const int part = std::min(v, left);
      current_.push_back(part);
      left -= part;
    }
    return true;
  }
  return false;
}

std::vector<Partition> partitions_of(int weight, std::size_t max_parts) {
  std::vector<Partition> out;
  PartitionGenerator gen(weight, max_parts);
  while (auto m = gen.next()) out.push_back(std::move(*m));
  return out;
}

double hook_product(const Partition& m) {
  double prod = 1.0;
  const auto rows = m.parts();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      // arm = cells to the right, leg = cells below
      const int arm = rows[i] - j - 1;
      int leg = 0;
      for (std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) ++leg;
      prod *= arm + leg + 1;
    }
  }
  return prod;
}

}  // namespace ehrenfest::specfun
