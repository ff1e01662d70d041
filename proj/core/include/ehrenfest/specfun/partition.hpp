#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ehrenfest::specfun {

/// An integer partition m_1 >= m_2 >= ... >= m_n >= 0, stored in canonical
/// form (trailing zeros removed).
class Partition {
 public:
  Partition() = default;
  /// Throws ParameterError if parts are negative or increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  /// Number of non-zero parts.
  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// m_i with 0-based index; zero past the last part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Enumerates the partitions of `weight` into at most `max_parts` parts in
/// reverse-lexicographic order, starting from (weight) when it fits.
///
///   PartitionGenerator gen(4, 2);
///   while (auto m = gen.next()) { ... }   // (4), (3,1), (2,2)
///
/// The generator is iterative; its state is the current partition only.
class PartitionGenerator {
 public:
  PartitionGenerator(int weight, std::size_t max_parts);

  std::optional<Partition> next();

 private:
  bool advance();

  int weight_;
  std::size_t max_parts_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// All partitions of `weight` with at most `max_parts` parts, reverse-lex order.
std::vector<Partition> partitions_of(int weight, std::size_t max_parts);

/// Product of hook lengths of the Young diagram of m.
double hook_product(const Partition& m);

}  // namespace ehrenfest::specfun
