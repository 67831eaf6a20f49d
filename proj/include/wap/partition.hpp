#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wap/bigint.hpp"

namespace wap {

using Index = std::int64_t;

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Trailing zeros are never stored; the empty sequence is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Index> parts);

  /// Parses "8,8,6,6,2,2,1". The empty string is the empty partition.
  static Partition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Index>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Index size() const noexcept { return size_; }

  /// Part i (0-based), or 0 past the end.
  Index part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Index> parts_;
  Index size_ = 0;
};

/// n_i = λ_i + r - i (1-based i); strictly decreasing, all entries positive.
struct DegreeVector {
  std::vector<Index> entries;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

DegreeVector degree_vector(const Partition& lambda);
Partition partition_from_degree_vector(const DegreeVector& degrees);

/// Hook lengths read cell by cell off the Young diagram, row-major order.
std::vector<Index> hook_lengths(const Partition& lambda);

/// Cell-wise containment of Young diagrams: inner ≤ outer.
bool contains(const Partition& outer, const Partition& inner);

/// |outer| - |inner|; throws InvalidArgument unless inner ≤ outer.
Index size_difference(const Partition& outer, const Partition& inner);

/// Number of standard Young tableaux of the skew shape outer/inner, i.e. the
/// number of saturated chains inner <1 ... <1 outer in the Young lattice.
BigInt syt_count(const Partition& outer, const Partition& inner = Partition{});

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(Index n);

/// All μ ≤ λ with |λ| - |μ| = removed, in increasing lexicographic order.
std::vector<Partition> subpartitions(const Partition& lambda, Index removed);

/// A connected skew diagram without 2x2 squares. Cells are 1-based (row, col).
struct BorderStrip {
  std::vector<std::pair<Index, Index>> cells;
  Index height = 0;
};

/// The skew diagram outer/inner if it is a border strip, else nullopt.
std::optional<BorderStrip> border_strip(const Partition& outer, const Partition& inner);

/// An ordered p-tuple of partitions.
class PQuotient {
 public:
  PQuotient() = default;
  explicit PQuotient(std::vector<Partition> components);

  /// p empty components.
  static PQuotient empty_of(std::size_t p);

  /// Parses "1,1;4;2,1"; empty fields are empty components.
  static PQuotient parse(std::string_view text);
  std::string to_string() const;

  std::size_t p() const noexcept { return components_.size(); }
  Index size() const noexcept { return size_; }
  const Partition& operator[](std::size_t i) const { return components_.at(i); }
  const std::vector<Partition>& components() const noexcept { return components_; }

  friend bool operator==(const PQuotient& a, const PQuotient& b) {
    return a.components_ == b.components_;
  }
  friend std::strong_ordering operator<=>(const PQuotient& a, const PQuotient& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
  Index size_ = 0;
};

/// Componentwise containment.
bool contains(const PQuotient& outer, const PQuotient& inner);

/// All p-tuples μ̃ ≤ μ with |μ| - |μ̃| = j, each once, lexicographic on components.
std::vector<PQuotient> enumerate_subpartitions(const PQuotient& mu, Index j);

}  // namespace wap
