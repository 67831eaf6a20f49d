#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wap/partition.hpp"

namespace wap {

/// A Maya diagram: a set of integers that contains every position below
/// offset() and none at or above end(). Positions in [offset, end) are given
/// by a bit word which, in normal form, starts with an empty box and ends with
/// a filled one (or is empty), so equal sets have equal representations.
class MayaDiagram {
 public:
  /// The diagram of the empty partition: exactly the negative integers.
  MayaDiagram() = default;

  /// Positions offset + i are filled iff word[i] != 0; everything below offset
  /// is filled, everything past the word is empty.
  MayaDiagram(Index offset, std::vector<std::uint8_t> word);

  bool filled(Index position) const noexcept;
  Index offset() const noexcept { return offset_; }
  Index end() const noexcept { return offset_ + static_cast<Index>(word_.size()); }
  const std::vector<std::uint8_t>& word() const noexcept { return word_; }

  /// (#filled at positions >= 0) - (#empty at positions < 0).
  Index charge() const noexcept;

  /// Filled positions in [offset, end), increasing.
  std::vector<Index> filled_in_window() const;

  /// The "●/○" picture with a bar between positions -1 and 0.
  std::string render() const;
  std::string render(Index from, Index to) const;

  friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;

 private:
  Index offset_ = 0;
  std::vector<std::uint8_t> word_;
};

MayaDiagram maya_from_partition(const Partition& lambda);

/// The partition of the diagram and its charge.
std::pair<Partition, Index> partition_from_maya(const MayaDiagram& m);

/// m ∈ M  <=>  m + t ∈ shift(M, t).
MayaDiagram shift(const MayaDiagram& m, Index t);

/// The equivalent diagram of charge zero.
MayaDiagram canonical(const MayaDiagram& m);

/// result[i] = { m : p*m + i ∈ M }. M must have charge zero.
std::vector<MayaDiagram> p_decompose(const MayaDiagram& m, std::size_t p);

/// Inverse of p_decompose: { p*m + i : m ∈ parts[i] }.
MayaDiagram p_compose(const std::vector<MayaDiagram>& parts);

}  // namespace wap
