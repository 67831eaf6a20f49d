#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wap/maya.hpp"
#include "wap/partition.hpp"

namespace wap {

/// p integers summing to zero: the charges of the p modular component
/// diagrams. Labels a p-core uniquely.
class CharacteristicVector {
 public:
  explicit CharacteristicVector(std::vector<Index> entries);

  /// Parses "2,-1,-1".
  static CharacteristicVector parse(std::string_view text);
  std::string to_string() const;

  std::size_t p() const noexcept { return entries_.size(); }
  Index operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Index>& entries() const noexcept { return entries_; }

  friend bool operator==(const CharacteristicVector&, const CharacteristicVector&) = default;

 private:
  std::vector<Index> entries_;
};

struct Decomposition {
  PQuotient quotient;
  CharacteristicVector charvec;
};

/// λ -> (p-quotient, characteristic vector), anchored at the charge-zero diagram.
Decomposition decompose(const Partition& lambda, std::size_t p);

/// Inverse of decompose.
Partition compose(const PQuotient& mu, const CharacteristicVector& c);

/// The component diagrams M^(i) = canonical(M_{μ^(i)}) + c_i.
std::vector<MayaDiagram> quotient_diagrams(const PQuotient& mu, const CharacteristicVector& c);

Partition core_from_charvec(const CharacteristicVector& c);

/// (p/2) Σ c_j² + Σ j c_j.
Index core_size_from_charvec(const CharacteristicVector& c);

enum class StripOrder {
  LowestFirst,   // move the lowest-positioned movable bullet each step
  HighestFirst,
};

struct StripRemoval {
  Partition core;
  int ht_parity = 0;   // total height of the removed strips, mod 2
  Index strips = 0;    // number of strips removed (= |μ|)
  Index total_height = 0;
};

/// Removes p-border strips until none is left, tracking heights. Each strip is
/// a bullet moving p steps left on the Maya diagram; its height is the number
/// of bullets it jumps over.
StripRemoval core_by_strip_removal(const Partition& lambda, std::size_t p,
                                   StripOrder order = StripOrder::LowestFirst);

/// ht_p(λ/λ̃) mod 2 for λ̃ obtained from λ by removing p-strips.
int ht_p_parity_between(const Partition& lambda, const Partition& smaller, std::size_t p);

bool is_p_core(const Partition& lambda, std::size_t p);

}  // namespace wap
