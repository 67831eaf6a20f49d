#include "wap/maya.hpp"

#include <algorithm>
#include <numeric>

#include "wap/error.hpp"

namespace wap {

namespace {

Index floor_div(Index a, Index b) {
  Index q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Index floor_mod(Index a, Index b) { return a - b * floor_div(a, b); }

}  // namespace

MayaDiagram::MayaDiagram(Index offset, std::vector<std::uint8_t> word) : offset_(offset) {
  auto first_empty = std::find(word.begin(), word.end(), 0);
  offset_ += first_empty - word.begin();
  auto last_filled = std::find_if(word.rbegin(), word.rend(), [](std::uint8_t b) { return b != 0; });
  if (first_empty < last_filled.base()) word_.assign(first_empty, last_filled.base());
  for (auto& bit : word_) bit = bit ? 1 : 0;
}

bool MayaDiagram::filled(Index position) const noexcept {
  if (position < offset_) return true;
  if (position >= end()) return false;
  return word_[static_cast<std::size_t>(position - offset_)] != 0;
}

Index MayaDiagram::charge() const noexcept {
  return offset_ + std::accumulate(word_.begin(), word_.end(), Index{0});
}

std::vector<Index> MayaDiagram::filled_in_window() const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i]) out.push_back(offset_ + static_cast<Index>(i));
  return out;
}

std::string MayaDiagram::render() const {
  return render(std::min<Index>(offset_, 0) - 2, std::max<Index>(end(), 0) + 2);
}

std::string MayaDiagram::render(Index from, Index to) const {
  std::string out = "…";
  for (Index pos = from; pos < to; ++pos) {
    if (pos == 0) out += "|";
    out += filled(pos) ? "●" : "○";
  }
  if (to <= 0) out += "|";
  out += "…";
  return out;
}

MayaDiagram maya_from_partition(const Partition& lambda) {
  const auto degrees = degree_vector(lambda).entries;
  if (degrees.empty()) return MayaDiagram{};
  std::vector<std::uint8_t> word(static_cast<std::size_t>(degrees.front() + 1), 0);
  for (Index n : degrees) word[static_cast<std::size_t>(n)] = 1;
  return MayaDiagram(0, std::move(word));
}

std::pair<Partition, Index> partition_from_maya(const MayaDiagram& m) {
  // Each filled box contributes a part equal to the number of empty boxes
  // to its left; only boxes inside the window can see any.
  std::vector<Index> parts;
  Index empties = 0;
  for (std::size_t i = 0; i < m.word().size(); ++i) {
    if (m.word()[i])
      parts.push_back(empties);
    else
      ++empties;
  }
  std::reverse(parts.begin(), parts.end());
  return {Partition(std::move(parts)), m.charge()};
}

MayaDiagram shift(const MayaDiagram& m, Index t) { return MayaDiagram(m.offset() + t, m.word()); }

MayaDiagram canonical(const MayaDiagram& m) { return shift(m, -m.charge()); }

std::vector<MayaDiagram> p_decompose(const MayaDiagram& m, std::size_t p) {
  require(p >= 1, ErrorCode::InvalidArgument, "p must be a positive integer");
  require(m.charge() == 0, ErrorCode::InvalidArgument,
          "p-modular decomposition needs a charge-zero Maya diagram");
  const auto pp = static_cast<Index>(p);
  std::vector<MayaDiagram> parts;
  parts.reserve(p);
  for (Index i = 0; i < pp; ++i) {
    // p*lo + i < offset for every m < lo; p*hi + i >= end for every m >= hi.
    const Index lo = floor_div(m.offset() - i, pp);
    const Index hi = floor_div(m.end() - i + pp - 1, pp) + 1;
    std::vector<std::uint8_t> word;
    word.reserve(static_cast<std::size_t>(hi - lo));
    for (Index k = lo; k < hi; ++k) word.push_back(m.filled(pp * k + i) ? 1 : 0);
    parts.emplace_back(lo, std::move(word));
  }
  return parts;
}

MayaDiagram p_compose(const std::vector<MayaDiagram>& parts) {
  require(!parts.empty(), ErrorCode::InvalidArgument, "p-modular composition needs p >= 1 diagrams");
  const auto pp = static_cast<Index>(parts.size());
  Index lo = parts.front().offset();
  Index hi = parts.front().end();
  for (const auto& part : parts) {
    lo = std::min(lo, part.offset());
    hi = std::max(hi, part.end());
  }
  std::vector<std::uint8_t> word;
  word.reserve(static_cast<std::size_t>(pp * (hi - lo)));
  for (Index pos = pp * lo; pos < pp * hi; ++pos)
    word.push_back(parts[static_cast<std::size_t>(floor_mod(pos, pp))].filled(floor_div(pos, pp)) ? 1 : 0);
  return MayaDiagram(pp * lo, std::move(word));
}

}  // namespace wap
