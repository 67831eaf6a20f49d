#include "wap/core_quotient.hpp"

#include <numeric>

#include "text.hpp"
#include "wap/error.hpp"

namespace wap {

CharacteristicVector::CharacteristicVector(std::vector<Index> entries) : entries_(std::move(entries)) {
  require(!entries_.empty(), ErrorCode::InvalidArgument, "a characteristic vector needs p >= 1 entries");
  require(std::accumulate(entries_.begin(), entries_.end(), Index{0}) == 0, ErrorCode::InvalidArgument,
          "characteristic vector entries must sum to zero");
}

CharacteristicVector CharacteristicVector::parse(std::string_view text) {
  auto values = detail::parse_int_list(text, "characteristic vector");
  require(!values.empty(), ErrorCode::Parse, "empty characteristic vector");
  return CharacteristicVector(std::move(values));
}

std::string CharacteristicVector::to_string() const { return detail::join_ints(entries_); }

Decomposition decompose(const Partition& lambda, std::size_t p) {
  require(p >= 1, ErrorCode::InvalidArgument, "p must be a positive integer");
  if (p == 1) return {PQuotient({lambda}), CharacteristicVector({0})};
  const auto components = p_decompose(canonical(maya_from_partition(lambda)), p);
  std::vector<Partition> mu;
  std::vector<Index> c;
  for (const auto& component : components) {
    auto [shape, charge] = partition_from_maya(component);
    mu.push_back(std::move(shape));
    c.push_back(charge);
  }
  return {PQuotient(std::move(mu)), CharacteristicVector(std::move(c))};
}

std::vector<MayaDiagram> quotient_diagrams(const PQuotient& mu, const CharacteristicVector& c) {
  require(mu.p() == c.p(), ErrorCode::InvalidArgument,
          "quotient and characteristic vector must both have p entries");
  std::vector<MayaDiagram> diagrams;
  diagrams.reserve(mu.p());
  for (std::size_t i = 0; i < mu.p(); ++i)
    diagrams.push_back(shift(canonical(maya_from_partition(mu[i])), c[i]));
  return diagrams;
}

Partition compose(const PQuotient& mu, const CharacteristicVector& c) {
  return partition_from_maya(p_compose(quotient_diagrams(mu, c))).first;
}

Partition core_from_charvec(const CharacteristicVector& c) { return compose(PQuotient::empty_of(c.p()), c); }

Index core_size_from_charvec(const CharacteristicVector& c) {
  const auto p = static_cast<Index>(c.p());
  Index squares = 0;
  Index weighted = 0;
  for (Index j = 0; j < p; ++j) {
    squares += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j)];
    weighted += j * c[static_cast<std::size_t>(j)];
  }
  // Σ c_j² is even whenever Σ c_j = 0.
  require(squares % 2 == 0, ErrorCode::InternalConsistency, "odd sum of squares in a characteristic vector");
  return p * (squares / 2) + weighted;
}

StripRemoval core_by_strip_removal(const Partition& lambda, std::size_t p, StripOrder order) {
  require(p >= 1, ErrorCode::InvalidArgument, "p must be a positive integer");
  const MayaDiagram start = maya_from_partition(lambda);
  const Index offset = start.offset();
  std::vector<std::uint8_t> word = start.word();
  const auto pp = static_cast<Index>(p);
  const auto size = static_cast<Index>(word.size());

  StripRemoval result;
  for (;;) {
    Index chosen = -1;
    for (Index k = 0; k < size; ++k) {
      const Index i = order == StripOrder::LowestFirst ? k : size - 1 - k;
      if (word[static_cast<std::size_t>(i)] && i - pp >= 0 && !word[static_cast<std::size_t>(i - pp)]) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) break;
    Index passed = 0;
    for (Index i = chosen - pp + 1; i < chosen; ++i) passed += word[static_cast<std::size_t>(i)];
    word[static_cast<std::size_t>(chosen)] = 0;
    word[static_cast<std::size_t>(chosen - pp)] = 1;
    ++result.strips;
    result.total_height += passed;
  }
  result.ht_parity = static_cast<int>(result.total_height % 2);
  result.core = partition_from_maya(MayaDiagram(offset, std::move(word))).first;
  return result;
}

int ht_p_parity_between(const Partition& lambda, const Partition& smaller, std::size_t p) {
  const auto big = core_by_strip_removal(lambda, p);
  const auto small = core_by_strip_removal(smaller, p);
  require(big.core == small.core, ErrorCode::InvalidArgument,
          "partitions (" + lambda.to_string() + ") and (" + smaller.to_string() + ") have different " +
              std::to_string(p) + "-cores");
  return big.ht_parity ^ small.ht_parity;
}

bool is_p_core(const Partition& lambda, std::size_t p) { return decompose(lambda, p).quotient.size() == 0; }

}  // namespace wap
