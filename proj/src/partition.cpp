#include "wap/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "text.hpp"
#include "wap/error.hpp"

namespace wap {

Partition::Partition(std::vector<Index> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, ErrorCode::InvalidArgument, "partition parts must be positive");
    require(i == 0 || parts_[i - 1] >= parts_[i], ErrorCode::InvalidArgument,
            "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), Index{0});
}

Partition Partition::parse(std::string_view text) {
  auto values = detail::parse_int_list(text, "partition");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i] > 0, ErrorCode::Parse, "partition parts must be positive integers");
    require(i == 0 || values[i - 1] >= values[i], ErrorCode::Parse,
            "partition parts must be weakly decreasing");
  }
  return Partition(std::move(values));
}

std::string Partition::to_string() const { return detail::join_ints(parts_); }

Partition Partition::conjugate() const {
  std::vector<Index> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (Index row : parts_)
    for (Index j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

DegreeVector degree_vector(const Partition& lambda) {
  const auto r = static_cast<Index>(lambda.length());
  DegreeVector n;
  n.entries.reserve(lambda.length());
  for (Index i = 0; i < r; ++i) n.entries.push_back(lambda.parts()[static_cast<std::size_t>(i)] + r - (i + 1));
  return n;
}

Partition partition_from_degree_vector(const DegreeVector& degrees) {
  const auto r = static_cast<Index>(degrees.entries.size());
  std::vector<Index> parts;
  for (Index i = 0; i < r; ++i) {
    const Index n = degrees.entries[static_cast<std::size_t>(i)];
    require(n > 0 && (i == 0 || degrees.entries[static_cast<std::size_t>(i - 1)] > n),
            ErrorCode::InvalidArgument, "degree vector must be strictly decreasing and positive");
    parts.push_back(n - r + (i + 1));
  }
  return Partition(std::move(parts));
}

std::vector<Index> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<Index> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (Index j = 0; j < lambda.parts()[i]; ++j) {
      const Index arm = lambda.parts()[i] - j - 1;
      const Index leg = conj.part(static_cast<std::size_t>(j)) - static_cast<Index>(i) - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.parts()[i] > outer.parts()[i]) return false;
  return true;
}

Index size_difference(const Partition& outer, const Partition& inner) {
  require(contains(outer, inner), ErrorCode::InvalidArgument,
          "(" + inner.to_string() + ") is not contained in (" + outer.to_string() + ")");
  return outer.size() - inner.size();
}

namespace {

// Removes one corner cell at a time from `outer` until reaching `inner`.
class SkewTableauCounter {
 public:
  explicit SkewTableauCounter(const Partition& inner) : inner_(inner) {}

  BigInt count(const Partition& shape) {
    if (shape == inner_) return 1;
    if (auto it = memo_.find(shape); it != memo_.end()) return it->second;
    BigInt total = 0;
    const auto& parts = shape.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const bool corner = (i + 1 == parts.size()) || parts[i + 1] < parts[i];
      if (!corner || parts[i] <= inner_.part(i)) continue;
      std::vector<Index> smaller = parts;
      --smaller[i];
      total += count(Partition(std::move(smaller)));
    }
    memo_.emplace(shape, total);
    return total;
  }

 private:
  Partition inner_;
  std::map<Partition, BigInt> memo_;
};

void generate_partitions(Index remaining, Index max_part, std::vector<Index>& prefix,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Index part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void generate_subpartitions(const Partition& outer, std::size_t row, Index remaining, Index cap,
                            std::vector<Index>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (row >= outer.length()) return;
  // Rows below can hold at most this much.
  Index capacity = 0;
  for (std::size_t i = row; i < outer.length(); ++i) capacity += std::min(outer.parts()[i], cap);
  if (capacity < remaining) return;
  const Index top = std::min({outer.parts()[row], cap, remaining});
  for (Index part = top; part >= 1; --part) {
    prefix.push_back(part);
    generate_subpartitions(outer, row + 1, remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

BigInt syt_count(const Partition& outer, const Partition& inner) {
  require(contains(outer, inner), ErrorCode::InvalidArgument,
          "(" + inner.to_string() + ") is not contained in (" + outer.to_string() + ")");
  return SkewTableauCounter(inner).count(outer);
}

std::vector<Partition> partitions_of(Index n) {
  require(n >= 0, ErrorCode::InvalidArgument, "partition size must be non-negative");
  std::vector<Partition> out;
  std::vector<Index> prefix;
  generate_partitions(n, n, prefix, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda, Index removed) {
  require(removed >= 0 && removed <= lambda.size(), ErrorCode::InvalidArgument,
          "number of removed boxes out of range");
  std::vector<Partition> out;
  std::vector<Index> prefix;
  const Index target = lambda.size() - removed;
  generate_subpartitions(lambda, 0, target, target, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BorderStrip> border_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner) || outer.size() == inner.size()) return std::nullopt;
  std::set<std::pair<Index, Index>> cells;
  for (std::size_t i = 0; i < outer.length(); ++i)
    for (Index j = inner.part(i); j < outer.parts()[i]; ++j)
      cells.emplace(static_cast<Index>(i) + 1, j + 1);

  for (auto [r, c] : cells)
    if (cells.count({r, c + 1}) && cells.count({r + 1, c}) && cells.count({r + 1, c + 1}))
      return std::nullopt;

  std::set<std::pair<Index, Index>> seen;
  std::vector<std::pair<Index, Index>> stack{*cells.begin()};
  seen.insert(*cells.begin());
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (auto next : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}})
      if (cells.count(next) && seen.insert(next).second) stack.push_back(next);
  }
  if (seen.size() != cells.size()) return std::nullopt;

  std::set<Index> rows;
  for (auto cell : cells) rows.insert(cell.first);
  BorderStrip strip;
  strip.cells.assign(cells.begin(), cells.end());
  strip.height = static_cast<Index>(rows.size()) - 1;
  return strip;
}

PQuotient::PQuotient(std::vector<Partition> components) : components_(std::move(components)) {
  require(!components_.empty(), ErrorCode::InvalidArgument, "a p-quotient needs p >= 1 components");
  for (const auto& c : components_) size_ += c.size();
}

PQuotient PQuotient::empty_of(std::size_t p) { return PQuotient(std::vector<Partition>(p)); }

PQuotient PQuotient::parse(std::string_view text) {
  std::vector<Partition> components;
  for (auto field : detail::split(text, ';')) components.push_back(Partition::parse(field));
  return PQuotient(std::move(components));
}

std::string PQuotient::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ';';
    out += components_[i].to_string();
  }
  return out;
}

bool contains(const PQuotient& outer, const PQuotient& inner) {
  if (outer.p() != inner.p()) return false;
  for (std::size_t i = 0; i < outer.p(); ++i)
    if (!contains(outer[i], inner[i])) return false;
  return true;
}

std::vector<PQuotient> enumerate_subpartitions(const PQuotient& mu, Index j) {
  require(j >= 0 && j <= mu.size(), ErrorCode::InvalidArgument, "j must lie in [0, |mu|]");
  const std::size_t p = mu.p();
  std::vector<PQuotient> out;
  std::vector<Partition> chosen(p);
  // Distribute the j removed boxes over the components.
  std::function<void(std::size_t, Index)> recurse = [&](std::size_t i, Index left) {
    if (i == p) {
      if (left == 0) out.emplace_back(chosen);
      return;
    }
    const Index cap = std::min(left, mu[i].size());
    for (Index l = 0; l <= cap; ++l) {
      for (auto& sub : subpartitions(mu[i], l)) {
        chosen[i] = std::move(sub);
        recurse(i + 1, left - l);
      }
    }
  };
  recurse(0, j);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wap
