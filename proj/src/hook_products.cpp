#include "wap/hook_products.hpp"

#include <algorithm>
#include <cmath>

#include "wap/error.hpp"

namespace wap {

void HookHistogram::add(Index hook, Index times) {
  if (static_cast<std::size_t>(hook) >= counts.size()) counts.resize(static_cast<std::size_t>(hook) + 1, 0);
  counts[static_cast<std::size_t>(hook)] += times;
}

Index HookHistogram::total() const {
  Index sum = 0;
  for (Index c : counts) sum += c;
  return sum;
}

BigInt HookHistogram::product() const {
  BigInt result = 1;
  for (std::size_t h = 2; h < counts.size(); ++h)
    if (counts[h] > 0) result *= power(BigInt(static_cast<unsigned long>(h)), static_cast<std::uint64_t>(counts[h]));
  return result;
}

HookHistogram maya_hook_histogram(const MayaDiagram& m) {
  // Below offset every box is filled and past end every box is empty, so each
  // (empty n < filled m) pair has both boxes inside the window.
  HookHistogram hist;
  const auto& word = m.word();
  for (std::size_t n = 0; n < word.size(); ++n) {
    if (word[n]) continue;
    for (std::size_t f = n + 1; f < word.size(); ++f)
      if (word[f]) hist.add(static_cast<Index>(f - n));
  }
  return hist;
}

BigInt hook_product(const Partition& lambda) { return maya_hook_histogram(maya_from_partition(lambda)).product(); }

HookSplitHistograms split_hook_histograms(const PQuotient& mu, const CharacteristicVector& c) {
  const auto diagrams = quotient_diagrams(mu, c);
  const auto p = static_cast<Index>(diagrams.size());
  // A filled box below every window, or an empty box past every window, cannot
  // take part in a pair (pm+i > pn+j): the window [lo, hi) is enough.
  Index lo = diagrams.front().offset();
  Index hi = diagrams.front().end();
  for (const auto& d : diagrams) {
    lo = std::min(lo, d.offset());
    hi = std::max(hi, d.end());
  }
  HookSplitHistograms out;
  for (Index i = 0; i < p; ++i) {
    const auto& filled_in = diagrams[static_cast<std::size_t>(i)];
    for (Index j = 0; j < p; ++j) {
      const auto& empty_in = diagrams[static_cast<std::size_t>(j)];
      auto& target = i == j ? out.p_fold : out.non_p_fold;
      for (Index m = lo; m < hi; ++m) {
        if (!filled_in.filled(m)) continue;
        for (Index n = lo; n <= m; ++n) {
          if (empty_in.filled(n)) continue;
          const Index hook = (p * m + i) - (p * n + j);
          if (hook > 0) target.add(hook);
        }
      }
    }
  }
  return out;
}

HookSplit hook_split(const Partition& lambda, std::size_t p) {
  const auto d = decompose(lambda, p);
  const auto hist = split_hook_histograms(d.quotient, d.charvec);
  return {hist.non_p_fold.product(), hist.p_fold.product()};
}

BigRational histogram_ratio(const HookHistogram& numerator, const HookHistogram& denominator) {
  BigInt num = 1;
  BigInt den = 1;
  const std::size_t top = std::max(numerator.counts.size(), denominator.counts.size());
  for (std::size_t h = 2; h < top; ++h) {
    const Index a = h < numerator.counts.size() ? numerator.counts[h] : 0;
    const Index b = h < denominator.counts.size() ? denominator.counts[h] : 0;
    if (a > b) num *= power(BigInt(static_cast<unsigned long>(h)), static_cast<std::uint64_t>(a - b));
    if (b > a) den *= power(BigInt(static_cast<unsigned long>(h)), static_cast<std::uint64_t>(b - a));
  }
  BigRational ratio(num, den);
  ratio.canonicalize();
  return ratio;
}

CoreRatio nonpfold_core_ratio(const PQuotient& mu, const CharacteristicVector& c) {
  const auto split = split_hook_histograms(mu, c);
  const auto core = split_hook_histograms(PQuotient::empty_of(c.p()), c);
  require(core.p_fold.total() == 0, ErrorCode::InternalConsistency, "a p-core has a hook divisible by p");
  CoreRatio result{1, 0};
  const auto& num = split.non_p_fold.counts;
  const auto& den = core.non_p_fold.counts;
  for (std::size_t h = 1; h < std::max(num.size(), den.size()); ++h) {
    const Index a = h < num.size() ? num[h] : 0;
    const Index b = h < den.size() ? den[h] : 0;
    require(a >= b, ErrorCode::InternalConsistency,
            "core hook length " + std::to_string(h) + " missing from the non-p-fold hooks");
    if (a > b) {
      result.ratio *= power(BigInt(static_cast<unsigned long>(h)), static_cast<std::uint64_t>(a - b));
      result.factors += a - b;
    }
  }
  const Index expected = static_cast<Index>(c.p() - 1) * mu.size();
  require(result.factors == expected, ErrorCode::InternalConsistency,
          "non-p-fold/core ratio has " + std::to_string(result.factors) + " factors, expected " +
              std::to_string(expected));
  return result;
}

CoreRatio nonpfold_core_ratio(const Partition& lambda, std::size_t p) {
  const auto d = decompose(lambda, p);
  return nonpfold_core_ratio(d.quotient, d.charvec);
}

AttractorVector attractors(std::span<const double> a) {
  AttractorVector out;
  out.a.assign(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double alpha = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) alpha *= a[i] - a[j];
    out.alphas.push_back(alpha);
  }
  return out;
}

std::vector<BigInt> attractors_exact(std::span<const Index> a) {
  std::vector<BigInt> alphas;
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigInt alpha = 1;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) alpha *= from_int64(a[i] - a[j]);
    alphas.push_back(alpha);
  }
  return alphas;
}

double lemma4_coefficient_A(const PQuotient& mu, std::span<const double> a, int ht_parity) {
  require(a.size() == mu.p(), ErrorCode::InvalidArgument, "need one growth rate per quotient component");
  const auto alphas = attractors(a).alphas;
  const double p = static_cast<double>(mu.p());
  double value = std::pow(p, (p - 1) * static_cast<double>(mu.size()));
  for (std::size_t i = 0; i < mu.p(); ++i) value *= std::pow(alphas[i], static_cast<double>(mu[i].size()));
  return ht_parity % 2 ? -value : value;
}

std::vector<Lemma4Row> verify_lemma4(const PQuotient& mu, std::span<const Index> a, std::span<const Index> k_list) {
  require(a.size() == mu.p(), ErrorCode::InvalidArgument, "need one growth rate per quotient component");
  Index sum = 0;
  for (Index v : a) sum += v;
  require(sum == 0, ErrorCode::InvalidArgument, "growth rates must sum to zero");
  const std::vector<double> rates(a.begin(), a.end());
  const auto exponent = static_cast<std::uint64_t>(static_cast<Index>(mu.p() - 1) * mu.size());

  std::vector<Lemma4Row> rows;
  for (Index k : k_list) {
    require(k > 0, ErrorCode::InvalidArgument, "k must be positive");
    std::vector<Index> entries;
    for (Index v : a) entries.push_back(v * k);
    const CharacteristicVector c(std::move(entries));
    const auto ratio = nonpfold_core_ratio(mu, c);
    const Partition lambda = compose(mu, c);

    Lemma4Row row;
    row.k = k;
    row.normalized_ratio = BigRational(ratio.ratio, power(BigInt(static_cast<unsigned long>(k)), exponent)).get_d();
    row.ht_parity = core_by_strip_removal(lambda, mu.p()).ht_parity;
    row.coefficient_A = lemma4_coefficient_A(mu, rates, row.ht_parity);
    row.relative_deviation = row.coefficient_A == 0
                                 ? std::abs(row.normalized_ratio)
                                 : std::abs(row.normalized_ratio - row.coefficient_A) / std::abs(row.coefficient_A);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wap
