#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wap/bigint.hpp"
#include "wap/core_quotient.hpp"
#include "wap/maya.hpp"
#include "wap/partition.hpp"

namespace wap {

/// A multiset of hook lengths: counts[h] is the multiplicity of h.
struct HookHistogram {
  std::vector<Index> counts;

  void add(Index hook, Index times = 1);
  Index total() const;
  BigInt product() const;
};

/// Hook lengths as distances from each empty box to every filled box right of it.
HookHistogram maya_hook_histogram(const MayaDiagram& m);

/// Product of all hook lengths, computed from Maya-diagram pairings.
BigInt hook_product(const Partition& lambda);

struct HookSplit {
  BigInt non_p_fold;
  BigInt p_fold;
};

struct HookSplitHistograms {
  HookHistogram non_p_fold;  // pairs across different component diagrams
  HookHistogram p_fold;      // pairs inside one component diagram
};

/// Hook lengths of compose(mu, c), read off the component diagrams.
HookSplitHistograms split_hook_histograms(const PQuotient& mu, const CharacteristicVector& c);

HookSplit hook_split(const Partition& lambda, std::size_t p);

struct CoreRatio {
  BigInt ratio;   // H_non-p-fold(λ) / H(core)
  Index factors;  // number of surviving factors, (p-1)|μ|
};

/// H_non-p-fold(λ) / H(λ̄). The core's hooks form a sub-multiset of λ's
/// non-p-fold hooks, so the division is a cancellation of factors.
CoreRatio nonpfold_core_ratio(const Partition& lambda, std::size_t p);
CoreRatio nonpfold_core_ratio(const PQuotient& mu, const CharacteristicVector& c);

/// Π num / Π den, cancelling common factors first.
BigRational histogram_ratio(const HookHistogram& numerator, const HookHistogram& denominator);

struct AttractorVector {
  std::vector<double> a;
  std::vector<double> alphas;  // α_i = Π_{j≠i} (a_i - a_j)
};

AttractorVector attractors(std::span<const double> a);
std::vector<BigInt> attractors_exact(std::span<const Index> a);

/// (-1)^parity · p^{(p-1)|μ|} · Π α_i^{|μ^(i)|}.
double lemma4_coefficient_A(const PQuotient& mu, std::span<const double> a, int ht_parity);

struct Lemma4Row {
  Index k = 0;
  double normalized_ratio = 0;  // (H_non-p-fold(λ(k)) / H(λ̄(k))) / k^{(p-1)|μ|}
  int ht_parity = 0;            // ht_p(λ(k)/λ̄(k)) mod 2
  double coefficient_A = 0;
  double relative_deviation = 0;  // |measured - A| / |A|
};

/// Builds λ(k) = compose(mu, k·a) for each k and measures the hook ratio.
std::vector<Lemma4Row> verify_lemma4(const PQuotient& mu, std::span<const Index> a,
                                     std::span<const Index> k_list);

}  // namespace wap
