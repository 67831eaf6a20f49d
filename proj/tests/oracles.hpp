#pragma once

// Slow, independent reference implementations. None of these share code
// paths with the library routines they check.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "wap/bigint.hpp"
#include "wap/partition.hpp"
#include "wap/polynomial.hpp"

namespace oracle {

using wap::BigInt;
using wap::BigRational;
using wap::Index;
using wap::IntPolynomial;
using wap::Partition;

// Coefficients of q_n read off exp(tx - t^p/p) = Σ_m (-1)^m t^{pm} / (p^m m!) · Σ_l x^l t^l / l!.
inline IntPolynomial appell_from_generating_function(std::size_t p, std::size_t n) {
  std::vector<BigInt> coeffs(n + 1, 0);
  for (std::size_t m = 0; p * m <= n; ++m) {
    const std::size_t l = n - p * m;
    BigRational c(wap::factorial(n), wap::factorial(l) * wap::power(BigInt(static_cast<unsigned long>(p)), m) *
                                         wap::factorial(m));
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("non-integral Appell coefficient");
    coeffs[l] += m % 2 ? BigInt(-c.get_num()) : c.get_num();
  }
  return IntPolynomial(std::move(coeffs));
}

// Cofactor expansion along the first row.
inline IntPolynomial laplace_determinant(const std::vector<std::vector<IntPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::monomial(1, 0);
  if (n == 1) return m[0][0];
  IntPolynomial det;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<IntPolynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    IntPolynomial term = m[0][col] * laplace_determinant(minor);
    det = col % 2 ? det - term : det + term;
  }
  return det;
}

struct StripPeel {
  Partition core;
  Index total_height = 0;
};

// Peels p-border strips straight off the Young diagram, trying every
// subpartition of size |λ| - p. `pick_last` chooses the last candidate instead
// of the first, to exercise a different removal order.
inline StripPeel peel_strips(Partition lambda, std::size_t p, bool pick_last = false) {
  StripPeel out;
  for (;;) {
    if (lambda.size() < static_cast<Index>(p)) break;
    std::optional<std::pair<Partition, Index>> chosen;
    for (const auto& smaller : wap::subpartitions(lambda, static_cast<Index>(p))) {
      if (auto strip = wap::border_strip(lambda, smaller)) {
        chosen = {smaller, strip->height};
        if (!pick_last) break;
      }
    }
    if (!chosen) break;
    out.total_height += chosen->second;
    lambda = chosen->first;
  }
  out.core = lambda;
  return out;
}

inline BigInt hook_product_from_cells(const Partition& lambda) {
  BigInt product = 1;
  for (Index h : wap::hook_lengths(lambda)) product *= static_cast<unsigned long>(h);
  return product;
}

// Hook length formula.
inline BigInt syt_by_hook_formula(const Partition& lambda) {
  return wap::factorial(static_cast<std::uint64_t>(lambda.size())) / hook_product_from_cells(lambda);
}

// Expands Π_i (x - roots_i) in doubles; constant term first.
inline std::vector<double> expand_roots(const std::vector<double>& roots) {
  std::vector<double> poly{1.0};
  for (double r : roots) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= r * poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

inline Partition random_partition(std::mt19937_64& rng, Index max_size) {
  std::uniform_int_distribution<Index> size_dist(0, max_size);
  const Index n = size_dist(rng);
  const auto all = wap::partitions_of(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

inline std::vector<Partition> partitions_up_to(Index n) {
  std::vector<Partition> out;
  for (Index s = 0; s <= n; ++s)
    for (auto& l : wap::partitions_of(s)) out.push_back(std::move(l));
  return out;
}

}  // namespace oracle
