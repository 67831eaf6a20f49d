#pragma once

#include <cstddef>
#include <vector>

#include "wap/partition.hpp"
#include "wap/polynomial.hpp"

namespace wap {

inline constexpr std::size_t kDefaultMaxWronskianDegree = 400;

/// q_0..q_N with exponential generating function exp(tx - t^p/p).
class AppellTable {
 public:
  AppellTable(std::size_t p, std::vector<IntPolynomial> polys);

  std::size_t p() const noexcept { return p_; }
  std::size_t n_max() const noexcept { return polys_.size() - 1; }
  const IntPolynomial& operator[](std::size_t n) const { return polys_.at(n); }
  const std::vector<IntPolynomial>& polys() const noexcept { return polys_; }

 private:
  std::size_t p_;
  std::vector<IntPolynomial> polys_;
};

/// q_n = x q_{n-1} - (n-1)!/(n-p)! q_{n-p} for n >= p, q_n = x^n below p.
AppellTable appell_sequence(std::size_t p, std::size_t n_max);

/// Determinant of a square matrix over Z[x] by fraction-free elimination.
IntPolynomial bareiss_determinant(std::vector<std::vector<IntPolynomial>> matrix);

/// q_λ = Wr[q_{n_1}, ..., q_{n_r}] / Π_{i<j} (n_j - n_i). Throws SizeLimit
/// when |λ| exceeds max_degree.
IntPolynomial wronskian_q(const Partition& lambda, std::size_t p,
                          std::size_t max_degree = kDefaultMaxWronskianDegree);

struct Factorization {
  IntPolynomial q;        // q_λ
  Index core_size = 0;    // |λ̄|, the order of the zero at the origin
  IntPolynomial r;        // q_λ(x) = x^{|λ̄|} R_λ(x^p)
};

/// Computes q_λ and splits off R_λ, checking every structural guarantee on the way.
Factorization factorize(const Partition& lambda, std::size_t p,
                        std::size_t max_degree = kDefaultMaxWronskianDegree);

IntPolynomial extract_R(const Partition& lambda, std::size_t p,
                        std::size_t max_degree = kDefaultMaxWronskianDegree);

}  // namespace wap
