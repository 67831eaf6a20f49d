#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wap/error.hpp"

namespace wap {

/// Thrown when simultaneous iteration hits its cap without meeting the
/// residual bound; carries the best iterate.
class RootFindingError : public Error {
 public:
  RootFindingError(std::vector<std::complex<double>> best, double residual);

  const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }
  double residual() const noexcept { return residual_; }

 private:
  std::vector<std::complex<double>> best_;
  double residual_;
};

/// |P(z)| / (max_i |c_i| * max(1, |z|)^deg).
double scaled_residual(std::span<const double> coeffs, std::complex<double> z);

/// All complex roots (with multiplicity) of Σ coeffs[d] x^d by Aberth-Ehrlich
/// iteration, sorted by (real, imag). Each root satisfies scaled_residual <= tol.
std::vector<std::complex<double>> numeric_roots(std::span<const double> coeffs, double tol = 1e-9,
                                                int max_iterations = 500);

}  // namespace wap
