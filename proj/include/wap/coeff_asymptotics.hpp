#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wap/bigint.hpp"
#include "wap/core_quotient.hpp"
#include "wap/partition.hpp"
#include "wap/polynomial.hpp"
#include "wap/wronskian.hpp"

namespace wap {

/// Lattice paths from sub to mu in the product of p Young lattices:
/// the multinomial of the per-component size drops times Π F_{μ^(i)/μ̃^(i)}.
BigInt f_p_count(const PQuotient& mu, const PQuotient& sub);
BigInt f_p_count(const PQuotient& mu);

/// Coefficient r_j of x^{|μ|-j} in R_λ, λ = compose(mu, c), from hook lengths,
/// border-strip heights and lattice path counts.
BigInt r_coefficient(const PQuotient& mu, const CharacteristicVector& c, Index j);

/// r_0..r_{|μ|}.
std::vector<BigInt> r_coefficients(const PQuotient& mu, const CharacteristicVector& c);

/// R_λ assembled from r_coefficients (constant term first, as usual).
IntPolynomial r_polynomial_by_formula(const PQuotient& mu, const CharacteristicVector& c);

/// L_0..L_{|μ|}, the coefficients of Π (x - α_i)^{|μ^(i)|} from the top down,
/// summed over compositions l_0 + ... + l_{p-1} = j.
std::vector<double> limit_coefficients(const PQuotient& mu, std::span<const double> a);
std::vector<BigInt> limit_coefficients_exact(const PQuotient& mu, std::span<const Index> a);

/// Π (x - α_i)^{|μ^(i)|} by repeated multiplication; constant term first.
std::vector<double> limit_polynomial(const PQuotient& mu, std::span<const double> a);
IntPolynomial limit_polynomial_exact(const PQuotient& mu, std::span<const Index> a);

/// c(k) = a·k + b. Both a and b must sum to zero.
struct GrowthSpec {
  std::vector<Index> a;
  std::vector<Index> b;

  GrowthSpec(std::vector<Index> rates, std::vector<Index> offsets = {});
  std::size_t p() const noexcept { return a.size(); }
  CharacteristicVector at(Index k) const;
};

enum class Method { Wronskian, Formula, Both };

std::string method_name(Method method);
Method parse_method(std::string_view name);

struct ConvergenceOptions {
  Method method = Method::Formula;
  double root_tol = 1e-9;
  std::size_t max_wronskian_degree = kDefaultMaxWronskianDegree;
};

struct CoefficientRow {
  Index j = 0;
  double rescaled = 0;  // r_j / (pk)^{(p-1)j}
  double limit = 0;     // L_j
  double abs_error = 0;
};

struct RootRow {
  std::complex<double> root;
  std::size_t nearest = 0;  // index i of the closest α_i, ties to the lower index
  double attractor = 0;
  double distance = 0;
};

struct ConvergenceRow {
  Index k = 0;
  std::vector<Index> charvec;
  Index lambda_size = 0;
  Index core_size = 0;
  std::vector<BigInt> exact;  // r_{λ(k),j}
  std::vector<CoefficientRow> coefficients;
  double sup_error = 0;
  std::vector<RootRow> roots;
  std::vector<Index> attractor_counts;
  bool counts_match = false;  // attractor_counts == (|μ^(i)|)_i
};

struct ConvergenceReport {
  PQuotient mu;
  GrowthSpec growth;
  Method method = Method::Formula;
  std::vector<double> alphas;
  std::vector<double> limit;  // L_j
  std::vector<ConvergenceRow> rows;
};

/// Evaluates R_{λ(k)} for every k (ascending, strictly increasing), rescales
/// its coefficients exactly and compares them with L_j; finds the rescaled roots.
ConvergenceReport run_convergence(const PQuotient& mu, const GrowthSpec& growth, std::span<const Index> k_list,
                                  const ConvergenceOptions& options = {});

}  // namespace wap
