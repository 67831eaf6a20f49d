#include "wap/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wap {

RootFindingError::RootFindingError(std::vector<std::complex<double>> best, double residual)
    : Error(ErrorCode::InternalConsistency,
            "root finding did not converge (scaled residual " + std::to_string(residual) + ")"),
      best_(std::move(best)),
      residual_(residual) {}

namespace {

std::complex<double> horner(std::span<const double> c, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

using Quad = __float128;

// Just enough complex arithmetic for the iteration; norm() is the squared modulus.
struct QComplex {
  Quad re = 0;
  Quad im = 0;

  QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
  QComplex operator-(const QComplex& o) const { return {re - o.re, im - o.im}; }
  QComplex operator*(const QComplex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  QComplex operator/(const QComplex& o) const {
    const Quad d = o.norm();
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Quad norm() const { return re * re + im * im; }
  bool finite() const {
    const Quad s = re + im;
    return s == s && s - s == 0;
  }
};

}  // namespace

double scaled_residual(std::span<const double> coeffs, std::complex<double> z) {
  double sup = 0;
  for (double c : coeffs) sup = std::max(sup, std::abs(c));
  if (sup == 0) return 0;
  const double scale = std::pow(std::max(1.0, std::abs(z)), static_cast<double>(coeffs.size() - 1));
  return std::abs(horner(coeffs, z)) / (sup * scale);
}

std::vector<std::complex<double>> numeric_roots(std::span<const double> coeffs, double tol, int max_iterations) {
  require(!coeffs.empty() && coeffs.back() != 0, ErrorCode::InvalidArgument,
          "root finding needs a nonzero leading coefficient");
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};

  // Fujiwara's bound: every root has modulus at most 2 max |c_{n-k}/c_n|^{1/k}.
  double radius = 0;
  for (std::size_t k = 1; k <= n; ++k)
    radius = std::max(radius, std::pow(std::abs(coeffs[n - k] / coeffs[n]), 1.0 / static_cast<double>(k)));
  radius = std::max(2 * radius, 1e-3);

  const std::vector<Quad> c(coeffs.begin(), coeffs.end());
  std::vector<QComplex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto seed =
        std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
    z[k] = {seed.real(), seed.imag()};
  }

  // Multiple roots only converge linearly, and in double they split by about
  // eps^{1/m}; the extra precision keeps clusters tight.
  for (int it = 0; it < max_iterations; ++it) {
    Quad largest_step = 0;
    for (std::size_t k = 0; k < n; ++k) {
      QComplex value{0, 0}, slope{0, 0};
      for (std::size_t d = n + 1; d-- > 0;) {
        slope = slope * z[k] + value;
        value = value * z[k] + QComplex{c[d], 0};
      }
      if (value.norm() == 0) continue;
      const QComplex newton = value / slope;
      QComplex repulsion{0, 0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion = repulsion + QComplex{1, 0} / (z[k] - z[j]);
      const QComplex step = newton / (QComplex{1, 0} - newton * repulsion);
      if (!step.finite()) continue;
      z[k] = z[k] - step;
      const Quad size = z[k].norm();
      largest_step = std::max(largest_step, step.norm() / (size > 1 ? size : Quad{1}));
    }
    if (largest_step <= Quad{1e-60}) break;
  }

  std::vector<std::complex<double>> roots;
  double worst = 0;
  for (const auto& q : z) {
    roots.emplace_back(static_cast<double>(q.re), static_cast<double>(q.im));
    worst = std::max(worst, scaled_residual(coeffs, roots.back()));
  }
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  if (!(worst <= tol)) throw RootFindingError(std::move(roots), worst);
  return roots;
}

}  // namespace wap
