#include "wap/coeff_asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "wap/error.hpp"
#include "wap/hook_products.hpp"
#include "wap/roots.hpp"

namespace wap {

BigInt f_p_count(const PQuotient& mu, const PQuotient& sub) {
  require(contains(mu, sub), ErrorCode::InvalidArgument,
          "(" + sub.to_string() + ") is not contained in (" + mu.to_string() + ")");
  // Multinomial as a product of binomials.
  BigInt count = 1;
  std::uint64_t placed = 0;
  for (std::size_t i = 0; i < mu.p(); ++i) {
    const auto drop = static_cast<std::uint64_t>(mu[i].size() - sub[i].size());
    placed += drop;
    count *= binomial(placed, drop);
    count *= syt_count(mu[i], sub[i]);
  }
  return count;
}

BigInt f_p_count(const PQuotient& mu) { return f_p_count(mu, PQuotient::empty_of(mu.p())); }

namespace {

struct SubTerm {
  HookHistogram non_p_fold;
  int ht_parity = 0;
};

SubTerm sub_term(const PQuotient& mu, const CharacteristicVector& c) {
  const auto p = c.p();
  SubTerm t;
  t.non_p_fold = split_hook_histograms(mu, c).non_p_fold;
  t.ht_parity = core_by_strip_removal(compose(mu, c), p).ht_parity;
  return t;
}

BigInt r_coefficient_with(const PQuotient& mu, const CharacteristicVector& c, Index j, const SubTerm& top,
                          const BigInt& f_mu) {
  BigRational sum = 0;
  for (const auto& sub : enumerate_subpartitions(mu, j)) {
    const SubTerm lower = sub_term(sub, c);
    BigRational term(f_p_count(sub) * f_p_count(mu, sub), f_mu);
    term.canonicalize();
    term *= histogram_ratio(top.non_p_fold, lower.non_p_fold);
    // ht_p(λ/λ̃) ≡ ht_p(λ/λ̄) - ht_p(λ̃/λ̄)  (mod 2)
    if ((top.ht_parity ^ lower.ht_parity) != 0)
      sum -= term;
    else
      sum += term;
  }
  sum *= binomial(static_cast<std::uint64_t>(mu.size()), static_cast<std::uint64_t>(j));
  if (j % 2 != 0) sum = -sum;
  sum.canonicalize();
  require(sum.get_den() == 1, ErrorCode::InternalConsistency,
          "coefficient r_" + std::to_string(j) + " is not an integer for quotient (" + mu.to_string() +
              "), charvec (" + c.to_string() + ")");
  return sum.get_num();
}

}  // namespace

BigInt r_coefficient(const PQuotient& mu, const CharacteristicVector& c, Index j) {
  require(mu.p() == c.p(), ErrorCode::InvalidArgument, "quotient and characteristic vector lengths differ");
  require(j >= 0 && j <= mu.size(), ErrorCode::InvalidArgument, "j must lie in [0, |mu|]");
  return r_coefficient_with(mu, c, j, sub_term(mu, c), f_p_count(mu));
}

std::vector<BigInt> r_coefficients(const PQuotient& mu, const CharacteristicVector& c) {
  require(mu.p() == c.p(), ErrorCode::InvalidArgument, "quotient and characteristic vector lengths differ");
  const SubTerm top = sub_term(mu, c);
  const BigInt f_mu = f_p_count(mu);
  std::vector<BigInt> out;
  for (Index j = 0; j <= mu.size(); ++j) out.push_back(r_coefficient_with(mu, c, j, top, f_mu));
  return out;
}

IntPolynomial r_polynomial_by_formula(const PQuotient& mu, const CharacteristicVector& c) {
  auto r = r_coefficients(mu, c);
  std::reverse(r.begin(), r.end());
  return IntPolynomial(std::move(r));
}

namespace {

// Calls visit(l) for every composition l of j with l_i <= |μ^(i)|.
void for_each_composition(const PQuotient& mu, Index j, const std::function<void(const std::vector<Index>&)>& visit) {
  std::vector<Index> l(mu.p(), 0);
  std::function<void(std::size_t, Index)> recurse = [&](std::size_t i, Index left) {
    if (i == mu.p()) {
      if (left == 0) visit(l);
      return;
    }
    for (Index v = 0; v <= std::min(left, mu[i].size()); ++v) {
      l[i] = v;
      recurse(i + 1, left - v);
    }
  };
  recurse(0, j);
}

}  // namespace

std::vector<double> limit_coefficients(const PQuotient& mu, std::span<const double> a) {
  require(a.size() == mu.p(), ErrorCode::InvalidArgument, "need one growth rate per quotient component");
  const auto alphas = attractors(a).alphas;
  std::vector<double> out;
  for (Index j = 0; j <= mu.size(); ++j) {
    double sum = 0;
    for_each_composition(mu, j, [&](const std::vector<Index>& l) {
      double term = 1;
      for (std::size_t i = 0; i < l.size(); ++i)
        term *= binomial(static_cast<std::uint64_t>(mu[i].size()), static_cast<std::uint64_t>(l[i])).get_d() *
                std::pow(alphas[i], static_cast<double>(l[i]));
      sum += term;
    });
    out.push_back((j % 2 ? -sum : sum) + 0.0);  // no negative zero
  }
  return out;
}

std::vector<BigInt> limit_coefficients_exact(const PQuotient& mu, std::span<const Index> a) {
  require(a.size() == mu.p(), ErrorCode::InvalidArgument, "need one growth rate per quotient component");
  const auto alphas = attractors_exact(a);
  std::vector<BigInt> out;
  for (Index j = 0; j <= mu.size(); ++j) {
    BigInt sum = 0;
    for_each_composition(mu, j, [&](const std::vector<Index>& l) {
      BigInt term = 1;
      for (std::size_t i = 0; i < l.size(); ++i)
        term *= binomial(static_cast<std::uint64_t>(mu[i].size()), static_cast<std::uint64_t>(l[i])) *
                power(alphas[i], static_cast<std::uint64_t>(l[i]));
      sum += term;
    });
    out.push_back(j % 2 ? BigInt(-sum) : sum);
  }
  return out;
}

std::vector<double> limit_polynomial(const PQuotient& mu, std::span<const double> a) {
  require(a.size() == mu.p(), ErrorCode::InvalidArgument, "need one growth rate per quotient component");
  const auto alphas = attractors(a).alphas;
  std::vector<double> poly{1.0};
  for (std::size_t i = 0; i < mu.p(); ++i) {
    for (Index e = 0; e < mu[i].size(); ++e) {
      std::vector<double> next(poly.size() + 1, 0.0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] -= alphas[i] * poly[d];
      }
      poly = std::move(next);
    }
  }
  return poly;
}

IntPolynomial limit_polynomial_exact(const PQuotient& mu, std::span<const Index> a) {
  require(a.size() == mu.p(), ErrorCode::InvalidArgument, "need one growth rate per quotient component");
  const auto alphas = attractors_exact(a);
  IntPolynomial poly = IntPolynomial::monomial(1, 0);
  for (std::size_t i = 0; i < mu.p(); ++i) {
    const IntPolynomial factor({BigInt(-alphas[i]), BigInt(1)});
    for (Index e = 0; e < mu[i].size(); ++e) poly = poly * factor;
  }
  return poly;
}

GrowthSpec::GrowthSpec(std::vector<Index> rates, std::vector<Index> offsets) : a(std::move(rates)), b(std::move(offsets)) {
  require(!a.empty(), ErrorCode::InvalidArgument, "growth rates must have p >= 1 entries");
  if (b.empty()) b.assign(a.size(), 0);
  require(b.size() == a.size(), ErrorCode::InvalidArgument, "growth rates and offsets must have the same length");
  require(std::accumulate(a.begin(), a.end(), Index{0}) == 0, ErrorCode::InvalidArgument,
          "growth rates must sum to zero");
  require(std::accumulate(b.begin(), b.end(), Index{0}) == 0, ErrorCode::InvalidArgument,
          "growth offsets must sum to zero");
}

CharacteristicVector GrowthSpec::at(Index k) const {
  std::vector<Index> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * k + b[i];
  return CharacteristicVector(std::move(c));
}

std::string method_name(Method method) {
  switch (method) {
    case Method::Wronskian: return "wronskian";
    case Method::Formula: return "formula";
    case Method::Both: return "both";
  }
  return "formula";
}

Method parse_method(std::string_view name) {
  if (name == "wronskian") return Method::Wronskian;
  if (name == "formula") return Method::Formula;
  if (name == "both") return Method::Both;
  fail(ErrorCode::Parse, "unknown method '" + std::string(name) + "' (expected wronskian, formula or both)");
}

namespace {

std::vector<BigInt> exact_coefficients(const PQuotient& mu, const CharacteristicVector& c, Method method,
                                       std::size_t max_degree) {
  if (method == Method::Formula) return r_coefficients(mu, c);
  auto r = extract_R(compose(mu, c), mu.p(), max_degree).coeffs();
  std::reverse(r.begin(), r.end());
  if (method == Method::Both) {
    const auto by_formula = r_coefficients(mu, c);
    require(by_formula == r, ErrorCode::InternalConsistency,
            "Wronskian and coefficient formula disagree for quotient (" + mu.to_string() + "), charvec (" +
                c.to_string() + ")");
  }
  return r;
}

}  // namespace

ConvergenceReport run_convergence(const PQuotient& mu, const GrowthSpec& growth, std::span<const Index> k_list,
                                  const ConvergenceOptions& options) {
  require(growth.p() == mu.p(), ErrorCode::InvalidArgument, "growth spec and quotient must have the same p");
  for (std::size_t i = 0; i < k_list.size(); ++i)
    require(k_list[i] > 0 && (i == 0 || k_list[i - 1] < k_list[i]), ErrorCode::InvalidArgument,
            "k values must be positive and strictly increasing");

  const std::size_t p = mu.p();
  const std::vector<double> rates(growth.a.begin(), growth.a.end());
  ConvergenceReport report{mu, growth, options.method, attractors(rates).alphas, {}, {}};
  const auto exact_limit = limit_coefficients_exact(mu, growth.a);
  for (const auto& l : exact_limit) report.limit.push_back(l.get_d());

  for (Index k : k_list) {
    ConvergenceRow row;
    row.k = k;
    const CharacteristicVector c = growth.at(k);
    row.charvec = c.entries();
    row.core_size = core_size_from_charvec(c);
    row.lambda_size = row.core_size + static_cast<Index>(p) * mu.size();
    row.exact = exact_coefficients(mu, c, options.method, options.max_wronskian_degree);

    const BigInt scale = from_int64(static_cast<Index>(p) * k);
    std::vector<double> rescaled_poly(row.exact.size());
    for (std::size_t j = 0; j < row.exact.size(); ++j) {
      BigRational value(row.exact[j], power(scale, (p - 1) * j));
      value.canonicalize();
      CoefficientRow cr;
      cr.j = static_cast<Index>(j);
      cr.rescaled = value.get_d();
      cr.limit = report.limit[j];
      BigRational diff = value - BigRational(exact_limit[j]);
      cr.abs_error = std::abs(diff.get_d());
      row.sup_error = std::max(row.sup_error, cr.abs_error);
      row.coefficients.push_back(cr);
      rescaled_poly[row.exact.size() - 1 - j] = cr.rescaled;
    }

    row.attractor_counts.assign(p, 0);
    for (auto z : numeric_roots(rescaled_poly, options.root_tol)) {
      RootRow rr;
      rr.root = z;
      rr.distance = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < p; ++i) {
        const double d = std::abs(z - report.alphas[i]);
        if (d < rr.distance) {
          rr.distance = d;
          rr.nearest = i;
        }
      }
      rr.attractor = report.alphas[rr.nearest];
      ++row.attractor_counts[rr.nearest];
      row.roots.push_back(rr);
    }
    row.counts_match = true;
    for (std::size_t i = 0; i < p; ++i)
      if (row.attractor_counts[i] != mu[i].size()) row.counts_match = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace wap
