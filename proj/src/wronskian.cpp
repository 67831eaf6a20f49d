#include "wap/wronskian.hpp"

#include <utility>

#include "wap/core_quotient.hpp"
#include "wap/error.hpp"

namespace wap {

AppellTable::AppellTable(std::size_t p, std::vector<IntPolynomial> polys) : p_(p), polys_(std::move(polys)) {
  require(p_ >= 1, ErrorCode::InvalidArgument, "p must be a positive integer");
  require(!polys_.empty(), ErrorCode::InvalidArgument, "an Appell table holds at least q_0");
}

AppellTable appell_sequence(std::size_t p, std::size_t n_max) {
  require(p >= 1, ErrorCode::InvalidArgument, "p must be a positive integer");
  std::vector<IntPolynomial> q;
  q.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n < p) {
      q.push_back(IntPolynomial::monomial(1, n));
      continue;
    }
    IntPolynomial next = q[n - 1].shifted_up(1);
    next -= q[n - p] * falling_factorial(n - 1, p - 1);
    q.push_back(std::move(next));
  }
  return AppellTable(p, std::move(q));
}

IntPolynomial bareiss_determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::monomial(1, 0);
  bool negate = false;
  IntPolynomial previous = IntPolynomial::monomial(1, 0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPolynomial entry = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(entry, previous);
      }
      m[i][k] = {};
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

IntPolynomial wronskian_q(const Partition& lambda, std::size_t p, std::size_t max_degree) {
  require(p >= 1, ErrorCode::InvalidArgument, "p must be a positive integer");
  if (static_cast<std::size_t>(lambda.size()) > max_degree)
    fail(ErrorCode::SizeLimit, "|lambda| = " + std::to_string(lambda.size()) +
                                   " exceeds the Wronskian degree bound " + std::to_string(max_degree) +
                                   "; use the coefficient-formula path");
  const auto n = degree_vector(lambda).entries;
  const std::size_t r = n.size();
  if (r == 0) return IntPolynomial::monomial(1, 0);
  const AppellTable table = appell_sequence(p, static_cast<std::size_t>(n.front()));

  // Row i holds the i-th derivatives: d^i q_m = m!/(m-i)! q_{m-i}.
  std::vector<std::vector<IntPolynomial>> matrix(r, std::vector<IntPolynomial>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const auto degree = static_cast<std::size_t>(n[j]);
      if (i <= degree) matrix[i][j] = table[degree - i] * falling_factorial(degree, i);
    }
  }
  const IntPolynomial wronskian = bareiss_determinant(std::move(matrix));

  BigInt vandermonde = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) vandermonde *= from_int64(n[j] - n[i]);

  IntPolynomial q = exact_divide(wronskian, vandermonde);
  require(q.degree() == lambda.size() && q.leading() == 1, ErrorCode::InternalConsistency,
          "q_lambda is not monic of degree |lambda| for (" + lambda.to_string() + ")");
  return q;
}

Factorization factorize(const Partition& lambda, std::size_t p, std::size_t max_degree) {
  Factorization out;
  out.q = wronskian_q(lambda, p, max_degree);
  const auto d = decompose(lambda, p);
  out.core_size = core_size_from_charvec(d.charvec);
  const auto shift = static_cast<std::size_t>(out.core_size);
  const std::string label = "(" + lambda.to_string() + "), p=" + std::to_string(p);

  const auto& c = out.q.coeffs();
  for (std::size_t d0 = 0; d0 < shift && d0 < c.size(); ++d0)
    require(c[d0] == 0, ErrorCode::InternalConsistency, "q_lambda does not vanish to order |core| at 0 for " + label);

  std::vector<BigInt> r;
  for (std::size_t e = shift; e < c.size(); ++e) {
    if ((e - shift) % p == 0)
      r.push_back(c[e]);
    else
      require(c[e] == 0, ErrorCode::InternalConsistency,
              "q_lambda has a coefficient outside the residue class of |lambda| mod p for " + label);
  }
  out.r = IntPolynomial(std::move(r));
  require(out.r.degree() == d.quotient.size() && out.r.leading() == 1, ErrorCode::InternalConsistency,
          "R_lambda is not monic of degree |mu| for " + label);
  require(out.r.coeff(0) != 0, ErrorCode::InternalConsistency, "R_lambda has a vanishing constant term for " + label);
  return out;
}

IntPolynomial extract_R(const Partition& lambda, std::size_t p, std::size_t max_degree) {
  return factorize(lambda, p, max_degree).r;
}

}  // namespace wap
