#include <doctest.h>

#include "oracles.hpp"
#include "wap/core_quotient.hpp"
#include "wap/error.hpp"
#include "wap/wronskian.hpp"

using namespace wap;

namespace {

IntPolynomial poly(std::vector<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

IntPolynomial x_minus_one_power(std::size_t n) {
  IntPolynomial out = IntPolynomial::monomial(1, 0);
  for (std::size_t i = 0; i < n; ++i) out = out * poly({-1, 1});
  return out;
}

}  // namespace

TEST_SUITE("polynomials") {
  TEST_CASE("arithmetic") {
    const auto a = poly({1, 0, 1});
    const auto b = poly({-1, 1});
    CHECK(a * b == poly({-1, 1, -1, 1}));
    CHECK(a - a == IntPolynomial{});
    CHECK((a - a).degree() == -1);
    CHECK(a + b == poly({0, 1, 1}));
    CHECK(-b == poly({1, -1}));
    CHECK(a.shifted_up(2) == poly({0, 0, 1, 0, 1}));
    CHECK(poly({0, 0, 3, 5}).valuation() == 2);
    CHECK(poly({7, 0, 2}).derivative() == poly({0, 4}));
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(exact_divide(a * b, b) == a);
    CHECK(exact_divide(poly({4, 6}), BigInt(2)) == poly({2, 3}));
    CHECK_THROWS_AS(exact_divide(poly({4, 7}), BigInt(2)), Error);
    CHECK_THROWS_AS(exact_divide(a, b), Error);
  }

  TEST_CASE("text forms") {
    CHECK(poly({0, -3, 0, 1}).to_human() == "x^3 - 3*x");
    CHECK(poly({1, 1}).to_human() == "x + 1");
    CHECK(poly({-1}).to_human() == "-1");
    CHECK(IntPolynomial{}.to_human() == "0");
    CHECK(poly({1, 0, 1}).to_json() == R"(["1","0","1"])");
    CHECK(IntPolynomial{}.to_json() == "[]");
  }
}

TEST_SUITE("wronskian_poly") {
  TEST_CASE("Appell sequence small cases") {
    const auto q = appell_sequence(2, 6);
    CHECK(q[2] == poly({-1, 0, 1}));
    CHECK(q[3] == poly({0, -3, 0, 1}));
    for (std::size_t p = 1; p <= 5; ++p) {
      const auto t = appell_sequence(p, 12);
      CHECK(t[0] == poly({1}));
      for (std::size_t n = 0; n < p; ++n) CHECK(t[n] == IntPolynomial::monomial(1, n));
      // q_p = x^p - (p-1)!
      CHECK(t[p] == IntPolynomial::monomial(1, p) - IntPolynomial::monomial(factorial(p - 1), 0));
    }
    const auto one = appell_sequence(1, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(one[n] == x_minus_one_power(n));
  }

  TEST_CASE("recurrence agrees with the generating function") {
    for (std::size_t p = 1; p <= 4; ++p) {
      const auto t = appell_sequence(p, 20);
      for (std::size_t n = 0; n <= 20; ++n) REQUIRE(t[n] == oracle::appell_from_generating_function(p, n));
    }
  }

  TEST_CASE("derivative identity and congruence support") {
    for (std::size_t p = 1; p <= 5; ++p) {
      const auto t = appell_sequence(p, 30);
      for (std::size_t n = 1; n <= 30; ++n) {
        REQUIRE(t[n].derivative() == t[n - 1] * BigInt(static_cast<unsigned long>(n)));
        REQUIRE(t[n].degree() == static_cast<long>(n));
        REQUIRE(t[n].leading() == 1);
        for (std::size_t m = 0; m <= n; ++m)
          if (t[n].coeff(m) != 0) REQUIRE((n - m) % p == 0);
      }
    }
  }

  TEST_CASE("Bareiss against cofactor expansion") {
    const auto t = appell_sequence(3, 12);
    for (const auto& l : oracle::partitions_up_to(7)) {
      const auto n = degree_vector(l).entries;
      std::vector<std::vector<IntPolynomial>> m(n.size(), std::vector<IntPolynomial>(n.size()));
      for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = 0; j < n.size(); ++j) {
          const auto nj = static_cast<std::size_t>(n[j]);
          m[i][j] = i <= nj ? t[nj - i] * falling_factorial(nj, i) : IntPolynomial{};
        }
      REQUIRE(bareiss_determinant(m) == oracle::laplace_determinant(m));
    }
    // A pivot that must be swapped out.
    std::vector<std::vector<IntPolynomial>> m{{IntPolynomial{}, poly({1})}, {poly({1}), poly({0, 1})}};
    CHECK(bareiss_determinant(m) == poly({-1}));
  }

  TEST_CASE("Wronskian polynomials") {
    CHECK(wronskian_q(Partition::parse("1,1"), 2) == poly({1, 0, 1}));
    for (std::size_t p = 1; p <= 4; ++p) {
      const auto t = appell_sequence(p, 9);
      for (std::size_t n = 0; n <= 9; ++n)
        CHECK(wronskian_q(n ? Partition({static_cast<Index>(n)}) : Partition{}, p) == t[n]);
    }
    for (const auto& l : oracle::partitions_up_to(8)) REQUIRE(wronskian_q(l, 1) == x_minus_one_power(static_cast<std::size_t>(l.size())));
    CHECK_THROWS_AS(wronskian_q(Partition::parse("5,5"), 2, 9), Error);
    try {
      (void)wronskian_q(Partition::parse("5,5"), 2, 9);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SizeLimit);
    }
  }

  TEST_CASE("factorization structure") {
    const auto f = factorize(Partition::parse("1,1"), 2);
    CHECK(f.core_size == 0);
    CHECK(f.r == poly({1, 1}));
    CHECK(core_size_from_charvec(decompose(Partition::parse("1,1"), 2).charvec) == 0);

    for (const auto& l : oracle::partitions_up_to(12))
      for (std::size_t p = 1; p <= 5; ++p) {
        if (l.size() > 10 && p > 3) continue;
        const auto fz = factorize(l, p);
        const auto d = decompose(l, p);
        REQUIRE(fz.q.degree() == l.size());
        REQUIRE(fz.q.leading() == 1);
        REQUIRE(fz.q.valuation() == core_size_from_charvec(d.charvec));
        REQUIRE(fz.core_size == core_size_from_charvec(d.charvec));
        for (long m = 0; m <= fz.q.degree(); ++m)
          if (fz.q.coeff(static_cast<std::size_t>(m)) != 0) REQUIRE((l.size() - m) % static_cast<long>(p) == 0);
        REQUIRE(fz.r.degree() == d.quotient.size());
        REQUIRE(fz.r.leading() == 1);
        REQUIRE(fz.r.coeff(0) != 0);
        if (is_p_core(l, p)) REQUIRE(fz.r == poly({1}));
      }
  }

  TEST_CASE("R of a single row at p=2") {
    const auto t = appell_sequence(2, 12);
    for (std::size_t n = 2; n <= 12; n += 2) {
      const auto r = extract_R(Partition({static_cast<Index>(n)}), 2);
      CHECK(r.degree() == static_cast<long>(n / 2));
      IntPolynomial back;
      for (long d = 0; d <= r.degree(); ++d)
        back += IntPolynomial::monomial(r.coeff(static_cast<std::size_t>(d)), static_cast<std::size_t>(2 * d));
      CHECK(back == t[n]);
    }
  }
}
