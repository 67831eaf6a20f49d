#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "wap/error.hpp"
#include "wap/partition.hpp"

using namespace wap;

TEST_SUITE("partitions") {
  TEST_CASE("parsing and text form") {
    CHECK(Partition::parse("8,8,6,6,2,2,1").parts() == std::vector<Index>{8, 8, 6, 6, 2, 2, 1});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse(" 3 , 1 ").to_string() == "3,1");
    CHECK(Partition(std::vector<Index>{2, 1, 0, 0}).to_string() == "2,1");
    CHECK(Partition::parse("8,8,6,6,2,2,1").size() == 33);

    auto code_of = [](const char* text) {
      try {
        (void)Partition::parse(text);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::Io;  // sentinel: no error
    };
    CHECK(code_of("1,2") == ErrorCode::Parse);
    CHECK(code_of("3,0,1") == ErrorCode::Parse);
    CHECK(code_of("a,b") == ErrorCode::Parse);
    CHECK(code_of("2,,1") == ErrorCode::Parse);
    CHECK(code_of("-1") == ErrorCode::Parse);
  }

  TEST_CASE("degree vector") {
    CHECK(degree_vector(Partition::parse("8,8,6,6,2,2,1")).entries == std::vector<Index>{14, 13, 10, 9, 4, 3, 1});
    CHECK(degree_vector(Partition{}).entries.empty());
    CHECK(degree_vector(Partition::parse("1,1")).entries == std::vector<Index>{2, 1});
    for (const auto& l : oracle::partitions_up_to(8)) CHECK(partition_from_degree_vector(degree_vector(l)) == l);
  }

  TEST_CASE("hook lengths") {
    auto sorted = [](std::vector<Index> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(hook_lengths(Partition::parse("4,4,4,1,1"))) ==
          sorted({8, 5, 4, 3, 7, 4, 3, 2, 6, 3, 2, 1, 2, 1}));
    CHECK(hook_lengths(Partition{}).empty());
    CHECK(sorted(hook_lengths(Partition::parse("2,1"))) == std::vector<Index>{1, 1, 3});
    for (const auto& l : oracle::partitions_up_to(12))
      REQUIRE(static_cast<Index>(hook_lengths(l).size()) == l.size());
  }

  TEST_CASE("conjugate is an involution and swaps hooks") {
    for (const auto& l : oracle::partitions_up_to(9)) {
      CHECK(l.conjugate().conjugate() == l);
      CHECK(oracle::hook_product_from_cells(l) == oracle::hook_product_from_cells(l.conjugate()));
    }
  }

  TEST_CASE("syt counts") {
    CHECK(syt_count(Partition::parse("2,1")) == 2);
    CHECK(syt_count(Partition::parse("3,2"), Partition::parse("3,2")) == 1);
    CHECK(syt_count(Partition::parse("3,2")) == 5);
    CHECK_THROWS_AS(syt_count(Partition::parse("2"), Partition::parse("1,1")), Error);
    for (const auto& l : oracle::partitions_up_to(10)) REQUIRE(syt_count(l) == oracle::syt_by_hook_formula(l));
  }

  TEST_CASE("path identity in the Young lattice") {
    // Σ_{μ <_j λ} F_μ F_{λ/μ} = F_λ
    for (const auto& l : oracle::partitions_up_to(8)) {
      const BigInt f = syt_count(l);
      for (Index j = 0; j <= l.size(); ++j) {
        BigInt sum = 0;
        for (const auto& mu : subpartitions(l, j)) sum += syt_count(mu) * syt_count(l, mu);
        REQUIRE(sum == f);
      }
    }
    BigInt sum = 0;
    for (const auto& mu : subpartitions(Partition::parse("3,2"), 2))
      sum += syt_count(mu) * syt_count(Partition::parse("3,2"), mu);
    CHECK(sum == 5);
  }

  TEST_CASE("containment") {
    CHECK(contains(Partition::parse("3,2"), Partition::parse("2,2")));
    CHECK(size_difference(Partition::parse("3,2"), Partition::parse("2,2")) == 1);
    CHECK_FALSE(contains(Partition::parse("3,2"), Partition::parse("1,1,1")));
    CHECK(size_difference(Partition::parse("3,2"), Partition::parse("3,2")) == 0);
    CHECK_THROWS_AS(size_difference(Partition::parse("3,2"), Partition::parse("1,1,1")), Error);
  }

  TEST_CASE("partition counts") {
    const std::vector<std::size_t> expected{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    std::size_t total = 0;
    for (Index n = 0; n <= 12; ++n) {
      const auto all = partitions_of(n);
      CHECK(all.size() == expected[static_cast<std::size_t>(n)]);
      CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
      total += all.size();
    }
    CHECK(total == 272);
  }

  TEST_CASE("subpartitions match a brute-force filter") {
    for (const auto& l : oracle::partitions_up_to(7))
      for (Index j = 0; j <= l.size(); ++j) {
        std::vector<Partition> brute;
        for (const auto& m : partitions_of(l.size() - j))
          if (contains(l, m)) brute.push_back(m);
        std::sort(brute.begin(), brute.end());
        REQUIRE(subpartitions(l, j) == brute);
      }
  }

  TEST_CASE("border strips") {
    auto s = border_strip(Partition::parse("6,5,4,1,1"), Partition::parse("4,4,4,1,1"));
    REQUIRE(s.has_value());
    CHECK(s->height == 1);
    CHECK(s->cells.size() == 3);
    CHECK_FALSE(border_strip(Partition::parse("2,2"), Partition{}).has_value());   // 2x2 square
    CHECK_FALSE(border_strip(Partition::parse("2,1"), Partition::parse("1")).has_value());  // disconnected
    auto column = border_strip(Partition::parse("1,1,1"), Partition{});
    REQUIRE(column.has_value());
    CHECK(column->height == 2);
  }

  TEST_CASE("p-quotient text form and subpartitions") {
    const auto mu = PQuotient::parse("1,1;4;2,1");
    CHECK(mu.p() == 3);
    CHECK(mu.size() == 9);
    CHECK(mu.to_string() == "1,1;4;2,1");
    CHECK(PQuotient::parse(";;").p() == 3);
    CHECK(PQuotient::parse(";;").size() == 0);
    CHECK(PQuotient::parse("").p() == 1);

    const auto m11 = PQuotient::parse("1;1");
    CHECK(enumerate_subpartitions(m11, 1) == std::vector<PQuotient>{PQuotient::parse(";1"), PQuotient::parse("1;")});
    CHECK(enumerate_subpartitions(m11, 0) == std::vector<PQuotient>{m11});
    CHECK(enumerate_subpartitions(PQuotient::parse("2;1"), 2) ==
          std::vector<PQuotient>{PQuotient::parse(";1"), PQuotient::parse("1;")});
  }

  TEST_CASE("quotient subpartitions against the product of component lists") {
    const auto mu = PQuotient::parse("2,1;1,1;3");
    for (Index j = 0; j <= mu.size(); ++j) {
      std::vector<PQuotient> brute;
      for (Index a = 0; a <= 3; ++a)
        for (Index b = 0; b <= 2; ++b)
          for (Index c = 0; c <= 3; ++c) {
            if (a + b + c != j) continue;
            for (const auto& x : subpartitions(mu[0], a))
              for (const auto& y : subpartitions(mu[1], b))
                for (const auto& z : subpartitions(mu[2], c)) brute.emplace_back(std::vector<Partition>{x, y, z});
          }
      std::sort(brute.begin(), brute.end());
      REQUIRE(enumerate_subpartitions(mu, j) == brute);
    }
  }
}
