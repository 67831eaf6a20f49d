#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wap/error.hpp"
#include "wap/maya.hpp"

using namespace wap;

namespace {

// Filled positions in [from, to).
std::vector<Index> filled_between(const MayaDiagram& m, Index from, Index to) {
  std::vector<Index> out;
  for (Index i = from; i < to; ++i)
    if (m.filled(i)) out.push_back(i);
  return out;
}

// { m : p*m + i ∈ M } read position by position, for any charge.
MayaDiagram residue_class(const MayaDiagram& m, std::size_t p, std::size_t i) {
  const auto pp = static_cast<Index>(p);
  const Index lo = m.offset() / pp - 2;
  const Index hi = m.end() / pp + 2;
  std::vector<std::uint8_t> word;
  for (Index k = lo; k < hi; ++k) word.push_back(m.filled(pp * k + static_cast<Index>(i)) ? 1 : 0);
  return MayaDiagram(lo, std::move(word));
}

}  // namespace

TEST_SUITE("maya") {
  TEST_CASE("diagram of a partition") {
    const auto m = maya_from_partition(Partition::parse("8,8,6,6,2,2,1"));
    CHECK(filled_between(m, -5, 20) == std::vector<Index>{-5, -4, -3, -2, -1, 1, 3, 4, 9, 10, 13, 14});
    CHECK(m.charge() == 7);

    const MayaDiagram empty = maya_from_partition(Partition{});
    CHECK(empty == MayaDiagram{});
    CHECK(empty.charge() == 0);
    CHECK(filled_between(maya_from_partition(Partition::parse("1")), -3, 4) == std::vector<Index>{-3, -2, -1, 1});
  }

  TEST_CASE("normal form makes equal sets equal") {
    CHECK(MayaDiagram(-3, {1, 1, 1, 0, 1}) == MayaDiagram(0, {0, 1}));
    CHECK(MayaDiagram(2, {0, 0}) == MayaDiagram(2, {}));
    CHECK(MayaDiagram(5, {}) == shift(MayaDiagram{}, 5));
    const MayaDiagram m(-2, {0, 1, 1, 0, 1, 0, 0});
    CHECK(m.word().front() == 0);
    CHECK(m.word().back() == 1);
  }

  TEST_CASE("shift and canonical") {
    const auto m = maya_from_partition(Partition::parse("8,8,6,6,2,2,1"));
    const auto hat = shift(m, -7);
    CHECK(hat.charge() == 0);
    CHECK(canonical(m) == hat);
    CHECK(shift(m, 0) == m);
    CHECK(shift(shift(m, 11), -11) == m);
    CHECK(canonical(MayaDiagram{}) == MayaDiagram{});
    CHECK(canonical(hat) == hat);
    for (Index t = -4; t <= 4; ++t) CHECK(shift(m, t).charge() == m.charge() + t);
  }

  TEST_CASE("partition roundtrip") {
    const auto l = Partition::parse("8,8,6,6,2,2,1");
    CHECK(partition_from_maya(shift(maya_from_partition(l), -7)) == std::pair{l, Index{0}});
    CHECK(partition_from_maya(MayaDiagram{}) == std::pair{Partition{}, Index{0}});

    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 300; ++trial) {
      const auto lambda = oracle::random_partition(rng, 15);
      const auto [back, charge] = partition_from_maya(maya_from_partition(lambda));
      REQUIRE(back == lambda);
      CHECK(charge == static_cast<Index>(lambda.length()));
    }
  }

  TEST_CASE("p-modular decomposition") {
    const auto hat = canonical(maya_from_partition(Partition::parse("8,8,6,6,2,2,1")));
    const auto parts = p_decompose(hat, 3);
    REQUIRE(parts.size() == 3);
    std::vector<Index> charges;
    std::vector<std::string> shapes;
    for (const auto& part : parts) {
      charges.push_back(part.charge());
      shapes.push_back(partition_from_maya(part).first.to_string());
    }
    CHECK(charges == std::vector<Index>{2, -1, -1});
    CHECK(shapes == std::vector<std::string>{"1,1", "4", "2,1"});
    CHECK(p_compose(parts) == hat);

    for (std::size_t p = 1; p <= 5; ++p) CHECK(p_decompose(MayaDiagram{}, p) == std::vector<MayaDiagram>(p));
    CHECK(p_decompose(hat, 1) == std::vector<MayaDiagram>{hat});
    CHECK_THROWS_AS(p_decompose(hat, 0), Error);
    CHECK_THROWS_AS(p_decompose(maya_from_partition(Partition::parse("2,1")), 2), Error);
  }

  TEST_CASE("compose inverts decompose") {
    for (const auto& l : oracle::partitions_up_to(12)) {
      const auto hat = canonical(maya_from_partition(l));
      for (std::size_t p = 1; p <= 5; ++p) REQUIRE(p_compose(p_decompose(hat, p)) == hat);
    }
  }

  TEST_CASE("core from charges alone") {
    std::vector<MayaDiagram> parts{shift(MayaDiagram{}, 2), shift(MayaDiagram{}, -1), shift(MayaDiagram{}, -1)};
    const auto [core, charge] = partition_from_maya(p_compose(parts));
    CHECK(core == Partition::parse("4,2"));
    CHECK(charge == 0);
  }

  TEST_CASE("decomposing a shifted diagram gives the same component shapes") {
    for (const auto& l : oracle::partitions_up_to(9))
      for (std::size_t p = 2; p <= 4; ++p) {
        const auto hat = canonical(maya_from_partition(l));
        std::vector<Partition> a;
        for (const auto& m : p_decompose(hat, p)) a.push_back(partition_from_maya(m).first);
        std::sort(a.begin(), a.end());
        for (Index t : {Index{1}, static_cast<Index>(p)}) {
          std::vector<Partition> b;
          for (std::size_t i = 0; i < p; ++i) b.push_back(partition_from_maya(residue_class(shift(hat, t), p, i)).first);
          std::sort(b.begin(), b.end());
          REQUIRE(a == b);
        }
      }
  }

  TEST_CASE("rendering") {
    const auto m = maya_from_partition(Partition::parse("1"));
    CHECK(m.render(-2, 3) == "…●●|○●○…");
    CHECK(MayaDiagram{}.render(-1, 1) == "…●|○…");
  }
}
