#include "wap/selftest.hpp"

#include "wap/coeff_asymptotics.hpp"
#include "wap/core_quotient.hpp"
#include "wap/hook_products.hpp"
#include "wap/wronskian.hpp"

namespace wap {

namespace {

template <class Body>
SelftestCheck check(std::string name, Body body) {
  SelftestCheck result{std::move(name), false, {}};
  try {
    result.detail = body();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = e.what();
  }
  if (result.passed) result.detail = "ok";
  return result;
}

std::string describe(const Partition& lambda, std::size_t p) {
  return "lambda=(" + lambda.to_string() + ") p=" + std::to_string(p);
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> out;

  out.push_back(check("bijection |lambda|<=8, p<=4", [] {
    for (Index n = 0; n <= 8; ++n)
      for (const auto& lambda : partitions_of(n))
        for (std::size_t p = 1; p <= 4; ++p) {
          const auto d = decompose(lambda, p);
          if (compose(d.quotient, d.charvec) != lambda) return "roundtrip failed for " + describe(lambda, p);
        }
    return std::string{};
  }));

  out.push_back(check("core size formula vs strip removal", [] {
    for (Index n = 0; n <= 8; ++n)
      for (const auto& lambda : partitions_of(n))
        for (std::size_t p = 1; p <= 4; ++p) {
          const auto d = decompose(lambda, p);
          const auto strips = core_by_strip_removal(lambda, p);
          const Index core = core_size_from_charvec(d.charvec);
          if (strips.core.size() != core || core + static_cast<Index>(p) * d.quotient.size() != lambda.size())
            return "size mismatch for " + describe(lambda, p);
        }
    return std::string{};
  }));

  out.push_back(check("Maya hook product vs Young cells", [] {
    for (Index n = 0; n <= 8; ++n)
      for (const auto& lambda : partitions_of(n)) {
        BigInt cells = 1;
        for (Index h : hook_lengths(lambda)) cells *= static_cast<unsigned long>(h);
        if (hook_product(lambda) != cells) return "hook product mismatch for (" + lambda.to_string() + ")";
      }
    return std::string{};
  }));

  out.push_back(check("Appell derivative identity, n<=12", [] {
    for (std::size_t p = 1; p <= 4; ++p) {
      const auto q = appell_sequence(p, 12);
      for (std::size_t n = 1; n <= 12; ++n) {
        IntPolynomial scaled = q[n - 1];
        scaled *= BigInt(static_cast<unsigned long>(n));
        if (q[n].derivative() != scaled) return "q'_n != n q_{n-1} at p=" + std::to_string(p);
      }
    }
    return std::string{};
  }));

  out.push_back(check("Wronskian vs coefficient formula, |lambda|<=6", [] {
    for (Index n = 0; n <= 6; ++n)
      for (const auto& lambda : partitions_of(n))
        for (std::size_t p : {2u, 3u}) {
          const auto d = decompose(lambda, p);
          if (extract_R(lambda, p) != r_polynomial_by_formula(d.quotient, d.charvec))
            return "R mismatch for " + describe(lambda, p);
        }
    return std::string{};
  }));

  return out;
}

}  // namespace wap
