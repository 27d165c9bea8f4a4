#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "cuspbound/flow.hpp"

using cusp::BlockComposition;
using cusp::FlowVector;
using cusp::Rational;

namespace {

FlowVector flow_of(const std::string& text, bool project = false) {
  return FlowVector::from_raw(cusp::parse_rational_list(text), project);
}

}  // namespace

// ---------------------------------------------------------------------------
// FlowVector construction
// ---------------------------------------------------------------------------

TEST_CASE("flows are sorted non-increasingly and remember the input order") {
  const FlowVector flow = flow_of("-1,1,0");
  CHECK(flow.dimension() == 3);
  CHECK(flow.entry(0) == 1);
  CHECK(flow.entry(1) == 0);
  CHECK(flow.entry(2) == -1);
  // entries()[i] == raw_entries()[applied_sort()[i]]
  for (int i = 0; i < 3; ++i) {
    CHECK(flow.entry(i) == flow.raw_entries()[flow.applied_sort()[i]]);
  }
  CHECK(flow.applied_sort() == std::vector<int>{1, 2, 0});
}

TEST_CASE("ties keep their original relative order") {
  const FlowVector flow = flow_of("0,1/2,0,-1/2,0");
  CHECK(flow.applied_sort() == std::vector<int>{1, 0, 2, 4, 3});
}

TEST_CASE("nonzero trace is rejected unless projection is requested") {
  CHECK_THROWS_AS(flow_of("1,1"), std::invalid_argument);
  const FlowVector projected = flow_of("1,1", true);
  CHECK(projected.is_zero());
  const FlowVector shifted = flow_of("2,1,0", true);
  CHECK(shifted.entry(0) == 1);
  CHECK(shifted.entry(1) == 0);
  CHECK(shifted.entry(2) == -1);
}

TEST_CASE("dimension below two is rejected") {
  CHECK_THROWS_AS(FlowVector::from_raw({Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(FlowVector::from_raw({}), std::invalid_argument);
}

TEST_CASE("zero flow factory") {
  const FlowVector zero = FlowVector::zero(4);
  CHECK(zero.dimension() == 4);
  CHECK(zero.is_zero());
  CHECK_FALSE(flow_of("1,0,-1").is_zero());
}

// ---------------------------------------------------------------------------
// BlockComposition
// ---------------------------------------------------------------------------

TEST_CASE("block compositions expose starts and membership") {
  const BlockComposition comp({2, 1, 3});
  CHECK(comp.dimension() == 6);
  CHECK(comp.block_count() == 3);
  CHECK(comp.block_start(0) == 0);
  CHECK(comp.block_start(1) == 2);
  CHECK(comp.block_start(2) == 3);
  CHECK(comp.block_of(0) == 0);
  CHECK(comp.block_of(2) == 1);
  CHECK(comp.block_of(5) == 2);
  CHECK(comp.is_proper());
  CHECK_THROWS_AS(comp.block_of(6), std::invalid_argument);
  CHECK_THROWS_AS(BlockComposition({2, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(BlockComposition({}), std::invalid_argument);
}

TEST_CASE("composition factories") {
  CHECK(BlockComposition::full(4).blocks() == std::vector<int>{4});
  CHECK_FALSE(BlockComposition::full(4).is_proper());
  CHECK(BlockComposition::borel(3).blocks() == std::vector<int>{1, 1, 1});
  CHECK(BlockComposition::maximal(2, 5).blocks() == std::vector<int>{2, 3});
  CHECK_THROWS_AS(BlockComposition::maximal(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(BlockComposition::maximal(0, 5), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Entropy sums
// ---------------------------------------------------------------------------

TEST_CASE("entropy_on_pairs sums positive parts over a validated pair set") {
  const FlowVector flow = flow_of("1,0,-1");
  using Pairs = std::vector<std::pair<int, int>>;
  CHECK(cusp::entropy_on_pairs(Pairs{{1, 3}}, flow) == 2);
  CHECK(cusp::entropy_on_pairs(Pairs{{3, 1}}, flow) == 0);
  CHECK(cusp::entropy_on_pairs(Pairs{{1, 2}, {2, 3}, {1, 3}}, flow) == 4);
  CHECK_THROWS_AS(cusp::entropy_on_pairs(Pairs{{1, 4}}, flow),
                  std::invalid_argument);
  CHECK_THROWS_AS(cusp::entropy_on_pairs(Pairs{{2, 2}}, flow),
                  std::invalid_argument);
  CHECK_THROWS_AS(cusp::entropy_on_pairs(Pairs{{1, 2}, {1, 2}}, flow),
                  std::invalid_argument);
}

TEST_CASE("total entropy matches the pairwise definition") {
  const FlowVector flow = flow_of("1,0,-1");
  CHECK(cusp::total_entropy(flow) == 4);
  // All ordered pairs give the same value as the sorted closed form.
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) all.emplace_back(i, j);
    }
  }
  CHECK(cusp::entropy_on_pairs(all, flow) == cusp::total_entropy(flow));

  const FlowVector big = flow_of("3,1,-1,-3");
  CHECK(cusp::total_entropy(big) == 20);
}

TEST_CASE("parabolic entropy splits into Levi and unipotent parts") {
  const FlowVector flow = flow_of("3,1,-1,-3");
  const BlockComposition comp = BlockComposition::maximal(2, 4);
  // Identity arrangement: Levi pairs {1,2} and {3,4} both orders, unipotent
  // pairs crossing the blocks upward.
  const auto split = cusp::parabolic_entropy_split(comp, flow.entries());
  CHECK(split.levi == 4);       // (3-1) + (-1-(-3))
  CHECK(split.unipotent == 16);  // 4+6+2+4
  CHECK(split.total() == 20);
  CHECK_THROWS_AS(
      cusp::parabolic_entropy_split(comp, std::vector<Rational>(3)),
      std::invalid_argument);
}

TEST_CASE("project_blocks replaces entries by block means") {
  const BlockComposition comp({2, 2});
  const std::vector<Rational> beta{Rational(3), Rational(1), Rational(-1),
                                   Rational(-3)};
  const auto means = cusp::project_blocks(comp, beta);
  CHECK(means == std::vector<Rational>{Rational(2), Rational(2), Rational(-2),
                                       Rational(-2)});
}

TEST_CASE("psi_k is the head-tail mean contrast") {
  const std::vector<Rational> beta{Rational(3), Rational(1), Rational(-1),
                                   Rational(-3)};
  CHECK(cusp::psi_k(2, beta) == 4);
  CHECK(cusp::psi_k(1, beta) == cusp::ratio(3, 1) - cusp::ratio(-3, 3));
  CHECK_THROWS_AS(cusp::psi_k(0, beta), std::invalid_argument);
  CHECK_THROWS_AS(cusp::psi_k(4, beta), std::invalid_argument);
}

TEST_CASE("linear functionals validate dimensions") {
  const cusp::LinearFunctional phi({Rational(1), Rational(-1)});
  const std::vector<Rational> v{Rational(5), Rational(2)};
  CHECK(phi(v) == 3);
  CHECK_THROWS_AS(phi(std::vector<Rational>(3)), std::invalid_argument);
  CHECK_THROWS_AS(cusp::LinearFunctional({}), std::invalid_argument);
}
