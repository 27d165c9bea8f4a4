#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "cuspbound/weyl.hpp"

using cusp::BlockComposition;
using cusp::CosetClass;
using cusp::FlowVector;
using cusp::Permutation;
using cusp::Rational;

namespace {

FlowVector flow_of(const std::string& text) {
  return FlowVector::from_raw(cusp::parse_rational_list(text));
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

TEST_CASE("one-line words round-trip through 1-based text") {
  const Permutation w = Permutation::from_one_line("3,4,1,2");
  CHECK(w.size() == 4);
  CHECK(w[0] == 2);
  CHECK(w[3] == 1);
  CHECK(w.to_one_line() == "3,4,1,2");
  CHECK(Permutation::identity(3).to_one_line() == "1,2,3");
}

TEST_CASE("invalid words are rejected") {
  CHECK_THROWS_AS(Permutation::from_one_line("1,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line("1,4"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
}

TEST_CASE("inverse and composition") {
  const Permutation w = Permutation::from_one_line("3,1,2");
  CHECK(w.inverse().to_one_line() == "2,3,1");
  CHECK(compose(w, w.inverse()) == Permutation::identity(3));
  CHECK(compose(w.inverse(), w) == Permutation::identity(3));
  const Permutation u = Permutation::from_one_line("2,1,3");
  // (w . u)(i) = w(u(i))
  CHECK(compose(w, u).to_one_line() == "1,3,2");
  CHECK_THROWS_AS(compose(w, Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("transpose_values swaps the letters n and n+1") {
  const Permutation id = Permutation::identity(4);
  CHECK(cusp::transpose_values(id, 2).to_one_line() == "1,3,2,4");
  const Permutation w = Permutation::from_one_line("2,4,1,3");
  CHECK(cusp::transpose_values(w, 3).to_one_line() == "2,3,1,4");
  CHECK_THROWS_AS(cusp::transpose_values(id, 0), std::invalid_argument);
  CHECK_THROWS_AS(cusp::transpose_values(id, 4), std::invalid_argument);
}

TEST_CASE("apply_weyl rearranges eigenvalues by the image word") {
  const FlowVector flow = flow_of("1,0,-1");
  const Permutation w = Permutation::from_one_line("2,3,1");
  const auto beta = cusp::apply_weyl(flow, w);
  CHECK(beta == std::vector<Rational>{Rational(0), Rational(-1), Rational(1)});
  CHECK_THROWS_AS(cusp::apply_weyl(flow, Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("for_each_permutation visits d! words in lexicographic order") {
  std::vector<std::vector<int>> words;
  cusp::for_each_permutation(3, [&](const std::vector<int>& w) {
    words.push_back(w);
  });
  REQUIRE(words.size() == 6);
  CHECK(words.front() == std::vector<int>{0, 1, 2});
  CHECK(words.back() == std::vector<int>{2, 1, 0});
  CHECK(std::is_sorted(words.begin(), words.end()));
}

// ---------------------------------------------------------------------------
// Double cosets
// ---------------------------------------------------------------------------

TEST_CASE("canonical representative is the smallest word of the class") {
  const FlowVector flow = flow_of("1,0,-1");
  const BlockComposition comp({1, 2});
  const CosetClass coset =
      cusp::canonical_rep(comp, flow, Permutation::from_one_line("2,3,1"));
  CHECK(coset.rep.to_one_line() == "2,1,3");
  CHECK(coset.parabolic == comp);
  // Reordering within a block does not change the class.
  const CosetClass other =
      cusp::canonical_rep(comp, flow, Permutation::from_one_line("2,1,3"));
  CHECK(coset == other);
}

TEST_CASE("tied eigenvalues merge cosets") {
  const FlowVector flow = flow_of("1,1,-1,-1");
  const BlockComposition comp = BlockComposition::maximal(2, 4);
  // Both words put one large and one small eigenvalue in each block.
  const CosetClass a =
      cusp::canonical_rep(comp, flow, Permutation::from_one_line("3,1,4,2"));
  const CosetClass b =
      cusp::canonical_rep(comp, flow, Permutation::from_one_line("4,2,3,1"));
  CHECK(a == b);
  CHECK(a.rep.to_one_line() == "1,3,2,4");
  CHECK_THROWS_AS(
      cusp::canonical_rep(comp, flow, Permutation::identity(3)),
      std::invalid_argument);
}

TEST_CASE("coset enumeration counts classes without visiting d! words") {
  const FlowVector distinct = flow_of("3,1,-1,-3");
  CHECK(cusp::enumerate_cosets(BlockComposition::maximal(2, 4), distinct)
            .size() == 6);
  CHECK(cusp::enumerate_cosets(BlockComposition::borel(4), distinct).size() ==
        24);

  const FlowVector tied = flow_of("1,1,-1,-1");
  CHECK(cusp::enumerate_cosets(BlockComposition::maximal(2, 4), tied).size() ==
        3);
  CHECK(cusp::enumerate_cosets(BlockComposition::borel(4), tied).size() == 6);

  CHECK_THROWS_AS(
      cusp::enumerate_cosets(BlockComposition::borel(9), FlowVector::zero(9)),
      std::invalid_argument);
}

TEST_CASE("enumerated classes are canonical, sorted and exhaustive") {
  const FlowVector flow = flow_of("1,0,0,-1");
  const BlockComposition comp({2, 2});
  const auto classes = cusp::enumerate_cosets(comp, flow);
  CHECK(std::is_sorted(classes.begin(), classes.end()));
  for (const CosetClass& coset : classes) {
    CHECK(cusp::canonical_rep(comp, flow, coset.rep) == coset);
  }
  // Brute-force the same set through all 4! words.
  std::set<std::string> seen;
  cusp::for_each_permutation(4, [&](const std::vector<int>& word) {
    seen.insert(
        cusp::canonical_rep(comp, flow, Permutation(word)).rep.to_one_line());
  });
  REQUIRE(seen.size() == classes.size());
  for (const CosetClass& coset : classes) {
    CHECK(seen.count(coset.rep.to_one_line()) == 1);
  }
}

// ---------------------------------------------------------------------------
// h - phi on cosets
// ---------------------------------------------------------------------------

TEST_CASE("h_minus_phi with the half-sum functional is chamber-independent") {
  const FlowVector flow = flow_of("1,0,-1");
  const cusp::LinearFunctional rho({Rational(1), Rational(0), Rational(-1)});
  cusp::for_each_permutation(3, [&](const std::vector<int>& word) {
    CHECK(cusp::h_minus_phi(BlockComposition::borel(3), flow,
                            Permutation(word), rho) == 2);
  });
}

// ---------------------------------------------------------------------------
// Transposition deltas
// ---------------------------------------------------------------------------

TEST_CASE("transposition_delta matches the worked example") {
  const FlowVector flow = flow_of("3,1,-1,-3");
  const BlockComposition comp = BlockComposition::maximal(2, 4);
  const CosetClass coset =
      cusp::canonical_rep(comp, flow, Permutation::from_one_line("1,3,2,4"));

  const auto d2 = cusp::transposition_delta(2, coset, flow, 2);
  CHECK(d2.j == 2);
  CHECK(d2.j_prime == 3);
  CHECK(d2.delta_h == 2);
  CHECK(d2.delta_psi == 2);

  const auto d1 = cusp::transposition_delta(2, coset, flow, 1);
  CHECK(d1.j == 1);
  CHECK(d1.j_prime == 3);
  CHECK(d1.delta_h == 4);
  CHECK(d1.delta_psi == 2);

  const auto d3 = cusp::transposition_delta(2, coset, flow, 3);
  CHECK(d3.j == 2);
  CHECK(d3.j_prime == 4);
  CHECK(d3.delta_h == 4);
  CHECK(d3.delta_psi == 2);
}

TEST_CASE("transposition_delta rejects bad inputs") {
  const FlowVector flow = flow_of("3,1,-1,-3");
  const BlockComposition comp = BlockComposition::maximal(2, 4);
  const CosetClass identity_coset =
      cusp::canonical_rep(comp, flow, Permutation::identity(4));
  // Values 1 and 2 both sit in the first block of the identity arrangement.
  CHECK_THROWS_AS(cusp::transposition_delta(2, identity_coset, flow, 1),
                  std::domain_error);
  CHECK_THROWS_AS(cusp::transposition_delta(2, identity_coset, flow, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(cusp::transposition_delta(2, identity_coset, flow, 4),
                  std::invalid_argument);
  // Non-canonical representative: positions do not satisfy the pairing rule.
  const CosetClass raw{Permutation::from_one_line("3,1,2,4"), comp};
  CHECK_THROWS_AS(cusp::transposition_delta(2, raw, flow, 2),
                  std::invalid_argument);
  // Wrong parabolic attached to the coset.
  const CosetClass borel_coset{Permutation::identity(4),
                               BlockComposition::borel(4)};
  CHECK_THROWS_AS(cusp::transposition_delta(2, borel_coset, flow, 2),
                  std::invalid_argument);
}
