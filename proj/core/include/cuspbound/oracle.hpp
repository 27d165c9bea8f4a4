#ifndef CUSPBOUND_ORACLE_HPP
#define CUSPBOUND_ORACLE_HPP

// Brute-force reference computations.  Everything here is deliberately
// direct — enumerate, evaluate, compare — so the closed-form machinery in
// bounds.hpp and hull.hpp can be certified against it at small dimension.

#include <cstdint>
#include <string>
#include <vector>

#include "cuspbound/bounds.hpp"
#include "cuspbound/hull.hpp"
#include "cuspbound/weyl.hpp"

namespace cusp {

inline constexpr int kParabolicEnumLimit = 7;

// All block compositions of d, ordered by block count and then
// lexicographically; proper_only drops the full group (d).  Throws if
// d > limit.
std::vector<BlockComposition> enumerate_parabolics(
    int d, bool proper_only = true, int limit = kParabolicEnumLimit);

struct BruteMaxResult {
  Rational value;
  CosetClass argmax;
};

// Maximum of h(P, a^w) - phi(pi_P(a^w)) over every coset of every listed
// parabolic.  Parabolics are scanned in the given order and cosets in
// canonical order; ties keep the earliest hit, so with the
// enumerate_parabolics order a coarser argmax wins over a finer one.
BruteMaxResult brute_max(const FlowVector& alpha, const LinearFunctional& phi,
                         const std::vector<BlockComposition>& parabolics,
                         int limit = kPermutationEnumLimit);

// Independent upper boundary: images of all d! permutations, reduced to
// the topmost point per psi and passed through a monotone-chain scan that
// drops collinear interior points.  Vertex witnesses are the smallest
// attaining cosets; edge steps are back-filled from the exact slope when it
// quantizes to an integer multiple of k(d-k)/d (it always does for a
// correct boundary) and left 0 otherwise.
HullBoundary brute_upper_hull(int k, const FlowVector& alpha,
                              int limit = kPermutationEnumLimit);

// Deterministic pseudo-random flow: entries p/q with |p| <= max_numerator,
// 1 <= q <= max_denominator, projected to zero sum and sorted.  The same
// arguments always produce the same flow on every platform (the generator
// is mt19937_64 with plain modulo reduction).
FlowVector random_flow(int d, std::uint64_t seed, int max_numerator = 12,
                       int max_denominator = 6);

// Stateless per-trial seed derivation (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  FlowVector flow;
  std::vector<CheckResult> checks;
  bool all_pass = false;
  bool degenerate = false;
};

// Runs the full identity battery for one flow: Borel constancy, the
// three-way maximal-parabolic bound agreement per k, symmetry and
// monotonicity in k, whole-cusp identities, hull-versus-oracle equality,
// uniform-functional domination across all proper parabolics, transposition
// deltas, slope budgets, mirror identities, and slack nonnegativity.
VerificationReport verify_all(const FlowVector& alpha,
                              int permutation_limit = kPermutationEnumLimit,
                              int parabolic_limit = kParabolicEnumLimit);

}  // namespace cusp

#endif  // CUSPBOUND_ORACLE_HPP
