#ifndef CUSPBOUND_WEYL_HPP
#define CUSPBOUND_WEYL_HPP

// The Weyl group of SL_d is the symmetric group S_d acting on diagonal
// entries.  For a parabolic P and a flow alpha, the orbits that matter are
// the double cosets  stab(alpha) \ S_d / W(T,P):  two elements are
// equivalent iff each diagonal block of P receives the same multiset of
// eigenvalues.  Every coset is represented canonically by the
// lexicographically smallest one-line word it contains.

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cuspbound/flow.hpp"

namespace cusp {

// Permutation of {0,...,d-1}, stored as the image word.  One-line text I/O
// is 1-based: "3,4,1,2" maps position 1 to 3, etc.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);
  static Permutation from_one_line(std::string_view text);
  std::string to_one_line() const;

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  bool operator==(const Permutation& other) const = default;
  auto operator<=>(const Permutation& other) const {
    return images_ <=> other.images_;
  }

 private:
  std::vector<int> images_;
};

// (outer . inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

// Applies the value transposition swapping 1-based values n and n+1 to
// every letter of the word.
Permutation transpose_values(const Permutation& sigma, int n);

// Rearranged eigenvalue vector: result[i] = alpha[w[i]].
std::vector<Rational> apply_weyl(const FlowVector& alpha,
                                 const Permutation& w);

// Calls fn(word) for every permutation of {0,...,d-1} in lexicographic
// order; word is reused between calls.
template <typename Fn>
void for_each_permutation(int d, Fn&& fn) {
  std::vector<int> word(d);
  std::iota(word.begin(), word.end(), 0);
  do {
    fn(const_cast<const std::vector<int>&>(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

// A double coset, identified by its canonical representative.
struct CosetClass {
  Permutation rep;
  BlockComposition parabolic;

  bool operator==(const CosetClass& other) const = default;
  auto operator<=>(const CosetClass& other) const {
    if (auto c = parabolic <=> other.parabolic; c != 0) return c;
    return rep <=> other.rep;
  }
};

// Canonical (lexicographically smallest) representative of the double coset
// of w.  Within each block the representative lists indices increasingly;
// blocks earlier in the composition take the smaller indices of tied values.
CosetClass canonical_rep(const BlockComposition& parabolic,
                         const FlowVector& alpha, const Permutation& w);

inline constexpr int kPermutationEnumLimit = 8;

// All double cosets for (parabolic, alpha), sorted by representative word.
// Enumerates class demands directly, so ties in alpha collapse without
// touching all d! permutations.  Throws if dimension() > limit.
std::vector<CosetClass> enumerate_cosets(const BlockComposition& parabolic,
                                         const FlowVector& alpha,
                                         int limit = kPermutationEnumLimit);

// Value of h(P, a^w) - phi(pi_P(a^w)) on the coset of w: parabolic entropy
// of the rearranged flow minus the functional evaluated on block means.
Rational h_minus_phi(const BlockComposition& parabolic,
                     const FlowVector& alpha, const Permutation& w,
                     const LinearFunctional& phi);

// Effect of swapping eigenvalues n, n+1 across the two blocks of (k, d-k):
// closed-form changes of the parabolic entropy and of psi_k, with the
// 1-based block positions j (of n, first block) and j_prime (of n+1,
// second block) after orienting the swap so that n sits in the first block.
struct TranspositionDelta {
  Rational delta_h;
  Rational delta_psi;
  int j = 0;
  int j_prime = 0;
};

TranspositionDelta transposition_delta(int k, const CosetClass& coset,
                                       const FlowVector& alpha, int n);

}  // namespace cusp

#endif  // CUSPBOUND_WEYL_HPP
