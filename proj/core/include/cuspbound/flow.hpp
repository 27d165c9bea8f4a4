#ifndef CUSPBOUND_FLOW_HPP
#define CUSPBOUND_FLOW_HPP

// Diagonal flows on SL_d(R)/SL_d(Z) and the entropy-style sums attached to
// them.  A flow is a real diagonal matrix direction with trace zero; here it
// is represented by its exact rational eigenvalue vector, kept sorted in
// non-increasing order.  Parabolic subgroups are encoded by ordered block
// compositions of d.

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "cuspbound/rational.hpp"

namespace cusp {

// Trace-zero eigenvalue vector, sorted non-increasingly on construction.
// The original input order is retained together with the sorting permutation
// so callers can report results against the user's coordinates.
class FlowVector {
 public:
  // Validates dimension >= 2 and exact zero sum.  With project_to_zero_sum
  // the mean is subtracted first instead of rejecting a nonzero sum.
  static FlowVector from_raw(std::vector<Rational> raw,
                             bool project_to_zero_sum = false);
  static FlowVector zero(int dimension);

  int dimension() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& entry(int i) const { return entries_.at(i); }
  const std::vector<Rational>& raw_entries() const { return raw_; }
  // entries()[i] == raw_entries()[applied_sort()[i]] (0-based).
  const std::vector<int>& applied_sort() const { return applied_sort_; }
  bool is_zero() const;

  bool operator==(const FlowVector& other) const {
    return entries_ == other.entries_;
  }

 private:
  FlowVector() = default;
  std::vector<Rational> entries_;
  std::vector<Rational> raw_;
  std::vector<int> applied_sort_;
};

// Ordered composition d = d_1 + ... + d_r encoding a standard parabolic
// subgroup (block upper-triangular matrices with the given diagonal blocks).
class BlockComposition {
 public:
  explicit BlockComposition(std::vector<int> blocks);
  static BlockComposition full(int dimension);             // (d)
  static BlockComposition borel(int dimension);            // (1,...,1)
  static BlockComposition maximal(int k, int dimension);   // (k, d-k)

  int dimension() const { return dimension_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& blocks() const { return blocks_; }
  // 0-based index of the first position in block b.
  int block_start(int b) const;
  // Block containing 0-based position i.
  int block_of(int i) const;
  bool is_proper() const { return block_count() >= 2; }

  bool operator==(const BlockComposition& other) const = default;
  auto operator<=>(const BlockComposition& other) const {
    return blocks_ <=> other.blocks_;
  }

 private:
  std::vector<int> blocks_;
  std::vector<int> starts_;
  int dimension_ = 0;
};

// Exact linear form on R^d, evaluated coefficient-wise.
class LinearFunctional {
 public:
  explicit LinearFunctional(std::vector<Rational> coefficients);
  int dimension() const { return static_cast<int>(coefficients_.size()); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational operator()(std::span<const Rational> vector) const;

 private:
  std::vector<Rational> coefficients_;
};

// Sum of positive parts (alpha_i - alpha_j)^+ over the given 1-based pair
// set.  Rejects out-of-range indices, diagonal pairs and duplicates.
Rational entropy_on_pairs(const std::vector<std::pair<int, int>>& pairs,
                          const FlowVector& alpha);

// Entropy of the full flow: sum over all ordered pairs, i.e. the expanding
// part of ad(alpha) on sl_d.
Rational total_entropy(const FlowVector& alpha);

struct EntropySplit {
  Rational levi;       // pairs inside a diagonal block, both orders
  Rational unipotent;  // pairs strictly above the block diagonal
  Rational total() const { return levi + unipotent; }
};

// Splits the parabolic entropy of the rearranged vector beta into its Levi
// and unipotent-radical contributions.
EntropySplit parabolic_entropy_split(const BlockComposition& parabolic,
                                     const std::vector<Rational>& beta);

// Projection onto the central directions of the Levi: replaces each entry by
// the mean of its block.
std::vector<Rational> project_blocks(const BlockComposition& parabolic,
                                     const std::vector<Rational>& beta);

// Normalized two-block contrast: mean of the first k entries minus mean of
// the last d-k entries.
Rational psi_k(int k, const std::vector<Rational>& beta);

}  // namespace cusp

#endif  // CUSPBOUND_FLOW_HPP
