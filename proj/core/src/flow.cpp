#include "cuspbound/flow.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cusp {

FlowVector FlowVector::from_raw(std::vector<Rational> raw,
                                bool project_to_zero_sum) {
  const int d = static_cast<int>(raw.size());
  if (d < 2) {
    throw std::invalid_argument("flow dimension must be at least 2");
  }
  Rational sum = std::accumulate(raw.begin(), raw.end(), Rational(0));
  if (project_to_zero_sum) {
    Rational mean = sum / d;
    for (auto& x : raw) x -= mean;
  } else if (sum != 0) {
    throw std::invalid_argument("flow entries must sum to zero exactly (got " +
                                format_rational(sum) + ")");
  }
  FlowVector flow;
  flow.raw_ = raw;
  flow.applied_sort_.resize(raw.size());
  std::iota(flow.applied_sort_.begin(), flow.applied_sort_.end(), 0);
  std::stable_sort(flow.applied_sort_.begin(), flow.applied_sort_.end(),
                   [&](int a, int b) { return raw[a] > raw[b]; });
  flow.entries_.reserve(raw.size());
  for (int i : flow.applied_sort_) flow.entries_.push_back(raw[i]);
  return flow;
}

FlowVector FlowVector::zero(int dimension) {
  return from_raw(std::vector<Rational>(dimension, Rational(0)));
}

bool FlowVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x == 0; });
}

BlockComposition::BlockComposition(std::vector<int> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw std::invalid_argument("block composition must be nonempty");
  }
  starts_.reserve(blocks_.size());
  for (int b : blocks_) {
    if (b <= 0) {
      throw std::invalid_argument("block sizes must be positive");
    }
    starts_.push_back(dimension_);
    dimension_ += b;
  }
}

BlockComposition BlockComposition::full(int dimension) {
  return BlockComposition({dimension});
}

BlockComposition BlockComposition::borel(int dimension) {
  if (dimension <= 0) throw std::invalid_argument("dimension must be positive");
  return BlockComposition(std::vector<int>(dimension, 1));
}

BlockComposition BlockComposition::maximal(int k, int dimension) {
  if (k <= 0 || k >= dimension) {
    throw std::invalid_argument("maximal parabolic requires 0 < k < d");
  }
  return BlockComposition({k, dimension - k});
}

int BlockComposition::block_start(int b) const { return starts_.at(b); }

int BlockComposition::block_of(int i) const {
  if (i < 0 || i >= dimension_) {
    throw std::invalid_argument("position out of range");
  }
  int b = 0;
  while (b + 1 < block_count() && starts_[b + 1] <= i) ++b;
  return b;
}

LinearFunctional::LinearFunctional(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("functional must have positive dimension");
  }
}

Rational LinearFunctional::operator()(std::span<const Rational> vector) const {
  if (static_cast<int>(vector.size()) != dimension()) {
    throw std::invalid_argument("functional/vector dimension mismatch");
  }
  Rational value(0);
  for (int i = 0; i < dimension(); ++i) value += coefficients_[i] * vector[i];
  return value;
}

Rational entropy_on_pairs(const std::vector<std::pair<int, int>>& pairs,
                          const FlowVector& alpha) {
  const int d = alpha.dimension();
  std::set<std::pair<int, int>> seen;
  Rational sum(0);
  for (auto [i, j] : pairs) {
    if (i < 1 || i > d || j < 1 || j > d) {
      throw std::invalid_argument("pair index out of range 1..d");
    }
    if (i == j) {
      throw std::invalid_argument("diagonal pairs are not allowed");
    }
    if (!seen.insert({i, j}).second) {
      throw std::invalid_argument("duplicate pair in index set");
    }
    Rational diff = alpha.entry(i - 1) - alpha.entry(j - 1);
    if (diff > 0) sum += diff;
  }
  return sum;
}

Rational total_entropy(const FlowVector& alpha) {
  // Entries are sorted, so only pairs i < j contribute and each positive
  // part is the plain difference.
  const int d = alpha.dimension();
  Rational sum(0);
  for (int i = 0; i < d; ++i) {
    sum += Rational(d - 1 - 2 * i) * alpha.entry(i);
  }
  return sum;
}

EntropySplit parabolic_entropy_split(const BlockComposition& parabolic,
                                     const std::vector<Rational>& beta) {
  const int d = parabolic.dimension();
  if (static_cast<int>(beta.size()) != d) {
    throw std::invalid_argument("vector/composition dimension mismatch");
  }
  EntropySplit split{Rational(0), Rational(0)};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const bool same_block = parabolic.block_of(i) == parabolic.block_of(j);
      const bool upper = !same_block && i < j;
      if (!same_block && !upper) continue;
      Rational diff = beta[i] - beta[j];
      if (diff <= 0) continue;
      (same_block ? split.levi : split.unipotent) += diff;
    }
  }
  return split;
}

std::vector<Rational> project_blocks(const BlockComposition& parabolic,
                                     const std::vector<Rational>& beta) {
  const int d = parabolic.dimension();
  if (static_cast<int>(beta.size()) != d) {
    throw std::invalid_argument("vector/composition dimension mismatch");
  }
  std::vector<Rational> projected(beta.size());
  for (int b = 0; b < parabolic.block_count(); ++b) {
    const int start = parabolic.block_start(b);
    const int size = parabolic.blocks()[b];
    Rational mean(0);
    for (int i = start; i < start + size; ++i) mean += beta[i];
    mean /= size;
    for (int i = start; i < start + size; ++i) projected[i] = mean;
  }
  return projected;
}

Rational psi_k(int k, const std::vector<Rational>& beta) {
  const int d = static_cast<int>(beta.size());
  if (k < 1 || k >= d) {
    throw std::invalid_argument("psi_k requires 1 <= k < d");
  }
  Rational head(0), tail(0);
  for (int i = 0; i < k; ++i) head += beta[i];
  for (int i = k; i < d; ++i) tail += beta[i];
  return head / k - tail / (d - k);
}

}  // namespace cusp
