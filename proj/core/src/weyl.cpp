#include "cuspbound/weyl.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace cusp {

namespace {

// Class id per 0-based position of the sorted flow: 0 for the largest value,
// increasing by 1 at every strict drop.  Equal eigenvalues share a class.
std::vector<int> value_classes(const FlowVector& alpha) {
  std::vector<int> classes(alpha.dimension());
  for (int i = 1; i < alpha.dimension(); ++i) {
    classes[i] = classes[i - 1] + (alpha.entry(i) < alpha.entry(i - 1) ? 1 : 0);
  }
  return classes;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation word");
    }
    seen[v] = true;
  }
  if (images_.empty()) throw std::invalid_argument("empty permutation");
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::string_view text) {
  std::vector<int> images;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string_view token = text.substr(
        start, comma == std::string_view::npos ? comma : comma - start);
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw std::invalid_argument("bad permutation token in \"" +
                                  std::string(text) + "\"");
    }
    images.push_back(std::stoi(std::string(token)) - 1);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Permutation(std::move(images));
}

std::string Permutation::to_one_line() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("composing permutations of unequal size");
  }
  std::vector<int> images(inner.size());
  for (int i = 0; i < inner.size(); ++i) images[i] = outer[inner[i]];
  return Permutation(std::move(images));
}

Permutation transpose_values(const Permutation& sigma, int n) {
  if (n < 1 || n >= sigma.size()) {
    throw std::invalid_argument("transposition index out of range");
  }
  std::vector<int> images = sigma.images();
  for (int& v : images) {
    if (v == n - 1) {
      v = n;
    } else if (v == n) {
      v = n - 1;
    }
  }
  return Permutation(std::move(images));
}

std::vector<Rational> apply_weyl(const FlowVector& alpha,
                                 const Permutation& w) {
  if (w.size() != alpha.dimension()) {
    throw std::invalid_argument("permutation/flow dimension mismatch");
  }
  std::vector<Rational> beta(w.size());
  for (int i = 0; i < w.size(); ++i) beta[i] = alpha.entry(w[i]);
  return beta;
}

CosetClass canonical_rep(const BlockComposition& parabolic,
                         const FlowVector& alpha, const Permutation& w) {
  const int d = alpha.dimension();
  if (parabolic.dimension() != d || w.size() != d) {
    throw std::invalid_argument("dimension mismatch in canonical_rep");
  }
  const std::vector<int> classes = value_classes(alpha);
  const int num_classes = classes.back() + 1;
  // First index of each class; equal values occupy consecutive positions.
  std::vector<int> cursor(num_classes, 0);
  for (int i = d - 1; i >= 0; --i) cursor[classes[i]] = i;

  std::vector<int> rep;
  rep.reserve(d);
  for (int b = 0; b < parabolic.block_count(); ++b) {
    const int start = parabolic.block_start(b);
    const int size = parabolic.blocks()[b];
    std::vector<int> demand(num_classes, 0);
    for (int i = start; i < start + size; ++i) ++demand[classes[w[i]]];
    // Smallest unused indices, class by class: lexicographically minimal.
    for (int c = 0; c < num_classes; ++c) {
      for (int t = 0; t < demand[c]; ++t) rep.push_back(cursor[c]++);
    }
  }
  return CosetClass{Permutation(std::move(rep)), parabolic};
}

std::vector<CosetClass> enumerate_cosets(const BlockComposition& parabolic,
                                         const FlowVector& alpha, int limit) {
  const int d = alpha.dimension();
  if (parabolic.dimension() != d) {
    throw std::invalid_argument("dimension mismatch in enumerate_cosets");
  }
  if (d > limit) {
    throw std::invalid_argument("coset enumeration limited to d <= " +
                                std::to_string(limit));
  }
  const std::vector<int> classes = value_classes(alpha);
  const int num_classes = classes.back() + 1;
  std::vector<int> multiplicity(num_classes, 0);
  for (int c : classes) ++multiplicity[c];

  std::vector<CosetClass> out;
  // demands[b][c]: how many eigenvalues of class c land in block b.
  std::vector<std::vector<int>> demands(parabolic.block_count(),
                                        std::vector<int>(num_classes, 0));

  std::function<void(int)> assign_block = [&](int b) {
    if (b == parabolic.block_count()) {
      std::vector<int> cursor(num_classes, 0);
      for (int i = d - 1; i >= 0; --i) cursor[classes[i]] = i;
      std::vector<int> rep;
      rep.reserve(d);
      for (const auto& demand : demands) {
        for (int c = 0; c < num_classes; ++c) {
          for (int t = 0; t < demand[c]; ++t) rep.push_back(cursor[c]++);
        }
      }
      out.push_back(CosetClass{Permutation(std::move(rep)), parabolic});
      return;
    }
    const int block_size = parabolic.blocks()[b];
    std::function<void(int, int)> choose = [&](int c, int remaining) {
      if (c == num_classes) {
        if (remaining == 0) assign_block(b + 1);
        return;
      }
      const int take_max = std::min(multiplicity[c], remaining);
      for (int take = 0; take <= take_max; ++take) {
        demands[b][c] = take;
        multiplicity[c] -= take;
        choose(c + 1, remaining - take);
        multiplicity[c] += take;
      }
      demands[b][c] = 0;
    };
    choose(0, block_size);
  };
  assign_block(0);

  std::sort(out.begin(), out.end());
  return out;
}

Rational h_minus_phi(const BlockComposition& parabolic,
                     const FlowVector& alpha, const Permutation& w,
                     const LinearFunctional& phi) {
  const std::vector<Rational> beta = apply_weyl(alpha, w);
  const EntropySplit split = parabolic_entropy_split(parabolic, beta);
  const std::vector<Rational> means = project_blocks(parabolic, beta);
  return split.total() - phi(means);
}

TranspositionDelta transposition_delta(int k, const CosetClass& coset,
                                       const FlowVector& alpha, int n) {
  const int d = alpha.dimension();
  if (coset.parabolic != BlockComposition::maximal(k, d)) {
    throw std::invalid_argument("coset does not belong to the (k, d-k) parabolic");
  }
  if (n < 1 || n >= d) {
    throw std::invalid_argument("transposition_delta requires 1 <= n < d");
  }
  const Permutation& sigma = coset.rep;
  int pos_n = -1, pos_n1 = -1;  // 1-based positions of values n, n+1
  for (int i = 0; i < d; ++i) {
    if (sigma[i] == n - 1) pos_n = i + 1;
    if (sigma[i] == n) pos_n1 = i + 1;
  }
  const bool n_first = pos_n <= k && pos_n1 > k;
  const bool n1_first = pos_n1 <= k && pos_n > k;
  if (!n_first && !n1_first) {
    throw std::domain_error(
        "values n and n+1 lie in the same block; swap does not cross");
  }
  // Orient the swap so that value n occupies the first block.
  const int j = n_first ? pos_n : pos_n1;
  const int j_prime = n_first ? pos_n1 : pos_n;
  if (j_prime != n + k - j + 1) {
    throw std::invalid_argument(
        "transposition_delta expects a canonical representative");
  }
  const Rational gap = alpha.entry(n - 1) - alpha.entry(n);
  TranspositionDelta delta;
  delta.j = j;
  delta.j_prime = j_prime;
  delta.delta_h = Rational(j_prime - j) * gap;
  delta.delta_psi = ratio(d, static_cast<long>(k) * (d - k)) * gap;
  return delta;
}

}  // namespace cusp
