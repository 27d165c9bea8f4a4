#include "cuspbound/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace cusp {

namespace {

Rational positive_part_sum(const FlowVector& alpha) {
  Rational sum(0);
  for (const Rational& x : alpha.entries()) {
    if (x > 0) sum += x;
  }
  return sum;
}

// g(m) = sum_{i=1}^{k} alpha_{m+2(i-1)}  (1-based m), defined for
// 1 <= m <= d-2k+2; non-increasing in m since alpha is sorted.
Rational comb_sum(int k, const FlowVector& alpha, int m) {
  Rational sum(0);
  for (int i = 0; i < k; ++i) sum += alpha.entry(m - 1 + 2 * i);
  return sum;
}

void require_anchor(const FlowVector& alpha, int m) {
  const int d = alpha.dimension();
  if (m < 1 || m > d - 1 || alpha.entry(m - 1) < 0 || alpha.entry(m) > 0) {
    throw std::invalid_argument(
        "anchor m must satisfy 1 <= m <= d-1 and alpha_m >= 0 >= alpha_{m+1}");
  }
}

// Restriction slope r_k of phi_all on the center of the (k, d-k) Levi,
// extended by r_0 = r_d = 0 for coefficient differencing.
Rational phi_all_restriction(int d, int m, int k) {
  if (k == 0 || k == d) return Rational(0);
  return ratio(static_cast<long>(d - 1) * ((d - 2 * k) * m + d * (k - 1)),
               static_cast<long>(d) * (d - 2));
}

}  // namespace

LinearFunctional borel_functional(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  std::vector<Rational> coefficients;
  coefficients.reserve(d);
  for (int i = 1; i <= d; ++i) coefficients.push_back(ratio(d + 1 - 2 * i, 2));
  return LinearFunctional(std::move(coefficients));
}

Rational borel_bound(const FlowVector& alpha) {
  return total_entropy(alpha) / 2;
}

int compute_m_k(int k, const FlowVector& alpha) {
  const int d = alpha.dimension();
  if (k < 1 || 2 * k > d) {
    throw std::invalid_argument("compute_m_k requires 1 <= k and 2k <= d");
  }
  // g(1) >= 0 and g(d-2k+2) <= 0, so the first sign change exists.
  for (int m = 1; m <= d - 2 * k + 1; ++m) {
    if (comb_sum(k, alpha, m + 1) <= 0) {
      return m;
    }
  }
  throw std::logic_error("no comb sign change found");
}

Rational slope_choice(int k, const FlowVector& alpha) {
  const int d = alpha.dimension();
  if (k < 1 || k >= d) {
    throw std::invalid_argument("slope_choice requires 1 <= k < d");
  }
  if (2 * k > d) {
    return Rational(static_cast<long>(k) * (d - k)) -
           slope_choice(d - k, alpha);
  }
  const int m = compute_m_k(k, alpha);
  return ratio(static_cast<long>(k) * (d - k), d) * (m + k - 1);
}

Rational maximal_parabolic_bound(int k, const FlowVector& alpha) {
  const int d = alpha.dimension();
  if (k < 1 || k >= d) {
    throw std::invalid_argument("bound requires 1 <= k < d");
  }
  if (2 * k > d) return maximal_parabolic_bound(d - k, alpha);
  const int m = compute_m_k(k, alpha);
  Rational bound = total_entropy(alpha);
  for (int i = 1; i <= m; ++i) bound -= Rational(k) * alpha.entry(i - 1);
  for (int i = 1; i <= k - 1; ++i) {
    bound -= Rational(k - i) *
             (alpha.entry(m + 2 * i - 2) + alpha.entry(m + 2 * i - 1));
  }
  return bound;
}

Rational whole_cusp_bound(const FlowVector& alpha) {
  return total_entropy(alpha) - positive_part_sum(alpha);
}

int default_phi_all_m(const FlowVector& alpha) {
  int count = 0;
  for (const Rational& x : alpha.entries()) {
    if (x > 0) ++count;
  }
  return std::max(count, 1);
}

std::pair<int, int> phi_all_m_range(const FlowVector& alpha) {
  const int d = alpha.dimension();
  int first = 0, last = 0;
  for (int m = 1; m <= d - 1; ++m) {
    if (alpha.entry(m - 1) >= 0 && alpha.entry(m) <= 0) {
      if (first == 0) first = m;
      last = m;
    }
  }
  return {first, last};
}

LinearFunctional phi_all_for(int d, int m) {
  if (d < 3) {
    throw std::invalid_argument("phi_all requires dimension >= 3");
  }
  if (m < 1 || m > d - 1) {
    throw std::invalid_argument("phi_all anchor must satisfy 1 <= m <= d-1");
  }
  // Only differences of coefficients act on trace-zero vectors; the overall
  // shift is fixed by the pinned extremes
  //   z_1 = (d-1)(m-1)/(d-2),  z_d = -(d-1)(d-m-1)/(d-2),
  // which amounts to total weight T = (d-1)(2m-d)/(d-2).
  const Rational shift =
      ratio(static_cast<long>(d - 1) * (2 * m - d),
            static_cast<long>(d) * (d - 2));
  std::vector<Rational> z;
  z.reserve(d);
  for (int i = 1; i <= d; ++i) {
    z.push_back(phi_all_restriction(d, m, i) -
                phi_all_restriction(d, m, i - 1) + shift);
  }
  return LinearFunctional(std::move(z));
}

LinearFunctional phi_all(const FlowVector& alpha, std::optional<int> m) {
  const int anchor = m.value_or(default_phi_all_m(alpha));
  require_anchor(alpha, anchor);
  return phi_all_for(alpha.dimension(), anchor);
}

Rational c_coefficient(int d, int k, int m) {
  if (d < 3 || k < 1 || k >= d || m < 1 || m > d - 1) {
    throw std::invalid_argument("c_coefficient requires d >= 3, 1 <= k < d, "
                                "1 <= m <= d-1");
  }
  return ratio(static_cast<long>(d - 1) * ((d - 2 * k) * m + d * (k - 1)),
               static_cast<long>(k) * (d - k) * (d - 2));
}

CProperties check_c_properties(int d, int k, int m) {
  const Rational c = c_coefficient(d, k, m);
  CProperties props;
  props.lower_bound = c >= ratio(d - 1, d - k);
  props.upper_bound = c <= ratio(d - 1, k);
  props.sum_below_dimension = Rational(k) + c < d;
  props.scaled_above_anchor = Rational(k) * c >= m;
  return props;
}

Domination dominating_maximal_parabolic(const BlockComposition& q,
                                        const LinearFunctional& phi) {
  const int d = q.dimension();
  if (!q.is_proper()) {
    throw std::invalid_argument("domination requires a proper parabolic");
  }
  if (phi.dimension() != d) {
    throw std::invalid_argument("functional/parabolic dimension mismatch");
  }
  if (q.block_count() == 2) {
    return Domination{q, Rational(0), true};
  }
  // Merge the middle blocks to (a, b, c); fold onto the larger outer block.
  const int a = q.blocks().front();
  const int c = q.blocks().back();
  const int b = d - a - c;
  if (a <= c) {
    Rational certificate =
        phi.coefficients().back() / (static_cast<long>(c) * (b + c));
    const bool certified = certificate >= -1 && certificate <= 0;
    return Domination{BlockComposition::maximal(a, d), std::move(certificate),
                      certified};
  }
  Rational certificate =
      phi.coefficients().front() / (static_cast<long>(a) * (a + b));
  const bool certified = certificate >= 0 && certificate <= 1;
  return Domination{BlockComposition::maximal(a + b, d),
                    std::move(certificate), certified};
}

Rational domination_slack(int k, const FlowVector& alpha, int m) {
  const int d = alpha.dimension();
  if (k < 2 || 2 * k > d) {
    throw std::invalid_argument("domination_slack requires 2 <= k and 2k <= d");
  }
  require_anchor(alpha, m);
  const Rational c = c_coefficient(d, k, m);
  const long floor_c = floor_of(c).get_si();
  const Rational frac_c = fractional_part(c);

  Rational slack = -positive_part_sum(alpha);
  if (floor_c <= k - 1) {
    // Shallow slope: ladder of length k + floor(c) anchored at k - floor(c).
    for (int i = 1; i <= k - floor_c; ++i) slack += c * alpha.entry(i - 1);
    for (int i = 1; i <= floor_c; ++i) {
      slack += Rational(floor_c + 1 - i) *
               alpha.entry(k - floor_c + 2 * i - 2);
      slack += (c - i) * alpha.entry(k - floor_c + 2 * i - 1);
    }
  } else {
    // Steep slope: flat head of height k, then the interleaved descent.
    for (int i = 1; i <= floor_c - k + 1; ++i) {
      slack += Rational(k) * alpha.entry(i - 1);
    }
    for (int i = 1; i <= k - 1; ++i) {
      slack += Rational(k - i) * alpha.entry(floor_c - k + 2 * i);
    }
    for (int i = 1; i <= k; ++i) {
      slack += (Rational(k - i) + frac_c) *
               alpha.entry(floor_c - k + 2 * i - 1);
    }
  }
  return slack;
}

bool chebyshev_sum_holds(const std::vector<Rational>& x,
                         const std::vector<Rational>& y) {
  const size_t n = x.size();
  if (n == 0 || y.size() != n) {
    throw std::invalid_argument("sequences must be nonempty and equal length");
  }
  auto non_increasing = [](const std::vector<Rational>& v) {
    return std::is_sorted(v.rbegin(), v.rend());
  };
  auto non_decreasing = [](const std::vector<Rational>& v) {
    return std::is_sorted(v.begin(), v.end());
  };
  if (!((non_increasing(x) && non_increasing(y)) ||
        (non_decreasing(x) && non_decreasing(y)))) {
    throw std::invalid_argument("sequences must be monotone the same way");
  }
  Rational dot(0), sum_x(0), sum_y(0);
  for (size_t i = 0; i < n; ++i) {
    dot += x[i] * y[i];
    sum_x += x[i];
    sum_y += y[i];
  }
  return Rational(static_cast<long>(n)) * dot >= sum_x * sum_y;
}

LadderSequence ladder_sequence(int head, int tail, const Rational& kappa) {
  if (head < 1 || tail < 1 || kappa < 0) {
    throw std::invalid_argument("ladder requires head, tail >= 1, kappa >= 0");
  }
  const int n = head + tail;
  std::vector<Rational> v(n);
  v[n - 1] = kappa;
  if (n - 2 >= 0) v[n - 2] = 1;
  for (int i = n - 3; i >= head - 1; --i) v[i] = v[i + 2] + 1;
  for (int i = 0; i < head - 1; ++i) v[i] = v[head - 1];

  Rational sum;
  if (tail % 2 == 1) {
    sum = ratio(tail + 1, 2) * (kappa + head + ratio(tail - 1, 2));
  } else {
    sum = (ratio(tail, 2) + head) * (ratio(tail, 2) + kappa);
  }
  return LadderSequence{std::move(v), std::move(sum)};
}

HeadWeightCheck head_weight_inequality(const std::vector<Rational>& weights,
                                       int m, const FlowVector& alpha) {
  const int d = alpha.dimension();
  const int n = static_cast<int>(weights.size());
  if (n < 1 || n > d) {
    throw std::invalid_argument("need 1 <= #weights <= d");
  }
  require_anchor(alpha, m);

  HeadWeightCheck check;
  bool shape = std::is_sorted(weights.rbegin(), weights.rend()) &&
               weights.back() >= 0;
  if (shape) {
    if (m < n) {
      Rational head_excess(0), tail_mass(0);
      for (int i = 0; i < m; ++i) head_excess += weights[i] - 1;
      for (int i = m; i < n; ++i) tail_mass += weights[i];
      shape = head_excess / m >= tail_mass / (d - m);
    } else {
      Rational mass = std::accumulate(weights.begin(), weights.end(),
                                      Rational(0));
      shape = mass >= m;
      for (int i = 0; i + 1 < n && shape; ++i) shape = weights[i] >= 1;
    }
  }
  check.hypotheses = shape;

  Rational weighted(0), head(0);
  for (int i = 0; i < n; ++i) weighted += weights[i] * alpha.entry(i);
  for (int i = 0; i < m; ++i) head += alpha.entry(i);
  check.conclusion = weighted >= head;
  return check;
}

BoundReport compute_bound_report(const FlowVector& alpha) {
  const int d = alpha.dimension();
  BoundReport report{alpha, {}, {}, {}, {}, {}, false};
  report.total = total_entropy(alpha);
  report.borel = borel_bound(alpha);
  report.whole_cusp = whole_cusp_bound(alpha);
  report.degenerate = alpha.is_zero();

  for (int k = 1; k <= d - 1; ++k) {
    const int kr = std::min(k, d - k);
    const int m = compute_m_k(kr, alpha);
    const int step = m + kr - 1;
    const Permutation tau =
        extremal_sequence(kr, d)[static_cast<size_t>(step) - 1];
    const Permutation word = 2 * k > d ? reflect_word(kr, tau) : tau;
    report.per_k.push_back(
        PerKBound{k, m, slope_choice(k, alpha), maximal_parabolic_bound(k, alpha),
                  canonical_rep(BlockComposition::maximal(k, d), alpha, word)});
  }

  if (d >= 3) {
    const int m = default_phi_all_m(alpha);
    const LinearFunctional phi = phi_all_for(d, m);
    report.phi_all = PhiAllInfo{m, phi.coefficients().front(),
                                phi.coefficients().back()};
  }
  return report;
}

}  // namespace cusp
