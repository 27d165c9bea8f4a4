#ifndef CUSPBOUND_BOUNDS_HPP
#define CUSPBOUND_BOUNDS_HPP

// Closed-form upper bounds for the entropy carried into the cusp by a
// diagonal flow.  Three families are computed and cross-checked against
// each other and against the brute-force oracle:
//   * the Borel bound: half the total entropy, via the half-sum functional;
//   * per-k maximal-parabolic bounds, read off the hull crossing; and
//   * the whole-cusp bound h(G,a) - sum of positive entries, certified over
//     every proper parabolic at once by a single functional (phi_all).

#include <optional>
#include <utility>
#include <vector>

#include "cuspbound/hull.hpp"
#include "cuspbound/weyl.hpp"

namespace cusp {

// Half-sum-of-positive-roots pairing: coefficients (d+1-2i)/2.
LinearFunctional borel_functional(int d);

// Common value of h - phi_B over all Weyl chambers: half the total entropy.
Rational borel_bound(const FlowVector& alpha);

// Minimal m with  sum_{i=1}^{k} alpha_{m+2(i-1)} >= 0 >=
// sum_{i=1}^{k} alpha_{m+2i-1};  always exists, 1 <= m <= d-2k+1.
// Requires 2k <= d.
int compute_m_k(int k, const FlowVector& alpha);

// The certifying slope C_k = (k(d-k)/d)(m_k + k - 1), mirrored through
// C_k = k(d-k) - C_{d-k} when 2k > d.  Lies in the crossing interval.
Rational slope_choice(int k, const FlowVector& alpha);

// Entropy bound in the k-th cusp direction,
//   h(G,a) - k sum_{i<=m} alpha_i
//          - sum_{i=1}^{k-1} (k-i)(alpha_{m+2i-1} + alpha_{m+2i})
// with m = m_k; equals the hull crossing height f exactly, and is
// symmetric under k <-> d-k.
Rational maximal_parabolic_bound(int k, const FlowVector& alpha);

// h(G,a) minus the sum of positive entries; equals the k = 1 bound.
Rational whole_cusp_bound(const FlowVector& alpha);

// Anchor index for phi_all: the number of strictly positive entries,
// clamped to 1 for the zero flow.  Always satisfies
// alpha_m >= 0 >= alpha_{m+1}.
int default_phi_all_m(const FlowVector& alpha);

// All valid anchors [first, last] with alpha_m >= 0 >= alpha_{m+1} and
// 1 <= m <= d-1.
std::pair<int, int> phi_all_m_range(const FlowVector& alpha);

// Coefficient vector of the uniform certifying functional for dimension d
// and anchor m (d >= 3, 1 <= m <= d-1).  Pinned by its restrictions: on the
// center of every (k, d-k) Levi it equals
// ((d-1)((d-2k)m + d(k-1)) / d(d-2)) * psi_k.
LinearFunctional phi_all_for(int d, int m);

// Same, anchored at the given flow; validates m (default: number of
// positive entries).  Requires d >= 3.
LinearFunctional phi_all(const FlowVector& alpha,
                         std::optional<int> m = std::nullopt);

// Restriction slope of phi_all in path-step units:
//   c = (d-1)((d-2k)m + d(k-1)) / (k(d-k)(d-2)).
Rational c_coefficient(int d, int k, int m);

// For 2 <= k <= d/2 and 1 <= m <= d-1:
//   (d-1)/(d-k) <= c <= (d-1)/k,  k + c < d,  kc >= m.
// In particular 1 <= floor(c) <= d-k-1.
struct CProperties {
  bool lower_bound = false;
  bool upper_bound = false;
  bool sum_below_dimension = false;
  bool scaled_above_anchor = false;
  bool all() const {
    return lower_bound && upper_bound && sum_below_dimension &&
           scaled_above_anchor;
  }
};

CProperties check_c_properties(int d, int k, int m);

// Maximal parabolic dominating a proper parabolic Q under h - phi: merge
// Q's middle blocks to (a, b, c), keep the first block when a <= c and the
// first two otherwise.  The reported certificate (a normalized extreme
// coefficient of phi) must land in [-1, 0] resp. [0, 1] for the merge
// inequality to apply; certified records that containment.
struct Domination {
  BlockComposition parabolic;
  Rational certificate;
  bool certified = false;
};

Domination dominating_maximal_parabolic(const BlockComposition& q,
                                        const LinearFunctional& phi);

// Slack of the whole-cusp bound over the phi_all value of the coset
// [tau^{floor(c)+1}] for the (k, d-k) parabolic, in closed form.
// Nonnegative for every valid anchor; requires 2 <= k, 2k <= d.
Rational domination_slack(int k, const FlowVector& alpha, int m);

// n * sum x_i y_i >= (sum x_i)(sum y_i) for same-length sequences that are
// monotone in the same direction.  Returns the truth of the inequality;
// throws if the ordering hypothesis fails.
bool chebyshev_sum_holds(const std::vector<Rational>& x,
                         const std::vector<Rational>& y);

// The weight ladder used in the slack proof: `head` copies of the top
// value, then an interleaved descent ending in 1 and kappa:
//   v_{head+tail} = kappa, v_{head+tail-1} = 1, v_i = v_{i+2} + 1 below,
//   constant before position `head`.  The closed-form sum is
//   ((tail+1)/2)(kappa + head + (tail-1)/2)      for odd tail,
//   (tail/2 + head)(tail/2 + kappa)              for even tail.
struct LadderSequence {
  std::vector<Rational> values;
  Rational closed_form_sum;
};

LadderSequence ladder_sequence(int head, int tail, const Rational& kappa);

// Head-weighted comparison against the positive part: under either
// hypothesis below, sum_{i<=n} v_i alpha_i >= sum_{i<=m} alpha_i for
// nonnegative non-increasing weights v of length n and an anchor m with
// alpha_m >= 0 >= alpha_{m+1}.
//   m < n:  (1/m) sum_{i<=m} (v_i - 1) >= (1/(d-m)) sum_{i=m+1}^{n} v_i
//   m >= n: v_i >= 1 for i <= n-1  and  sum v_i >= m.
struct HeadWeightCheck {
  bool hypotheses = false;
  bool conclusion = false;
  bool consistent() const { return !hypotheses || conclusion; }
};

HeadWeightCheck head_weight_inequality(const std::vector<Rational>& weights,
                                       int m, const FlowVector& alpha);

// Everything the CLI reports for one flow.
struct PerKBound {
  int k = 0;
  int m = 0;           // m_k of the reduced side min(k, d-k)
  Rational slope;      // C_k
  Rational bound;
  CosetClass witness;  // crossing-edge coset attaining the bound
};

struct PhiAllInfo {
  int m = 0;
  Rational z_first;
  Rational z_last;
};

struct BoundReport {
  FlowVector flow;
  Rational total;
  Rational borel;
  Rational whole_cusp;
  std::vector<PerKBound> per_k;
  std::optional<PhiAllInfo> phi_all;  // absent for d = 2
  bool degenerate = false;
};

BoundReport compute_bound_report(const FlowVector& alpha);

}  // namespace cusp

#endif  // CUSPBOUND_BOUNDS_HPP
