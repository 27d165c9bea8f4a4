#include "cuspbound/oracle.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace cusp {

namespace {

// C * psi_k as a functional on the full coordinate space.
LinearFunctional psi_functional(int k, int d, const Rational& scale) {
  std::vector<Rational> coefficients(d);
  for (int i = 0; i < d; ++i) {
    coefficients[i] = i < k ? Rational(scale / k) : Rational(-scale / (d - k));
  }
  return LinearFunctional(std::move(coefficients));
}

long binomial(int n, int k) {
  long value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

std::string blocks_string(const BlockComposition& comp) {
  std::string out = "(";
  for (int i = 0; i < comp.block_count(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(comp.blocks()[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<BlockComposition> enumerate_parabolics(int d, bool proper_only,
                                                   int limit) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (d > limit) {
    throw std::invalid_argument("parabolic enumeration limited to d <= " +
                                std::to_string(limit));
  }
  std::vector<BlockComposition> out;
  std::vector<int> blocks;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      if (!(proper_only && blocks.size() < 2)) {
        out.emplace_back(blocks);
      }
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      blocks.push_back(first);
      extend(remaining - first);
      blocks.pop_back();
    }
  };
  extend(d);
  std::sort(out.begin(), out.end(),
            [](const BlockComposition& a, const BlockComposition& b) {
              if (a.block_count() != b.block_count()) {
                return a.block_count() < b.block_count();
              }
              return a.blocks() < b.blocks();
            });
  return out;
}

BruteMaxResult brute_max(const FlowVector& alpha, const LinearFunctional& phi,
                         const std::vector<BlockComposition>& parabolics,
                         int limit) {
  if (parabolics.empty()) {
    throw std::invalid_argument("brute_max needs at least one parabolic");
  }
  std::optional<BruteMaxResult> best;
  for (const BlockComposition& parabolic : parabolics) {
    for (const CosetClass& coset : enumerate_cosets(parabolic, alpha, limit)) {
      Rational value = h_minus_phi(parabolic, alpha, coset.rep, phi);
      if (!best || value > best->value) {
        best = BruteMaxResult{std::move(value), coset};
      }
    }
  }
  return *best;
}

HullBoundary brute_upper_hull(int k, const FlowVector& alpha, int limit) {
  const int d = alpha.dimension();
  if (k < 1 || k >= d) {
    throw std::invalid_argument("brute_upper_hull requires 1 <= k < d");
  }
  if (d > limit) {
    throw std::invalid_argument("hull enumeration limited to d <= " +
                                std::to_string(limit));
  }
  const auto parabolic = BlockComposition::maximal(k, d);

  // Every permutation's image point, keeping the smallest witnessing coset.
  std::map<std::pair<Rational, Rational>, CosetClass> cloud;
  for_each_permutation(d, [&](const std::vector<int>& word) {
    const Permutation w(word);
    const PlanePoint p = hull_point(k, alpha, w);
    const CosetClass coset = canonical_rep(parabolic, alpha, w);
    auto [it, inserted] = cloud.try_emplace({p.psi, p.h}, coset);
    if (!inserted && coset < it->second) it->second = coset;
  });

  // Topmost point per psi (the map is ordered by psi, then h).
  std::vector<std::pair<PlanePoint, CosetClass>> tops;
  for (const auto& [key, coset] : cloud) {
    const PlanePoint p{key.first, key.second};
    if (!tops.empty() && tops.back().first.psi == p.psi) {
      tops.back() = {p, coset};
    } else {
      tops.emplace_back(p, coset);
    }
  }

  // Monotone chain, dropping collinear interior points: slopes must
  // strictly decrease from left to right.
  std::vector<std::pair<PlanePoint, CosetClass>> chain;
  for (const auto& entry : tops) {
    while (chain.size() >= 2) {
      const PlanePoint& a = chain[chain.size() - 2].first;
      const PlanePoint& b = chain[chain.size() - 1].first;
      const PlanePoint& c = entry.first;
      const Rational cross = (b.psi - a.psi) * (c.h - b.h) -
                             (b.h - a.h) * (c.psi - b.psi);
      if (cross >= 0) {
        chain.pop_back();
      } else {
        break;
      }
    }
    chain.push_back(entry);
  }

  HullBoundary out{k, alpha, {}, {}, {}};
  for (const auto& [point, coset] : chain) {
    out.vertices.push_back(HullVertex{point, 0, coset});
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    HullEdge edge;
    edge.width = chain[i + 1].first.psi - chain[i].first.psi;
    edge.slope = (chain[i + 1].first.h - chain[i].first.h) / edge.width;
    const Rational step = edge.slope * d / (static_cast<long>(k) * (d - k));
    if (is_integer(step) && step >= 1 && step <= d - 1) {
      edge.step = static_cast<int>(step.get_num().get_si());
    }
    out.edges.push_back(std::move(edge));
  }
  return out;
}

FlowVector random_flow(int d, std::uint64_t seed, int max_numerator,
                       int max_denominator) {
  if (d < 2 || max_numerator < 1 || max_denominator < 1) {
    throw std::invalid_argument(
        "random_flow requires d >= 2 and positive bounds");
  }
  // Plain modulo reduction keeps the stream identical across platforms;
  // the slight bias is irrelevant here.
  std::mt19937_64 rng(seed);
  std::vector<Rational> raw;
  raw.reserve(d);
  for (int i = 0; i < d; ++i) {
    const long num = -max_numerator +
                     static_cast<long>(rng() % (2 * max_numerator + 1ULL));
    const long den = 1 + static_cast<long>(rng() % max_denominator);
    raw.push_back(ratio(num, den));
  }
  return FlowVector::from_raw(std::move(raw), /*project_to_zero_sum=*/true);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

VerificationReport verify_all(const FlowVector& alpha, int permutation_limit,
                              int parabolic_limit) {
  const int d = alpha.dimension();
  VerificationReport report{alpha, {}, false, alpha.is_zero()};
  auto add = [&](std::string name, std::string expected, std::string actual,
                 bool pass) {
    report.checks.push_back(CheckResult{std::move(name), std::move(expected),
                                        std::move(actual), pass});
  };
  auto add_rational = [&](std::string name, const Rational& expected,
                          const Rational& actual) {
    add(std::move(name), format_rational(expected), format_rational(actual),
        expected == actual);
  };

  // Every Borel chamber carries half the total entropy.
  {
    const Rational half = borel_bound(alpha);
    const LinearFunctional rho = borel_functional(d);
    bool pass = true;
    Rational bad;
    for (const CosetClass& coset :
         enumerate_cosets(BlockComposition::borel(d), alpha,
                          permutation_limit)) {
      const Rational value = h_minus_phi(coset.parabolic, alpha, coset.rep, rho);
      if (value != half) {
        pass = false;
        bad = value;
        break;
      }
    }
    add("borel_half_entropy", format_rational(half),
        pass ? format_rational(half) : format_rational(bad), pass);
  }

  std::vector<Rational> bounds(d);
  for (int k = 1; k < d; ++k) bounds[k] = maximal_parabolic_bound(k, alpha);

  // Closed form == hull crossing == coset brute force, with the certifying
  // slope inside the crossing interval.
  for (int k = 1; k < d; ++k) {
    const CrossingResult crossing = crossing_edge(upper_boundary(k, alpha));
    const Rational ck = slope_choice(k, alpha);
    const BruteMaxResult brute =
        brute_max(alpha, psi_functional(k, d, ck),
                  {BlockComposition::maximal(k, d)}, permutation_limit);
    // A single-point hull (zero flow) is supported by every slope.
    const bool slope_ok =
        crossing.degenerate || (crossing.c_lo <= ck && ck <= crossing.c_hi);
    const bool pass =
        bounds[k] == crossing.f && bounds[k] == brute.value && slope_ok;
    add("three_way_bound[k=" + std::to_string(k) + "]",
        format_rational(bounds[k]),
        pass ? format_rational(bounds[k])
             : "f=" + format_rational(crossing.f) +
                   " brute=" + format_rational(brute.value) +
                   " C=" + format_rational(ck),
        pass);
  }

  for (int k = 1; 2 * k < d; ++k) {
    add_rational("bound_symmetry[k=" + std::to_string(k) + "]", bounds[k],
                 bounds[d - k]);
  }

  {
    bool pass = true;
    std::string seq;
    for (int k = 1; 2 * k <= d; ++k) {
      if (k > 1) {
        pass = pass && bounds[k] <= bounds[k - 1];
        seq += " >= ";
      }
      seq += format_rational(bounds[k]);
    }
    add("bound_monotone", "non-increasing for k <= d/2", seq, pass);
  }

  add_rational("whole_cusp_equals_k1", whole_cusp_bound(alpha), bounds[1]);

  if (alpha.is_zero()) {
    add("m1_positive_count", "degenerate", "degenerate", true);
  } else {
    int positives = 0;
    for (const Rational& x : alpha.entries()) {
      if (x > 0) ++positives;
    }
    const int m1 = compute_m_k(1, alpha);
    add("m1_positive_count", std::to_string(positives), std::to_string(m1),
        positives == m1);
  }

  for (int k = 1; k < d; ++k) {
    const HullBoundary fast = upper_boundary(k, alpha);
    const HullBoundary brute = brute_upper_hull(k, alpha, permutation_limit);
    bool pass = fast.vertices.size() == brute.vertices.size() &&
                fast.edges.size() == brute.edges.size();
    for (size_t i = 0; pass && i < fast.vertices.size(); ++i) {
      pass = fast.vertices[i].point == brute.vertices[i].point;
    }
    for (size_t i = 0; pass && i < fast.edges.size(); ++i) {
      pass = fast.edges[i].slope == brute.edges[i].slope &&
             fast.edges[i].width == brute.edges[i].width &&
             fast.edges[i].step == brute.edges[i].step;
    }
    add("hull_matches_brute[k=" + std::to_string(k) + "]", "identical boundary",
        pass ? "identical boundary" : "mismatch", pass);
  }

  if (d == 2) {
    add("phi_all_domination", "skipped (d=2)", "skipped (d=2)", true);
  } else {
    const LinearFunctional phi = phi_all(alpha);
    const auto parabolics = enumerate_parabolics(d, true, parabolic_limit);
    std::map<BlockComposition, Rational> comp_max;
    std::optional<Rational> best;
    std::optional<BlockComposition> best_comp;
    for (const BlockComposition& comp : parabolics) {
      std::optional<Rational> local;
      for (const CosetClass& coset :
           enumerate_cosets(comp, alpha, permutation_limit)) {
        Rational value = h_minus_phi(comp, alpha, coset.rep, phi);
        if (!local || value > *local) local = std::move(value);
      }
      comp_max.emplace(comp, *local);
      if (!best || *local > *best) {
        best = *local;
        best_comp = comp;
      }
    }
    const Rational expected = whole_cusp_bound(alpha);
    const bool pass = *best == expected && best_comp->block_count() == 2;
    add("phi_all_domination", format_rational(expected),
        format_rational(*best) + " at " + blocks_string(*best_comp), pass);

    bool cert_pass = true;
    std::string detail = "all certified";
    for (const BlockComposition& comp : parabolics) {
      if (comp.block_count() < 3) continue;
      const Domination dom = dominating_maximal_parabolic(comp, phi);
      if (!dom.certified ||
          comp_max.at(comp) > comp_max.at(dom.parabolic)) {
        cert_pass = false;
        detail = "failed at " + blocks_string(comp);
        break;
      }
    }
    add("domination_certificates", "all certified", detail, cert_pass);
  }

  for (int k = 1; k < d; ++k) {
    const auto parabolic = BlockComposition::maximal(k, d);
    bool pass = true;
    for (const CosetClass& coset :
         enumerate_cosets(parabolic, alpha, permutation_limit)) {
      for (int n = 1; n < d && pass; ++n) {
        int pos_n = -1, pos_n1 = -1;
        for (int i = 0; i < d; ++i) {
          if (coset.rep[i] == n - 1) pos_n = i;
          if (coset.rep[i] == n) pos_n1 = i;
        }
        if ((pos_n < k) == (pos_n1 < k)) continue;  // same block: no swap
        const TranspositionDelta delta =
            transposition_delta(k, coset, alpha, n);
        const Permutation oriented =
            pos_n < k ? coset.rep : transpose_values(coset.rep, n);
        const Permutation swapped = transpose_values(oriented, n);
        const PlanePoint favored = hull_point(k, alpha, oriented);
        const PlanePoint other = hull_point(k, alpha, swapped);
        pass = delta.delta_h == favored.h - other.h &&
               delta.delta_psi == favored.psi - other.psi &&
               oriented[delta.j - 1] == n - 1 &&
               oriented[delta.j_prime - 1] == n;
      }
      if (!pass) break;
    }
    add("transposition_delta[k=" + std::to_string(k) + "]",
        "closed form = direct", pass ? "closed form = direct" : "mismatch",
        pass);
  }

  for (int k = 1; 2 * k <= d; ++k) {
    const HullBoundary boundary = upper_boundary(k, alpha);
    std::map<int, Rational> widths;
    for (const HullEdge& edge : boundary.edges) {
      widths.emplace(edge.step, edge.width);
    }
    bool pass = true;
    for (int s = 1; s <= d - 1 && pass; ++s) {
      const SlopeBudget budget = slope_budget(k, alpha, s);
      const auto it = widths.find(s);
      pass = it != widths.end() ? budget.width == it->second
                                : budget.width == 0;
    }
    add("slope_budget[k=" + std::to_string(k) + "]", "widths match budgets",
        pass ? "widths match budgets" : "mismatch", pass);
  }

  for (int k = d / 2 + 1; k < d; ++k) {
    const int kr = d - k;
    const auto parabolic = BlockComposition::maximal(k, d);
    const auto mirror = BlockComposition::maximal(kr, d);
    const Rational area(static_cast<long>(k) * kr);
    const Rational ck = slope_choice(k, alpha);
    const Rational ckr = slope_choice(kr, alpha);
    bool pass = true;
    for (const CosetClass& coset :
         enumerate_cosets(parabolic, alpha, permutation_limit)) {
      const Permutation& w = coset.rep;
      const Permutation wr = reflect_word(k, w);
      const auto beta = apply_weyl(alpha, w);
      const auto beta_r = apply_weyl(alpha, wr);
      const Rational psi = psi_k(k, beta);
      const Rational psi_r = psi_k(kr, beta_r);
      const Rational h = parabolic_entropy_split(parabolic, beta).total();
      const Rational h_r = parabolic_entropy_split(mirror, beta_r).total();
      pass = psi == -psi_r && h == h_r - area * psi_r &&
             h - ck * psi == h_r - ckr * psi_r;
      if (!pass) break;
    }
    add("reflection[k=" + std::to_string(k) + "]", "mirror identities",
        pass ? "mirror identities" : "mismatch", pass);
  }

  if (d >= 4) {
    const auto [m_lo, m_hi] = phi_all_m_range(alpha);
    for (int k = 2; 2 * k <= d; ++k) {
      bool pass = true;
      for (int m = m_lo; m <= m_hi && pass; ++m) {
        pass = check_c_properties(d, k, m).all();
        if (!pass) break;
        const Rational slack = domination_slack(k, alpha, m);
        const long floor_c = floor_of(c_coefficient(d, k, m)).get_si();
        const Permutation tau =
            extremal_sequence(k, d)[static_cast<size_t>(floor_c)];
        const Rational direct =
            whole_cusp_bound(alpha) -
            h_minus_phi(BlockComposition::maximal(k, d), alpha, tau,
                        phi_all_for(d, m));
        pass = slack >= 0 && slack == direct;
      }
      add("slack[k=" + std::to_string(k) + "]",
          "nonnegative, matches direct difference",
          pass ? "nonnegative, matches direct difference" : "mismatch", pass);
    }
  }

  {
    int distinct = 1;
    for (int i = 1; i < d; ++i) {
      if (alpha.entry(i) < alpha.entry(i - 1)) ++distinct;
    }
    if (distinct < d) {
      add("coset_count", "skipped (tied entries)", "skipped (tied entries)",
          true);
    } else {
      bool pass = true;
      for (int k = 1; k < d && pass; ++k) {
        const auto classes = enumerate_cosets(BlockComposition::maximal(k, d),
                                              alpha, permutation_limit);
        pass = static_cast<long>(classes.size()) == binomial(d, k);
      }
      add("coset_count", "binomial(d,k) classes",
          pass ? "binomial(d,k) classes" : "mismatch", pass);
    }
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
  return report;
}

}  // namespace cusp
