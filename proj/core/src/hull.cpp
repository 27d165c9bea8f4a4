#include "cuspbound/hull.hpp"

#include <stdexcept>

namespace cusp {

namespace {

void require_small_side(int k, int d) {
  if (d < 2 || k < 1 || 2 * k > d) {
    throw std::invalid_argument("extremal path requires 1 <= k and 2k <= d");
  }
}

// 1-based first-block values of tau^s (2k <= d, 1 <= s <= d).
std::vector<int> first_block(int k, int d, int s) {
  std::vector<int> fb(k);
  if (s <= k) {
    for (int j = 1; j <= k; ++j) {
      fb[j - 1] = j <= k - s + 1 ? j : fb[j - 2] + 2;
    }
  } else if (s <= d - k) {
    for (int j = 1; j <= k; ++j) fb[j - 1] = (s - k - 1) + 2 * j;
  } else {
    const int s3 = s - (d - k);
    for (int j = k; j >= 1; --j) {
      fb[j - 1] = j > k - s3 ? d - k + j : fb[j] - 2;
    }
  }
  return fb;
}

Permutation word_from_first_block(const std::vector<int>& fb, int d) {
  const int k = static_cast<int>(fb.size());
  std::vector<bool> used(d, false);
  std::vector<int> images;
  images.reserve(d);
  for (int v : fb) {
    images.push_back(v - 1);
    used[v - 1] = true;
  }
  for (int v = 0; v < d; ++v) {
    if (!used[v]) images.push_back(v);
  }
  (void)k;
  return Permutation(std::move(images));
}

}  // namespace

PlanePoint hull_point(int k, const FlowVector& alpha, const Permutation& w) {
  const std::vector<Rational> beta = apply_weyl(alpha, w);
  const auto parabolic = BlockComposition::maximal(k, alpha.dimension());
  return PlanePoint{psi_k(k, beta),
                    parabolic_entropy_split(parabolic, beta).total()};
}

std::vector<Permutation> extremal_sequence(int k, int d) {
  require_small_side(k, d);
  std::vector<Permutation> path;
  path.reserve(d);
  for (int s = 1; s <= d; ++s) {
    path.push_back(word_from_first_block(first_block(k, d, s), d));
  }
  return path;
}

std::vector<int> step_positions(int k, int d, int s) {
  require_small_side(k, d);
  if (s < 1 || s > d - 1) {
    throw std::invalid_argument("step index must satisfy 1 <= s <= d-1");
  }
  int lo = 1, hi = k;
  if (s <= k) {
    lo = k - s + 1;
  } else if (s > d - k) {
    hi = d - s;
  }
  std::vector<int> positions;
  for (int j = lo; j <= hi; ++j) positions.push_back(j);
  return positions;
}

std::vector<Permutation> extremal_sequence_inductive(int k, int d) {
  require_small_side(k, d);
  std::vector<Permutation> path{Permutation::identity(d)};
  for (int s = 1; s <= d - 1; ++s) {
    const Permutation& tau = path.back();
    // The swapped value pairs (n, n+1) are two apart in n, so the value
    // transpositions commute and may be applied in any order.
    std::vector<int> values;
    for (int j : step_positions(k, d, s)) values.push_back(tau[j - 1] + 1);
    Permutation next = tau;
    for (int n : values) next = transpose_values(next, n);
    path.push_back(std::move(next));
  }
  return path;
}

SlopeBudget slope_budget(int k, const FlowVector& alpha, int s) {
  const int d = alpha.dimension();
  SlopeBudget budget;
  budget.positions = step_positions(k, d, s);
  Rational gap_sum(0);
  for (int j : budget.positions) {
    const int n = s + 2 * j - k - 1;
    budget.value_indices.push_back(n);
    gap_sum += alpha.entry(n - 1) - alpha.entry(n);
  }
  budget.width = ratio(d, static_cast<long>(k) * (d - k)) * gap_sum;
  return budget;
}

Permutation reflect_word(int k, const Permutation& w) {
  const int d = w.size();
  if (k < 1 || k >= d) {
    throw std::invalid_argument("reflect_word requires 1 <= k < d");
  }
  std::vector<int> images;
  images.reserve(d);
  for (int j = k; j < d; ++j) images.push_back(w[j]);
  for (int j = 0; j < k; ++j) images.push_back(w[j]);
  return Permutation(std::move(images));
}

HullBoundary upper_boundary(int k, const FlowVector& alpha) {
  const int d = alpha.dimension();
  if (k < 1 || k >= d) {
    throw std::invalid_argument("upper_boundary requires 1 <= k < d");
  }

  if (2 * k > d) {
    // Mirror problem for the complementary block size; the affine map
    // (x, y) -> (-x, y - k(d-k) x) carries its upper boundary to ours,
    // reversing left and right and sending edge step s to d - s.
    const int kr = d - k;
    const HullBoundary base = upper_boundary(kr, alpha);
    const Rational scale = Rational(static_cast<long>(k) * (d - k));
    const auto parabolic = BlockComposition::maximal(k, d);

    HullBoundary out{k, alpha, {}, {}, {}};
    const int r = static_cast<int>(base.vertices.size());
    for (int i = r - 1; i >= 0; --i) {
      const HullVertex& v = base.vertices[i];
      // Largest path step merged into base vertex i.
      const int hi = i == 0 ? d : base.vertices[i - 1].step - 1;
      out.vertices.push_back(HullVertex{
          PlanePoint{-v.point.psi, v.point.h - scale * v.point.psi},
          d + 1 - hi,
          canonical_rep(parabolic, alpha, reflect_word(kr, v.witness.rep))});
    }
    for (int i = static_cast<int>(base.edges.size()) - 1; i >= 0; --i) {
      const HullEdge& e = base.edges[i];
      out.edges.push_back(HullEdge{scale - e.slope, d - e.step, e.width});
    }
    for (int s : base.collapsed_steps) out.collapsed_steps.push_back(d - s);
    std::sort(out.collapsed_steps.begin(), out.collapsed_steps.end());
    return out;
  }

  const std::vector<Permutation> path = extremal_sequence(k, d);
  std::vector<PlanePoint> points;
  points.reserve(d);
  for (const Permutation& tau : path) {
    points.push_back(hull_point(k, alpha, tau));
  }

  HullBoundary out{k, alpha, {}, {}, {}};
  const auto parabolic = BlockComposition::maximal(k, d);
  // Walk from tau^d (leftmost) to tau^1 (rightmost), merging runs of
  // coinciding points; a run is a single coset, so any member witnesses it.
  int hi = d;
  while (hi >= 1) {
    int lo = hi;
    while (lo > 1 && points[lo - 2] == points[hi - 1]) --lo;
    HullVertex vertex{points[lo - 1], lo,
                      canonical_rep(parabolic, alpha, path[lo - 1])};
    if (!out.vertices.empty()) {
      // The previous (left) run starts at tau^{hi+1}, this one ends at
      // tau^hi, so the surviving edge between them is edge hi.
      const PlanePoint& prev = out.vertices.back().point;
      HullEdge edge;
      edge.step = hi;
      edge.width = vertex.point.psi - prev.psi;
      edge.slope = (vertex.point.h - prev.h) / edge.width;
      out.edges.push_back(std::move(edge));
    }
    for (int s = lo; s < hi; ++s) out.collapsed_steps.push_back(s);
    out.vertices.push_back(std::move(vertex));
    hi = lo - 1;
  }
  std::sort(out.collapsed_steps.begin(), out.collapsed_steps.end());
  return out;
}

CrossingResult crossing_edge(const HullBoundary& boundary) {
  const auto& vertices = boundary.vertices;
  if (vertices.empty()) {
    throw std::invalid_argument("empty hull boundary");
  }
  CrossingResult result;
  if (vertices.size() == 1) {
    result.f = vertices.front().point.h;
    result.c_lo = 0;
    result.c_hi = 0;
    result.vertex_hit = vertices.front().witness;
    result.degenerate = true;
    return result;
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].point.psi == 0) {
      // Interior vertex: the supporting slopes sweep between the two
      // adjacent edges (right edge is the shallower one).
      result.f = vertices[i].point.h;
      result.c_lo = boundary.edges[i].slope;
      result.c_hi = boundary.edges[i - 1].slope;
      result.vertex_hit = vertices[i].witness;
      return result;
    }
    if (vertices[i].point.psi > 0) {
      const HullEdge& edge = boundary.edges[i - 1];
      const PlanePoint& left = vertices[i - 1].point;
      result.f = left.h - edge.slope * left.psi;
      result.c_lo = edge.slope;
      result.c_hi = edge.slope;
      return result;
    }
  }
  throw std::logic_error("upper boundary does not cross psi = 0");
}

}  // namespace cusp
