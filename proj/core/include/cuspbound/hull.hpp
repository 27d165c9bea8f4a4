#ifndef CUSPBOUND_HULL_HPP
#define CUSPBOUND_HULL_HPP

// Planar convex-hull picture attached to a maximal parabolic (k, d-k).
// Every Weyl element w maps to the point (psi_k(a^w), h(P_k, a^w)).  The
// upper boundary of the convex hull of these d! points is a concave
// polyline traced by an explicit path of d permutations; consecutive path
// elements differ by a batch of commuting value swaps, which pins both the
// slope and the width of every edge.

#include <optional>
#include <vector>

#include "cuspbound/weyl.hpp"

namespace cusp {

struct PlanePoint {
  Rational psi;
  Rational h;
  bool operator==(const PlanePoint&) const = default;
};

// The hull coordinates of w: (psi_k, parabolic entropy) of a^w.
PlanePoint hull_point(int k, const FlowVector& alpha, const Permutation& w);

// Extremal path tau^1, ..., tau^d (index s-1 holds tau^s) whose images
// trace the upper boundary from right (tau^1 = identity, maximal psi) to
// left (tau^d, minimal psi).  Closed form; requires 2k <= d.
std::vector<Permutation> extremal_sequence(int k, int d);

// Same path built step by step: tau^{s+1} applies one value swap for every
// position in step_positions(k, d, s) to tau^s.  Used to cross-check the
// closed form.
std::vector<Permutation> extremal_sequence_inductive(int k, int d);

// 1-based first-block positions J_s rewritten at step s (2k <= d,
// 1 <= s <= d-1).
std::vector<int> step_positions(int k, int d, int s);

// Step s of the path in budget form: the positions J_s, the swapped value
// indices N_s = { s + 2j - k - 1 : j in J_s }, and the resulting psi-width
// (d / k(d-k)) * sum_{n in N_s} (alpha_n - alpha_{n+1}) of edge s.
struct SlopeBudget {
  std::vector<int> positions;
  std::vector<int> value_indices;
  Rational width;
};

SlopeBudget slope_budget(int k, const FlowVector& alpha, int s);

struct HullVertex {
  PlanePoint point;
  int step = 0;  // smallest s with image tau^s at this vertex
  CosetClass witness;
};

struct HullEdge {
  Rational slope;  // equals (k(d-k)/d) * step for the extremal path
  int step = 0;    // edge joins the images of tau^step and tau^{step+1}
  Rational width;  // psi-extent, strictly positive for surviving edges
};

// Upper boundary polyline.  Vertices run left to right with strictly
// increasing psi; edges[i] joins vertices[i] and vertices[i+1].  Path steps
// whose edge degenerates to a point (tied eigenvalues) are collapsed into
// the adjacent vertex and listed in collapsed_steps.
struct HullBoundary {
  int k = 0;
  FlowVector flow;
  std::vector<HullVertex> vertices;
  std::vector<HullEdge> edges;
  std::vector<int> collapsed_steps;
};

// Builds the boundary for any 1 <= k <= d-1; the case 2k > d is obtained
// from the mirror problem for d-k via the affine map
// (x, y) -> (-x, y - k(d-k) x), which swaps the two blocks.
HullBoundary upper_boundary(int k, const FlowVector& alpha);

// Word translation behind that mirror: moves the first k entries of w
// behind the remaining d-k, turning a (k, d-k) arrangement into the
// (d-k, k) arrangement with both blocks exchanged.
Permutation reflect_word(int k, const Permutation& w);

// Where the upper boundary crosses the axis psi = 0, together with the
// closed interval [c_lo, c_hi] of slopes c for which
// max_w (h - c psi) equals the crossing height f.  The interval is a
// single slope when the axis meets an edge interior, and spans the two
// adjacent edge slopes when it meets a vertex (vertex_hit set).  The zero
// flow collapses everything to (0, 0); degenerate is set and the interval
// is reported as [0, 0].
struct CrossingResult {
  Rational f;
  Rational c_lo;
  Rational c_hi;
  std::optional<CosetClass> vertex_hit;
  bool degenerate = false;
};

CrossingResult crossing_edge(const HullBoundary& boundary);

}  // namespace cusp

#endif  // CUSPBOUND_HULL_HPP
