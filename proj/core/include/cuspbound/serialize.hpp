#ifndef CUSPBOUND_SERIALIZE_HPP
#define CUSPBOUND_SERIALIZE_HPP

// Output formats.  Rationals are always serialized as exact "p/q" strings
// (plain "p" for integers); permutations as 1-based one-line words like
// "3,4,1,2".  JSON uses insertion-ordered keys so output is byte-stable.

#include <json.hpp>

#include <string>

#include "cuspbound/bounds.hpp"
#include "cuspbound/hull.hpp"
#include "cuspbound/oracle.hpp"

namespace cusp {

using Json = nlohmann::ordered_json;

Json flow_to_json(const FlowVector& alpha);
Json report_to_json(const BoundReport& report);
Json hull_to_json(const HullBoundary& boundary, const CrossingResult& crossing);
Json verification_to_json(const VerificationReport& report);

// Per-k rows only: "k,m_k,C_k,bound,witness" (witness quoted).
std::string report_to_csv(const BoundReport& report);

// One row per vertex, left to right: "s,psi,h,slope,d_s" where slope and
// d_s describe the edge leaving the vertex (empty on the last row).
std::string hull_to_csv(const HullBoundary& boundary);

std::string report_to_table(const BoundReport& report);
std::string hull_to_table(const HullBoundary& boundary,
                          const CrossingResult& crossing);
std::string verification_to_table(const VerificationReport& report);

// Standalone picture of the upper boundary with the psi = 0 axis and the
// crossing point marked; coordinates are exact decimals rounded for
// display only.
std::string hull_to_svg(const HullBoundary& boundary,
                        const CrossingResult& crossing);

}  // namespace cusp

#endif  // CUSPBOUND_SERIALIZE_HPP
