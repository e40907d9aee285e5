#ifndef CRN_JSON_IO_HPP
#define CRN_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "crn/balancing.hpp"
#include "crn/birch.hpp"
#include "crn/cayley.hpp"
#include "crn/dynamics.hpp"
#include "crn/network.hpp"
#include "crn/structure.hpp"
#include "crn/tree_constants.hpp"

namespace crn {

using Json = nlohmann::ordered_json;

/// Keys: species, complexes, edges, linkage_classes, l, sigma, delta,
/// weakly_reversible. Indices 1-based.
Json structural_report_json(const ReactionNetwork& net, const StructuralReport& rep);

/// Array of {index, linkage_class, value, monomial_count?}; counts included
/// when every class is within the enumeration guard.
Json tree_constants_json(const ReactionNetwork& net, const TreeConstants& tc);

/// {balanced, kernel_dim, violated_binomial?: {u_plus, u_minus, lhs, rhs}}.
Json complex_balancing_json(const ModuliResult& res);

/// {detailed_balancing, violated_circuit?: {pairs, exponents, product}}.
Json detailed_balancing_json(const DetailedBalanceResult& res);

/// {c_star, residuals: {affine, orthogonality, steady}, iterations}.
Json birch_json(const BirchPoint& bp);

/// CSV columns: t, c_1..c_s, E, conservation_drift, boundary_distance,
/// dist_to_birch.
std::string trajectory_csv(const ReactionNetwork& net, const Trajectory& traj);

} // namespace crn

#endif
