#ifndef CRN_BALANCING_HPP
#define CRN_BALANCING_HPP

#include <utility>
#include <vector>

#include "crn/cayley.hpp"
#include "crn/network.hpp"

namespace crn {

/// Matching of directed edges into reversible pairs.
struct ReversiblePairing {
    /// One entry per reversible reaction, oriented as first encountered in
    /// the edge list: (i, j) stands for the pair {(i,j), (j,i)}.
    std::vector<std::pair<int, int>> pairs;
    std::vector<Edge> one_directional; // edges with no reverse
    bool fully_reversible() const { return one_directional.empty(); }
};

ReversiblePairing reversible_pairing(const ReactionNetwork& net);

struct DetailedBalanceResult {
    bool detailed_balancing = false;
    bool fully_reversible = false;
    std::vector<std::pair<int, int>> pairs;
    bool has_witness = false;
    ZVec circuit;     // exponents over pairs with prod (kf/kr)^lambda != 1
    Rational product; // the violating circuit product
};

/// Exact detailed-balancing decision: Wegscheider circuit conditions over an
/// integer basis of the left kernel of the pair reaction-vector matrix.
DetailedBalanceResult detailed_balancing_exact(const ReactionNetwork& net,
                                               const RateAssignment& rates);

/// A positive complex-balancing steady state c_hat: least-squares solution of
/// (y_j - y_i) . log c = log K_j - log K_i over all edges, minimum-norm in
/// log space. Throws NotComplexBalancing when the rates are not balancing or
/// the normalized residual exceeds `tol`.
std::vector<double> particular_steady_state(const ReactionNetwork& net,
                                            const RateAssignment& rates,
                                            double tol = 1e-9);

/// L = componentwise reciprocal of the Birch point for c0. Requires detailed
/// balancing.
std::vector<double> scaling_vector(const ReactionNetwork& net, const RateAssignment& rates,
                                   const std::vector<double>& c0);

} // namespace crn

#endif
