#ifndef CRN_STRATA_HPP
#define CRN_STRATA_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "crn/balancing.hpp"
#include "crn/dynamics.hpp"
#include "crn/network.hpp"

namespace crn {

/// One direction chosen per reversible pair, with a topological order of the
/// complexes certifying acyclicity.
struct AcyclicOrientation {
    std::vector<int> direction; // per pair: 0 = as stored (i,j), 1 = reversed
    std::vector<int> topo_order;
    /// Oriented edges (a, b), meaning (L*c)^{y_a} > (L*c)^{y_b} on the stratum.
    std::vector<std::pair<int, int>> oriented_edges(const ReversiblePairing& rp) const;
};

/// All acyclic orientations of the reversible-pair graph, in mask order.
/// Throws GuardExceeded when the pair count exceeds `max_pairs`.
std::vector<AcyclicOrientation> acyclic_orientations(const ReactionNetwork& net,
                                                     const ReversiblePairing& rp,
                                                     int max_pairs = 20);

struct StratumResult {
    std::vector<int> direction;  // per pair, ties resolved toward 0
    std::vector<int> tied_pairs; // indices of pairs on the stratum boundary
    bool on_boundary = false;
};

/// Classifies c by the strict monomial inequalities (L*c)^{y_i} vs
/// (L*c)^{y_j}; ties within `rel_tol` relative are reported as boundary.
StratumResult stratum_of(const ReactionNetwork& net, const ReversiblePairing& rp,
                         const std::vector<double>& L, const std::vector<double>& c,
                         double rel_tol = 1e-12);

/// Exact Farkas certificate for one (orientation, face) pair: alpha >= 1 on
/// the face's index set I with (y_b - y_a)|_I . alpha >= 0 per oriented
/// edge, or the dual combination lambda >= 0 whose vector v = sum lambda
/// (y_b - y_a) has supp(v+) disjoint from I and supp(v-) meeting I.
struct FarkasCertificate {
    std::vector<int> face; // I, 0-based species indices, sorted
    std::vector<int> direction;
    bool feasible = false;
    QVec alpha;      // over I, each >= 1
    QVec alpha_full; // embedded in R^s with zeros off I
    QVec slacks;     // per oriented edge, each >= 0
    QVec dual;       // lambda over oriented edges when infeasible
    QVec dual_v;     // v = sum lambda_e (y_b - y_a)
};

FarkasCertificate farkas_vector(const ReactionNetwork& net, const ReversiblePairing& rp,
                                const std::vector<int>& direction,
                                const std::vector<int>& face);

struct DescentReport {
    double min_inner_product = 0; // over samples with a feasible certificate
    std::size_t samples_used = 0;
    std::size_t samples_skipped = 0; // stratum without feasible certificate
    std::map<std::vector<int>, FarkasCertificate> certificates; // by direction
};

/// Evaluates <alpha, detailed_rhs(c)> along the trajectory samples, using
/// the certificate of each sample's stratum closure for the given face.
DescentReport descent_check(const ReactionNetwork& net, const std::vector<double>& L,
                            const Trajectory& trajectory, const std::vector<int>& face);

} // namespace crn

#endif
