#ifndef CRN_STRUCTURE_HPP
#define CRN_STRUCTURE_HPP

#include <utility>
#include <vector>

#include "crn/exact_linalg.hpp"
#include "crn/network.hpp"

namespace crn {

struct StructuralReport {
    std::vector<std::vector<int>> linkage_classes; // sorted members, classes by min member
    int l = 0;
    bool weakly_reversible = false;
    std::vector<char> class_strongly_connected; // per linkage class
    int sigma = 0;
    int delta = 0;
    std::vector<ZVec> stoich_basis; // primitive integer basis of S
};

/// Connected components of the underlying undirected graph.
std::vector<std::vector<int>> linkage_classes(const ReactionNetwork& net);

/// Index of each complex's linkage class, aligned with linkage_classes().
std::vector<int> linkage_class_of(const ReactionNetwork& net);

/// Tarjan SCCs of the directed graph, each sorted, ordered by min member.
std::vector<std::vector<int>> strongly_connected_components(const ReactionNetwork& net);

/// True iff every linkage class is strongly connected. Per-class flags
/// through `per_class` when non-null.
bool is_weakly_reversible(const ReactionNetwork& net, std::vector<char>* per_class = nullptr);

/// Primitive integer basis of S = span{y_j - y_i : (i,j) in E} and sigma.
std::pair<std::vector<ZVec>, int> stoichiometric_subspace(const ReactionNetwork& net);

int deficiency(const ReactionNetwork& net);

StructuralReport analyze_structure(const ReactionNetwork& net);

/// A_kappa: off-diagonal (i,j) = kappa_ij for (i,j) in E, rows sum to zero.
QMat laplacian_exact(const ReactionNetwork& net, const RateAssignment& rates);
std::vector<std::vector<double>> laplacian(const ReactionNetwork& net,
                                           const RateAssignment& rates);

} // namespace crn

#endif
