#ifndef CRN_TREE_CONSTANTS_HPP
#define CRN_TREE_CONSTANTS_HPP

#include <vector>

#include "crn/network.hpp"
#include "crn/structure.hpp"

namespace crn {

/// Per-complex spanning-tree constants K_i. A zero value flags a complex
/// unreachable within a non-strongly-connected linkage class.
struct TreeConstants {
    QVec values;                                // length n, exact
    std::vector<int> linkage_class_of;          // length n
    std::vector<char> class_strongly_connected; // per class
    std::vector<double> approx() const;
};

/// Spanning tree of one linkage class with every edge directed toward a
/// unique sink.
struct ITree {
    std::vector<Edge> edges; // sorted by (from, to)
};

/// K_i as the signed (n_c-1)x(n_c-1) minor of the class Laplacian block,
/// deleting row i and column i. Exact; fraction-free elimination inside.
TreeConstants tree_constants_minor(const ReactionNetwork& net, const RateAssignment& rates);

/// Floating route: partially pivoted LU on the same minors.
std::vector<double> tree_constants_minor_fp(const ReactionNetwork& net,
                                            const RateAssignment& rates);

/// Exhaustive, duplicate-free enumeration of spanning i-trees of the sink's
/// linkage class. Throws GuardExceeded when the class has more than
/// `max_class_size` nodes.
std::vector<ITree> enumerate_i_trees(const ReactionNetwork& net, int sink,
                                     int max_class_size = 8);

/// K_i as the sum over enumerated i-trees of the product of edge rates.
TreeConstants tree_constants_enumerated(const ReactionNetwork& net,
                                        const RateAssignment& rates,
                                        int max_class_size = 8);

/// Number of spanning i-trees per complex (monomial count of K_i).
std::vector<std::size_t> itree_counts(const ReactionNetwork& net, int max_class_size = 8);

} // namespace crn

#endif
