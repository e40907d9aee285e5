#ifndef CRN_CAYLEY_HPP
#define CRN_CAYLEY_HPP

#include <vector>

#include "crn/exact_linalg.hpp"
#include "crn/network.hpp"
#include "crn/tree_constants.hpp"

namespace crn {

/// (s+l) x n integer matrix: per-class Y blocks side by side over 0/1 class
/// indicator rows. Columns are complexes grouped by linkage class; the
/// permutation from complex index to column is recorded.
struct CayleyMatrix {
    ZMat grouped;                      // (s+l) x n, class-grouped columns
    std::vector<int> complex_of_column;
    std::vector<int> column_of_complex;
    int s = 0;
    int l = 0;
    int n = 0;

    /// Same matrix with columns in complex order.
    ZMat in_complex_order() const;
};

CayleyMatrix cayley_matrix(const ReactionNetwork& net);

/// Primitive integer basis (in complex index space) of the kernel of the
/// Cayley matrix; spans a finite-index sublattice of the full kernel
/// lattice. Size equals the deficiency.
std::vector<ZVec> integer_kernel_basis(const CayleyMatrix& cay);

/// True iff the binomial K^{u+} - K^{u-} encoded by u lies in the moduli
/// ideal, i.e. Cay * u = 0 exactly.
bool binomial_in_moduli(const ReactionNetwork& net, const ZVec& u);

struct ModuliResult {
    bool balanced = false;
    bool weakly_reversible = false;
    int kernel_dim = 0;
    std::vector<ZVec> basis; // checked binomial exponents
    bool has_witness = false;
    ZVec violated; // first basis vector with K^{u+} != K^{u-}
    Rational lhs;
    Rational rhs;
};

/// Exact complex-balancing decision: evaluates every kernel-basis binomial
/// on the tree constants K. A non-weakly-reversible network is never
/// balanced.
ModuliResult moduli_membership_exact(const ReactionNetwork& net, const RateAssignment& rates);

/// K^{u+} and K^{u-} for an exponent vector u over the complexes.
std::pair<Rational, Rational> binomial_value(const QVec& tree_constants, const ZVec& u);

} // namespace crn

#endif
