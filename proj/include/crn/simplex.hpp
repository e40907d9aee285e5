#ifndef CRN_SIMPLEX_HPP
#define CRN_SIMPLEX_HPP

#include "crn/rational.hpp"

namespace crn {

/// Exact feasibility of { x >= 0 : a x >= b } by phase-1 simplex with
/// Bland's rule. On success `x` is a feasible point; otherwise `farkas_dual`
/// is y >= 0 with y^T a <= 0 (componentwise) and y^T b > 0.
struct LPResult {
    bool feasible = false;
    QVec x;
    QVec farkas_dual;
};

LPResult lp_feasible_nonneg(const QMat& a, const QVec& b);

} // namespace crn

#endif
