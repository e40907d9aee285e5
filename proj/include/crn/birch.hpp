#ifndef CRN_BIRCH_HPP
#define CRN_BIRCH_HPP

#include <string>
#include <vector>

#include "crn/errors.hpp"
#include "crn/network.hpp"

namespace crn {

/// E(c) = sum_i (c_i log c_i - c_i log c*_i - c_i + c*_i), extended by
/// x log x -> 0 at c_i = 0. Throws InvalidArgument on negative entries.
double transformed_entropy(const std::vector<double>& c, const std::vector<double>& c_star);

struct BirchResiduals {
    double affine = 0;        // ||off-S component of c* - c0||
    double orthogonality = 0; // ||S-projection of log(c*/c_hat)||
    double steady = 0;        // ||Psi(c*) A_kappa||
};

struct BirchPoint {
    std::vector<double> c_star;
    BirchResiduals residuals;
    int iterations = 0;
    bool converged = false;
};

struct BirchOptions {
    double gradient_tol = 1e-10;
    double residual_tol = 1e-8;
    int max_iterations = 200;
};

/// Carries the best iterate when the solver runs out of iterations.
class MaxIterationsError : public Error {
public:
    MaxIterationsError(const std::string& msg, BirchPoint best_iterate)
        : Error(msg), best(std::move(best_iterate)) {}
    BirchPoint best;
};

/// The unique positive steady state in (c0 + S), by damped Newton descent of
/// the strictly convex objective g(c) = sum(c_i log(c_i/c_hat_i) - c_i +
/// c_hat_i) in S-coordinates. Throws NotComplexBalancing when no positive
/// balanced state exists for the rates.
BirchPoint birch_point(const ReactionNetwork& net, const RateAssignment& rates,
                       const std::vector<double>& c0, const BirchOptions& opts = {});

} // namespace crn

#endif
