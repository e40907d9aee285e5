#ifndef CRN_DYNAMICS_HPP
#define CRN_DYNAMICS_HPP

#include <string>
#include <vector>

#include "crn/network.hpp"

namespace crn {

/// Monomial vector Psi(c) = (c^{y_1}, ..., c^{y_n}), with 0^0 = 1.
std::vector<double> psi(const ReactionNetwork& net, const std::vector<double>& c);

/// dc/dt = Psi(c) . A_kappa . Y, evaluated as the dense matrix product.
std::vector<double> mass_action_rhs(const ReactionNetwork& net, const RateAssignment& rates,
                                    const std::vector<double>& c);

/// Psi(c) . A_kappa, the n complex-balance coordinates.
std::vector<double> complex_balance_residual(const ReactionNetwork& net,
                                             const RateAssignment& rates,
                                             const std::vector<double>& c);

/// Pairwise-binomial form for fully reversible networks:
/// sum over pairs (kappa_ij c^{y_i} - kappa_ji c^{y_j}) (y_j - y_i).
std::vector<double> pairwise_rhs(const ReactionNetwork& net, const RateAssignment& rates,
                                 const std::vector<double>& c);

/// Detailed-balancing normal form:
/// sum over pairs ((L*c)^{y_i} - (L*c)^{y_j}) (y_j - y_i).
std::vector<double> detailed_rhs(const ReactionNetwork& net, const std::vector<double>& L,
                                 const std::vector<double>& c);

/// Distance from c to the boundary of the nonnegative orthant's coordinate
/// faces: min_i c_i (clipped at 0).
double boundary_distance(const std::vector<double>& c);

enum class Method { RK4, RK45 };

enum class HaltReason { ReachedTEnd, Converged, StepCollapse, NonFinite, MaxSteps };

std::string halt_reason_name(HaltReason reason);

struct IntegratorConfig {
    Method method = Method::RK45;
    double dt = 1e-3;      // fixed step (RK4), initial step (RK45)
    double rel_tol = 1e-8; // RK45
    double abs_tol = 1e-10;
    double t_end = 10.0;
    long max_steps = 2000000;
    int monitor_stride = 1;        // record every k-th accepted step
    double convergence_tol = 0.0;  // halt at ||c - c*|| <= tol (0 = off)
};

struct MonitorSample {
    double entropy = 0;            // E(c, c*); NaN when no Birch point known
    double conservation_drift = 0; // ||off-S component of c - c0||
    double boundary_distance = 0;
    double distance_to_birch = 0;  // NaN when no Birch point known
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<MonitorSample> monitors;
    HaltReason halt = HaltReason::ReachedTEnd;
    bool has_birch = false;
    std::vector<double> birch; // reference c* used by the monitors
};

/// Integrates the mass-action system from c0. Monitors use the Birch point
/// of c0's compatibility class when the system is complex balancing (or the
/// caller-provided reference); otherwise the entropy and distance monitors
/// are NaN. Steps producing components below -1e-12 are rejected and halved;
/// states are clipped at 0 only for monitor evaluation.
Trajectory simulate(const ReactionNetwork& net, const RateAssignment& rates,
                    const std::vector<double>& c0, const IntegratorConfig& config,
                    const std::vector<double>* c_star = nullptr);

} // namespace crn

#endif
