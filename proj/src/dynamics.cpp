#include "crn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crn/balancing.hpp"
#include "crn/birch.hpp"
#include "crn/errors.hpp"
#include "crn/structure.hpp"
#include "crn/subspace.hpp"

namespace crn {

namespace {

double ipow(double x, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= x;
    return r;
}

double monomial(const ComplexVec& y, const std::vector<double>& c) {
    double m = 1.0;
    for (std::size_t k = 0; k < y.size(); ++k) m *= ipow(c[k], y[k]);
    return m;
}

} // namespace

std::vector<double> psi(const ReactionNetwork& net, const std::vector<double>& c) {
    if (static_cast<int>(c.size()) != net.num_species())
        throw InvalidArgument("psi: dimension mismatch");
    std::vector<double> out(static_cast<std::size_t>(net.num_complexes()));
    for (int i = 0; i < net.num_complexes(); ++i)
        out[static_cast<std::size_t>(i)] = monomial(net.complexes[static_cast<std::size_t>(i)], c);
    return out;
}

std::vector<double> complex_balance_residual(const ReactionNetwork& net,
                                             const RateAssignment& rates,
                                             const std::vector<double>& c) {
    auto a = laplacian(net, rates);
    auto p = psi(net, c);
    const std::size_t n = p.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out[j] += p[i] * a[i][j];
    return out;
}

std::vector<double> mass_action_rhs(const ReactionNetwork& net, const RateAssignment& rates,
                                    const std::vector<double>& c) {
    std::vector<double> pa = complex_balance_residual(net, rates, c);
    const std::size_t s = static_cast<std::size_t>(net.num_species());
    std::vector<double> out(s, 0.0);
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t k = 0; k < s; ++k)
            out[k] += pa[i] * net.complexes[i][k];
    return out;
}

std::vector<double> pairwise_rhs(const ReactionNetwork& net, const RateAssignment& rates,
                                 const std::vector<double>& c) {
    ReversiblePairing rp = reversible_pairing(net);
    if (!rp.fully_reversible())
        throw InvalidArgument("pairwise form requires a fully reversible network");
    const std::size_t s = static_cast<std::size_t>(net.num_species());
    std::vector<double> out(s, 0.0);
    for (auto [i, j] : rp.pairs) {
        double kf = rates.by_edge[static_cast<std::size_t>(net.edge_index(i, j))].approx();
        double kr = rates.by_edge[static_cast<std::size_t>(net.edge_index(j, i))].approx();
        double flux = kf * monomial(net.complexes[static_cast<std::size_t>(i)], c) -
                      kr * monomial(net.complexes[static_cast<std::size_t>(j)], c);
        for (std::size_t k = 0; k < s; ++k)
            out[k] += flux * (net.complexes[static_cast<std::size_t>(j)][k] -
                              net.complexes[static_cast<std::size_t>(i)][k]);
    }
    return out;
}

std::vector<double> detailed_rhs(const ReactionNetwork& net, const std::vector<double>& L,
                                 const std::vector<double>& c) {
    ReversiblePairing rp = reversible_pairing(net);
    if (!rp.fully_reversible())
        throw InvalidArgument("detailed form requires a fully reversible network");
    if (static_cast<int>(L.size()) != net.num_species())
        throw InvalidArgument("detailed form: L has wrong dimension");
    for (double v : L)
        if (!(v > 0)) throw InvalidArgument("detailed form: L must be positive");
    std::vector<double> lc(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) lc[k] = L[k] * c[k];
    const std::size_t s = static_cast<std::size_t>(net.num_species());
    std::vector<double> out(s, 0.0);
    for (auto [i, j] : rp.pairs) {
        double flux = monomial(net.complexes[static_cast<std::size_t>(i)], lc) -
                      monomial(net.complexes[static_cast<std::size_t>(j)], lc);
        for (std::size_t k = 0; k < s; ++k)
            out[k] += flux * (net.complexes[static_cast<std::size_t>(j)][k] -
                              net.complexes[static_cast<std::size_t>(i)][k]);
    }
    return out;
}

double boundary_distance(const std::vector<double>& c) {
    double d = std::numeric_limits<double>::infinity();
    for (double x : c) d = std::min(d, std::max(x, 0.0));
    return d;
}

std::string halt_reason_name(HaltReason reason) {
    switch (reason) {
        case HaltReason::ReachedTEnd: return "t_end";
        case HaltReason::Converged: return "converged";
        case HaltReason::StepCollapse: return "step_collapse";
        case HaltReason::NonFinite: return "non_finite";
        case HaltReason::MaxSteps: return "max_steps";
    }
    return "unknown";
}

namespace {

constexpr double kNegativityFloor = -1e-12;

bool finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool acceptable_state(const std::vector<double>& v) {
    for (double x : v)
        if (x < kNegativityFloor) return false;
    return true;
}

std::vector<double> axpy(const std::vector<double>& y, double a, const std::vector<double>& x) {
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + a * x[i];
    return out;
}

// classic RK4 step
std::vector<double> rk4_step(const ReactionNetwork& net, const RateAssignment& rates,
                             const std::vector<double>& c, double dt) {
    auto k1 = mass_action_rhs(net, rates, c);
    auto k2 = mass_action_rhs(net, rates, axpy(c, dt / 2, k1));
    auto k3 = mass_action_rhs(net, rates, axpy(c, dt / 2, k2));
    auto k4 = mass_action_rhs(net, rates, axpy(c, dt, k3));
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = c[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return out;
}

// Dormand-Prince 5(4) embedded pair
struct Dopri5Result {
    std::vector<double> y5;
    double error_norm; // scaled
};

Dopri5Result dopri5_step(const ReactionNetwork& net, const RateAssignment& rates,
                         const std::vector<double>& c, double dt, double rel_tol,
                         double abs_tol) {
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const std::size_t s = c.size();
    auto k1 = mass_action_rhs(net, rates, c);
    std::vector<double> tmp(s);

    for (std::size_t i = 0; i < s; ++i) tmp[i] = c[i] + dt * a21 * k1[i];
    auto k2 = mass_action_rhs(net, rates, tmp);
    for (std::size_t i = 0; i < s; ++i) tmp[i] = c[i] + dt * (a31 * k1[i] + a32 * k2[i]);
    auto k3 = mass_action_rhs(net, rates, tmp);
    for (std::size_t i = 0; i < s; ++i)
        tmp[i] = c[i] + dt * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    auto k4 = mass_action_rhs(net, rates, tmp);
    for (std::size_t i = 0; i < s; ++i)
        tmp[i] = c[i] + dt * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    auto k5 = mass_action_rhs(net, rates, tmp);
    for (std::size_t i = 0; i < s; ++i)
        tmp[i] = c[i] + dt * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    auto k6 = mass_action_rhs(net, rates, tmp);

    std::vector<double> y5(s);
    for (std::size_t i = 0; i < s; ++i)
        y5[i] = c[i] + dt * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    auto k7 = mass_action_rhs(net, rates, y5);

    double err = 0;
    for (std::size_t i = 0; i < s; ++i) {
        double e = dt * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        double scale = abs_tol + rel_tol * std::max(std::abs(c[i]), std::abs(y5[i]));
        err += (e / scale) * (e / scale);
    }
    return {std::move(y5), std::sqrt(err / static_cast<double>(s))};
}

} // namespace

Trajectory simulate(const ReactionNetwork& net, const RateAssignment& rates,
                    const std::vector<double>& c0, const IntegratorConfig& config,
                    const std::vector<double>* c_star) {
    rates.validate(net);
    if (static_cast<int>(c0.size()) != net.num_species())
        throw InvalidArgument("simulate: initial state has wrong dimension");
    for (double x : c0)
        if (!(x > 0)) throw InvalidArgument("simulate: initial state must be strictly positive");
    if (config.dt <= 0 || config.rel_tol <= 0 || config.abs_tol <= 0 || config.t_end <= 0)
        throw InvalidArgument("simulate: step and tolerances must be positive");

    Subspace sub = Subspace::of_network(net);
    Trajectory traj;
    if (c_star) {
        traj.has_birch = true;
        traj.birch = *c_star;
    } else {
        try {
            traj.birch = birch_point(net, rates, c0).c_star;
            traj.has_birch = true;
        } catch (const Error&) {
            traj.has_birch = false;
        }
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto record = [&](double t, const std::vector<double>& c) {
        std::vector<double> clipped(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) clipped[i] = std::max(c[i], 0.0);
        MonitorSample m;
        std::vector<double> drift(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) drift[i] = clipped[i] - c0[i];
        m.conservation_drift = norm2(sub.off(drift));
        m.boundary_distance = boundary_distance(clipped);
        if (traj.has_birch) {
            m.entropy = transformed_entropy(clipped, traj.birch);
            std::vector<double> d(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) d[i] = clipped[i] - traj.birch[i];
            m.distance_to_birch = norm2(d);
        } else {
            m.entropy = nan;
            m.distance_to_birch = nan;
        }
        traj.times.push_back(t);
        traj.states.push_back(clipped);
        traj.monitors.push_back(m);
    };

    std::vector<double> c = c0;
    double t = 0;
    double dt = config.dt;
    long accepted = 0;
    record(t, c);

    auto converged = [&](const std::vector<double>& state) {
        if (!traj.has_birch || config.convergence_tol <= 0) return false;
        double d = 0;
        for (std::size_t i = 0; i < state.size(); ++i) {
            double diff = state[i] - traj.birch[i];
            d += diff * diff;
        }
        return std::sqrt(d) <= config.convergence_tol;
    };

    const double dt_floor = 1e-14;
    while (t < config.t_end) {
        if (accepted >= config.max_steps) {
            traj.halt = HaltReason::MaxSteps;
            return traj;
        }
        double h = std::min(dt, config.t_end - t);
        std::vector<double> c_new;

        if (config.method == Method::RK4) {
            c_new = rk4_step(net, rates, c, h);
            if (!finite(c_new)) {
                traj.halt = HaltReason::NonFinite;
                return traj;
            }
            if (!acceptable_state(c_new)) {
                dt = h / 2;
                if (dt < dt_floor) {
                    traj.halt = HaltReason::StepCollapse;
                    return traj;
                }
                continue;
            }
        } else {
            Dopri5Result r = dopri5_step(net, rates, c, h, config.rel_tol, config.abs_tol);
            if (!finite(r.y5)) {
                dt = h / 2;
                if (dt < dt_floor) {
                    traj.halt = HaltReason::NonFinite;
                    return traj;
                }
                continue;
            }
            if (r.error_norm <= 1.0 && acceptable_state(r.y5)) {
                c_new = std::move(r.y5);
                double factor = r.error_norm > 0
                                    ? 0.9 * std::pow(r.error_norm, -0.2)
                                    : 5.0;
                dt = h * std::clamp(factor, 0.2, 5.0);
            } else {
                double factor = r.error_norm > 1.0 && std::isfinite(r.error_norm)
                                    ? std::max(0.9 * std::pow(r.error_norm, -0.2), 0.1)
                                    : 0.5;
                dt = h * factor;
                if (dt < dt_floor) {
                    traj.halt = HaltReason::StepCollapse;
                    return traj;
                }
                continue;
            }
        }

        t += h;
        c = std::move(c_new);
        ++accepted;
        if (accepted % config.monitor_stride == 0 || t >= config.t_end) record(t, c);
        if (converged(c)) {
            if (accepted % config.monitor_stride != 0 && t < config.t_end) record(t, c);
            traj.halt = HaltReason::Converged;
            return traj;
        }
    }
    traj.halt = HaltReason::ReachedTEnd;
    return traj;
}

} // namespace crn
