#include "crn/birch.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "crn/balancing.hpp"
#include "crn/dynamics.hpp"
#include "crn/subspace.hpp"

namespace crn {

double transformed_entropy(const std::vector<double>& c, const std::vector<double>& c_star) {
    if (c.size() != c_star.size()) throw InvalidArgument("entropy: dimension mismatch");
    double e = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0) throw InvalidArgument("entropy: negative concentration");
        if (c_star[i] <= 0) throw InvalidArgument("entropy: reference point must be positive");
        double xlogx = c[i] > 0 ? c[i] * std::log(c[i]) : 0.0;
        e += xlogx - c[i] * std::log(c_star[i]) - c[i] + c_star[i];
    }
    return e;
}

namespace {

double objective(const std::vector<double>& c, const std::vector<double>& c_hat) {
    double g = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        g += c[i] * std::log(c[i] / c_hat[i]) - c[i] + c_hat[i];
    return g;
}

bool all_positive(const std::vector<double>& c) {
    for (double x : c)
        if (!(x > 0)) return false;
    return true;
}

} // namespace

BirchPoint birch_point(const ReactionNetwork& net, const RateAssignment& rates,
                       const std::vector<double>& c0, const BirchOptions& opts) {
    if (static_cast<int>(c0.size()) != net.num_species())
        throw InvalidArgument("birch: initial point has wrong dimension");
    if (!all_positive(c0)) throw InvalidArgument("birch: initial point must be strictly positive");

    std::vector<double> c_hat = particular_steady_state(net, rates);
    Subspace sub = Subspace::of_network(net);
    const int s = net.num_species();
    const int dim = sub.dim();

    std::vector<double> c = c0;
    auto gradient = [&](const std::vector<double>& point) {
        std::vector<double> logratio(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i)
            logratio[static_cast<std::size_t>(i)] =
                std::log(point[static_cast<std::size_t>(i)] / c_hat[static_cast<std::size_t>(i)]);
        return sub.coords(logratio);
    };

    int iterations = 0;
    std::vector<double> grad = gradient(c);
    double grad_norm = norm2(grad);

    while (grad_norm > opts.gradient_tol && iterations < opts.max_iterations) {
        // Newton step in S-coordinates: H = Q diag(1/c) Q^T
        Eigen::MatrixXd h(dim, dim);
        for (int a = 0; a < dim; ++a)
            for (int b = a; b < dim; ++b) {
                double v = 0;
                for (int i = 0; i < s; ++i)
                    v += sub.rows()[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
                         sub.rows()[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)] /
                         c[static_cast<std::size_t>(i)];
                h(a, b) = h(b, a) = v;
            }
        Eigen::VectorXd g(dim);
        for (int a = 0; a < dim; ++a) g(a) = grad[static_cast<std::size_t>(a)];
        Eigen::VectorXd d = h.ldlt().solve(-g);

        std::vector<double> dir(static_cast<std::size_t>(dim));
        for (int a = 0; a < dim; ++a) dir[static_cast<std::size_t>(a)] = d(a);
        std::vector<double> step = sub.from_coords(dir);

        double g_old = objective(c, c_hat);
        // Strict descent while the objective is resolvable; near the floor
        // the quadratic decrease drops below double resolution, so a step
        // that halves the gradient norm is also accepted.
        auto try_step = [&](const std::vector<double>& direction, double sign) {
            double lambda = 1.0;
            for (int tries = 0; tries < 60; ++tries) {
                std::vector<double> c_new(c.size());
                for (std::size_t i = 0; i < c.size(); ++i)
                    c_new[i] = c[i] + sign * lambda * direction[i];
                if (all_positive(c_new)) {
                    if (objective(c_new, c_hat) < g_old) {
                        c = std::move(c_new);
                        return true;
                    }
                    std::vector<double> g_new = gradient(c_new);
                    if (objective(c_new, c_hat) <= g_old && norm2(g_new) < 0.5 * grad_norm) {
                        c = std::move(c_new);
                        return true;
                    }
                }
                lambda *= 0.5;
            }
            return false;
        };
        bool accepted = try_step(step, 1.0);
        if (!accepted) accepted = try_step(sub.from_coords(grad), -1.0); // gradient fallback
        if (!accepted) break; // stalled below machine step
        ++iterations;
        grad = gradient(c);
        grad_norm = norm2(grad);
    }

    BirchPoint bp;
    bp.c_star = c;
    bp.iterations = iterations;
    std::vector<double> drift(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) drift[i] = c[i] - c0[i];
    bp.residuals.affine = norm2(sub.off(drift));
    bp.residuals.orthogonality = grad_norm;
    bp.residuals.steady = norm2(complex_balance_residual(net, rates, c));
    bp.converged = grad_norm <= opts.gradient_tol &&
                   bp.residuals.affine <= opts.residual_tol &&
                   bp.residuals.orthogonality <= opts.residual_tol &&
                   bp.residuals.steady <= opts.residual_tol;
    if (!bp.converged && iterations >= opts.max_iterations)
        throw MaxIterationsError("birch solver hit iteration limit", bp);
    return bp;
}

} // namespace crn
