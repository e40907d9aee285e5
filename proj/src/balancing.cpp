#include "crn/balancing.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "crn/birch.hpp"
#include "crn/errors.hpp"
#include "crn/tree_constants.hpp"

namespace crn {

ReversiblePairing reversible_pairing(const ReactionNetwork& net) {
    ReversiblePairing rp;
    std::vector<char> paired(net.edges.size(), 0);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        if (paired[e]) continue;
        int rev = net.edge_index(net.edges[e].to, net.edges[e].from);
        if (rev >= 0) {
            rp.pairs.emplace_back(net.edges[e].from, net.edges[e].to);
            paired[e] = paired[static_cast<std::size_t>(rev)] = 1;
        } else {
            rp.one_directional.push_back(net.edges[e]);
            paired[e] = 1;
        }
    }
    return rp;
}

DetailedBalanceResult detailed_balancing_exact(const ReactionNetwork& net,
                                               const RateAssignment& rates) {
    rates.validate(net);
    DetailedBalanceResult res;
    ReversiblePairing rp = reversible_pairing(net);
    res.pairs = rp.pairs;
    res.fully_reversible = rp.fully_reversible();
    if (!res.fully_reversible) {
        res.detailed_balancing = false;
        return res;
    }

    // log kappa_ij/kappa_ji = (y_j - y_i) . log c solvable iff every integer
    // circuit lambda in the left kernel of the pair matrix R has
    // prod_e (kappa_ij/kappa_ji)^lambda_e = 1.
    const std::size_t p = rp.pairs.size();
    const std::size_t s = static_cast<std::size_t>(net.num_species());
    ZMat r_transpose(s, ZVec(p, Integer(0)));
    for (std::size_t e = 0; e < p; ++e) {
        auto [i, j] = rp.pairs[e];
        for (std::size_t k = 0; k < s; ++k)
            r_transpose[k][e] = net.complexes[static_cast<std::size_t>(j)][k] -
                                net.complexes[static_cast<std::size_t>(i)][k];
    }
    for (const auto& lambda : integer_kernel(r_transpose)) {
        Rational prod = 1;
        for (std::size_t e = 0; e < p; ++e) {
            if (lambda[e] == 0) continue;
            auto [i, j] = rp.pairs[e];
            Rational forward = rates.by_edge[static_cast<std::size_t>(net.edge_index(i, j))].value;
            Rational backward = rates.by_edge[static_cast<std::size_t>(net.edge_index(j, i))].value;
            Rational ratio = lambda[e] > 0 ? forward / backward : backward / forward;
            Integer e_abs = abs(lambda[e]);
            prod *= pow_rational(ratio, e_abs.get_ui());
        }
        if (prod != 1) {
            res.detailed_balancing = false;
            res.has_witness = true;
            res.circuit = lambda;
            res.product = prod;
            return res;
        }
    }
    res.detailed_balancing = true;
    return res;
}

std::vector<double> particular_steady_state(const ReactionNetwork& net,
                                            const RateAssignment& rates, double tol) {
    ModuliResult moduli = moduli_membership_exact(net, rates);
    if (!moduli.balanced) {
        std::string msg = "rates are not complex balancing";
        if (!moduli.weakly_reversible)
            msg += " (network is not weakly reversible)";
        else if (moduli.has_witness)
            msg += " (violated binomial: K^u+ = " + rational_to_string(moduli.lhs) +
                   ", K^u- = " + rational_to_string(moduli.rhs) + ")";
        throw NotComplexBalancing(msg);
    }

    TreeConstants tc = tree_constants_minor(net, rates);
    const int s = net.num_species();
    const int m = net.num_edges();
    Eigen::MatrixXd a(m, s);
    Eigen::VectorXd b(m);
    for (int e = 0; e < m; ++e) {
        const Edge& edge = net.edges[static_cast<std::size_t>(e)];
        for (int k = 0; k < s; ++k)
            a(e, k) = net.complexes[static_cast<std::size_t>(edge.to)][static_cast<std::size_t>(k)] -
                      net.complexes[static_cast<std::size_t>(edge.from)][static_cast<std::size_t>(k)];
        b(e) = std::log(to_double(tc.values[static_cast<std::size_t>(edge.to)])) -
               std::log(to_double(tc.values[static_cast<std::size_t>(edge.from)]));
    }
    Eigen::VectorXd x = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    double residual = (a * x - b).norm() / std::max(1.0, b.norm());
    if (residual > tol)
        throw NotComplexBalancing("steady-state log system residual " + std::to_string(residual) +
                                  " exceeds tolerance");
    std::vector<double> c_hat(static_cast<std::size_t>(s));
    for (int k = 0; k < s; ++k) c_hat[static_cast<std::size_t>(k)] = std::exp(x(k));
    return c_hat;
}

std::vector<double> scaling_vector(const ReactionNetwork& net, const RateAssignment& rates,
                                   const std::vector<double>& c0) {
    DetailedBalanceResult db = detailed_balancing_exact(net, rates);
    if (!db.detailed_balancing)
        throw NotDetailedBalancing(db.fully_reversible
                                       ? "rates violate a Wegscheider circuit condition"
                                       : "network is not fully reversible");
    BirchPoint bp = birch_point(net, rates, c0);
    std::vector<double> L(bp.c_star.size());
    for (std::size_t i = 0; i < L.size(); ++i) L[i] = 1.0 / bp.c_star[i];
    return L;
}

} // namespace crn
