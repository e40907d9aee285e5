#include "crn/strata.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crn/errors.hpp"
#include "crn/simplex.hpp"

namespace crn {

std::vector<std::pair<int, int>> AcyclicOrientation::oriented_edges(
    const ReversiblePairing& rp) const {
    std::vector<std::pair<int, int>> out;
    out.reserve(rp.pairs.size());
    for (std::size_t e = 0; e < rp.pairs.size(); ++e) {
        auto [i, j] = rp.pairs[e];
        out.emplace_back(direction[e] == 0 ? std::make_pair(i, j) : std::make_pair(j, i));
    }
    return out;
}

namespace {

// Kahn topological sort; empty when the digraph has a cycle.
std::vector<int> topo_sort(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }
    std::vector<int> queue, order;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    if (static_cast<int>(order.size()) != n) return {};
    return order;
}

double monomial_lc(const ComplexVec& y, const std::vector<double>& lc) {
    double m = 1.0;
    for (std::size_t k = 0; k < y.size(); ++k)
        for (int e = 0; e < y[k]; ++e) m *= lc[k];
    return m;
}

} // namespace

std::vector<AcyclicOrientation> acyclic_orientations(const ReactionNetwork& net,
                                                     const ReversiblePairing& rp,
                                                     int max_pairs) {
    const std::size_t p = rp.pairs.size();
    if (static_cast<int>(p) > max_pairs)
        throw GuardExceeded("orientation enumeration over " + std::to_string(p) +
                            " pairs exceeds guard " + std::to_string(max_pairs));
    std::vector<AcyclicOrientation> out;
    for (std::size_t mask = 0; mask < (1ULL << p); ++mask) {
        AcyclicOrientation o;
        o.direction.resize(p);
        for (std::size_t e = 0; e < p; ++e) o.direction[e] = (mask >> e) & 1 ? 1 : 0;
        auto order = topo_sort(net.num_complexes(), o.oriented_edges(rp));
        if (order.empty() && net.num_complexes() > 0) continue;
        o.topo_order = std::move(order);
        out.push_back(std::move(o));
    }
    return out;
}

StratumResult stratum_of(const ReactionNetwork& net, const ReversiblePairing& rp,
                         const std::vector<double>& L, const std::vector<double>& c,
                         double rel_tol) {
    if (static_cast<int>(L.size()) != net.num_species() ||
        static_cast<int>(c.size()) != net.num_species())
        throw InvalidArgument("stratum_of: dimension mismatch");
    std::vector<double> lc(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) lc[k] = L[k] * c[k];

    StratumResult res;
    res.direction.resize(rp.pairs.size());
    for (std::size_t e = 0; e < rp.pairs.size(); ++e) {
        auto [i, j] = rp.pairs[e];
        double mi = monomial_lc(net.complexes[static_cast<std::size_t>(i)], lc);
        double mj = monomial_lc(net.complexes[static_cast<std::size_t>(j)], lc);
        if (std::abs(mi - mj) <= rel_tol * std::max(std::abs(mi), std::abs(mj))) {
            res.tied_pairs.push_back(static_cast<int>(e));
            res.direction[e] = 0;
        } else {
            res.direction[e] = mi > mj ? 0 : 1;
        }
    }
    res.on_boundary = !res.tied_pairs.empty();
    return res;
}

FarkasCertificate farkas_vector(const ReactionNetwork& net, const ReversiblePairing& rp,
                                const std::vector<int>& direction,
                                const std::vector<int>& face) {
    if (direction.size() != rp.pairs.size())
        throw InvalidArgument("farkas_vector: direction per pair required");
    if (face.empty()) throw InvalidArgument("farkas_vector: empty face index set");
    std::vector<int> i_set = face;
    std::sort(i_set.begin(), i_set.end());
    i_set.erase(std::unique(i_set.begin(), i_set.end()), i_set.end());
    for (int k : i_set)
        if (k < 0 || k >= net.num_species())
            throw InvalidArgument("farkas_vector: species index out of range");

    FarkasCertificate cert;
    cert.face = i_set;
    cert.direction = direction;

    AcyclicOrientation o;
    o.direction = direction;
    auto oriented = o.oriented_edges(rp);

    // rows: (y_b - y_a)|_I ; alpha = 1 + beta, beta >= 0 : A beta >= -A 1
    const std::size_t rows = oriented.size(), vars = i_set.size();
    QMat a(rows, QVec(vars));
    QVec b(rows, Rational(0));
    for (std::size_t e = 0; e < rows; ++e) {
        auto [from, to] = oriented[e];
        for (std::size_t k = 0; k < vars; ++k) {
            int sp = i_set[k];
            a[e][k] = net.complexes[static_cast<std::size_t>(to)][static_cast<std::size_t>(sp)] -
                      net.complexes[static_cast<std::size_t>(from)][static_cast<std::size_t>(sp)];
            b[e] -= a[e][k];
        }
    }

    LPResult lp = lp_feasible_nonneg(a, b);
    cert.feasible = lp.feasible;
    if (lp.feasible) {
        cert.alpha.assign(vars, Rational(1));
        for (std::size_t k = 0; k < vars; ++k) cert.alpha[k] += lp.x[k];
        cert.alpha_full.assign(static_cast<std::size_t>(net.num_species()), Rational(0));
        for (std::size_t k = 0; k < vars; ++k)
            cert.alpha_full[static_cast<std::size_t>(i_set[k])] = cert.alpha[k];
        cert.slacks.assign(rows, Rational(0));
        for (std::size_t e = 0; e < rows; ++e)
            for (std::size_t k = 0; k < vars; ++k) cert.slacks[e] += a[e][k] * cert.alpha[k];
    } else {
        cert.dual = lp.farkas_dual;
        cert.dual_v.assign(static_cast<std::size_t>(net.num_species()), Rational(0));
        for (std::size_t e = 0; e < rows; ++e) {
            if (cert.dual[e] == 0) continue;
            auto [from, to] = oriented[e];
            for (int k = 0; k < net.num_species(); ++k)
                cert.dual_v[static_cast<std::size_t>(k)] +=
                    cert.dual[e] *
                    (net.complexes[static_cast<std::size_t>(to)][static_cast<std::size_t>(k)] -
                     net.complexes[static_cast<std::size_t>(from)][static_cast<std::size_t>(k)]);
        }
    }
    return cert;
}

DescentReport descent_check(const ReactionNetwork& net, const std::vector<double>& L,
                            const Trajectory& trajectory, const std::vector<int>& face) {
    ReversiblePairing rp = reversible_pairing(net);
    if (!rp.fully_reversible())
        throw InvalidArgument("descent_check requires a fully reversible network");

    DescentReport rep;
    rep.min_inner_product = std::numeric_limits<double>::infinity();
    for (const auto& c : trajectory.states) {
        StratumResult stratum = stratum_of(net, rp, L, c);
        auto it = rep.certificates.find(stratum.direction);
        if (it == rep.certificates.end())
            it = rep.certificates.emplace(stratum.direction,
                                          farkas_vector(net, rp, stratum.direction, face)).first;
        const FarkasCertificate& cert = it->second;
        if (!cert.feasible) {
            ++rep.samples_skipped;
            continue;
        }
        std::vector<double> rhs = detailed_rhs(net, L, c);
        double ip = 0;
        for (std::size_t k = 0; k < rhs.size(); ++k)
            ip += to_double(cert.alpha_full[k]) * rhs[k];
        rep.min_inner_product = std::min(rep.min_inner_product, ip);
        ++rep.samples_used;
    }
    if (rep.samples_used == 0) rep.min_inner_product = 0;
    return rep;
}

} // namespace crn
