#ifndef CRN_TEST_HELPERS_HPP
#define CRN_TEST_HELPERS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "crn/network.hpp"
#include "crn/structure.hpp"

namespace crn::testing {

inline RateValue exact(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return {q, RateKind::Exact};
}

/// Complete bidirected triangle on 2A, A+B, 2B (complex indices 0,1,2).
/// Rates keyed by (i,j) pairs; defaults to all ones.
inline ParsedNetwork triangle(const std::map<std::pair<int, int>, Rational>& kappa = {}) {
    ParsedNetwork p;
    p.network.species = {"A", "B"};
    p.network.complexes = {{2, 0}, {1, 1}, {0, 2}};
    p.network.edges = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
    for (const auto& e : p.network.edges) {
        auto it = kappa.find({e.from, e.to});
        p.rates.by_edge.push_back({it == kappa.end() ? Rational(1) : it->second, RateKind::Exact});
    }
    return p;
}

/// Triangle rates as named constants, 1-based complex indexing.
inline std::map<std::pair<int, int>, Rational> triangle_rates(
    Rational k12, Rational k21, Rational k13, Rational k31, Rational k23, Rational k32) {
    return {{{0, 1}, k12}, {{1, 0}, k21}, {{0, 2}, k13},
            {{2, 0}, k31}, {{1, 2}, k23}, {{2, 1}, k32}};
}

/// Single reversible reaction A <-> B.
inline ParsedNetwork reversible_pair(Rational kf = 1, Rational kr = 1) {
    ParsedNetwork p;
    p.network.species = {"A", "B"};
    p.network.complexes = {{1, 0}, {0, 1}};
    p.network.edges = {{0, 1}, {1, 0}};
    p.rates.by_edge = {{kf, RateKind::Exact}, {kr, RateKind::Exact}};
    return p;
}

/// Three-species cycle A <-> B <-> C <-> A with unit-vector complexes;
/// two-dimensional stoichiometric subspace.
inline ParsedNetwork cycle3(const std::vector<Rational>& rates = {}) {
    ParsedNetwork p;
    p.network.species = {"A", "B", "C"};
    p.network.complexes = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    p.network.edges = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}};
    for (std::size_t e = 0; e < p.network.edges.size(); ++e)
        p.rates.by_edge.push_back(
            {rates.empty() ? Rational(1) : rates[e], RateKind::Exact});
    return p;
}

inline std::string data_path(const std::string& file) {
    return std::string(CRN_DATA_DIR) + "/" + file;
}

inline Rational random_rational(std::mt19937_64& rng, int max_num = 12, int max_den = 12) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline RateAssignment random_rates(const ReactionNetwork& net, std::mt19937_64& rng) {
    RateAssignment ra;
    for (int e = 0; e < net.num_edges(); ++e)
        ra.by_edge.push_back({random_rational(rng), RateKind::Exact});
    return ra;
}

/// Random strongly connected digraph on n complexes (unit-vector species):
/// a random Hamiltonian cycle plus extra random edges.
inline ParsedNetwork random_strongly_connected(int n, std::mt19937_64& rng) {
    ParsedNetwork p;
    for (int i = 0; i < n; ++i) {
        p.network.species.push_back("X" + std::to_string(i + 1));
        ComplexVec y(static_cast<std::size_t>(n), 0);
        y[static_cast<std::size_t>(i)] = 1;
        p.network.complexes.push_back(std::move(y));
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<char>> present(static_cast<std::size_t>(n),
                                           std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>((i + 1) % n)];
        p.network.edges.push_back({a, b});
        present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    }
    std::uniform_int_distribution<int> node(0, n - 1);
    std::uniform_int_distribution<int> extra_count(0, 2 * n);
    int extras = extra_count(rng);
    for (int k = 0; k < extras; ++k) {
        int a = node(rng), b = node(rng);
        if (a == b || present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
        p.network.edges.push_back({a, b});
        present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    }
    p.rates = random_rates(p.network, rng);
    return p;
}

/// Random fully reversible network: distinct random complexes over a few
/// species, paired edges. May have several linkage classes.
inline ParsedNetwork random_reversible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> s_dist(2, 4), n_dist(2, 5), coeff(0, 2);
    const int s = s_dist(rng);
    ParsedNetwork p;
    for (int i = 0; i < s; ++i) p.network.species.push_back("X" + std::to_string(i + 1));
    const int n = n_dist(rng);
    std::vector<ComplexVec> pool;
    int guard = 0;
    while (static_cast<int>(pool.size()) < n && guard++ < 200) {
        ComplexVec y(static_cast<std::size_t>(s));
        for (int k = 0; k < s; ++k) y[static_cast<std::size_t>(k)] = coeff(rng);
        if (std::find(pool.begin(), pool.end(), y) == pool.end()) pool.push_back(std::move(y));
    }
    p.network.complexes = pool;
    const int m = static_cast<int>(pool.size());
    std::uniform_int_distribution<int> node(0, m - 1);
    std::vector<std::vector<char>> present(static_cast<std::size_t>(m),
                                           std::vector<char>(static_cast<std::size_t>(m), 0));
    int pairs = 0, attempts = 0;
    std::uniform_int_distribution<int> want_pairs(1, std::max(1, m - 1));
    int target = want_pairs(rng);
    while (pairs < target && attempts++ < 100) {
        int a = node(rng), b = node(rng);
        if (a == b || present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
        p.network.edges.push_back({a, b});
        p.network.edges.push_back({b, a});
        present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        present[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
        ++pairs;
    }
    if (p.network.edges.empty()) {
        p.network.edges.push_back({0, 1});
        p.network.edges.push_back({1, 0});
    }
    // drop isolated complexes so every node touches an edge
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (const auto& e : p.network.edges)
        used[static_cast<std::size_t>(e.from)] = used[static_cast<std::size_t>(e.to)] = 1;
    std::vector<int> remap(static_cast<std::size_t>(m), -1);
    std::vector<ComplexVec> kept;
    for (int i = 0; i < m; ++i)
        if (used[static_cast<std::size_t>(i)]) {
            remap[static_cast<std::size_t>(i)] = static_cast<int>(kept.size());
            kept.push_back(p.network.complexes[static_cast<std::size_t>(i)]);
        }
    p.network.complexes = std::move(kept);
    for (auto& e : p.network.edges) {
        e.from = remap[static_cast<std::size_t>(e.from)];
        e.to = remap[static_cast<std::size_t>(e.to)];
    }
    p.rates = random_rates(p.network, rng);
    return p;
}

/// Detailed-balancing rates for a reversible network, built from a random
/// positive rational c*: kr = kf * (c*)^{y_i - y_j} per pair.
inline RateAssignment detailed_balanced_rates(const ReactionNetwork& net,
                                              std::mt19937_64& rng) {
    QVec c_star;
    for (int k = 0; k < net.num_species(); ++k) c_star.push_back(random_rational(rng, 6, 6));
    RateAssignment ra;
    ra.by_edge.assign(net.edges.size(), RateValue{});
    std::vector<char> done(net.edges.size(), 0);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        if (done[e]) continue;
        int rev = net.edge_index(net.edges[e].to, net.edges[e].from);
        Rational kf = random_rational(rng, 6, 6);
        ra.by_edge[e] = {kf, RateKind::Exact};
        done[e] = 1;
        if (rev >= 0) {
            // kf c*^{y_i} = kr c*^{y_j}
            Rational ratio = 1; // c*^{y_i - y_j}
            const auto& yi = net.complexes[static_cast<std::size_t>(net.edges[e].from)];
            const auto& yj = net.complexes[static_cast<std::size_t>(net.edges[e].to)];
            for (int k = 0; k < net.num_species(); ++k) {
                int d = yi[static_cast<std::size_t>(k)] - yj[static_cast<std::size_t>(k)];
                for (int t = 0; t < d; ++t) ratio *= c_star[static_cast<std::size_t>(k)];
                for (int t = 0; t < -d; ++t) ratio /= c_star[static_cast<std::size_t>(k)];
            }
            ra.by_edge[static_cast<std::size_t>(rev)] = {kf * ratio, RateKind::Exact};
            done[static_cast<std::size_t>(rev)] = 1;
        }
    }
    for (auto& r : ra.by_edge) r.value.canonicalize();
    return ra;
}

} // namespace crn::testing

#endif
