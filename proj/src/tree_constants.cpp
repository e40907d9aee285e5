#include "crn/tree_constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

#include "crn/errors.hpp"

namespace crn {

std::vector<double> TreeConstants::approx() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_double(v));
    return out;
}

namespace {

// det via partially pivoted LU, doubles
double det_lu(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (a[piv][k] == 0.0) return 0.0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

template <typename Mat>
Mat minor_without(const Mat& block, std::size_t drop) {
    const std::size_t m = block.size();
    Mat out(m - 1, typename Mat::value_type(m - 1));
    for (std::size_t i = 0, oi = 0; i < m; ++i) {
        if (i == drop) continue;
        for (std::size_t j = 0, oj = 0; j < m; ++j) {
            if (j == drop) continue;
            out[oi][oj] = block[i][j];
            ++oj;
        }
        ++oi;
    }
    return out;
}

} // namespace

TreeConstants tree_constants_minor(const ReactionNetwork& net, const RateAssignment& rates) {
    rates.validate(net);
    TreeConstants tc;
    tc.values.assign(static_cast<std::size_t>(net.num_complexes()), Rational(0));
    tc.linkage_class_of = linkage_class_of(net);
    is_weakly_reversible(net, &tc.class_strongly_connected);

    QMat a = laplacian_exact(net, rates);
    for (const auto& cls : linkage_classes(net)) {
        const std::size_t m = cls.size();
        QMat block(m, QVec(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                block[i][j] = a[cls[i]][cls[j]];
        for (std::size_t i = 0; i < m; ++i) {
            Rational det = det_rational(minor_without(block, i));
            if ((m - 1) % 2 == 1) det = -det;
            tc.values[static_cast<std::size_t>(cls[i])] = det;
        }
    }
    return tc;
}

std::vector<double> tree_constants_minor_fp(const ReactionNetwork& net,
                                            const RateAssignment& rates) {
    rates.validate(net);
    std::vector<double> values(static_cast<std::size_t>(net.num_complexes()), 0.0);
    auto a = laplacian(net, rates);
    for (const auto& cls : linkage_classes(net)) {
        const std::size_t m = cls.size();
        std::vector<std::vector<double>> block(m, std::vector<double>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                block[i][j] = a[cls[i]][cls[j]];
        for (std::size_t i = 0; i < m; ++i) {
            double det = det_lu(minor_without(block, i));
            if ((m - 1) % 2 == 1) det = -det;
            values[static_cast<std::size_t>(cls[i])] = det;
        }
    }
    return values;
}

std::vector<ITree> enumerate_i_trees(const ReactionNetwork& net, int sink, int max_class_size) {
    if (sink < 0 || sink >= net.num_complexes())
        throw InvalidArgument("sink index out of range");
    auto classes = linkage_classes(net);
    const std::vector<int>* cls = nullptr;
    for (const auto& c : classes)
        if (std::find(c.begin(), c.end(), sink) != c.end()) cls = &c;
    if (static_cast<int>(cls->size()) > max_class_size)
        throw GuardExceeded("linkage class of " + std::to_string(sink + 1) + " has " +
                            std::to_string(cls->size()) + " nodes (guard " +
                            std::to_string(max_class_size) + ")");

    // Every node but the sink picks exactly one outgoing edge; acyclic
    // assignments are exactly the spanning i-trees.
    std::vector<int> order;
    for (int v : *cls)
        if (v != sink) order.push_back(v);

    const int n = net.num_complexes();
    std::vector<std::vector<int>> out_targets(n);
    for (const auto& e : net.edges)
        if (std::find(cls->begin(), cls->end(), e.from) != cls->end())
            out_targets[e.from].push_back(e.to);
    for (auto& t : out_targets) std::sort(t.begin(), t.end());

    std::vector<int> chosen(n, -1);
    std::vector<ITree> trees;

    auto creates_cycle = [&](int v) {
        int w = chosen[v];
        while (w != -1 && w != sink) {
            if (w == v) return true;
            w = chosen[w];
        }
        return false;
    };

    std::function<void(std::size_t)> recurse = [&](std::size_t k) {
        if (k == order.size()) {
            ITree t;
            for (int v : order) t.edges.push_back({v, chosen[v]});
            std::sort(t.edges.begin(), t.edges.end(), [](const Edge& a, const Edge& b) {
                return a.from != b.from ? a.from < b.from : a.to < b.to;
            });
            trees.push_back(std::move(t));
            return;
        }
        int v = order[k];
        for (int w : out_targets[v]) {
            chosen[v] = w;
            if (!creates_cycle(v)) recurse(k + 1);
            chosen[v] = -1;
        }
    };
    recurse(0);
    return trees;
}

TreeConstants tree_constants_enumerated(const ReactionNetwork& net,
                                        const RateAssignment& rates, int max_class_size) {
    rates.validate(net);
    TreeConstants tc;
    tc.values.assign(static_cast<std::size_t>(net.num_complexes()), Rational(0));
    tc.linkage_class_of = linkage_class_of(net);
    is_weakly_reversible(net, &tc.class_strongly_connected);

    for (int i = 0; i < net.num_complexes(); ++i) {
        Rational sum = 0;
        for (const auto& tree : enumerate_i_trees(net, i, max_class_size)) {
            Rational prod = 1;
            for (const auto& e : tree.edges)
                prod *= rates.by_edge[static_cast<std::size_t>(net.edge_index(e.from, e.to))].value;
            sum += prod;
        }
        tc.values[static_cast<std::size_t>(i)] = sum;
    }
    return tc;
}

std::vector<std::size_t> itree_counts(const ReactionNetwork& net, int max_class_size) {
    std::vector<std::size_t> counts;
    counts.reserve(static_cast<std::size_t>(net.num_complexes()));
    for (int i = 0; i < net.num_complexes(); ++i)
        counts.push_back(enumerate_i_trees(net, i, max_class_size).size());
    return counts;
}

} // namespace crn
