#include "crn/structure.hpp"

#include <algorithm>
#include <functional>

#include "crn/errors.hpp"

namespace crn {

namespace {

std::vector<std::vector<int>> sorted_partition(std::vector<std::vector<int>> classes) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

} // namespace

std::vector<std::vector<int>> linkage_classes(const ReactionNetwork& net) {
    const int n = net.num_complexes();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : net.edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> classes;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.emplace_back();
        std::vector<int> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            classes[id].push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
    }
    return sorted_partition(std::move(classes));
}

std::vector<int> linkage_class_of(const ReactionNetwork& net) {
    auto classes = linkage_classes(net);
    std::vector<int> of(net.num_complexes(), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) of[v] = static_cast<int>(c);
    return of;
}

std::vector<std::vector<int>> strongly_connected_components(const ReactionNetwork& net) {
    const int n = net.num_complexes();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : net.edges) adj[e.from].push_back(e.to);

    std::vector<int> number(n, -1), low(n, -1), stack_pos(n, -1), stack;
    std::vector<std::vector<int>> sccs;
    int counter = 0;

    std::function<void(int)> dfs = [&](int v) {
        number[v] = low[v] = counter++;
        stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
        for (int w : adj[v]) {
            if (number[w] == -1) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (stack_pos[w] != -1) {
                low[v] = std::min(low[v], number[w]);
            }
        }
        if (low[v] == number[v]) {
            int base = stack_pos[v];
            std::vector<int> scc(stack.begin() + base, stack.end());
            for (int w : scc) stack_pos[w] = -1;
            stack.resize(static_cast<std::size_t>(base));
            sccs.push_back(std::move(scc));
        }
    };
    for (int v = 0; v < n; ++v)
        if (number[v] == -1) dfs(v);
    return sorted_partition(std::move(sccs));
}

bool is_weakly_reversible(const ReactionNetwork& net, std::vector<char>* per_class) {
    auto classes = linkage_classes(net);
    auto sccs = strongly_connected_components(net);
    std::vector<int> scc_of(net.num_complexes(), -1);
    for (std::size_t c = 0; c < sccs.size(); ++c)
        for (int v : sccs[c]) scc_of[v] = static_cast<int>(c);

    if (per_class) per_class->assign(classes.size(), 1);
    bool all = true;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        bool one_scc = true;
        for (int v : classes[c])
            if (scc_of[v] != scc_of[classes[c].front()]) one_scc = false;
        if (!one_scc) {
            all = false;
            if (per_class) (*per_class)[c] = 0;
        }
    }
    return all;
}

std::pair<std::vector<ZVec>, int> stoichiometric_subspace(const ReactionNetwork& net) {
    QMat reaction_vectors;
    for (const auto& e : net.edges) {
        QVec v(net.num_species());
        for (int k = 0; k < net.num_species(); ++k)
            v[static_cast<std::size_t>(k)] =
                net.complexes[e.to][k] - net.complexes[e.from][k];
        reaction_vectors.push_back(std::move(v));
    }
    auto basis = row_basis_integer(reaction_vectors);
    int sigma = static_cast<int>(basis.size());
    return {std::move(basis), sigma};
}

int deficiency(const ReactionNetwork& net) {
    auto [basis, sigma] = stoichiometric_subspace(net);
    int l = static_cast<int>(linkage_classes(net).size());
    return net.num_complexes() - sigma - l;
}

StructuralReport analyze_structure(const ReactionNetwork& net) {
    StructuralReport rep;
    rep.linkage_classes = linkage_classes(net);
    rep.l = static_cast<int>(rep.linkage_classes.size());
    rep.weakly_reversible = is_weakly_reversible(net, &rep.class_strongly_connected);
    auto [basis, sigma] = stoichiometric_subspace(net);
    rep.stoich_basis = std::move(basis);
    rep.sigma = sigma;
    rep.delta = net.num_complexes() - rep.sigma - rep.l;
    return rep;
}

QMat laplacian_exact(const ReactionNetwork& net, const RateAssignment& rates) {
    rates.validate(net);
    const std::size_t n = static_cast<std::size_t>(net.num_complexes());
    QMat a(n, QVec(n, Rational(0)));
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const auto& edge = net.edges[e];
        const Rational& k = rates.by_edge[e].value;
        a[edge.from][edge.to] += k;
        a[edge.from][edge.from] -= k;
    }
    return a;
}

std::vector<std::vector<double>> laplacian(const ReactionNetwork& net,
                                           const RateAssignment& rates) {
    rates.validate(net);
    const std::size_t n = static_cast<std::size_t>(net.num_complexes());
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const auto& edge = net.edges[e];
        double k = rates.by_edge[e].approx();
        a[edge.from][edge.to] += k;
        a[edge.from][edge.from] -= k;
    }
    return a;
}

} // namespace crn
