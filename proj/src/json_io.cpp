#include "crn/json_io.hpp"

#include <sstream>

#include "crn/errors.hpp"

namespace crn {

namespace {

Json zvec_json(const ZVec& v) {
    Json arr = Json::array();
    for (const auto& e : v) arr.push_back(e.get_si());
    return arr;
}

std::string csv_number(double x) {
    std::ostringstream ss;
    ss.precision(17);
    ss << x;
    return ss.str();
}

} // namespace

Json structural_report_json(const ReactionNetwork& net, const StructuralReport& rep) {
    Json j;
    j["species"] = net.species;
    Json complexes = Json::array();
    for (int i = 0; i < net.num_complexes(); ++i) {
        Json cx;
        cx["exponents"] = net.complexes[static_cast<std::size_t>(i)];
        cx["name"] = complex_to_string(net, i);
        complexes.push_back(std::move(cx));
    }
    j["complexes"] = std::move(complexes);
    Json edges = Json::array();
    for (const auto& e : net.edges) edges.push_back({e.from + 1, e.to + 1});
    j["edges"] = std::move(edges);
    Json classes = Json::array();
    for (const auto& cls : rep.linkage_classes) {
        Json one = Json::array();
        for (int v : cls) one.push_back(v + 1);
        classes.push_back(std::move(one));
    }
    j["linkage_classes"] = std::move(classes);
    j["l"] = rep.l;
    j["sigma"] = rep.sigma;
    j["delta"] = rep.delta;
    j["weakly_reversible"] = rep.weakly_reversible;
    return j;
}

Json tree_constants_json(const ReactionNetwork& net, const TreeConstants& tc) {
    std::vector<std::size_t> counts;
    bool have_counts = true;
    try {
        counts = itree_counts(net);
    } catch (const GuardExceeded&) {
        have_counts = false;
    }
    Json arr = Json::array();
    for (int i = 0; i < net.num_complexes(); ++i) {
        int cls = tc.linkage_class_of[static_cast<std::size_t>(i)];
        Json row;
        row["index"] = i + 1;
        row["linkage_class"] = cls + 1;
        row["value"] = rational_to_string(tc.values[static_cast<std::size_t>(i)]);
        if (have_counts) row["monomial_count"] = counts[static_cast<std::size_t>(i)];
        if (!tc.class_strongly_connected[static_cast<std::size_t>(cls)])
            row["non_reversible_class"] = true;
        arr.push_back(std::move(row));
    }
    return arr;
}

Json complex_balancing_json(const ModuliResult& res) {
    Json j;
    j["balanced"] = res.balanced;
    j["kernel_dim"] = res.kernel_dim;
    j["weakly_reversible"] = res.weakly_reversible;
    if (res.has_witness) {
        Json w;
        ZVec u_plus(res.violated.size(), Integer(0)), u_minus(res.violated.size(), Integer(0));
        for (std::size_t i = 0; i < res.violated.size(); ++i) {
            if (res.violated[i] > 0) u_plus[i] = res.violated[i];
            if (res.violated[i] < 0) u_minus[i] = -res.violated[i];
        }
        w["u_plus"] = zvec_json(u_plus);
        w["u_minus"] = zvec_json(u_minus);
        w["lhs"] = rational_to_string(res.lhs);
        w["rhs"] = rational_to_string(res.rhs);
        j["violated_binomial"] = std::move(w);
    }
    return j;
}

Json detailed_balancing_json(const DetailedBalanceResult& res) {
    Json j;
    j["detailed_balancing"] = res.detailed_balancing;
    j["fully_reversible"] = res.fully_reversible;
    if (res.has_witness) {
        Json w;
        Json pairs = Json::array();
        for (auto [i, jj] : res.pairs) pairs.push_back({i + 1, jj + 1});
        w["pairs"] = std::move(pairs);
        w["exponents"] = zvec_json(res.circuit);
        w["product"] = rational_to_string(res.product);
        j["violated_circuit"] = std::move(w);
    }
    return j;
}

Json birch_json(const BirchPoint& bp) {
    Json j;
    j["c_star"] = bp.c_star;
    Json r;
    r["affine"] = bp.residuals.affine;
    r["orthogonality"] = bp.residuals.orthogonality;
    r["steady"] = bp.residuals.steady;
    j["residuals"] = std::move(r);
    j["iterations"] = bp.iterations;
    j["converged"] = bp.converged;
    return j;
}

std::string trajectory_csv(const ReactionNetwork& net, const Trajectory& traj) {
    std::string out = "t";
    for (const auto& sp : net.species) out += ",c_" + sp;
    out += ",E,conservation_drift,boundary_distance,dist_to_birch\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        out += csv_number(traj.times[k]);
        for (double x : traj.states[k]) out += "," + csv_number(x);
        const MonitorSample& m = traj.monitors[k];
        out += "," + csv_number(m.entropy);
        out += "," + csv_number(m.conservation_drift);
        out += "," + csv_number(m.boundary_distance);
        out += "," + csv_number(m.distance_to_birch);
        out += "\n";
    }
    return out;
}

} // namespace crn
