#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crn/balancing.hpp"
#include "crn/birch.hpp"
#include "crn/cayley.hpp"
#include "crn/dynamics.hpp"
#include "crn/errors.hpp"
#include "crn/json_io.hpp"
#include "crn/network.hpp"
#include "crn/strata.hpp"
#include "crn/structure.hpp"
#include "crn/tree_constants.hpp"

namespace {

using crn::Json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_vector(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw crn::InvalidArgument("empty vector literal '" + csv + "'");
    return out;
}

std::vector<int> parse_index_set(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item) - 1); // 1-based on the command line
    }
    return out;
}

struct UsageFailure {
    std::string message;
};

crn::ParsedNetwork load(const std::string& net_path, const std::string& rates_path) {
    if (!std::filesystem::exists(net_path))
        throw UsageFailure{"network file not found: " + net_path};
    if (!rates_path.empty() && !std::filesystem::exists(rates_path))
        throw UsageFailure{"rates file not found: " + rates_path};
    crn::ParsedNetwork parsed = crn::parse_network_file(net_path);
    if (!rates_path.empty())
        parsed.rates = crn::parse_rates_path(rates_path, parsed.network);
    return parsed;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct CorpusRow {
    std::string file;
    int n, l, sigma, delta;
    bool weakly_reversible;
};

int run_corpus(const std::string& dir, unsigned long seed, const std::string& format) {
    const std::vector<CorpusRow> expected = {
        {"triangle.crn", 3, 1, 1, 1, true},
        {"triangle-noncyclic.crn", 3, 1, 1, 1, false},
        {"trap.crn", 8, 4, 4, 0, true},
        {"two-substrate.crn", 12, 4, 6, 2, false},
        {"two-substrate-reversible.crn", 12, 4, 6, 2, true},
        {"recombination.crn", 16, 7, 4, 5, true},
    };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(1, 12);

    Json rows = Json::array();
    bool ok = true;
    for (const auto& exp : expected) {
        crn::ParsedNetwork parsed = crn::parse_network_file(dir + "/" + exp.file);
        crn::StructuralReport rep = crn::analyze_structure(parsed.network);
        crn::CayleyMatrix cay = crn::cayley_matrix(parsed.network);
        int kernel_dim = static_cast<int>(crn::integer_kernel_basis(cay).size());

        bool structural_ok = parsed.network.num_complexes() == exp.n && rep.l == exp.l &&
                             rep.sigma == exp.sigma && rep.delta == exp.delta &&
                             rep.weakly_reversible == exp.weakly_reversible &&
                             kernel_dim == exp.delta;

        // Balancing behaviour on sampled rates: deficiency zero must always
        // balance; non-weakly-reversible networks never do.
        std::string cb_note = "-";
        bool cb_ok = true;
        if (exp.delta == 0 && exp.weakly_reversible) {
            for (int trial = 0; trial < 20 && cb_ok; ++trial) {
                crn::RateAssignment rates;
                for (int e = 0; e < parsed.network.num_edges(); ++e)
                    rates.by_edge.push_back(
                        {crn::Rational(small(rng), small(rng)), crn::RateKind::Exact});
                for (auto& r : rates.by_edge) r.value.canonicalize();
                cb_ok = crn::moduli_membership_exact(parsed.network, rates).balanced;
            }
            cb_note = cb_ok ? "balanced for 20 sampled rate vectors" : "MISMATCH";
        } else if (!exp.weakly_reversible) {
            cb_ok = !crn::moduli_membership_exact(parsed.network, parsed.rates).balanced;
            cb_note = cb_ok ? "never balanced (not weakly reversible)" : "MISMATCH";
        }

        ok = ok && structural_ok && cb_ok;
        Json row;
        row["file"] = exp.file;
        row["n"] = parsed.network.num_complexes();
        row["l"] = rep.l;
        row["sigma"] = rep.sigma;
        row["delta"] = rep.delta;
        row["weakly_reversible"] = rep.weakly_reversible;
        row["kernel_dim"] = kernel_dim;
        row["complex_balancing"] = cb_note;
        row["ok"] = structural_ok && cb_ok;
        rows.push_back(std::move(row));
    }
    if (format == "json") {
        Json out;
        out["networks"] = rows;
        out["ok"] = ok;
        emit(out);
    } else {
        std::cout << "file                           n   l  sigma delta  wr  note\n";
        for (const auto& row : rows) {
            std::ostringstream line;
            line.width(30);
            line << std::left << row["file"].get<std::string>();
            std::cout << line.str() << " " << row["n"] << "  " << row["l"] << "  " << row["sigma"]
                      << "     " << row["delta"] << "     "
                      << (row["weakly_reversible"].get<bool>() ? "yes" : "no ") << " "
                      << row["complex_balancing"].get<std::string>()
                      << (row["ok"].get<bool>() ? "" : "  <-- MISMATCH") << "\n";
        }
        std::cout << (ok ? "corpus: all rows match" : "corpus: MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mass-action reaction network analysis: structural invariants, "
                 "complex/detailed balancing, Birch points, trajectories, strata"};
    app.require_subcommand(1);

    std::string format = "json";
    double tol = 1e-8;
    unsigned long seed = 20240101;
    app.add_option("--format", format, "Output format: json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--tol", tol, "Residual tolerance for floating checks");
    app.add_option("--seed", seed, "Seed for sampling-based checks");

    std::string net_path, rates_path, initial, out_path, face, method = "rk45";
    double t_end = 10.0, dt = 1e-3;

    auto* analyze = app.add_subcommand("analyze", "Structural report (linkage classes, sigma, delta)");
    analyze->add_option("network", net_path, "network file")->required();
    analyze->add_option("--rates", rates_path, "rates file overriding inline values");

    auto* tree = app.add_subcommand("tree-constants", "Tree constants K_i (Laplacian minors)");
    tree->add_option("network", net_path)->required();
    tree->add_option("--rates", rates_path);

    auto* check = app.add_subcommand("check", "Balancing decision procedures");
    check->require_subcommand(1);
    auto* cb = check->add_subcommand("cb", "Complex balancing (exact)");
    cb->add_option("network", net_path)->required();
    cb->add_option("--rates", rates_path);
    auto* db = check->add_subcommand("db", "Detailed balancing (exact)");
    db->add_option("network", net_path)->required();
    db->add_option("--rates", rates_path);

    auto* birch = app.add_subcommand("birch", "Birch point of the initial point's class");
    birch->add_option("network", net_path)->required();
    birch->add_option("--rates", rates_path);
    birch->add_option("--initial", initial, "comma-separated concentrations")->required();

    auto* simulate = app.add_subcommand("simulate", "Integrate the mass-action ODE with monitors");
    simulate->add_option("network", net_path)->required();
    simulate->add_option("--rates", rates_path);
    simulate->add_option("--initial", initial)->required();
    simulate->add_option("--t-end", t_end);
    simulate->add_option("--method", method)->check(CLI::IsMember({"rk4", "rk45"}));
    simulate->add_option("--dt", dt, "fixed step (rk4) / initial step (rk45)");
    simulate->add_option("--out", out_path, "CSV output path (default stdout)");

    auto* strata = app.add_subcommand("strata", "Acyclic orientations, Farkas certificates, descent");
    strata->add_option("network", net_path)->required();
    strata->add_option("--rates", rates_path);
    strata->add_option("--initial", initial)->required();
    strata->add_option("--face", face, "comma-separated 1-based species indices of F_I")->required();
    strata->add_option("--t-end", t_end);

    std::string corpus_dir = "data";
    auto* corpus = app.add_subcommand("corpus", "Run the bundled example networks end to end");
    corpus->add_option("--dir", corpus_dir, "directory with the bundled .crn files");

    for (auto* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) {
            auto parsed = load(net_path, rates_path);
            auto rep = crn::analyze_structure(parsed.network);
            if (format == "text")
                std::cout << "n=" << parsed.network.num_complexes()
                          << " s=" << parsed.network.num_species() << " l=" << rep.l
                          << " sigma=" << rep.sigma << " delta=" << rep.delta
                          << " weakly_reversible=" << (rep.weakly_reversible ? "yes" : "no")
                          << "\n";
            else
                emit(structural_report_json(parsed.network, rep));
        } else if (*tree) {
            auto parsed = load(net_path, rates_path);
            auto tc = crn::tree_constants_minor(parsed.network, parsed.rates);
            emit(tree_constants_json(parsed.network, tc));
        } else if (*cb) {
            auto parsed = load(net_path, rates_path);
            auto res = crn::moduli_membership_exact(parsed.network, parsed.rates);
            if (format == "text")
                std::cout << (res.balanced ? "complex balancing" : "not complex balancing")
                          << " (kernel_dim=" << res.kernel_dim << ")\n";
            else
                emit(complex_balancing_json(res));
            return res.balanced ? kExitOk : kExitDomain;
        } else if (*db) {
            auto parsed = load(net_path, rates_path);
            auto res = crn::detailed_balancing_exact(parsed.network, parsed.rates);
            if (format == "text")
                std::cout << (res.detailed_balancing ? "detailed balancing"
                                                     : "not detailed balancing")
                          << "\n";
            else
                emit(detailed_balancing_json(res));
            return res.detailed_balancing ? kExitOk : kExitDomain;
        } else if (*birch) {
            auto parsed = load(net_path, rates_path);
            crn::BirchOptions opts;
            opts.residual_tol = tol;
            auto bp = crn::birch_point(parsed.network, parsed.rates, parse_vector(initial), opts);
            if (format == "text") {
                std::cout << "c_star =";
                for (double x : bp.c_star) std::cout << " " << x;
                std::cout << " (iterations=" << bp.iterations << ")\n";
            } else {
                emit(birch_json(bp));
            }
        } else if (*simulate) {
            auto parsed = load(net_path, rates_path);
            crn::IntegratorConfig cfg;
            cfg.method = method == "rk4" ? crn::Method::RK4 : crn::Method::RK45;
            cfg.t_end = t_end;
            cfg.dt = dt;
            auto traj = crn::simulate(parsed.network, parsed.rates, parse_vector(initial), cfg);
            std::string csv = trajectory_csv(parsed.network, traj);
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(out_path);
                if (!out) throw crn::Error("cannot open output file: " + out_path);
                out << csv;
            }
            std::cerr << "halt: " << crn::halt_reason_name(traj.halt)
                      << ", samples: " << traj.times.size() << "\n";
            if (traj.halt == crn::HaltReason::StepCollapse ||
                traj.halt == crn::HaltReason::NonFinite)
                return kExitDomain;
        } else if (*strata) {
            auto parsed = load(net_path, rates_path);
            std::vector<double> c0 = parse_vector(initial);
            std::vector<int> face_set = parse_index_set(face);
            std::vector<double> L = crn::scaling_vector(parsed.network, parsed.rates, c0);
            auto rp = crn::reversible_pairing(parsed.network);
            auto orientations = crn::acyclic_orientations(parsed.network, rp);

            crn::IntegratorConfig cfg;
            cfg.t_end = t_end;
            auto traj = crn::simulate(parsed.network, parsed.rates, c0, cfg);
            auto report = crn::descent_check(parsed.network, L, traj, face_set);

            Json j;
            j["scaling_vector"] = L;
            j["orientations"] = orientations.size();
            Json certs = Json::array();
            for (const auto& [direction, cert] : report.certificates) {
                Json cj;
                Json edges = Json::array();
                crn::AcyclicOrientation o;
                o.direction = direction;
                for (auto [a, b] : o.oriented_edges(rp)) edges.push_back({a + 1, b + 1});
                cj["oriented_edges"] = std::move(edges);
                cj["feasible"] = cert.feasible;
                if (cert.feasible) {
                    Json alpha = Json::array();
                    for (const auto& q : cert.alpha) alpha.push_back(crn::rational_to_string(q));
                    cj["alpha"] = std::move(alpha);
                } else {
                    Json dual = Json::array();
                    for (const auto& q : cert.dual) dual.push_back(crn::rational_to_string(q));
                    cj["dual"] = std::move(dual);
                }
                certs.push_back(std::move(cj));
            }
            j["certificates"] = std::move(certs);
            j["descent_minimum"] = report.min_inner_product;
            j["samples_used"] = report.samples_used;
            j["samples_skipped"] = report.samples_skipped;
            emit(j);
        } else if (*corpus) {
            return run_corpus(corpus_dir, seed, format);
        }
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const crn::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const crn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
