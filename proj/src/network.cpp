#include "crn/network.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "crn/errors.hpp"

namespace crn {

int ReactionNetwork::edge_index(int from, int to) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].from == from && edges[e].to == to) return static_cast<int>(e);
    return -1;
}

void ReactionNetwork::validate() const {
    const int s = num_species();
    const int n = num_complexes();
    for (const auto& y : complexes) {
        if (static_cast<int>(y.size()) != s)
            throw InvalidArgument("complex exponent vector has wrong length");
        for (int e : y)
            if (e < 0) throw InvalidArgument("negative stoichiometric coefficient");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (complexes[i] == complexes[j])
                throw InvalidArgument("duplicate complexes at indices " +
                                      std::to_string(i + 1) + " and " + std::to_string(j + 1));
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw InvalidArgument("edge endpoint out of range");
        if (e.from == e.to) throw InvalidArgument("self-loop edge");
        if (!seen.insert({e.from, e.to}).second)
            throw InvalidArgument("duplicate directed edge");
    }
}

bool RateAssignment::all_exact() const {
    for (const auto& r : by_edge)
        if (r.kind != RateKind::Exact) return false;
    return true;
}

std::vector<double> RateAssignment::to_doubles() const {
    std::vector<double> out;
    out.reserve(by_edge.size());
    for (const auto& r : by_edge) out.push_back(r.approx());
    return out;
}

void RateAssignment::validate(const ReactionNetwork& net) const {
    if (by_edge.size() != net.edges.size())
        throw InvalidArgument("rate assignment domain does not match edge set");
    for (const auto& r : by_edge)
        if (r.value <= 0) throw InvalidArgument("non-positive rate constant");
}

namespace {

// Sparse complex under construction: (species index, coefficient), sorted.
using SparseComplex = std::vector<std::pair<int, int>>;

struct LineCursor {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, static_cast<int>(pos) + 1);
    }
    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }
    bool accept_str(const std::string& s) {
        skip_ws();
        if (text.compare(pos, s.size(), s) == 0) {
            pos += s.size();
            return true;
        }
        return false;
    }
    std::string read_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == '/' || text[pos] == 'e' || text[pos] == 'E' ||
                ((text[pos] == '+' || text[pos] == '-') && pos > start &&
                 (text[pos - 1] == 'e' || text[pos - 1] == 'E'))))
            ++pos;
        return text.substr(start, pos - start);
    }
    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
        }
        return text.substr(start, pos - start);
    }
};

class NetworkBuilder {
public:
    int species_index(const std::string& name) {
        auto it = species_by_name_.find(name);
        if (it != species_by_name_.end()) return it->second;
        int idx = static_cast<int>(net_.species.size());
        net_.species.push_back(name);
        species_by_name_.emplace(name, idx);
        return idx;
    }

    int complex_index(const SparseComplex& c) {
        auto it = complex_by_key_.find(c);
        if (it != complex_by_key_.end()) return it->second;
        int idx = static_cast<int>(sparse_complexes_.size());
        sparse_complexes_.push_back(c);
        complex_by_key_.emplace(c, idx);
        return idx;
    }

    void add_edge(int from, int to, RateValue rate, const LineCursor& at) {
        if (from == to) at.fail("self-loop reaction");
        for (const auto& e : net_.edges)
            if (e.from == from && e.to == to) at.fail("duplicate reaction");
        net_.edges.push_back({from, to});
        rates_.by_edge.push_back(std::move(rate));
    }

    ParsedNetwork finish() {
        const int s = static_cast<int>(net_.species.size());
        for (const auto& sc : sparse_complexes_) {
            ComplexVec y(s, 0);
            for (const auto& [idx, coeff] : sc) y[idx] = coeff;
            net_.complexes.push_back(std::move(y));
        }
        net_.validate();
        rates_.validate(net_);
        return {std::move(net_), std::move(rates_)};
    }

    bool empty() const { return net_.edges.empty(); }

private:
    ReactionNetwork net_;
    RateAssignment rates_;
    std::map<std::string, int> species_by_name_;
    std::map<SparseComplex, int> complex_by_key_;
    std::vector<SparseComplex> sparse_complexes_;
};

SparseComplex parse_complex(LineCursor& cur, NetworkBuilder& b) {
    std::map<int, int> coeffs;
    cur.skip_ws();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '-') {
        // lone leading '-' before a coefficient
        std::size_t look = cur.pos + 1;
        while (look < cur.text.size() && cur.text[look] == ' ') ++look;
        if (look < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[look])))
            cur.fail("negative stoichiometric coefficient");
        cur.fail("expected complex");
    }
    bool first = true;
    while (true) {
        cur.skip_ws();
        long coeff = 1;
        if (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
            std::size_t start = cur.pos;
            while (cur.pos < cur.text.size() &&
                   std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
                ++cur.pos;
            coeff = std::stol(cur.text.substr(start, cur.pos - start));
            cur.skip_ws();
            bool species_follows =
                cur.pos < cur.text.size() &&
                (std::isalpha(static_cast<unsigned char>(cur.text[cur.pos])) || cur.text[cur.pos] == '_');
            if (!species_follows) {
                if (coeff == 0 && first) return {}; // the zero complex
                cur.fail("expected species name after coefficient");
            }
            if (coeff == 0) cur.fail("zero stoichiometric coefficient");
        }
        std::string name = cur.read_ident();
        if (name.empty()) cur.fail("expected species name");
        coeffs[b.species_index(name)] += static_cast<int>(coeff);
        first = false;
        if (!cur.accept('+')) break;
    }
    return SparseComplex(coeffs.begin(), coeffs.end());
}

RateValue parse_rate_value(LineCursor& cur) {
    cur.skip_ws();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '-') {
        std::string lit = cur.text.substr(cur.pos);
        cur.fail("non-positive rate '" + lit + "'");
    }
    std::string lit = cur.read_number();
    if (lit.empty()) cur.fail("expected rate value");
    RateValue rv;
    try {
        rv.value = parse_rational(lit);
    } catch (const InvalidArgument& e) {
        cur.fail(e.what());
    }
    if (rv.value <= 0) cur.fail("non-positive rate '" + lit + "'");
    rv.kind = lit.find_first_of(".eE") == std::string::npos ? RateKind::Exact
                                                            : RateKind::Floating;
    return rv;
}

void parse_rate_keyword(LineCursor& cur, const std::string& key) {
    if (!cur.accept_str(key)) cur.fail("expected '" + key + "='");
    cur.expect('=', "after '" + key + "'");
}

} // namespace

ParsedNetwork parse_network(const std::string& text) {
    NetworkBuilder builder;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        LineCursor cur{line, line_no};
        if (cur.done()) continue;

        SparseComplex lhs = parse_complex(cur, builder);
        bool reversible;
        if (cur.accept_str("<->"))
            reversible = true;
        else if (cur.accept_str("->"))
            reversible = false;
        else
            cur.fail("expected '->' or '<->'");
        SparseComplex rhs = parse_complex(cur, builder);
        cur.expect(';', "before rate specification");

        int from = builder.complex_index(lhs);
        int to = builder.complex_index(rhs);
        if (reversible) {
            parse_rate_keyword(cur, "kf");
            RateValue kf = parse_rate_value(cur);
            cur.expect(',', "between kf and kr");
            parse_rate_keyword(cur, "kr");
            RateValue kr = parse_rate_value(cur);
            builder.add_edge(from, to, std::move(kf), cur);
            builder.add_edge(to, from, std::move(kr), cur);
        } else {
            parse_rate_keyword(cur, "k");
            builder.add_edge(from, to, parse_rate_value(cur), cur);
        }
        if (!cur.done()) cur.fail("trailing characters after statement");
    }
    if (builder.empty()) throw ParseError("no reactions found", line_no, 1);
    return builder.finish();
}

ParsedNetwork parse_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open network file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_network(ss.str());
}

std::string complex_to_string(const ReactionNetwork& net, int complex_index) {
    const ComplexVec& y = net.complexes.at(static_cast<std::size_t>(complex_index));
    std::string out;
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (y[k] != 1) out += std::to_string(y[k]) + " ";
        out += net.species[k];
    }
    return out.empty() ? "0" : out;
}

std::string serialize_network(const ReactionNetwork& net, const RateAssignment& rates) {
    rates.validate(net);
    std::string out;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        out += complex_to_string(net, net.edges[e].from);
        out += " -> ";
        out += complex_to_string(net, net.edges[e].to);
        out += " ; k=" + rational_to_string(rates.by_edge[e].value);
        out += "\n";
    }
    return out;
}

RateAssignment parse_rates_file(const std::string& text, const ReactionNetwork& net) {
    RateAssignment ra;
    ra.by_edge.assign(net.edges.size(), RateValue{});
    std::vector<char> assigned(net.edges.size(), 0);
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::istringstream ls(line);
        int i, j;
        std::string lit;
        if (!(ls >> i)) continue; // blank
        if (!(ls >> j >> lit)) throw ParseError("expected 'i j value'", line_no, 1);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing characters after value", line_no, 1);
        if (i < 1 || i > net.num_complexes() || j < 1 || j > net.num_complexes())
            throw ParseError("complex index out of range", line_no, 1);
        int e = net.edge_index(i - 1, j - 1);
        if (e < 0)
            throw ParseError("no edge " + std::to_string(i) + " -> " + std::to_string(j), line_no, 1);
        if (assigned[static_cast<std::size_t>(e)])
            throw ParseError("duplicate rate for edge " + std::to_string(i) + " -> " + std::to_string(j),
                             line_no, 1);
        RateValue rv;
        try {
            rv.value = parse_rational(lit);
        } catch (const InvalidArgument& err) {
            throw ParseError(err.what(), line_no, 1);
        }
        if (rv.value <= 0) throw ParseError("non-positive rate '" + lit + "'", line_no, 1);
        rv.kind = lit.find_first_of(".eE") == std::string::npos ? RateKind::Exact
                                                                : RateKind::Floating;
        ra.by_edge[static_cast<std::size_t>(e)] = std::move(rv);
        assigned[static_cast<std::size_t>(e)] = 1;
    }
    for (std::size_t e = 0; e < assigned.size(); ++e)
        if (!assigned[e])
            throw Error("rates file misses edge " + std::to_string(net.edges[e].from + 1) +
                        " -> " + std::to_string(net.edges[e].to + 1));
    return ra;
}

RateAssignment parse_rates_path(const std::string& path, const ReactionNetwork& net) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open rates file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_rates_file(ss.str(), net);
}

} // namespace crn
