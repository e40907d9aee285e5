#ifndef CRN_NETWORK_HPP
#define CRN_NETWORK_HPP

#include <string>
#include <utility>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

/// Exponent vector of a complex over the species list.
using ComplexVec = std::vector<int>;

struct Edge {
    int from = 0; // 0-based complex indices
    int to = 0;
    friend bool operator==(const Edge& a, const Edge& b) {
        return a.from == b.from && a.to == b.to;
    }
};

/// Directed graph on complexes. Species and complexes are kept in
/// first-appearance order; all structural quantities refer to these indices.
struct ReactionNetwork {
    std::vector<std::string> species;
    std::vector<ComplexVec> complexes;
    std::vector<Edge> edges;

    int num_species() const { return static_cast<int>(species.size()); }
    int num_complexes() const { return static_cast<int>(complexes.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    /// Index of a directed edge, -1 if absent.
    int edge_index(int from, int to) const;

    /// Throws InvalidArgument on any violated invariant: ragged or negative
    /// exponent vectors, self-loops, duplicate edges, duplicate complexes,
    /// out-of-range indices.
    void validate() const;
};

enum class RateKind { Exact, Floating };

/// A positive rate constant. The value is always held exactly (decimal
/// source literals convert losslessly); `kind` records the source notation.
struct RateValue {
    Rational value;
    RateKind kind = RateKind::Exact;
    double approx() const { return to_double(value); }
};

struct RateAssignment {
    std::vector<RateValue> by_edge; // parallel to ReactionNetwork::edges

    bool all_exact() const;
    std::vector<double> to_doubles() const;
    /// Positive values, one per edge. Throws InvalidArgument otherwise.
    void validate(const ReactionNetwork& net) const;
};

struct ParsedNetwork {
    ReactionNetwork network;
    RateAssignment rates;
};

/// Parses the reaction DSL:
///   <complex> -> <complex> ; k=<value>
///   <complex> <-> <complex> ; kf=<value>, kr=<value>
/// where <complex> is `0` or `+`-separated `<coeff?> <species>` terms and
/// <value> is a positive integer, rational p/q, decimal or scientific
/// literal. `#` starts a comment. Throws ParseError with line/column.
ParsedNetwork parse_network(const std::string& text);
ParsedNetwork parse_network_file(const std::string& path);

/// One `->` statement per directed edge, in edge order. Parsing the output
/// reproduces the network (species, complexes and edges in identical order).
std::string serialize_network(const ReactionNetwork& net, const RateAssignment& rates);

std::string complex_to_string(const ReactionNetwork& net, int complex_index);

/// Rates file: one `i j <value>` line per edge, 1-based complex indices,
/// domain must cover the edge set exactly. `#` comments allowed.
RateAssignment parse_rates_file(const std::string& text, const ReactionNetwork& net);
RateAssignment parse_rates_path(const std::string& path, const ReactionNetwork& net);

} // namespace crn

#endif
