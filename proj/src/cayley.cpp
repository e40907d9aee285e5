#include "crn/cayley.hpp"

#include "crn/errors.hpp"
#include "crn/structure.hpp"

namespace crn {

ZMat CayleyMatrix::in_complex_order() const {
    ZMat m(grouped.size(), ZVec(static_cast<std::size_t>(n)));
    for (std::size_t r = 0; r < grouped.size(); ++r)
        for (int c = 0; c < n; ++c)
            m[r][static_cast<std::size_t>(complex_of_column[static_cast<std::size_t>(c)])] =
                grouped[r][static_cast<std::size_t>(c)];
    return m;
}

CayleyMatrix cayley_matrix(const ReactionNetwork& net) {
    CayleyMatrix cay;
    cay.s = net.num_species();
    cay.n = net.num_complexes();
    auto classes = linkage_classes(net);
    cay.l = static_cast<int>(classes.size());

    cay.complex_of_column.reserve(static_cast<std::size_t>(cay.n));
    std::vector<int> class_of_column;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) {
            cay.complex_of_column.push_back(v);
            class_of_column.push_back(static_cast<int>(c));
        }
    cay.column_of_complex.assign(static_cast<std::size_t>(cay.n), -1);
    for (int col = 0; col < cay.n; ++col)
        cay.column_of_complex[static_cast<std::size_t>(cay.complex_of_column[static_cast<std::size_t>(col)])] = col;

    cay.grouped.assign(static_cast<std::size_t>(cay.s + cay.l),
                       ZVec(static_cast<std::size_t>(cay.n), Integer(0)));
    for (int col = 0; col < cay.n; ++col) {
        const ComplexVec& y = net.complexes[static_cast<std::size_t>(cay.complex_of_column[static_cast<std::size_t>(col)])];
        for (int r = 0; r < cay.s; ++r)
            cay.grouped[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = y[static_cast<std::size_t>(r)];
        cay.grouped[static_cast<std::size_t>(cay.s + class_of_column[static_cast<std::size_t>(col)])]
                   [static_cast<std::size_t>(col)] = 1;
    }
    return cay;
}

std::vector<ZVec> integer_kernel_basis(const CayleyMatrix& cay) {
    return integer_kernel(cay.in_complex_order());
}

bool binomial_in_moduli(const ReactionNetwork& net, const ZVec& u) {
    if (static_cast<int>(u.size()) != net.num_complexes())
        throw InvalidArgument("exponent vector length does not match complex count");
    ZMat m = cayley_matrix(net).in_complex_order();
    for (const auto& row : m) {
        Integer dot = 0;
        for (std::size_t j = 0; j < u.size(); ++j) dot += row[j] * u[j];
        if (dot != 0) return false;
    }
    return true;
}

std::pair<Rational, Rational> binomial_value(const QVec& tree_constants, const ZVec& u) {
    if (tree_constants.size() != u.size())
        throw InvalidArgument("exponent vector length does not match K length");
    Rational lhs = 1, rhs = 1;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        Integer e = abs(u[i]);
        if (!e.fits_ulong_p()) throw InvalidArgument("exponent too large");
        Rational p = pow_rational(tree_constants[i], e.get_ui());
        if (u[i] > 0)
            lhs *= p;
        else
            rhs *= p;
    }
    return {lhs, rhs};
}

ModuliResult moduli_membership_exact(const ReactionNetwork& net, const RateAssignment& rates) {
    ModuliResult res;
    CayleyMatrix cay = cayley_matrix(net);
    res.basis = integer_kernel_basis(cay);
    res.kernel_dim = static_cast<int>(res.basis.size());
    res.weakly_reversible = is_weakly_reversible(net);
    if (!res.weakly_reversible) {
        res.balanced = false;
        return res;
    }
    TreeConstants tc = tree_constants_minor(net, rates);
    for (const auto& u : res.basis) {
        auto [lhs, rhs] = binomial_value(tc.values, u);
        if (lhs != rhs) {
            res.balanced = false;
            res.has_witness = true;
            res.violated = u;
            res.lhs = lhs;
            res.rhs = rhs;
            return res;
        }
    }
    res.balanced = true;
    return res;
}

} // namespace crn
