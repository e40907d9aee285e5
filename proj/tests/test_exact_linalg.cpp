#include <doctest.h>

#include <random>

#include "crn/exact_linalg.hpp"

using namespace crn;

namespace {

// Laplace expansion, the slow independent determinant route.
Integer det_expansion(const ZMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Integer det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        ZMat minor;
        for (std::size_t i = 1; i < n; ++i) {
            ZVec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        Integer term = a[0][j] * det_expansion(minor);
        det += (j % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

ZMat random_zmat(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    ZMat a(m, ZVec(n));
    for (auto& row : a)
        for (auto& e : row) e = d(rng);
    return a;
}

bool is_zero(const ZVec& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

ZVec matvec(const ZMat& a, const ZVec& x) {
    ZVec out(a.size(), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

} // namespace

TEST_CASE("bareiss determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 5);
        std::size_t n = size(rng);
        ZMat a = random_zmat(rng, n, n);
        CHECK(det_bareiss(a) == det_expansion(a));
    }
}

TEST_CASE("rational determinant handles denominators") {
    QMat a = {{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}};
    CHECK(det_rational(a) == Rational(1, 10) - Rational(1, 12));
}

TEST_CASE("rank and nullspace") {
    QMat a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank_rational(a) == 2);
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    // a . v = 0
    for (const auto& row : a) {
        Rational dot = 0;
        for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
        CHECK(dot == 0);
    }
}

TEST_CASE("clear_denominators yields primitive, sign-normalized vectors") {
    QVec v = {Rational(-1, 2), Rational(1), Rational(-1, 2)};
    ZVec z = clear_denominators(v);
    CHECK(z == ZVec{1, -2, 1});
    CHECK(is_zero(clear_denominators(QVec{0, 0})));
}

TEST_CASE("integer kernel vectors satisfy A v = 0 and count matches") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> md(1, 5), nd(1, 6);
        ZMat a = random_zmat(rng, md(rng), nd(rng));
        auto basis = integer_kernel(a);
        const std::size_t n = a[0].size();
        CHECK(basis.size() == n - static_cast<std::size_t>(rank_rational(to_rational(a))));
        for (const auto& v : basis) CHECK(is_zero(matvec(a, v)));
    }
}

TEST_CASE("hermite normal form reproduces the input via the transform") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        ZMat a = random_zmat(rng, 4, 5);
        ZMat u;
        ZMat h = hermite_normal_form(a, &u);
        // H = U A exactly
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                Integer acc = 0;
                for (std::size_t k = 0; k < 4; ++k) acc += u[i][k] * a[k][j];
                CHECK(acc == h[i][j]);
            }
        // U unimodular
        Integer du = det_bareiss(u);
        CHECK((du == 1 || du == -1));
    }
}

TEST_CASE("saturated kernel and cleared kernel span the same Q-space") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> md(1, 4), nd(2, 6);
        ZMat a = random_zmat(rng, md(rng), nd(rng), -3, 3);
        auto cleared = integer_kernel(a);
        auto saturated = integer_kernel_saturated(a);
        REQUIRE(cleared.size() == saturated.size());
        for (const auto& v : saturated) CHECK(is_zero(matvec(a, v)));

        if (cleared.empty()) continue;
        // each cleared vector is an integer combination of the saturated basis,
        // and each saturated vector is a rational combination of the cleared one
        QMat sat_cols(a[0].size(), QVec(saturated.size()));
        for (std::size_t j = 0; j < saturated.size(); ++j)
            for (std::size_t i = 0; i < a[0].size(); ++i) sat_cols[i][j] = Rational(saturated[j][i]);
        for (const auto& v : cleared) {
            QVec rhs;
            for (const auto& e : v) rhs.emplace_back(e);
            QVec x;
            REQUIRE(solve_rational(sat_cols, rhs, x));
            for (const auto& coeff : x) {
                Rational c = coeff;
                c.canonicalize();
                CHECK(c.get_den() == 1); // saturation: integer coordinates
            }
        }
        QMat clr_cols(a[0].size(), QVec(cleared.size()));
        for (std::size_t j = 0; j < cleared.size(); ++j)
            for (std::size_t i = 0; i < a[0].size(); ++i) clr_cols[i][j] = Rational(cleared[j][i]);
        for (const auto& v : saturated) {
            QVec rhs;
            for (const auto& e : v) rhs.emplace_back(e);
            QVec x;
            CHECK(solve_rational(clr_cols, rhs, x)); // d v in sublattice for some d
        }
    }
}

TEST_CASE("solve_rational detects inconsistency") {
    QMat a = {{1, 1}, {1, 1}};
    QVec x;
    CHECK(solve_rational(a, QVec{1, 1}, x));
    CHECK_FALSE(solve_rational(a, QVec{1, 2}, x));
}

TEST_CASE("row_basis_integer spans the row space") {
    QMat a = {{Rational(1, 2), Rational(1, 2)}, {1, 1}, {0, 1}};
    auto basis = row_basis_integer(a);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == ZVec{1, 0});
    CHECK(basis[1] == ZVec{0, 1});
}
