#include "crn/exact_linalg.hpp"

#include <algorithm>
#include <cstddef>

#include "crn/errors.hpp"

namespace crn {

namespace {

std::size_t rows_of(const QMat& a) { return a.size(); }
std::size_t cols_of(const QMat& a) { return a.empty() ? 0 : a[0].size(); }

} // namespace

QMat to_rational(const ZMat& a) {
    QMat out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i].reserve(a[i].size());
        for (const auto& e : a[i]) out[i].emplace_back(e);
    }
    return out;
}

QMat rref(QMat a, std::vector<int>* pivots) {
    const std::size_t m = rows_of(a), n = cols_of(a);
    if (pivots) pivots->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        Rational inv = a[row][col];
        for (std::size_t j = col; j < n; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        if (pivots) pivots->push_back(static_cast<int>(col));
        ++row;
    }
    return a;
}

int rank_rational(QMat a) {
    std::vector<int> pivots;
    rref(std::move(a), &pivots);
    return static_cast<int>(pivots.size());
}

std::vector<QVec> nullspace(const QMat& a) {
    const std::size_t n = cols_of(a);
    std::vector<int> pivots;
    QMat r = rref(a, &pivots);
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;

    std::vector<QVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVec v(n, Rational(0));
        v[f] = 1;
        for (std::size_t r_i = 0; r_i < pivots.size(); ++r_i)
            v[static_cast<std::size_t>(pivots[r_i])] = -r[r_i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

ZVec clear_denominators(const QVec& v) {
    Integer lcm_den = 1;
    for (const auto& q : v) {
        Rational c = q;
        c.canonicalize();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    ZVec out(v.size());
    Integer content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * Rational(lcm_den);
        scaled.canonicalize();
        out[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& e : out) e /= content;
    for (const auto& e : out) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& x : out) x = -x;
        break;
    }
    return out;
}

bool lex_less(const ZVec& a, const ZVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<ZVec> integer_kernel(const ZMat& a) {
    std::vector<ZVec> basis;
    for (const auto& v : nullspace(to_rational(a)))
        basis.push_back(clear_denominators(v));
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

ZMat hermite_normal_form(ZMat a, ZMat* transform) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    ZMat u(m, ZVec(m, Integer(0)));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

    auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
        // row_dst -= q * row_src, in both H and U
        for (std::size_t j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
        for (std::size_t j = 0; j < m; ++j) u[dst][j] -= q * u[src][j];
    };

    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // gcd-eliminate entries below `row` in this column
        while (true) {
            std::size_t best = m;
            for (std::size_t i = row; i < m; ++i) {
                if (a[i][col] == 0) continue;
                if (best == m || cmp(abs(a[i][col]), abs(a[best][col])) < 0) best = i;
            }
            if (best == m) break; // column is zero from `row` down
            std::swap(a[best], a[row]);
            std::swap(u[best], u[row]);
            bool eliminated = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (a[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
                row_axpy(i, row, q);
                if (a[i][col] != 0) eliminated = false;
            }
            if (eliminated) break;
        }
        if (row < m && a[row][col] != 0) {
            if (a[row][col] < 0) {
                for (auto& e : a[row]) e = -e;
                for (auto& e : u[row]) e = -e;
            }
            for (std::size_t i = 0; i < row; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
                if (q != 0) row_axpy(i, row, q);
            }
            ++row;
        }
    }
    if (transform) *transform = std::move(u);
    return a;
}

std::vector<ZVec> integer_kernel_saturated(const ZMat& a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    // transpose
    ZMat at(n, ZVec(m, Integer(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) at[j][i] = a[i][j];
    ZMat u;
    ZMat h = hermite_normal_form(std::move(at), &u);
    std::vector<ZVec> basis;
    for (std::size_t i = 0; i < h.size(); ++i) {
        bool zero = true;
        for (const auto& e : h[i])
            if (e != 0) { zero = false; break; }
        if (!zero) continue;
        ZVec v = u[i];
        for (const auto& e : v) {
            if (e == 0) continue;
            if (e < 0)
                for (auto& x : v) x = -x;
            break;
        }
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

Integer det_bareiss(ZMat a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& r : a)
        if (r.size() != n) throw InvalidArgument("det of non-square matrix");
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Integer det = a[n - 1][n - 1];
    return sign > 0 ? det : Integer(-det);
}

Rational det_rational(const QMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    ZMat zi(n, ZVec(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm_den = 1;
        for (const auto& q : a[i]) {
            Rational c = q;
            c.canonicalize();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = a[i][j] * Rational(lcm_den);
            scaled.canonicalize();
            zi[i][j] = scaled.get_num();
        }
        scale *= lcm_den;
    }
    Rational det(det_bareiss(std::move(zi)), scale);
    det.canonicalize();
    return det;
}

bool solve_rational(const QMat& a, const QVec& b, QVec& x) {
    const std::size_t m = rows_of(a), n = cols_of(a);
    if (b.size() != m) throw InvalidArgument("solve: dimension mismatch");
    QMat aug(m, QVec(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    std::vector<int> pivots;
    QMat r = rref(std::move(aug), &pivots);
    for (int p : pivots)
        if (static_cast<std::size_t>(p) == n) return false; // pivot in b column
    x.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<std::size_t>(pivots[i])] = r[i][n];
    return true;
}

std::vector<ZVec> row_basis_integer(const QMat& a) {
    std::vector<int> pivots;
    QMat r = rref(a, &pivots);
    std::vector<ZVec> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        basis.push_back(clear_denominators(r[i]));
    return basis;
}

} // namespace crn
