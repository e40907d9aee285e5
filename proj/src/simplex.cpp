#include "crn/simplex.hpp"

#include <cstddef>

#include "crn/errors.hpp"

namespace crn {

LPResult lp_feasible_nonneg(const QMat& a, const QVec& b) {
    const std::size_t m = b.size();
    if (a.size() != m) throw InvalidArgument("lp: row count mismatch");
    const std::size_t n = m == 0 ? 0 : a[0].size();

    LPResult result;
    if (m == 0) {
        result.feasible = true;
        result.x.assign(n, Rational(0));
        return result;
    }

    // Standard form with rhs >= 0: sign_i (a_i x - s_i) = sign_i b_i,
    // artificial basis t, objective min sum(t).
    const std::size_t cols = n + 2 * m; // x | s | t
    QMat t_mat(m, QVec(cols, Rational(0)));
    QVec rhs(m);
    std::vector<int> sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) sign[i] = -1;
        for (std::size_t j = 0; j < n; ++j) t_mat[i][j] = sign[i] * a[i][j];
        t_mat[i][n + i] = -sign[i]; // slack
        t_mat[i][n + m + i] = 1;    // artificial
        rhs[i] = sign[i] * b[i];
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + m + i;

    // reduced costs for c = (0 | 0 | 1)
    QVec zrow(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < m; ++i) acc += t_mat[i][j];
        zrow[j] = (j >= n + m ? Rational(1) : Rational(0)) - acc;
    }

    auto pivot = [&](std::size_t row, std::size_t col) {
        Rational p = t_mat[row][col];
        for (auto& e : t_mat[row]) e /= p;
        rhs[row] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || t_mat[i][col] == 0) continue;
            Rational f = t_mat[i][col];
            for (std::size_t j = 0; j < cols; ++j) t_mat[i][j] -= f * t_mat[row][j];
            rhs[i] -= f * rhs[row];
        }
        if (zrow[col] != 0) {
            Rational f = zrow[col];
            for (std::size_t j = 0; j < cols; ++j) zrow[j] -= f * t_mat[row][j];
        }
        basis[row] = col;
    };

    while (true) {
        // Bland: smallest-index entering column among x and s
        std::size_t entering = cols;
        for (std::size_t j = 0; j < n + m; ++j)
            if (zrow[j] < 0) {
                entering = j;
                break;
            }
        if (entering == cols) break;

        std::size_t leaving = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t_mat[i][entering] <= 0) continue;
            if (leaving == m) {
                leaving = i;
                continue;
            }
            Rational lhs = rhs[i] * t_mat[leaving][entering];
            Rational cur = rhs[leaving] * t_mat[i][entering];
            if (lhs < cur || (lhs == cur && basis[i] < basis[leaving])) leaving = i;
        }
        if (leaving == m)
            throw Error("phase-1 simplex became unbounded"); // cannot happen
        pivot(leaving, entering);
    }

    Rational objective = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n + m) objective += rhs[i];

    if (objective == 0) {
        result.feasible = true;
        result.x.assign(n, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) result.x[basis[i]] = rhs[i];
        return result;
    }

    // y' = c_B^T B^{-1}, read off the artificial block; un-normalize signs.
    result.feasible = false;
    result.farkas_dual.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        Rational y = 0;
        for (std::size_t r = 0; r < m; ++r)
            if (basis[r] >= n + m) y += t_mat[r][n + m + i];
        result.farkas_dual[i] = sign[i] * y;
    }
    return result;
}

} // namespace crn
