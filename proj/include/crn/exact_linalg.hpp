#ifndef CRN_EXACT_LINALG_HPP
#define CRN_EXACT_LINALG_HPP

#include <vector>

#include "crn/rational.hpp"

namespace crn {

// Dense exact linear algebra over Q and Z. Matrices are row-major

QMat to_rational(const ZMat& a);

int rank_rational(QMat a);

/// Reduced row echelon form. Pivot column indices returned through `pivots`.
QMat rref(QMat a, std::vector<int>* pivots = nullptr);

/// Basis of the right kernel {v : a v = 0} over Q, one vector per free column.
std::vector<QVec> nullspace(const QMat& a);

/// Scales to integers, divides by content, makes first nonzero entry positive.
/// Zero vector maps to zero vector.
ZVec clear_denominators(const QVec& v);

/// Lexicographic order on integer vectors.
bool lex_less(const ZVec& a, const ZVec& b);

/// Right kernel of an integer matrix as primitive integer vectors
/// (cleared rational nullspace), sign-normalized and sorted lexicographically.
/// Spans a finite-index sublattice of the full integer kernel lattice.
std::vector<ZVec> integer_kernel(const ZMat& a);

/// Row-style Hermite normal form H = U a with U unimodular. If `transform`
/// is non-null it receives U.
ZMat hermite_normal_form(ZMat a, ZMat* transform = nullptr);

/// Full (saturated) integer kernel lattice basis, via HNF of the transpose
/// with transformation matrix.
std::vector<ZVec> integer_kernel_saturated(const ZMat& a);

/// Fraction-free (Bareiss) determinant.
Integer det_bareiss(ZMat a);

/// Determinant over Q: rows scaled to integers, then Bareiss.
Rational det_rational(const QMat& a);

/// One solution of a x = b (free variables set to 0). Returns false when the
/// system is inconsistent.
bool solve_rational(const QMat& a, const QVec& b, QVec& x);

/// Canonical integer basis of the row space: nonzero RREF rows cleared to
/// primitive integer vectors.
std::vector<ZVec> row_basis_integer(const QMat& a);

} // namespace crn

#endif
