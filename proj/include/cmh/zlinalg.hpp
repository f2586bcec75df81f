#ifndef CMH_ZLINALG_HPP
#define CMH_ZLINALG_HPP

#include <vector>

#include "cmh/util.hpp"

// Small exact integer/rational linear algebra: Smith normal form, integer
// kernels, rational solves.  Matrices here are tiny (rank <= 6), row-major.

namespace cmh {

using IVec = std::vector<int64_t>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& a, const IVec& x);
IMat imat_transpose(const IMat& a);

QMat qmat_from(const IMat& a);
QVec qmat_apply(const QMat& a, const QVec& x);
QVec qmat_apply(const IMat& a, const QVec& x);

// determinant by fraction-free elimination (exact)
Rat qmat_det(const QMat& a);
int64_t imat_det(const IMat& a);

// Inverse of a nonsingular square matrix, exact.
QMat qmat_inverse(const QMat& a);
QMat imat_inverse(const IMat& a);

// Solve a x = b for square nonsingular a.
QVec qsolve(const QMat& a, const QVec& b);
QVec qsolve(const IMat& a, const QVec& b);

struct SmithResult {
    IMat d;  // diagonal, d[i][i] >= 0, d_i | d_{i+1}
    IMat u;  // unimodular, u*a*v = d
    IMat v;
};

SmithResult smith_normal_form(const IMat& a);

// Integer basis of { x : a x = 0 }, columns returned as rows of the result.
std::vector<IVec> integer_kernel(const IMat& a);

// Hermite normal form (row-style, for comparing Z-spans of row vectors).
IMat hnf_rows(const IMat& a);

// signature (n_plus, n_minus) of a symmetric rational matrix, exact
std::pair<int, int> symmetric_signature(QMat a);

}  // namespace cmh

#endif
