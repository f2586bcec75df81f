#include "cmh/zlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace cmh {

IMat imat_identity(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    int n = (int)a.size(), k = (int)b.size(), m = (int)b[0].size();
    IMat c(n, IVec(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            i128 s = 0;
            for (int t = 0; t < k; ++t) s += i128(a[i][t]) * b[t][j];
            c[i][j] = check_i64(s);
        }
    return c;
}

IVec imat_apply(const IMat& a, const IVec& x) {
    IVec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        i128 s = 0;
        for (size_t j = 0; j < x.size(); ++j) s += i128(a[i][j]) * x[j];
        y[i] = check_i64(s);
    }
    return y;
}

IMat imat_transpose(const IMat& a) {
    int n = (int)a.size(), m = (int)a[0].size();
    IMat t(m, IVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

QMat qmat_from(const IMat& a) {
    QMat q(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        q[i].resize(a[i].size());
        for (size_t j = 0; j < a[i].size(); ++j) q[i][j] = Rat(a[i][j]);
    }
    return q;
}

QVec qmat_apply(const QMat& a, const QVec& x) {
    QVec y(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

QVec qmat_apply(const IMat& a, const QVec& x) { return qmat_apply(qmat_from(a), x); }

namespace {
Rat det_inplace(QMat a) {
    int n = (int)a.size();
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Rat f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}
}  // namespace

Rat qmat_det(const QMat& a) { return det_inplace(a); }

int64_t imat_det(const IMat& a) {
    Rat d = qmat_det(qmat_from(a));
    if (!d.is_integer()) throw std::logic_error("imat_det: non-integer result");
    return d.num;
}

QMat qmat_inverse(const QMat& a) {
    int n = (int)a.size();
    QMat m(a);
    QMat inv = qmat_from(imat_identity(n));
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) throw domain_error("qmat_inverse: singular matrix");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Rat f = m[c][c];
        for (int j = 0; j < n; ++j) { m[c][j] /= f; inv[c][j] /= f; }
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            Rat g = m[r][c];
            for (int j = 0; j < n; ++j) { m[r][j] -= g * m[c][j]; inv[r][j] -= g * inv[c][j]; }
        }
    }
    return inv;
}

QMat imat_inverse(const IMat& a) { return qmat_inverse(qmat_from(a)); }

QVec qsolve(const QMat& a, const QVec& b) { return qmat_apply(qmat_inverse(a), b); }
QVec qsolve(const IMat& a, const QVec& b) { return qsolve(qmat_from(a), b); }

namespace {

void row_op(IMat& m, int i, int j, int64_t q) {  // row_i -= q * row_j
    for (size_t c = 0; c < m[i].size(); ++c)
        m[i][c] = check_i64(i128(m[i][c]) - i128(q) * m[j][c]);
}

void col_op(IMat& m, int i, int j, int64_t q) {  // col_i -= q * col_j
    for (size_t r = 0; r < m.size(); ++r)
        m[r][i] = check_i64(i128(m[r][i]) - i128(q) * m[r][j]);
}

}  // namespace

SmithResult smith_normal_form(const IMat& a) {
    int n = (int)a.size(), m = (int)a[0].size();
    SmithResult res{a, imat_identity(n), imat_identity(m)};
    IMat& d = res.d;
    int k = std::min(n, m);
    for (int t = 0; t < k; ++t) {
        // find a pivot with minimal absolute value in the remaining block
        while (true) {
            int pi = -1, pj = -1;
            int64_t best = 0;
            for (int i = t; i < n; ++i)
                for (int j = t; j < m; ++j)
                    if (d[i][j] != 0 && (pi < 0 || std::llabs(d[i][j]) < best)) {
                        pi = i; pj = j; best = std::llabs(d[i][j]);
                    }
            if (pi < 0) break;  // block is zero
            std::swap(d[pi], d[t]);
            std::swap(res.u[pi], res.u[t]);
            if (pj != t)
                for (int r = 0; r < n; ++r) std::swap(d[r][pj], d[r][t]);
            if (pj != t)
                for (int r = 0; r < m; ++r) std::swap(res.v[r][pj], res.v[r][t]);
            bool clean = true;
            for (int i = t + 1; i < n; ++i)
                if (d[i][t] != 0) {
                    int64_t q = d[i][t] / d[t][t];
                    row_op(d, i, t, q);
                    row_op(res.u, i, t, q);
                    if (d[i][t] != 0) clean = false;
                }
            for (int j = t + 1; j < m; ++j)
                if (d[t][j] != 0) {
                    int64_t q = d[t][j] / d[t][t];
                    col_op(d, j, t, q);
                    col_op(res.v, j, t, q);
                    if (d[t][j] != 0) clean = false;
                }
            if (!clean) continue;
            // divisibility condition; fold a bad entry into the pivot row
            bool divides = true;
            for (int i = t + 1; i < n && divides; ++i)
                for (int j = t + 1; j < m && divides; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_op(d, t, i, -1);
                        row_op(res.u, t, i, -1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d[t][t] < 0) {
            for (int j = 0; j < m; ++j) d[t][j] = -d[t][j];
            for (int j = 0; j < n; ++j) res.u[t][j] = -res.u[t][j];
        }
    }
    return res;
}

std::vector<IVec> integer_kernel(const IMat& a) {
    SmithResult s = smith_normal_form(a);
    int m = (int)a[0].size();
    int k = std::min((int)a.size(), m);
    std::vector<IVec> basis;
    for (int j = 0; j < m; ++j) {
        bool zero_col = j >= k || s.d[j][j] == 0;
        if (!zero_col) continue;
        IVec v(m);
        for (int r = 0; r < m; ++r) v[r] = s.v[r][j];
        basis.push_back(v);
    }
    return basis;
}

IMat hnf_rows(const IMat& a) {
    IMat m(a);
    int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        // gcd out the column below the pivot
        for (int i = r + 1; i < rows; ++i) {
            while (m[i][c] != 0) {
                int64_t q = m[r][c] / m[i][c];
                row_op(m, r, i, q);
                std::swap(m[r], m[i]);
            }
        }
        if (m[r][c] < 0)
            for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (int i = 0; i < r; ++i) {
            int64_t q = m[i][c] / m[r][c];
            if (m[i][c] % m[r][c] < 0) q -= 1;
            if (q != 0) row_op(m, i, r, q);
        }
        ++r;
    }
    m.resize(r);
    return m;
}

std::pair<int, int> symmetric_signature(QMat a) {
    // Lagrange congruence diagonalization, exact.
    int n = (int)a.size();
    int plus = 0, minus = 0;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && !a[i][i].is_zero()) { p = i; break; }
        if (p < 0) {
            // all remaining diagonal entries vanish; create one from an
            // off-diagonal entry, or the remaining block is zero
            int bi = -1, bj = -1;
            for (int i = 0; i < n && bi < 0; ++i)
                if (!done[i])
                    for (int j = i + 1; j < n; ++j)
                        if (!done[j] && !a[i][j].is_zero()) { bi = i; bj = j; break; }
            if (bi < 0) break;  // zero block: degenerate part
            for (int t = 0; t < n; ++t) {  // row/col_i += row/col_j
                a[bi][t] += a[bj][t];
            }
            for (int t = 0; t < n; ++t) a[t][bi] += a[t][bj];
            p = bi;
        }
        Rat d = a[p][p];
        if (d > Rat(0)) ++plus; else ++minus;
        done[p] = true;
        for (int i = 0; i < n; ++i) {
            if (i == p || done[i] || a[i][p].is_zero()) continue;
            Rat f = a[i][p] / d;
            for (int t = 0; t < n; ++t) a[i][t] -= f * a[p][t];
            for (int t = 0; t < n; ++t) a[t][i] -= f * a[t][p];
        }
    }
    return {plus, minus};
}

}  // namespace cmh
