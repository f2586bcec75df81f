#include "cmh/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace cmh::lattice {

DefiniteLattice::DefiniteLattice(IMat g) : gram(std::move(g)) {
    int n = (int)gram.size();
    if (n == 0) throw domain_error("DefiniteLattice: empty gram");
    // leading principal minors decide definiteness: all positive, or
    // alternating (-1)^k positive
    QMat q = qmat_from(gram);
    bool pos_ok = true, neg_ok = true;
    for (int k = 1; k <= n; ++k) {
        QMat sub(k, QVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = q[i][j];
        Rat d = qmat_det(sub);
        if (d.is_zero()) throw domain_error("DefiniteLattice: degenerate gram");
        if (!(d > Rat(0))) pos_ok = false;
        bool alt_pos = (k % 2 == 0) ? d > Rat(0) : d < Rat(0);
        if (!alt_pos) neg_ok = false;
    }
    if (pos_ok) sign = 1;
    else if (neg_ok) sign = -1;
    else throw domain_error("DefiniteLattice: gram not definite");
}

namespace {

// rational Cholesky Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2 of a
// positive definite gram/2
struct Chol {
    QMat u;
    QVec d;
};

Chol cholesky(const IMat& gram) {
    int n = (int)gram.size();
    QMat a(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(gram[i][j], 2);
    Chol ch;
    ch.u = QMat(n, QVec(n, Rat(0)));
    ch.d = QVec(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        ch.d[i] = a[i][i];
        for (int j = i + 1; j < n; ++j) ch.u[i][j] = a[i][j] / a[i][i];
        for (int r = i + 1; r < n; ++r)
            for (int c = i + 1; c < n; ++c) a[r][c] -= a[r][i] * a[i][c] / a[i][i];
    }
    return ch;
}

void enumerate(const Chol& ch, const QVec& shift, const Rat& bound, int level, QVec& coords,
               const Rat& used, std::vector<QVec>& out) {
    int n = (int)ch.d.size();
    if (level < 0) {
        QVec v(n);
        for (int i = 0; i < n; ++i) v[i] = coords[i] + shift[i];
        out.push_back(v);
        return;
    }
    // offset at this level from already-fixed outer coordinates
    Rat off = shift[level];
    for (int j = level + 1; j < n; ++j) off += ch.u[level][j] * (coords[j] + shift[j]);
    Rat budget = bound - used;
    if (budget < Rat(0)) return;
    // d (x + off)^2 <= budget
    double lim = std::sqrt(budget.to_double() / ch.d[level].to_double()) + 1e-9;
    int64_t lo = (int64_t)std::floor(-off.to_double() - lim) - 1;
    int64_t hi = (int64_t)std::ceil(-off.to_double() + lim) + 1;
    for (int64_t x = lo; x <= hi; ++x) {
        Rat t = Rat(x) + off;
        Rat contrib = ch.d[level] * t * t;
        if (used + contrib > bound) continue;
        coords[level] = Rat(x);
        enumerate(ch, shift, bound, level - 1, coords, used + contrib, out);
    }
}

}  // namespace

std::vector<QVec> short_vectors(const DefiniteLattice& p, const Rat& bound, const QVec& shift) {
    if (p.rank() > 4) throw domain_error("short_vectors: rank > 4 unsupported");
    if (bound < Rat(0)) throw domain_error("short_vectors: negative bound");
    IMat g = p.gram;
    if (p.sign < 0)
        for (auto& row : g)
            for (auto& x : row) x = -x;
    Chol ch = cholesky(g);
    QVec coords(p.rank(), Rat(0));
    std::vector<QVec> out;
    enumerate(ch, shift, bound, p.rank() - 1, coords, Rat(0), out);
    std::sort(out.begin(), out.end(), [](const QVec& a, const QVec& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    return out;
}

qseries::VVSeries<Rat> theta_series(const DefiniteLattice& p, const Rat& mmax) {
    if (p.sign < 0) throw domain_error("theta_series: lattice must be positive definite");
    EvenLattice L(p.gram);
    auto m = std::make_shared<FqModule>(L);
    qseries::VVSeries<Rat> out(m, m->level(), mmax, qseries::Rep::rho);
    for (int64_t e = 0; e < m->size(); ++e) {
        QVec shift = m->lift(e);
        auto vecs = short_vectors(p, mmax, shift);
        for (auto& v : vecs) {
            Rat q = L.q_of(v);
            if (q <= mmax) out.add_to(e, q, Rat(1));
        }
    }
    return out;
}

SplitData orthogonal_split(const EvenLattice& l, const QVec& x) {
    Rat qx = l.q_of(x);
    if (!(qx > Rat(0))) throw domain_error("orthogonal_split: Q(x) must be positive");
    int n = l.rank();
    // N = L n x^perp: integer kernel of the row (Gx)^T, cleared of denominators
    QVec gx(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gx[i] += Rat(l.gram[i][j]) * x[j];
    int64_t den = 1;
    for (auto& c : gx) den = lcm64(den, c.den);
    IMat row(1, IVec(n));
    for (int i = 0; i < n; ++i) row[0][i] = check_i64(i128(gx[i].num) * (den / gx[i].den));
    SplitData sd;
    sd.x = x;
    sd.n_basis = integer_kernel(row);
    // P = L n Qx: smallest positive c with c*x integral
    int64_t cden = 1;
    for (auto& c : x) cden = lcm64(cden, c.den);
    IVec px(n);
    for (int i = 0; i < n; ++i) px[i] = check_i64(i128(x[i].num) * (cden / x[i].den));
    int64_t g = 0;
    for (auto v : px) g = gcd64(g, v);
    // c x integral <=> cden | c * content-adjust; primitive generator:
    for (auto& v : px) v /= g;
    // px is the primitive integer vector on the line; P = Z px
    sd.p_basis = px;
    i128 pg = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pg += i128(px[i]) * l.gram[i][j] * px[j];
    sd.p_gram = IMat(1, IVec(1, check_i64(pg)));
    int r = (int)sd.n_basis.size();
    if (r != n - 1) throw std::logic_error("orthogonal_split: kernel rank unexpected");
    sd.n_gram = IMat(r, IVec(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            i128 s = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) s += i128(sd.n_basis[i][a]) * l.gram[a][b] * sd.n_basis[j][b];
            sd.n_gram[i][j] = check_i64(s);
        }
    // index from det(P) det(N) = det(L) index^2
    int64_t dp = sd.p_gram[0][0];
    int64_t dn = std::llabs(imat_det(sd.n_gram));
    int64_t dl = std::llabs(l.det());
    int64_t idx2 = check_i64(i128(dp) * dn / dl);
    if (i128(dp) * dn % dl != 0 || !is_square(idx2))
        throw std::logic_error("orthogonal_split: index relation violated");
    sd.index = (int64_t)std::llround(std::sqrt((double)idx2));
    return sd;
}

std::array<int64_t, 3> reduce_binary(const std::array<int64_t, 3>& form) {
    auto [a, b, c] = form;
    int64_t disc = b * b - 4 * a * c;
    if (disc >= 0) throw domain_error("reduce_binary: form not definite");
    bool neg = a < 0;
    if (neg) { a = -a; c = -c; }  // positive mirror
    while (true) {
        // normalize: -a < b <= a
        if (b > a || b <= -a) {
            int64_t k = (int64_t)std::llround((double)b / (2.0 * a));
            int64_t b2 = b - 2 * k * a;
            while (b2 > a) { b2 -= 2 * a; ++k; }
            while (b2 <= -a) { b2 += 2 * a; --k; }
            c = c - k * b + k * k * a;
            b = b2;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        if (a == c && b < 0) b = -b;
        if (-a < b && b <= a && a <= c) break;
    }
    if (neg) { a = -a; c = -c; }
    return {a, b, c};
}

bool binary_equivalent(const std::array<int64_t, 3>& f, const std::array<int64_t, 3>& g) {
    auto rf = reduce_binary(f);
    auto rg = reduce_binary(g);
    if (rf == rg) return true;
    auto rg2 = reduce_binary({g[0], -g[1], g[2]});
    return rf == rg2;
}

}  // namespace cmh::lattice
