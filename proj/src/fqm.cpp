#include "cmh/fqm.hpp"

#include <algorithm>
#include <cmath>

namespace cmh::fqm {

EvenLattice::EvenLattice(IMat g) : gram(std::move(g)) {
    int n = (int)gram.size();
    for (int i = 0; i < n; ++i) {
        if ((int)gram[i].size() != n) throw domain_error("EvenLattice: gram not square");
        if (((gram[i][i] % 2) + 2) % 2 != 0) throw domain_error("EvenLattice: odd diagonal entry");
        for (int j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw domain_error("EvenLattice: gram not symmetric");
    }
    if (imat_det(gram) == 0) throw domain_error("EvenLattice: degenerate gram");
    auto sig = symmetric_signature(qmat_from(gram));
    b_plus = sig.first;
    b_minus = sig.second;
}

Rat EvenLattice::q_of(const QVec& v) const {
    Rat s(0);
    int n = rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += v[i] * v[j] * Rat(gram[i][j]);
    return s / Rat(2);
}

Rat EvenLattice::pairing(const QVec& v, const QVec& w) const {
    Rat s(0);
    int n = rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += v[i] * w[j] * Rat(gram[i][j]);
    return s;
}

int64_t EvenLattice::det() const { return imat_det(gram); }

FqModule::FqModule(const EvenLattice& L) : n_(L.rank()), gram_(L.gram) {
    SmithResult snf = smith_normal_form(gram_);
    size_ = 1;
    for (int i = 0; i < n_; ++i) {
        int64_t d = snf.d[i][i];
        if (d == 0) throw domain_error("FqModule: degenerate gram");
        size_ = check_i64(i128(size_) * d);
        if (d > 1) {
            orders_.push_back(d);
            slot_of_order_.push_back(i);
            QVec g(n_, Rat(0));
            for (int r = 0; r < n_; ++r) g[r] = Rat(snf.v[r][i], d);
            gen_lifts_.push_back(g);
        }
    }
    u_ = snf.u;
    strides_.resize(orders_.size());
    int64_t st = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        strides_[i] = st;
        st = check_i64(i128(st) * orders_[i]);
    }
    // level: minimal l with l G^{-1} integral with even diagonal
    QMat ginv = imat_inverse(gram_);
    int64_t l = 1;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) l = lcm64(l, ginv[i][j].den);
    for (int i = 0; i < n_; ++i) {
        Rat d = ginv[i][i] * Rat(l);
        if (((d.num % 2) + 2) % 2 != 0) { l *= 2; break; }
    }
    level_ = l;
}

int64_t FqModule::neg(int64_t e) const {
    int64_t r = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        int64_t a = (e / strides_[i]) % orders_[i];
        r += ((orders_[i] - a) % orders_[i]) * strides_[i];
    }
    return r;
}

int64_t FqModule::add(int64_t a, int64_t b) const {
    int64_t r = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        int64_t x = (a / strides_[i]) % orders_[i];
        int64_t y = (b / strides_[i]) % orders_[i];
        r += ((x + y) % orders_[i]) * strides_[i];
    }
    return r;
}

QVec FqModule::lift(int64_t e) const {
    QVec v(n_, Rat(0));
    for (size_t i = 0; i < orders_.size(); ++i) {
        int64_t a = (e / strides_[i]) % orders_[i];
        if (a == 0) continue;
        for (int r = 0; r < n_; ++r) v[r] += Rat(a) * gen_lifts_[i][r];
    }
    return v;
}

Rat FqModule::q_value(int64_t e) const {
    QVec v = lift(e);
    Rat q(0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) q += v[i] * v[j] * Rat(gram_[i][j]);
    return (q / Rat(2)).mod1();
}

Rat FqModule::bilinear(int64_t a, int64_t b) const {
    QVec v = lift(a), w = lift(b);
    Rat s(0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += v[i] * w[j] * Rat(gram_[i][j]);
    return s.mod1();
}

bool FqModule::in_dual(const QVec& v) const {
    for (int i = 0; i < n_; ++i) {
        Rat s(0);
        for (int j = 0; j < n_; ++j) s += Rat(gram_[i][j]) * v[j];
        if (!s.is_integer()) return false;
    }
    return true;
}

int64_t FqModule::class_of(const QVec& v) const {
    // a = U (G v); class components are a_i mod d_i at the nontrivial slots
    QVec gv(n_, Rat(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) gv[i] += Rat(gram_[i][j]) * v[j];
    for (auto& x : gv)
        if (!x.is_integer()) throw domain_error("class_of: vector not in dual lattice");
    int64_t e = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        int slot = slot_of_order_[i];
        i128 a = 0;
        for (int j = 0; j < n_; ++j) a += i128(u_[slot][j]) * gv[j].num;
        int64_t d = orders_[i];
        int64_t am = (int64_t)(((a % d) + d) % d);
        e += am * strides_[i];
    }
    return e;
}

bool FqModule::same_as(const FqModule& o) const {
    return gram_ == o.gram_;
}

FqModule discriminant_group(const EvenLattice& L) { return FqModule(L); }

// --- WeilMat -----------------------------------------------------------------

namespace {

using Sparse = std::vector<std::pair<int, int64_t>>;

Sparse compress(std::vector<i128>& dense, std::vector<int>& touched) {
    Sparse out;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int e : touched) {
        if (dense[e] != 0) out.push_back({e, check_i64(dense[e], "weil matrix overflow")});
        dense[e] = 0;
    }
    touched.clear();
    return out;
}

// integer sparse polynomial reduced mod Phi_n, compared to zero
bool reduced_zero(const CycContext& ctx, std::vector<int64_t> c) {
    ctx.reduce(c);
    for (int64_t x : c)
        if (x != 0) return false;
    return true;
}

}  // namespace

WeilMat::WeilMat(std::shared_ptr<const CycContext> ctx, ScaledCyclotomic scal,
                 std::vector<Sparse> entries, int dim)
    : ctx_(std::move(ctx)), scal_(std::move(scal)), e_(std::move(entries)), dim_(dim) {}

WeilMat WeilMat::identity(std::shared_ptr<const CycContext> ctx, int dim) {
    std::vector<Sparse> e(dim * (size_t)dim);
    for (int i = 0; i < dim; ++i) e[i * (size_t)dim + i] = {{0, 1}};
    ScaledCyclotomic one = ScaledCyclotomic::from_rational(ctx, Rat(1));
    return WeilMat(std::move(ctx), std::move(one), std::move(e), dim);
}

ScaledCyclotomic WeilMat::entry(int i, int j) const {
    std::vector<Rat> c(ctx_->order(), Rat(0));
    for (auto& [e, v] : e_[i * (size_t)dim_ + j]) c[e] = Rat(v);
    return scal_ * ScaledCyclotomic(ctx_, std::move(c), 0);
}

WeilMat WeilMat::operator*(const WeilMat& o) const {
    if (dim_ != o.dim_) throw std::logic_error("WeilMat: dimension mismatch");
    int n = ctx_->order();
    std::vector<Sparse> out(dim_ * (size_t)dim_);
    std::vector<i128> scratch(n, 0);
    std::vector<int> touched;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < dim_; ++k) {
                const Sparse& a = e_[i * (size_t)dim_ + k];
                const Sparse& b = o.e_[k * (size_t)dim_ + j];
                if (a.empty() || b.empty()) continue;
                for (auto& [ea, ca] : a)
                    for (auto& [eb, cb] : b) {
                        int e = ea + eb;
                        if (e >= n) e -= n;
                        if (scratch[e] == 0) touched.push_back(e);
                        scratch[e] += i128(ca) * cb;
                    }
            }
            out[i * (size_t)dim_ + j] = compress(scratch, touched);
        }
    // pull integer content into the scalar to keep entries small
    int64_t g = 0;
    for (auto& s : out)
        for (auto& [e, v] : s) g = gcd64(g, v);
    ScaledCyclotomic scal = scal_ * o.scal_;
    if (g > 1) {
        for (auto& s : out)
            for (auto& [e, v] : s) v /= g;
        scal = scal * Rat(g);
    }
    return WeilMat(ctx_, std::move(scal), std::move(out), dim_);
}

WeilMat WeilMat::conj_transpose() const {
    int n = ctx_->order();
    std::vector<Sparse> out(dim_ * (size_t)dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Sparse s = e_[i * (size_t)dim_ + j];
            for (auto& [e, v] : s) e = (n - e) % n;
            std::sort(s.begin(), s.end());
            out[j * (size_t)dim_ + i] = std::move(s);
        }
    return WeilMat(ctx_, scal_.conj(), std::move(out), dim_);
}

bool WeilMat::operator==(const WeilMat& o) const {
    if (dim_ != o.dim_) return false;
    int n = ctx_->order();
    // clear rational denominators of both scalars
    auto int_scalar = [&](const ScaledCyclotomic& s, int64_t& den) {
        den = 1;
        for (auto& c : s.coeffs()) den = lcm64(den, c.den);
        std::vector<int64_t> p(n, 0);
        for (int i = 0; i < n; ++i) {
            const Rat& c = s.coeffs()[i];
            if (!c.is_zero()) p[i] = check_i64(i128(c.num) * (den / c.den));
        }
        return p;
    };
    int64_t la, lb;
    std::vector<int64_t> pa = int_scalar(scal_, la);
    std::vector<int64_t> pb = int_scalar(o.scal_, lb);
    int ka = scal_.k(), kb = o.scal_.k();
    // value_X(i,j) = (P_X / L_X) |A|^{-k_X/2} E_X(i,j)
    // cross-multiplied comparison; a parity mismatch multiplies the k=1 side
    // by sqrt|A| and the other by |A|
    i128 extra_b = la, extra_a = lb;
    if (ka != kb) {
        const auto& sq = ctx_->sqrt_group_order();
        auto mul_poly = [&](std::vector<int64_t>& p) {
            std::vector<int64_t> r(n, 0);
            for (int i = 0; i < n; ++i) {
                if (p[i] == 0) continue;
                for (int j = 0; j < n; ++j) {
                    if (sq[j] == 0) continue;
                    int e = (i + j) % n;
                    r[e] = check_i64(i128(r[e]) + i128(p[i]) * sq[j]);
                }
            }
            p = std::move(r);
        };
        if (ka == 1) { mul_poly(pa); extra_b = i128(extra_b) * ctx_->group_order(); }
        else { mul_poly(pb); extra_a = i128(extra_a) * ctx_->group_order(); }
    }
    // fold the integer cross factors into the scalar polys
    for (auto& x : pa) x = check_i64(i128(x) * check_i64(extra_a));
    for (auto& x : pb) x = check_i64(i128(x) * check_i64(extra_b));
    std::vector<int64_t> diff(n, 0);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            std::fill(diff.begin(), diff.end(), 0);
            const Sparse& A = e_[i * (size_t)dim_ + j];
            const Sparse& B = o.e_[i * (size_t)dim_ + j];
            for (int t = 0; t < n; ++t) {
                if (pa[t] != 0)
                    for (auto& [e, v] : A) {
                        int x = t + e;
                        if (x >= n) x -= n;
                        diff[x] = check_i64(i128(diff[x]) + i128(pa[t]) * v);
                    }
                if (pb[t] != 0)
                    for (auto& [e, v] : B) {
                        int x = t + e;
                        if (x >= n) x -= n;
                        diff[x] = check_i64(i128(diff[x]) - i128(pb[t]) * v);
                    }
            }
            if (!reduced_zero(*ctx_, diff)) return false;
        }
    return true;
}

// --- Weil representation ------------------------------------------------------

WeilMat weil_T(const std::shared_ptr<const FqModule>& m,
               const std::shared_ptr<const CycContext>& ctx) {
    int dim = (int)m->size();
    int n = ctx->order();
    std::vector<Sparse> e(dim * (size_t)dim);
    for (int i = 0; i < dim; ++i) {
        Rat q = m->q_value(i);
        if (n % q.den != 0) throw std::logic_error("weil_T: level does not divide ring order");
        int exp = (int)((q.num * (n / q.den)) % n);
        e[i * (size_t)dim + i] = {{exp, 1}};
    }
    return WeilMat(ctx, ScaledCyclotomic::from_rational(ctx, Rat(1)), std::move(e), dim);
}

bool milgram_check(const FqModule& m, int b_plus, int b_minus) {
    // numeric check
    std::complex<double> sum(0, 0);
    for (int64_t i = 0; i < m.size(); ++i) {
        double th = 2.0 * M_PI * m.q_value(i).to_double();
        sum += std::complex<double>(std::cos(th), std::sin(th));
    }
    double phase = 2.0 * M_PI * (((b_plus - b_minus) % 8 + 8) % 8) / 8.0;
    std::complex<double> rhs =
        std::sqrt((double)m.size()) * std::complex<double>(std::cos(phase), std::sin(phase));
    if (std::abs(sum - rhs) > 1e-12 * (1.0 + std::abs(rhs))) return false;
    if (is_square(m.size())) {
        // exact check: sum_mu e(Q(mu)) - sqrt|A| e(sig/8) = 0 in the cyclotomic ring
        int64_t r = (int64_t)std::llround(std::sqrt((double)m.size()));
        int n = (int)lcm64(8, m.level());
        CycContext ctx(n, m.size());
        std::vector<int64_t> c(n, 0);
        for (int64_t i = 0; i < m.size(); ++i) {
            Rat q = m.q_value(i);
            c[(q.num * (n / q.den)) % n] += 1;
        }
        int sig = ((b_plus - b_minus) % 8 + 8) % 8;
        c[(sig * n / 8) % n] -= r;
        ctx.reduce(c);
        for (int64_t x : c)
            if (x != 0) return false;
    }
    return true;
}

WeilMat weil_S(const std::shared_ptr<const FqModule>& m,
               const std::shared_ptr<const CycContext>& ctx, int b_plus, int b_minus) {
    if (!milgram_check(*m, b_plus, b_minus))
        throw domain_error("weil_S: signature fails the Milgram gate for this module");
    int dim = (int)m->size();
    int n = ctx->order();
    std::vector<Sparse> e(dim * (size_t)dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rat b = (-m->bilinear(i, j)).mod1();
            if (n % b.den != 0) throw std::logic_error("weil_S: level does not divide ring order");
            int exp = (int)((b.num * (n / b.den)) % n);
            e[i * (size_t)dim + j] = {{exp, 1}};
        }
    int sig = (((b_minus - b_plus) % 8) + 8) % 8;
    ScaledCyclotomic phase = ScaledCyclotomic::root_of_unity(ctx, Rat(sig, 8));
    ScaledCyclotomic scal(ctx, phase.coeffs(), 1);  // phase * |A|^{-1/2}
    return WeilMat(ctx, std::move(scal), std::move(e), dim);
}

WeilRep weil_rep(const EvenLattice& L) {
    WeilRep rep;
    rep.fqm = std::make_shared<FqModule>(L);
    int64_t n = lcm64(8, rep.fqm->level());
    rep.ctx = std::make_shared<CycContext>((int)n, rep.fqm->size());
    rep.T = weil_T(rep.fqm, rep.ctx);
    rep.S = weil_S(rep.fqm, rep.ctx, L.b_plus, L.b_minus);
    // T^{-1}: conjugate diagonal; S^{-1} = conjugate transpose (S is unitary)
    rep.Tinv = rep.T.conj_transpose();
    rep.Sinv = rep.S.conj_transpose();
    return rep;
}

WeilMat weil_word(const WeilRep& rep, const std::vector<WeilGen>& word) {
    WeilMat acc = WeilMat::identity(rep.ctx, (int)rep.fqm->size());
    for (WeilGen g : word) {
        switch (g) {
            case WeilGen::T: acc = acc * rep.T; break;
            case WeilGen::S: acc = acc * rep.S; break;
            case WeilGen::Tinv: acc = acc * rep.Tinv; break;
            case WeilGen::Sinv: acc = acc * rep.Sinv; break;
        }
    }
    return acc;
}

}  // namespace cmh::fqm
