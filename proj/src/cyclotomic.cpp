#include "cmh/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "cmh/numthy.hpp"

namespace cmh::fqm {

namespace {

// exact division of integer polynomials (ascending coefficients)
std::vector<int64_t> poly_divide_exact(std::vector<int64_t> num, const std::vector<int64_t>& den) {
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<int64_t> q(dn - dd + 1, 0);
    for (int d = dn; d >= dd; --d) {
        if (num[d] == 0) continue;
        if (num[d] % den[dd] != 0) throw std::logic_error("poly_divide_exact: not divisible");
        int64_t f = num[d] / den[dd];
        q[d - dd] = f;
        for (int j = 0; j <= dd; ++j) num[d - dd + j] = check_i64(i128(num[d - dd + j]) - i128(f) * den[j]);
    }
    for (int64_t c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return q;
}

}  // namespace

std::vector<int64_t> CycContext::cyclotomic_poly(int n) {
    static std::map<int, std::vector<int64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;  // x^n - 1
    for (int d = 1; d < n; ++d)
        if (n % d == 0) poly = poly_divide_exact(poly, cyclotomic_poly(d));
    cache[n] = poly;
    return poly;
}

CycContext::CycContext(int n, int64_t group_order) : n_(n), A_(group_order) {
    if (n <= 0 || n % 8 != 0) throw domain_error("CycContext: order must be a positive multiple of 8");
    phi_ = cyclotomic_poly(n);
}

void CycContext::reduce(std::vector<int64_t>& c) const {
    c.resize(n_, 0);
    int deg = (int)phi_.size() - 1;  // phi_ monic
    for (int d = n_ - 1; d >= deg; --d) {
        int64_t f = c[d];
        if (f == 0) continue;
        for (int j = 0; j <= deg; ++j)
            c[d - deg + j] = check_i64(i128(c[d - deg + j]) - i128(f) * phi_[j]);
    }
}

void CycContext::reduce(std::vector<Rat>& c) const {
    c.resize(n_, Rat(0));
    int deg = (int)phi_.size() - 1;
    for (int d = n_ - 1; d >= deg; --d) {
        Rat f = c[d];
        if (f.is_zero()) continue;
        for (int j = 0; j <= deg; ++j) c[d - deg + j] -= f * Rat(phi_[j]);
    }
}

const std::vector<int64_t>& CycContext::sqrt_group_order() const {
    if (!sqrtA_.empty()) return sqrtA_;
    std::vector<int64_t> s(n_, 0);
    s[0] = 1;
    auto mul_by = [&](const std::vector<int64_t>& f) {
        std::vector<int64_t> r(n_, 0);
        for (int i = 0; i < n_; ++i) {
            if (s[i] == 0) continue;
            for (int j = 0; j < n_; ++j) {
                if (f[j] == 0) continue;
                int e = (i + j) % n_;
                r[e] = check_i64(i128(r[e]) + i128(s[i]) * f[j]);
            }
        }
        s = std::move(r);
    };
    for (auto& [p, e] : factorize(A_)) {
        for (int t = 0; t < e / 2; ++t) s[0] = check_i64(i128(s[0]) * p);
        if (e % 2 == 0) continue;
        if (p == 2) {
            if (n_ % 8 != 0) throw std::logic_error("sqrt2 needs 8 | n");
            std::vector<int64_t> f(n_, 0);
            f[n_ / 8] += 1;
            f[n_ - n_ / 8] += 1;  // zeta_8 + zeta_8^{-1} = sqrt 2
            mul_by(f);
        } else {
            if (n_ % p != 0) throw std::logic_error("sqrt(p) needs p | n");
            // Gauss sum: sum_a (a|p) zeta_p^a = sqrt(p) or i sqrt(p)
            std::vector<int64_t> g(n_, 0);
            for (int64_t a = 1; a < p; ++a) {
                int leg = numthy::kronecker(a, p);
                int e2 = (int)((a * (n_ / p)) % n_);
                g[e2] = check_i64(i128(g[e2]) + leg);
            }
            if (p % 4 == 3) {
                // multiply by -i = e(3/4) to cancel the i
                std::vector<int64_t> r(n_, 0);
                for (int i2 = 0; i2 < n_; ++i2)
                    if (g[i2] != 0) {
                        int e3 = (i2 + 3 * n_ / 4) % n_;
                        r[e3] = check_i64(i128(r[e3]) + g[i2]);
                    }
                g = std::move(r);
            }
            mul_by(g);
        }
    }
    // verify: s^2 = A mod Phi_n, and numerically positive
    std::vector<int64_t> sq(n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (s[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (s[j] == 0) continue;
            int e = (i + j) % n_;
            sq[e] = check_i64(i128(sq[e]) + i128(s[i]) * s[j]);
        }
    }
    sq[0] -= A_;
    reduce(sq);
    for (int64_t cv : sq)
        if (cv != 0) throw std::logic_error("sqrt_group_order: square check failed");
    double num = 0;
    for (int i = 0; i < n_; ++i) num += s[i] * std::cos(2.0 * M_PI * i / n_);
    if (num < 0) throw std::logic_error("sqrt_group_order: negative branch");
    sqrtA_ = std::move(s);
    return sqrtA_;
}

ScaledCyclotomic::ScaledCyclotomic(std::shared_ptr<const CycContext> ctx, std::vector<Rat> coeffs,
                                   int k)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)), k_(k) {
    c_.resize(ctx_->order(), Rat(0));
    if (k_ < 0 || k_ > 1) throw std::logic_error("ScaledCyclotomic: k flag out of range");
}

ScaledCyclotomic ScaledCyclotomic::root_of_unity(std::shared_ptr<const CycContext> ctx,
                                                 const Rat& r) {
    int n = ctx->order();
    Rat rm = r.mod1();
    if (n % rm.den != 0) throw domain_error("root_of_unity: denominator does not divide ring order");
    std::vector<Rat> c(n, Rat(0));
    c[(size_t)(rm.num * (n / rm.den)) % n] = Rat(1);
    return ScaledCyclotomic(std::move(ctx), std::move(c), 0);
}

ScaledCyclotomic ScaledCyclotomic::from_rational(std::shared_ptr<const CycContext> ctx,
                                                 const Rat& r) {
    std::vector<Rat> c(ctx->order(), Rat(0));
    c[0] = r;
    return ScaledCyclotomic(std::move(ctx), std::move(c), 0);
}

ScaledCyclotomic ScaledCyclotomic::operator*(const ScaledCyclotomic& o) const {
    int n = ctx_->order();
    std::vector<Rat> r(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (o.c_[j].is_zero()) continue;
            r[(i + j) % n] += c_[i] * o.c_[j];
        }
    }
    int k = k_ + o.k_;
    if (k == 2) {
        Rat inv(1, ctx_->group_order());
        for (auto& x : r) x *= inv;
        k = 0;
    }
    return ScaledCyclotomic(ctx_, std::move(r), k);
}

ScaledCyclotomic ScaledCyclotomic::operator+(const ScaledCyclotomic& o) const {
    if (k_ != o.k_) throw std::logic_error("ScaledCyclotomic: adding mixed scaling flags");
    std::vector<Rat> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return ScaledCyclotomic(ctx_, std::move(r), k_);
}

ScaledCyclotomic ScaledCyclotomic::operator-(const ScaledCyclotomic& o) const {
    if (k_ != o.k_) throw std::logic_error("ScaledCyclotomic: subtracting mixed scaling flags");
    std::vector<Rat> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return ScaledCyclotomic(ctx_, std::move(r), k_);
}

ScaledCyclotomic ScaledCyclotomic::operator*(const Rat& r) const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= r;
    return ScaledCyclotomic(ctx_, std::move(c), k_);
}

ScaledCyclotomic ScaledCyclotomic::conj() const {
    int n = ctx_->order();
    std::vector<Rat> r(n, Rat(0));
    for (int i = 0; i < n; ++i)
        if (!c_[i].is_zero()) r[(n - i) % n] += c_[i];
    return ScaledCyclotomic(ctx_, std::move(r), k_);
}

bool ScaledCyclotomic::is_zero() const {
    std::vector<Rat> r(c_);
    ctx_->reduce(r);
    for (auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool ScaledCyclotomic::operator==(const ScaledCyclotomic& o) const {
    if (k_ == o.k_) return (*this - o).is_zero();
    // z |A|^{-1/2} = w  <=>  z = w * sqrt(A)
    const ScaledCyclotomic& half = k_ == 1 ? *this : o;
    const ScaledCyclotomic& whole = k_ == 1 ? o : *this;
    const auto& s = ctx_->sqrt_group_order();
    std::vector<Rat> sr(s.size());
    for (size_t i = 0; i < s.size(); ++i) sr[i] = Rat(s[i]);
    ScaledCyclotomic rhs = whole * ScaledCyclotomic(ctx_, std::move(sr), 0);
    ScaledCyclotomic lhs(ctx_, half.c_, 0);
    return (lhs - rhs).is_zero();
}

std::complex<double> ScaledCyclotomic::numeric() const {
    int n = ctx_->order();
    std::complex<double> z(0, 0);
    for (int i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        double th = 2.0 * M_PI * i / n;
        z += c_[i].to_double() * std::complex<double>(std::cos(th), std::sin(th));
    }
    if (k_ == 1) z /= std::sqrt((double)ctx_->group_order());
    return z;
}

}  // namespace cmh::fqm
