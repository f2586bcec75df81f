#include "cmh/kappa.hpp"

#include <algorithm>

namespace cmh::kappa {

using numthy::hilbert_symbol;
using numthy::kronecker;

BinaryCM::BinaryCM(int64_t d, const Rat& na) : D(d), norm_a(na) {
    if (!D.fundamental()) throw domain_error("BinaryCM: discriminant must be fundamental");
    if (!D.odd()) throw domain_error("BinaryCM: even discriminants are not supported");
    if (!(norm_a > Rat(0))) throw domain_error("BinaryCM: ideal norm must be positive");
    for (auto& [p, e] : factorize(-d)) ram_primes.push_back(p);
    int64_t q = abs_d();
    if (gcd64(norm_a.num, q) != 1 || gcd64(norm_a.den, q) != 1)
        throw domain_error("BinaryCM: ideal norm must be prime to D");
}

int BinaryCM::o_of_mu(int64_t mu) const {
    int o = 0;
    for (int64_t q : ram_primes)
        if (mu_q(mu, q) == 0) ++o;
    return o;
}

Rat BinaryCM::q_value(int64_t mu) const {
    int64_t q = abs_d();
    // u = N(a)^{-1} mod |D| (as a rational, num/den both prime to D)
    int64_t u = inv_mod(((norm_a.num % q) + q) % q, q);
    u = check_i64(i128(u) * (norm_a.den % q) % q);
    int64_t m = ((mu % q) + q) % q;
    i128 t = i128(m) * m % q * u % q;
    return Rat(check_i64((q - (int64_t)t) % q), q);
}

bool BinaryCM::supported(const Rat& m, int64_t mu) const {
    return (m - q_value(mu)).mod1() == Rat(0);
}

namespace {

// chi_p(x) for p | D is the local norm residue symbol (D, x)_p
int chi_p(const BinaryCM& ctx, int64_t p, const Rat& x) {
    return hilbert_symbol(Rat(ctx.D.D), x, p);
}

}  // namespace

EtaFactors eta_factors(const Rat& m, int64_t mu, const BinaryCM& ctx) {
    if (!ctx.supported(m, mu))
        throw domain_error("eta_factors: m not in Q(mu) + Z");
    EtaFactors ef;
    Rat arg = -m * ctx.norm_a;
    bool all_nonzero = true;
    for (int64_t q : ctx.ram_primes)
        if (ctx.mu_q(mu, q) == 0) { all_nonzero = false; break; }
    if (all_nonzero) {
        ef.eta0 = 1;
        for (int64_t p : ctx.ram_primes) ef.eta_p[p] = 0;
        return ef;
    }
    int64_t prod_all = 1;
    for (int64_t q : ctx.ram_primes) {
        if (ctx.mu_q(mu, q) != 0) continue;
        prod_all = prod_all * (1 + chi_p(ctx, q, arg));
    }
    ef.eta0 = prod_all;
    for (int64_t p : ctx.ram_primes) {
        int64_t prod = 1;
        for (int64_t q : ctx.ram_primes) {
            if (q == p || ctx.mu_q(mu, q) != 0) continue;
            prod *= (1 + chi_p(ctx, q, arg));
        }
        ef.eta_p[p] = (1 - chi_p(ctx, p, arg)) * prod;
    }
    return ef;
}

FormalLog kappa(const Rat& m, int64_t mu, const BinaryCM& ctx) {
    FormalLog out;
    if (m < Rat(0)) return out;
    if (m.is_zero()) {
        if (((mu % ctx.abs_d()) + ctx.abs_d()) % ctx.abs_d() == 0)
            return FormalLog::k00_term(ctx.D.D, Rat(1));
        return out;
    }
    if (!ctx.supported(m, mu)) return out;  // off-support coefficients vanish
    Rat lambda = numthy::lambda_chi_1(ctx.D);
    EtaFactors ef = eta_factors(m, mu, ctx);
    Rat md = m * Rat(ctx.abs_d());
    if (!md.is_integer()) throw std::logic_error("kappa: m|D| not integral on support");
    int64_t n = md.num;
    // inert primes: only divisors of m|D| contribute through rho(m|D|/p)
    if (ef.eta0 != 0) {
        for (auto& [p, e] : factorize(n)) {
            if (kronecker(ctx.D.D, p) != -1) continue;
            int64_t np = n / p;
            int64_t r = numthy::rho(np, ctx.D);
            if (r == 0) continue;
            int ordm = valuation(m, p);
            Rat coeff = Rat(-ef.eta0 * (ordm + 1) * r) / lambda;
            out += FormalLog::log_term(p, coeff);
        }
    }
    int64_t rho_md = numthy::rho(n, ctx.D);
    if (rho_md != 0) {
        for (int64_t p : ctx.ram_primes) {
            int64_t ep = ef.eta_p.at(p);
            if (ep == 0) continue;
            int ordm = valuation(m, p);
            if (ordm + 1 <= 0) continue;
            Rat coeff = Rat(-ep * (ordm + 1) * rho_md) / lambda;
            out += FormalLog::log_term(p, coeff);
        }
    }
    return out;
}

ScriptE script_e(const BinaryCM& ctx, const Rat& mmax) {
    ScriptE se{ctx, mmax, {}};
    int64_t q = ctx.abs_d();
    for (int64_t mu = 0; mu < q; ++mu) {
        Rat base = ctx.q_value(mu);
        for (Rat m = base;; m += Rat(1)) {
            if (m > mmax) break;
            FormalLog k = kappa(m, mu, ctx);
            if (!k.is_zero()) se.coeffs[{mu, m}] = k;
        }
    }
    return se;
}

int64_t rho_genus(int64_t n, const Discriminant& D, const GenusSigns& signs) {
    if (!D.fundamental() || !D.odd())
        throw domain_error("rho_genus: D must be odd fundamental");
    if (n <= 0) return 0;
    int64_t r = numthy::rho(n, D);
    if (r == 0) return 0;
    for (auto& [q, s] : signs) {
        if (hilbert_symbol(Rat(D.D), Rat(n), q) != s) return 0;
    }
    return r;
}

FormalLog arithmetic_degree_n0(const Rat& m, int64_t mu, const BinaryCM& ctx) {
    if (!(m > Rat(0))) throw domain_error("arithmetic_degree_n0: m must be positive");
    if (!ctx.supported(m, mu)) throw domain_error("arithmetic_degree_n0: m not in Q(mu) + Z");
    FormalLog out;
    Rat md = m * Rat(ctx.abs_d());
    int64_t n = md.num;
    int64_t two_o = 1;
    for (int i = 0; i < ctx.o_of_mu(mu); ++i) two_o *= 2;
    Rat arg = -m * ctx.norm_a;
    // inert places: genus [[p0 d abar]] has xi_q = (D,-mN(a))_q (D, n_p)_q by
    // the character identity, so membership of the norm-n_p ideals reduces to
    // sign matching of (D, n_p)_q itself
    for (auto& [p, e] : factorize(n)) {
        if (kronecker(ctx.D.D, p) != -1) continue;
        int64_t np = n / p;
        if (np == 0) continue;
        GenusSigns signs;
        for (int64_t q : ctx.ram_primes)
            signs[q] = hilbert_symbol(Rat(ctx.D.D), arg, q) *
                       hilbert_symbol(Rat(ctx.D.D), Rat(np), q);
        int64_t cnt = rho_genus(np, ctx.D, signs);
        if (cnt == 0) continue;
        int ordm = valuation(m, p);
        out += FormalLog::log_term(p, Rat(two_o * (ordm + 1) * cnt));
    }
    // ramified places with mu_p = 0: the quaternion algebra ramifies at p, so
    // the character condition flips sign there
    for (int64_t p : ctx.ram_primes) {
        if (ctx.mu_q(mu, p) != 0) continue;
        if (n % p != 0) continue;
        int64_t np = n / p;
        int ordm = valuation(m, p);
        if (ordm < 0) continue;
        GenusSigns signs;
        for (int64_t q : ctx.ram_primes) {
            int s = hilbert_symbol(Rat(ctx.D.D), arg, q) *
                    hilbert_symbol(Rat(ctx.D.D), Rat(np), q);
            signs[q] = (q == p) ? -s : s;
        }
        int64_t cnt = rho_genus(np, ctx.D, signs);
        if (cnt == 0) continue;
        out += FormalLog::log_term(p, Rat(two_o * (ordm + 1) * cnt));
    }
    return out;
}

}  // namespace cmh::kappa
