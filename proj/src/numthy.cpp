#include "cmh/numthy.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cmh::numthy {

Discriminant::Discriminant(int64_t d) : D(d) {
    if (d >= 0) throw domain_error("discriminant must be negative");
    int64_t r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) throw domain_error("discriminant must be 0 or 1 mod 4");
}

namespace {
bool squarefree(int64_t n) {
    if (n < 0) n = -n;
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}
}  // namespace

bool Discriminant::fundamental() const {
    int64_t r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    int64_t q = D / 4;
    int64_t qr = ((q % 4) + 4) % 4;
    return squarefree(q) && (qr == 2 || qr == 3);
}

int kronecker(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int64_t am8 = ((a % 8) + 8) % 8;
        int two_sym = (am8 == 1 || am8 == 7) ? 1 : -1;
        int e = 0;
        while (n % 2 == 0) { n /= 2; ++e; }
        if (e % 2 == 1) sign *= two_sym;
    }
    // now n odd positive: Jacobi symbol
    a = ((a % n) + n) % n;
    int res = sign;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) res = -res;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) res = -res;
        a %= n;
    }
    return n == 1 ? res : 0;
}

namespace {

// (u|p) for odd prime p, u a p-adic unit
int legendre_unit(int64_t u, int64_t p) {
    u = ((u % p) + p) % p;
    // Euler criterion by fast exponentiation mod p
    int64_t e = (p - 1) / 2, base = u % p, r = 1;
    while (e) {
        if (e & 1) r = check_i64(i128(r) * base % p);
        base = check_i64(i128(base) * base % p);
        e >>= 1;
    }
    return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

}  // namespace

int hilbert_symbol(const Rat& a_, const Rat& b_, int64_t place) {
    if (a_.is_zero() || b_.is_zero()) throw domain_error("hilbert symbol needs nonzero arguments");
    // (a,b)_v only depends on square classes: replace x/y by x*y
    int64_t a = check_i64(i128(a_.num) * a_.den);
    int64_t b = check_i64(i128(b_.num) * b_.den);
    if (place == 0) return (a < 0 && b < 0) ? -1 : 1;
    int64_t p = place;
    if (p == 2) {
        int alpha = valuation(a, 2), beta = valuation(b, 2);
        int64_t u = a >> alpha, v = b >> beta;  // odd parts, signed
        auto eps = [](int64_t x) { return ((x - 1) / 2) & 1; };       // (x-1)/2 mod 2
        auto omega = [](int64_t x) { return ((x * x - 1) / 8) & 1; };  // (x^2-1)/8 mod 2
        int e = (eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)) & 1;
        return e ? -1 : 1;
    }
    if (!is_prime(p)) throw domain_error("hilbert symbol: place must be prime or 0");
    int alpha = valuation(a, p), beta = valuation(b, p);
    int64_t u = a, v = b;
    for (int i = 0; i < alpha; ++i) u /= p;
    for (int i = 0; i < beta; ++i) v /= p;
    int res = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) res = -res;
    if (beta & 1) res *= legendre_unit(u, p);
    if (alpha & 1) res *= legendre_unit(v, p);
    return res;
}

ClassData class_data(const Discriminant& disc) {
    int64_t D = disc.D;
    ClassData cd;
    cd.w = D == -3 ? 6 : (D == -4 ? 4 : 2);
    for (int64_t a = 1; a * a <= (-D) / 3; ++a) {
        for (int64_t b = -a + 1; b <= a; ++b) {
            int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            cd.forms.push_back({a, b, c});
        }
    }
    std::sort(cd.forms.begin(), cd.forms.end());
    cd.h = (int64_t)cd.forms.size();
    return cd;
}

int64_t rho(int64_t n, const Discriminant& disc) {
    if (!disc.fundamental()) throw domain_error("rho: discriminant must be fundamental");
    if (n < 0) throw domain_error("rho: negative argument");
    if (n == 0) return 0;
    int64_t r = 1;
    for (auto& [p, e] : factorize(n)) {
        int chi = kronecker(disc.D, p);
        if (chi == 0) continue;           // ramified: local factor 1
        if (chi == -1) {
            if (e % 2 == 1) return 0;     // inert with odd exponent
        } else {
            r *= (e + 1);                 // split
        }
    }
    return r;
}

Rat lambda_chi_1(const Discriminant& disc) {
    if (!disc.fundamental()) throw domain_error("lambda_chi_1: discriminant must be fundamental");
    ClassData cd = class_data(disc);
    return Rat(2 * cd.h, cd.w);
}

// ---------------------------------------------------------------------------
// kappa(0,0)
//
// With Lambda(chi,s) = |D|^{s/2} Gamma_R(s+1) L(chi,s) one has
//   Lambda'/Lambda(0) = log|D|/2 - log(pi)/2 + psi(1/2)/2 + L'(0)/L(0),
// psi(1/2) = -gamma - 2 log 2, and by Lerch
//   L'(chi,0) = sum_a chi(a) log Gamma(a/|D|) - log|D| * L(chi,0),
// L(chi,0) = Lambda-functional-equation value = 2h/w.
// ---------------------------------------------------------------------------

double kappa00(const Discriminant& disc) {
    if (!disc.fundamental()) throw domain_error("kappa00: discriminant must be fundamental");
    int64_t q = -disc.D;
    long double l0 = lambda_chi_1(disc).to_long_double();  // L(chi,0) = Lambda value 2h/w
    long double lg = 0.0L;
    for (int64_t a = 1; a < q; ++a) {
        int chi = kronecker(disc.D, a);
        if (chi == 0) continue;
        lg += chi * lgammal((long double)a / q);
    }
    long double lp_over_l = lg / l0 - logl((long double)q);
    const long double euler_gamma = 0.5772156649015328606065120900824024310422L;
    const long double pi_l = 3.14159265358979323846264338327950288L;
    long double k = logl(4.0L * pi_l) + euler_gamma - 2.0L * lp_over_l;
    return (double)k;
}

namespace {

// upper incomplete gamma Gamma(a,x), long double, a > 0, x > 0
long double upper_gamma(long double a, long double x) {
    if (x < a + 1.0L) {
        // lower series, then subtract
        long double sum = 1.0L / a, term = sum;
        for (int n = 1; n < 500; ++n) {
            term *= x / (a + n);
            sum += term;
            if (fabsl(term) < 1e-22L * fabsl(sum)) break;
        }
        long double lower = sum * expl(-x + a * logl(x));
        return tgammal(a) - lower;
    }
    // Lentz continued fraction
    long double tiny = 1e-30L;
    long double b = x + 1.0L - a, c = 1.0L / tiny, d = 1.0L / b, h = d;
    for (int i = 1; i < 500; ++i) {
        long double an = -1.0L * i * (i - a);
        b += 2.0L;
        d = an * d + b;
        if (fabsl(d) < tiny) d = tiny;
        c = b + an / c;
        if (fabsl(c) < tiny) c = tiny;
        d = 1.0L / d;
        long double del = d * c;
        h *= del;
        if (fabsl(del - 1.0L) < 1e-22L) break;
    }
    return expl(-x + a * logl(x)) * h;
}

}  // namespace

long double lambda_completed(const Discriminant& disc, long double s) {
    // Lambda_std(s) = sum_n chi(n) n [ J((s+1)/2, pi n^2/q) + J((2-s)/2, pi n^2/q) ],
    // J(a,x) = x^{-a} Gamma(a,x); from the theta-kernel split of the Mellin integral.
    int64_t q = -disc.D;
    long double lam = 0.0L;
    long double a1 = (s + 1.0L) / 2.0L, a2 = (2.0L - s) / 2.0L;
    for (int64_t n = 1;; ++n) {
        const long double pi_l = 3.14159265358979323846264338327950288L;
        long double x = pi_l * n * n / q;
        if (x > 50.0L && n > 3) break;
        int chi = kronecker(disc.D, n);
        if (chi == 0) continue;
        long double j = powl(x, -a1) * upper_gamma(a1, x) + powl(x, -a2) * upper_gamma(a2, x);
        lam += chi * n * j;
    }
    return lam;
}

double kappa00_lambda_fd(const Discriminant& disc) {
    if (!disc.fundamental())
        throw domain_error("kappa00_lambda_fd: discriminant must be fundamental");
    int64_t q = -disc.D;
    long double l0 = lambda_completed(disc, 0.0L);
    // Richardson-extrapolated central difference for Lambda'(0)
    auto central = [&](long double h) {
        return (lambda_completed(disc, h) - lambda_completed(disc, -h)) / (2.0L * h);
    };
    long double h = 1e-3L;
    long double d1 = central(h), d2 = central(h / 2.0L);
    long double deriv = (4.0L * d2 - d1) / 3.0L;
    return (double)(logl((long double)q) - 2.0L * deriv / l0);
}

double dirichlet_l(const Discriminant& disc, double s) {
    if (s <= 1.0) throw domain_error("dirichlet_l: need s > 1");
    int64_t q = -disc.D;
    (void)q;
    const int64_t M = 200000;
    double sum = 0.0;
    for (int64_t n = 1; n <= M; ++n) {
        int chi = kronecker(disc.D, n);
        if (chi) sum += chi * std::pow((double)n, -s);
    }
    return sum;
}

double expint_e1(double x) {
    if (x <= 0) throw domain_error("expint_e1: need x > 0");
    if (x <= 1.0) {
        const double euler_gamma = 0.57721566490153286060651209008240243104;
        double sum = -euler_gamma - std::log(x);
        double term = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= -x / k;
            sum -= term / k;
        }
        return sum;
    }
    // continued fraction e^{-x}/(x+1-1/(x+3-4/(x+5-...)))
    double b = x + 1.0, c = 1e308, d = 1.0 / b, h = d;
    for (int i = 1; i < 200; ++i) {
        double an = -1.0 * i * i;
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-17) break;
    }
    return std::exp(-x) * h;
}

LResult lfun_weight2(const std::vector<double>& a, int64_t N, LMode mode, int sign,
                     double eps_target) {
    if (sign != 1 && sign != -1) throw domain_error("lfun_weight2: sign must be +-1");
    if (a.size() < 2) throw domain_error("lfun_weight2: empty coefficient table");
    int64_t n_max = (int64_t)a.size() - 1;  // a[1..n_max]
    double c = 2.0 * M_PI / std::sqrt((double)N);
    // tail bound from |a_n| <= d(n) sqrt(n) <= 2n: sum_{n>M} 4 e^{-cn}/c
    double tail = 4.0 / c * std::exp(-c * (double)(n_max + 1)) / (1.0 - std::exp(-c));
    if (tail > eps_target)
        throw domain_error("lfun_weight2: insufficient coefficients, tail bound " +
                           std::to_string(tail) + " exceeds target " +
                           std::to_string(eps_target) + " at n_max=" + std::to_string(n_max));
    double sum = 0.0;
    if (mode == LMode::value) {
        for (int64_t n = 1; n <= n_max; ++n) sum += a[n] / n * std::exp(-c * n);
        sum *= (1 + sign);
    } else {
        if (sign != -1)
            throw domain_error("lfun_weight2: derivative mode is for odd functional equation");
        for (int64_t n = 1; n <= n_max; ++n) sum += a[n] / n * expint_e1(c * n);
        sum *= 2.0;
    }
    return {sum, tail};
}

}  // namespace cmh::numthy
