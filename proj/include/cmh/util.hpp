#ifndef CMH_UTIL_HPP
#define CMH_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmh {

using std::int64_t;
using i128 = __int128;

// Thrown when an operation is called outside its mathematical hypotheses
// (exit code 2 at the CLI).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Thrown by file ingestion (exit code 3 at the CLI).
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

inline int64_t check_i64(i128 v, const char* what = "integer overflow") {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw std::overflow_error(what);
    return int64_t(v);
}

inline int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { int64_t t = a % b; a = b; b = t; }
    return a;
}

inline int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return check_i64(i128(a) / gcd64(a, b) * b, "lcm overflow");
}

// Exact rational on 64-bit numerator/denominator, normalized with den > 0.
// Intermediate products run through __int128 and overflow throws.
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int64_t g = gcd64(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n;
        i128 g = 1;
        { i128 x = a, y = d; while (y) { i128 t = x % y; x = y; y = t; } g = x ? x : 1; }
        return Rat{check_i64(n / g, "rational overflow"), check_i64(d / g, "rational overflow"), 0};
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw domain_error("rational division by zero");
        return make(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    Rat operator-() const { return Rat{-num, den, 0}; }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    double to_double() const { return double(num) / double(den); }
    long double to_long_double() const { return (long double)num / (long double)den; }

    // representative of this value mod 1 in [0,1)
    Rat mod1() const {
        int64_t r = num % den;
        if (r < 0) r += den;
        return Rat{r, den, 0};
    }

    int64_t floor() const {
        int64_t q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    Rat(int64_t n, int64_t d, int) : num(n), den(d) {}
};

inline Rat abs(const Rat& r) { return r.num < 0 ? -r : r; }

// p-adic valuation of a nonzero integer
inline int valuation(int64_t n, int64_t p) {
    if (n == 0) throw domain_error("valuation of zero");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline int valuation(const Rat& r, int64_t p) {
    if (r.num == 0) throw domain_error("valuation of zero");
    return valuation(r.num, p) - valuation(r.den, p);
}

// trial-division factorization; inputs here stay comfortably small
inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    if (n < 0) n = -n;
    if (n == 0) throw domain_error("factorize(0)");
    std::vector<std::pair<int64_t, int>> f;
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_square(int64_t n) {
    if (n < 0) return false;
    int64_t r = int64_t(std::sqrt((double)n));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

inline bool is_square(const Rat& r) {
    return r.num >= 0 && is_square(r.num) && is_square(r.den);
}

inline int64_t inv_mod(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) { int64_t q = g / a1; g -= q * a1; std::swap(g, a1); x -= q * x1; std::swap(x, x1); }
    if (g != 1) throw domain_error("inv_mod: not invertible");
    return ((x % m) + m) % m;
}

}  // namespace cmh

#endif
