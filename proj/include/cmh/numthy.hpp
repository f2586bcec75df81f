#ifndef CMH_NUMTHY_HPP
#define CMH_NUMTHY_HPP

#include <array>
#include <vector>

#include "cmh/util.hpp"

namespace cmh::numthy {

// Negative discriminant D = 0,1 mod 4, with fundamentality test.
struct Discriminant {
    int64_t D;
    explicit Discriminant(int64_t d);
    bool fundamental() const;
    bool odd() const { return ((D % 2) + 2) % 2 == 1; }
};

// class number, unit count, and the reduced forms themselves
struct ClassData {
    int64_t h;
    int w;  // 6 for D=-3, 4 for D=-4, else 2
    std::vector<std::array<int64_t, 3>> forms;  // (a,b,c), b^2-4ac=D, sorted
};

// Kronecker symbol (D|n), full generalization (n may be <= 0).
int kronecker(int64_t D, int64_t n);

// Hilbert symbol (a,b)_place for nonzero rationals; place = prime or 0 for infinity.
int hilbert_symbol(const Rat& a, const Rat& b, int64_t place);

ClassData class_data(const Discriminant& D);

// number of integral ideals of norm n in Q(sqrt(D)), D fundamental; rho(0)=0
int64_t rho(int64_t n, const Discriminant& D);

// Lambda(chi_D, 1) = 2 h / w, exact
Rat lambda_chi_1(const Discriminant& D);

// kappa(0,0) = log|D| - 2 Lambda'(chi_D,0)/Lambda(chi_D,0): log-Gamma route
double kappa00(const Discriminant& D);
// the same quantity through central differences of the incomplete-gamma
// continuation of Lambda (independent numeric route)
double kappa00_lambda_fd(const Discriminant& D);

// numerically continued completed L-function (q/pi)^((s+1)/2) Gamma((s+1)/2) L(chi_D, s),
// entire in s; exposed for the finite-difference cross-check
long double lambda_completed(const Discriminant& D, long double s);

// Dirichlet L(chi_D, s) for s > 1 by direct summation with Abel tail bound
double dirichlet_l(const Discriminant& D, double s);

enum class LMode { value, derivative };

struct LResult {
    double value;
    double tail_bound;
};

// Central values of a weight-2 level-N L-series from a coefficient table
// a[1..n_max].  sign is the functional-equation sign of Lambda(s)=eps*Lambda(2-s).
//   value mode:      L(1)  = (1+eps) * sum a_n/n * exp(-2 pi n / sqrt(N))
//   derivative mode: L'(1) =    2    * sum a_n/n * E1(2 pi n / sqrt(N))   (eps=-1)
// Throws if the supplied coefficients cannot reach tail bound <= eps_target.
LResult lfun_weight2(const std::vector<double>& a, int64_t N, LMode mode, int sign,
                     double eps_target = 1e-8);

// exponential integral E1(x), x > 0
double expint_e1(double x);

}  // namespace cmh::numthy

#endif
