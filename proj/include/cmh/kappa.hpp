#ifndef CMH_KAPPA_HPP
#define CMH_KAPPA_HPP

#include <map>
#include <memory>

#include "cmh/formal_log.hpp"
#include "cmh/numthy.hpp"
#include "cmh/qseries.hpp"

namespace cmh::kappa {

using numthy::Discriminant;
using qseries::FormalLog;

// The binary CM lattice (a, -N/N(a)) for a fractional ideal a of Q(sqrt D):
// discriminant group Z/|D| with Q(mu) = -mu^2 u / |D| mod 1, u = N(a)^{-1} mod |D|.
struct BinaryCM {
    Discriminant D;
    Rat norm_a;

    BinaryCM(int64_t d, const Rat& na);

    int64_t abs_d() const { return -D.D; }
    // local component mu_q for q | D: the residue of mu mod q
    int64_t mu_q(int64_t mu, int64_t q) const { return ((mu % q) + q) % q; }
    int o_of_mu(int64_t mu) const;  // #{q | D : mu_q = 0}
    Rat q_value(int64_t mu) const;  // Q(mu) mod 1, in [0,1)
    bool supported(const Rat& m, int64_t mu) const;  // m in Q(mu) + Z
    std::vector<int64_t> ram_primes;  // primes dividing D, ascending
};

struct EtaFactors {
    int64_t eta0;
    std::map<int64_t, int64_t> eta_p;  // p | D -> eta_p
};

// Local eta factors: eta_p = (1 - chi_p(-m N(a))) prod_{q|D, q != p, mu_q = 0}
// (1 + chi_q(-m N(a))), eta_0 the full product; when mu_q != 0 for every q | D
// the convention is eta_0 = 1, eta_p = 0.
EtaFactors eta_factors(const Rat& m, int64_t mu, const BinaryCM& ctx);

// kappa(m, mu) of the incoherent Eisenstein series derivative as an exact
// FormalLog; kappa(0,0) stays the symbol kappa00(D), m < 0 gives zero.
FormalLog kappa(const Rat& m, int64_t mu, const BinaryCM& ctx);

// E_N(tau) truncated at mmax, coefficients kappa(m, mu); indexed by Z/|D|
// through an explicit class dictionary into an FqModule of the caller's lattice
struct ScriptE {
    BinaryCM ctx;
    Rat mmax;
    // (mu, m) -> kappa(m,mu), only nonzero entries, m in [0, mmax]
    std::map<std::pair<int64_t, Rat>, FormalLog> coeffs;
};

ScriptE script_e(const BinaryCM& ctx, const Rat& mmax);

// genus selected by its character values: q | D -> +-1
using GenusSigns = std::map<int64_t, int>;

// rho(n, [[b]]): rho(n) when (D,n)_q matches signs[q] at every q | D, else 0
int64_t rho_genus(int64_t n, const Discriminant& D, const GenusSigns& signs);

// arithmetic degree of Z(m, a, mu) on the CM stack, via the genus-refined
// ideal counts with the genus pinned by character compatibility (no choice of
// auxiliary prime is made)
FormalLog arithmetic_degree_n0(const Rat& m, int64_t mu, const BinaryCM& ctx);

}  // namespace cmh::kappa

#endif
