#ifndef CMH_LATTICE_HPP
#define CMH_LATTICE_HPP

#include <array>
#include <memory>
#include <vector>

#include "cmh/fqm.hpp"
#include "cmh/qseries.hpp"

namespace cmh::lattice {

using fqm::EvenLattice;
using fqm::FqModule;

// definite lattice with its sign; gram is even integral
struct DefiniteLattice {
    IMat gram;
    int sign;  // +1 positive definite, -1 negative definite

    explicit DefiniteLattice(IMat g);
    int rank() const { return (int)gram.size(); }
};

// all v in shift + Z^rank with |Q(v)| <= bound, deterministic order
std::vector<QVec> short_vectors(const DefiniteLattice& p, const Rat& bound, const QVec& shift);

// theta series of a positive definite lattice: r(m,mu) = #{v in mu+P : Q(v)=m}
qseries::VVSeries<Rat> theta_series(const DefiniteLattice& p, const Rat& mmax);

// V = Q x  +  x^perp split of an ambient lattice along a positive-norm x in L'
struct SplitData {
    QVec x;                    // the splitting vector, L-coordinates
    IVec p_basis;              // generator of P = L n Qx, L-coordinates
    std::vector<IVec> n_basis; // basis of N = L n x^perp
    IMat p_gram;               // 1x1
    IMat n_gram;
    int64_t index;             // [L : P + N]
};

SplitData orthogonal_split(const EvenLattice& l, const QVec& x);

// Gauss reduction of a definite binary form (a,b,c); negative definite forms
// are reduced through their positive mirror (-a,b,-c) and mirrored back.
std::array<int64_t, 3> reduce_binary(const std::array<int64_t, 3>& form);

// proper or improper equivalence of definite binary forms
bool binary_equivalent(const std::array<int64_t, 3>& f, const std::array<int64_t, 3>& g);

}  // namespace cmh::lattice

#endif
