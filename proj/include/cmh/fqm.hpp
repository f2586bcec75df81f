#ifndef CMH_FQM_HPP
#define CMH_FQM_HPP

#include <memory>
#include <vector>

#include "cmh/cyclotomic.hpp"
#include "cmh/zlinalg.hpp"

namespace cmh::fqm {

// Even lattice given by its Gram matrix in a fixed basis; bilinear form
// (x,y) = x^T G y, quadratic form Q(x) = (x,x)/2.
struct EvenLattice {
    IMat gram;
    int b_plus = 0, b_minus = 0;

    explicit EvenLattice(IMat g);
    int rank() const { return (int)gram.size(); }
    Rat q_of(const QVec& v) const;
    Rat pairing(const QVec& v, const QVec& w) const;
    int64_t det() const;
};

// Finite quadratic module L'/L with Q: A -> Q/Z.
class FqModule {
public:
    explicit FqModule(const EvenLattice& L);

    int64_t size() const { return size_; }
    const std::vector<int64_t>& orders() const { return orders_; }  // elementary divisors > 1
    int rank_ambient() const { return n_; }
    const IMat& gram() const { return gram_; }
    int64_t level() const { return level_; }

    int64_t neg(int64_t e) const;
    int64_t add(int64_t a, int64_t b) const;
    QVec lift(int64_t e) const;          // fixed representative in L' (ambient coords)
    Rat q_value(int64_t e) const;        // Q(e) mod 1, in [0,1)
    Rat bilinear(int64_t a, int64_t b) const;  // (a,b) mod 1, in [0,1)

    bool in_dual(const QVec& v) const;
    int64_t class_of(const QVec& v) const;  // throws if v not in L'

    bool same_as(const FqModule& o) const;

private:
    int n_;
    IMat gram_;
    int64_t size_;
    int64_t level_;
    std::vector<int64_t> orders_;        // nontrivial elementary divisors
    std::vector<int64_t> strides_;
    QMat gen_lifts_;                     // one column (as row vec) per nontrivial divisor
    IMat u_;                             // SNF transform, class_of uses a = U (G v)
    std::vector<int> slot_of_order_;     // SNF slot index per nontrivial divisor
};

// spec operation name
FqModule discriminant_group(const EvenLattice& L);

// --- Weil representation -----------------------------------------------------

// rho_L(T) and rho_L(S) as matrices over ScaledCyclotomic.  Internally kept as
// an integer group-ring matrix times a global ScaledCyclotomic scalar so that
// exact word products stay fast.
class WeilMat {
public:
    WeilMat() = default;
    WeilMat(std::shared_ptr<const CycContext> ctx, ScaledCyclotomic scal,
            std::vector<std::vector<std::pair<int, int64_t>>> entries, int dim);

    static WeilMat identity(std::shared_ptr<const CycContext> ctx, int dim);

    int dim() const { return dim_; }
    ScaledCyclotomic entry(int i, int j) const;
    const ScaledCyclotomic& scalar() const { return scal_; }

    WeilMat operator*(const WeilMat& o) const;
    WeilMat conj_transpose() const;
    bool operator==(const WeilMat& o) const;
    bool operator!=(const WeilMat& o) const { return !(*this == o); }

private:
    std::shared_ptr<const CycContext> ctx_;
    ScaledCyclotomic scal_;
    // sparse group-ring entries: sorted (exponent, coeff) pairs
    std::vector<std::vector<std::pair<int, int64_t>>> e_;
    int dim_ = 0;

    friend WeilMat weil_equal_helper(const WeilMat&, const WeilMat&);
};

enum class WeilGen { T, S, Tinv, Sinv };

struct WeilRep {
    std::shared_ptr<const FqModule> fqm;
    std::shared_ptr<const CycContext> ctx;
    WeilMat T, S, Tinv, Sinv;
};

// rho_L(T): diagonal with entries e(Q(mu))
WeilMat weil_T(const std::shared_ptr<const FqModule>& m,
               const std::shared_ptr<const CycContext>& ctx);

// rho_L(S): e((b^- - b^+)/8)/sqrt(|A|) * (e(-(mu,nu)))_{mu,nu}; the signature
// is gated by the Milgram sum before the matrix is accepted.
WeilMat weil_S(const std::shared_ptr<const FqModule>& m,
               const std::shared_ptr<const CycContext>& ctx, int b_plus, int b_minus);

WeilRep weil_rep(const EvenLattice& L);

WeilMat weil_word(const WeilRep& rep, const std::vector<WeilGen>& word);

// Milgram gate as a standalone check: sum_mu e(Q(mu)) = sqrt|A| e((b+-b-)/8),
// numerically to 1e-12 and exactly whenever |A| is a perfect square.
bool milgram_check(const FqModule& m, int b_plus, int b_minus);

}  // namespace cmh::fqm

#endif
