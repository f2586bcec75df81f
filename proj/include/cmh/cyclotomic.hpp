#ifndef CMH_CYCLOTOMIC_HPP
#define CMH_CYCLOTOMIC_HPP

#include <complex>
#include <memory>
#include <vector>

#include "cmh/util.hpp"

namespace cmh::fqm {

// Shared arithmetic context for the cyclotomic ring Q(zeta_n) together with
// the formal scaling factor |A|^{-1/2} (A = discriminant group order).
// Ring elements are held in the group-ring basis 1, zeta, ..., zeta^{n-1};
// equality is decided by reduction mod the n-th cyclotomic polynomial.
class CycContext {
public:
    CycContext(int n, int64_t group_order);

    int order() const { return n_; }
    int64_t group_order() const { return A_; }
    int degree() const { return (int)phi_.size() - 1; }

    // remainder mod Phi_n, in place; result has coefficients only below deg(Phi_n)
    void reduce(std::vector<int64_t>& c) const;
    void reduce(std::vector<Rat>& c) const;

    // cyclotomic integer equal to +sqrt(group_order); requires the usual
    // divisibility of n (8 | n and p | n for odd p | A), which holds for
    // n = lcm(8, level)
    const std::vector<int64_t>& sqrt_group_order() const;

    static std::vector<int64_t> cyclotomic_poly(int n);

private:
    int n_;
    int64_t A_;
    std::vector<int64_t> phi_;
    mutable std::vector<int64_t> sqrtA_;  // built on first use
};

// Element z * |A|^{-k/2} with z in Q(zeta_n), k in {0,1}.
class ScaledCyclotomic {
public:
    ScaledCyclotomic() = default;
    ScaledCyclotomic(std::shared_ptr<const CycContext> ctx, std::vector<Rat> coeffs, int k);

    // e(r) = exp(2 pi i r); the denominator of r must divide n
    static ScaledCyclotomic root_of_unity(std::shared_ptr<const CycContext> ctx, const Rat& r);
    static ScaledCyclotomic from_rational(std::shared_ptr<const CycContext> ctx, const Rat& r);

    int k() const { return k_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const std::shared_ptr<const CycContext>& context() const { return ctx_; }

    ScaledCyclotomic operator*(const ScaledCyclotomic& o) const;
    ScaledCyclotomic operator+(const ScaledCyclotomic& o) const;
    ScaledCyclotomic operator-(const ScaledCyclotomic& o) const;
    ScaledCyclotomic operator*(const Rat& r) const;
    ScaledCyclotomic conj() const;  // complex conjugation zeta -> zeta^{-1}

    bool is_zero() const;
    bool operator==(const ScaledCyclotomic& o) const;
    bool operator!=(const ScaledCyclotomic& o) const { return !(*this == o); }

    std::complex<double> numeric() const;

private:
    std::shared_ptr<const CycContext> ctx_;
    std::vector<Rat> c_;
    int k_ = 0;
};

}  // namespace cmh::fqm

#endif
