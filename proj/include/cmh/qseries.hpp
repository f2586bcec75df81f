#ifndef CMH_QSERIES_HPP
#define CMH_QSERIES_HPP

#include <map>
#include <memory>
#include <utility>

#include "json.hpp"

#include "cmh/formal_log.hpp"
#include "cmh/fqm.hpp"

namespace cmh::qseries {

using fqm::EvenLattice;
using fqm::FqModule;

enum class Rep { rho, rho_bar };

inline Rat ring_mul(const Rat& a, const Rat& b) { return a * b; }
inline FormalLog ring_mul(const Rat& a, const FormalLog& b) { return b * a; }
inline FormalLog ring_mul(const FormalLog& a, const Rat& b) { return a * b; }
inline FormalLog ring_mul(const FormalLog& a, const FormalLog& b) { return a * b; }  // throws

inline bool ring_is_zero(const Rat& r) { return r.is_zero(); }
inline bool ring_is_zero(const FormalLog& f) { return f.is_zero(); }

template <class A, class B>
using MulT = decltype(ring_mul(std::declval<A>(), std::declval<B>()));

// Truncated vector-valued q-expansion.  Exponents live in (1/den) Z, are
// bounded by mmax, and satisfy m = Q(mu) mod 1 (rep rho) or m = -Q(mu) mod 1
// (rep rho_bar).
template <class R>
class VVSeries {
public:
    using Key = std::pair<int64_t, Rat>;  // (class index, exponent)

    VVSeries(std::shared_ptr<const FqModule> m, int64_t den, Rat mmax, Rep rep)
        : fqm_(std::move(m)), den_(den), mmax_(mmax), rep_(rep) {
        if (den_ <= 0) throw domain_error("VVSeries: den must be positive");
    }

    const std::shared_ptr<const FqModule>& module() const { return fqm_; }
    int64_t den() const { return den_; }
    const Rat& mmax() const { return mmax_; }
    Rep rep() const { return rep_; }
    const std::map<Key, R>& coeffs() const { return c_; }

    void add_to(int64_t idx, const Rat& m, const R& v) {
        validate(idx, m);
        auto it = c_.find({idx, m});
        if (it == c_.end()) {
            if (!ring_is_zero(v)) c_[{idx, m}] = v;
        } else {
            it->second = it->second + v;
            if (ring_is_zero(it->second)) c_.erase(it);
        }
    }

    R at(int64_t idx, const Rat& m) const {
        auto it = c_.find({idx, m});
        return it == c_.end() ? R{} : it->second;
    }

    bool operator==(const VVSeries& o) const {
        return fqm_->same_as(*o.fqm_) && c_ == o.c_;
    }

private:
    void validate(int64_t idx, const Rat& m) const {
        if (m > mmax_) throw domain_error("VVSeries: exponent beyond truncation bound");
        if (!(m * Rat(den_)).is_integer())
            throw domain_error("VVSeries: exponent not in (1/den) Z");
        Rat q = fqm_->q_value(idx);
        Rat want = rep_ == Rep::rho ? q : (-q).mod1();
        if ((m - want).mod1() != Rat(0))
            throw domain_error("VVSeries: exponent violates the support congruence");
    }

    std::shared_ptr<const FqModule> fqm_;
    int64_t den_;
    Rat mmax_;
    Rep rep_;
    std::map<Key, R> c_;
};

template <class R>
struct ScalarSeries {
    Rat mmax;
    std::map<Rat, R> c;

    R at(const Rat& m) const {
        auto it = c.find(m);
        return it == c.end() ? R{} : it->second;
    }
};

// M subset L of finite index: rows of `basis` are the M-basis vectors in
// L-coordinates.
struct Embedding {
    IMat l_gram;
    IMat basis;

    Embedding(IMat lg, IMat b);
    EvenLattice sublattice() const;      // Gram of M
    EvenLattice overlattice() const;     // Gram of L
    int64_t index() const;               // [L : M]
    std::vector<QVec> coset_reps_in_m_coords() const;  // reps of L/M, in M-coordinates
    QVec to_m_coords(const QVec& v_l) const;
    QVec to_l_coords(const QVec& v_m) const;
};

// direct sum Gram
EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b);

namespace detail {

// class index in the direct-sum module of (lift_a, lift_b)
int64_t sum_class(const FqModule& sum, const QVec& la, const QVec& lb);

}  // namespace detail

template <class A, class B>
VVSeries<MulT<A, B>> tensor(const VVSeries<A>& f, const VVSeries<B>& g) {
    if (f.rep() != g.rep()) throw domain_error("tensor: mixed representations");
    EvenLattice sum =
        direct_sum(EvenLattice(f.module()->gram()), EvenLattice(g.module()->gram()));
    auto m = std::make_shared<FqModule>(sum);
    Rat mmax = std::min(f.mmax(), g.mmax());
    VVSeries<MulT<A, B>> out(m, lcm64(f.den(), g.den()), mmax, f.rep());
    std::map<std::pair<int64_t, int64_t>, int64_t> class_cache;
    for (auto& [ka, va] : f.coeffs())
        for (auto& [kb, vb] : g.coeffs()) {
            Rat mm = ka.second + kb.second;
            if (mm > mmax) continue;
            auto key = std::make_pair(ka.first, kb.first);
            auto it = class_cache.find(key);
            int64_t idx;
            if (it == class_cache.end()) {
                idx = detail::sum_class(*m, f.module()->lift(ka.first),
                                        g.module()->lift(kb.first));
                class_cache[key] = idx;
            } else {
                idx = it->second;
            }
            out.add_to(idx, mm, ring_mul(va, vb));
        }
    return out;
}

// <f, g> = sum_mu f_mu g_mu as a scalar q-series
template <class A, class B>
ScalarSeries<MulT<A, B>> pair(const VVSeries<A>& f, const VVSeries<B>& g) {
    if (!f.module()->same_as(*g.module())) throw domain_error("pair: index-set mismatch");
    ScalarSeries<MulT<A, B>> out;
    out.mmax = std::min(f.mmax(), g.mmax());
    for (auto& [ka, va] : f.coeffs())
        for (auto& [kb, vb] : g.coeffs()) {
            if (ka.first != kb.first) continue;
            Rat mm = ka.second + kb.second;
            if (mm > out.mmax) continue;
            auto r = ring_mul(va, vb);
            auto it = out.c.find(mm);
            if (it == out.c.end()) {
                if (!ring_is_zero(r)) out.c[mm] = r;
            } else {
                it->second = it->second + r;
                if (ring_is_zero(it->second)) out.c.erase(it);
            }
        }
    return out;
}

template <class R>
R constant_term(const ScalarSeries<R>& s) {
    if (s.mmax < Rat(0)) throw domain_error("constant_term: exponent 0 beyond truncation");
    return s.at(Rat(0));
}

template <class R>
VVSeries<R> res_sublattice(const VVSeries<R>& f, const Embedding& emb);

template <class R>
VVSeries<R> tr_sublattice(const VVSeries<R>& g, const Embedding& emb);

// principal part of a harmonic weak Maass form: coefficients c+(-m, mu), m >= 0,
// with c+(-m,mu) = c+(-m,-mu) enforced
class HolPrincipalPart {
public:
    explicit HolPrincipalPart(std::shared_ptr<const FqModule> m) : fqm_(std::move(m)) {}

    void set(const Rat& m, int64_t idx, const Rat& v);
    const std::map<std::pair<Rat, int64_t>, Rat>& coeffs() const { return c_; }
    const std::shared_ptr<const FqModule>& module() const { return fqm_; }
    Rat constant_coefficient() const;  // c+(0,0)

private:
    std::shared_ptr<const FqModule> fqm_;
    std::map<std::pair<Rat, int64_t>, Rat> c_;
};

// {g,f} = sum_mu sum_{n<=0} c+(n,mu) b(-n,mu); b is a cusp-form coefficient
// table keyed by (class, exponent).  Missing entries at positive exponents in
// supp(pp) are an error naming the index; at exponent 0 a cusp form has none.
using CoeffTable = std::map<std::pair<int64_t, Rat>, Rat>;

Rat pairing_principal(const CoeffTable& b, const HolPrincipalPart& pp);

// --- serialization -----------------------------------------------------------

nlohmann::ordered_json to_json(const FormalLog& f);
nlohmann::ordered_json to_json(const VVSeries<Rat>& s);
nlohmann::ordered_json to_json(const VVSeries<FormalLog>& s);

}  // namespace cmh::qseries

#endif
