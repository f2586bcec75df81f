#include "cmh/qseries.hpp"

#include <algorithm>

namespace cmh::qseries {

Embedding::Embedding(IMat lg, IMat b) : l_gram(std::move(lg)), basis(std::move(b)) {
    if (basis.size() != l_gram.size())
        throw domain_error("Embedding: sublattice rank must equal ambient rank");
    IMat bt = imat_transpose(basis);  // columns = basis vectors
    if (imat_det(bt) == 0) throw domain_error("Embedding: not a finite-index sublattice");
}

EvenLattice Embedding::sublattice() const {
    int n = (int)basis.size();
    IMat g(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            i128 s = 0;
            for (int r = 0; r < n; ++r)
                for (int t = 0; t < n; ++t) s += i128(basis[i][r]) * l_gram[r][t] * basis[j][t];
            g[i][j] = check_i64(s);
        }
    return EvenLattice(g);
}

EvenLattice Embedding::overlattice() const { return EvenLattice(l_gram); }

int64_t Embedding::index() const { return std::llabs(imat_det(basis)); }

QVec Embedding::to_m_coords(const QVec& v_l) const {
    // solve B^T y = v (columns of B^T are basis vectors)
    return qsolve(imat_transpose(basis), v_l);
}

QVec Embedding::to_l_coords(const QVec& v_m) const {
    int n = (int)basis.size();
    QVec v(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) v[r] += v_m[i] * Rat(basis[i][r]);
    return v;
}

std::vector<QVec> Embedding::coset_reps_in_m_coords() const {
    // L/M = Z^n / B^T Z^n; reps via the Smith form of B^T
    IMat bt = imat_transpose(basis);
    SmithResult s = smith_normal_form(bt);
    int n = (int)bt.size();
    QMat uinv = imat_inverse(s.u);
    std::vector<QVec> reps;
    std::vector<int64_t> d(n);
    for (int i = 0; i < n; ++i) d[i] = s.d[i][i];
    std::vector<int64_t> cur(n, 0);
    while (true) {
        QVec x(n, Rat(0));
        for (int r = 0; r < n; ++r)
            for (int i = 0; i < n; ++i) x[r] += uinv[r][i] * Rat(cur[i]);
        reps.push_back(to_m_coords(x));
        int p = 0;
        while (p < n && ++cur[p] == d[p]) cur[p++] = 0;
        if (p == n) break;
    }
    return reps;
}

EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b) {
    int na = a.rank(), nb = b.rank();
    IMat g(na + nb, IVec(na + nb, 0));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) g[i][j] = a.gram[i][j];
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) g[na + i][na + j] = b.gram[i][j];
    return EvenLattice(g);
}

namespace detail {

int64_t sum_class(const FqModule& sum, const QVec& la, const QVec& lb) {
    QVec v(la);
    v.insert(v.end(), lb.begin(), lb.end());
    return sum.class_of(v);
}

}  // namespace detail

template <class R>
VVSeries<R> res_sublattice(const VVSeries<R>& f, const Embedding& emb) {
    if (!f.module()->same_as(FqModule(emb.overlattice())))
        throw domain_error("res_sublattice: series not indexed by the ambient lattice");
    auto msub = std::make_shared<FqModule>(emb.sublattice());
    VVSeries<R> out(msub, f.den(), f.mmax(), f.rep());
    auto reps = emb.coset_reps_in_m_coords();
    // classes of L'/M are reached as (lift of an L'/L class) + (L/M coset)
    std::map<int64_t, std::vector<int64_t>> targets;  // L-class -> M-classes
    for (auto& [key, val] : f.coeffs()) {
        auto it = targets.find(key.first);
        if (it == targets.end()) {
            std::vector<int64_t> t;
            QVec lm = emb.to_m_coords(f.module()->lift(key.first));
            for (auto& rep : reps) {
                QVec v(lm);
                for (size_t i = 0; i < v.size(); ++i) v[i] += rep[i];
                t.push_back(msub->class_of(v));
            }
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            if ((int64_t)t.size() != emb.index())
                throw std::logic_error("res_sublattice: coset fibre has wrong size");
            it = targets.emplace(key.first, std::move(t)).first;
        }
        for (int64_t idx : it->second) out.add_to(idx, key.second, val);
    }
    return out;
}

template <class R>
VVSeries<R> tr_sublattice(const VVSeries<R>& g, const Embedding& emb) {
    auto msub = FqModule(emb.sublattice());
    if (!g.module()->same_as(msub))
        throw domain_error("tr_sublattice: series not indexed by the sublattice");
    auto mover = std::make_shared<FqModule>(emb.overlattice());
    VVSeries<R> out(mover, g.den(), g.mmax(), g.rep());
    auto reps = emb.coset_reps_in_m_coords();
    // group the source coefficients by class for fast lookup
    std::map<int64_t, std::vector<std::pair<Rat, R>>> by_class;
    for (auto& [key, val] : g.coeffs()) by_class[key.first].push_back({key.second, val});
    for (int64_t e = 0; e < mover->size(); ++e) {
        QVec lm = emb.to_m_coords(mover->lift(e));
        for (auto& rep : reps) {
            QVec v(lm);
            for (size_t i = 0; i < v.size(); ++i) v[i] += rep[i];
            int64_t src = g.module()->class_of(v);
            auto it = by_class.find(src);
            if (it == by_class.end()) continue;
            for (auto& [m, val] : it->second) out.add_to(e, m, val);
        }
    }
    return out;
}

template VVSeries<Rat> res_sublattice(const VVSeries<Rat>&, const Embedding&);
template VVSeries<FormalLog> res_sublattice(const VVSeries<FormalLog>&, const Embedding&);
template VVSeries<Rat> tr_sublattice(const VVSeries<Rat>&, const Embedding&);
template VVSeries<FormalLog> tr_sublattice(const VVSeries<FormalLog>&, const Embedding&);

void HolPrincipalPart::set(const Rat& m, int64_t idx, const Rat& v) {
    if (m < Rat(0)) throw domain_error("HolPrincipalPart: m must be >= 0");
    Rat q = fqm_->q_value(idx);
    if ((m - q).mod1() != Rat(0))
        throw domain_error("HolPrincipalPart: index (" + m.str() + ", " + std::to_string(idx) +
                           ") violates the support congruence");
    int64_t neg = fqm_->neg(idx);
    for (int64_t e : {idx, neg}) {
        if (v.is_zero()) c_.erase({m, e}); else c_[{m, e}] = v;
        if (e == neg) break;
    }
}

Rat HolPrincipalPart::constant_coefficient() const {
    auto it = c_.find({Rat(0), 0});
    return it == c_.end() ? Rat(0) : it->second;
}

Rat pairing_principal(const CoeffTable& b, const HolPrincipalPart& pp) {
    Rat total(0);
    for (auto& [key, cplus] : pp.coeffs()) {
        const Rat& m = key.first;
        int64_t idx = key.second;
        auto it = b.find({idx, m});
        if (it == b.end()) {
            if (m.is_zero()) continue;  // cusp forms have no constant term
            throw domain_error("pairing_principal: coefficient table missing index (m=" +
                               m.str() + ", mu=" + std::to_string(idx) + ")");
        }
        total += cplus * it->second;
    }
    return total;
}

nlohmann::ordered_json to_json(const FormalLog& f) {
    nlohmann::ordered_json j;
    j["rat"] = {f.rat.num, f.rat.den};
    auto& jl = j["logs"] = nlohmann::ordered_json::array();
    for (auto& [p, c] : f.logs) jl.push_back({p, c.num, c.den});
    auto& jk = j["k00"] = nlohmann::ordered_json::array();
    for (auto& [d, c] : f.k00) jk.push_back({d, c.num, c.den});
    return j;
}

namespace {
template <class R, class CoeffFn>
nlohmann::ordered_json series_json(const VVSeries<R>& s, CoeffFn&& cf) {
    nlohmann::ordered_json j;
    j["den"] = s.den();
    j["mmax"] = {s.mmax().num, s.mmax().den};
    auto& je = j["entries"] = nlohmann::ordered_json::array();
    for (auto& [key, val] : s.coeffs()) {
        nlohmann::ordered_json row = {key.first, key.second.num, key.second.den};
        cf(row, val);
        je.push_back(row);
    }
    return j;
}
}  // namespace

nlohmann::ordered_json to_json(const VVSeries<Rat>& s) {
    return series_json(s, [](nlohmann::ordered_json& row, const Rat& v) {
        row.push_back(v.num);
        row.push_back(v.den);
    });
}

nlohmann::ordered_json to_json(const VVSeries<FormalLog>& s) {
    return series_json(s, [](nlohmann::ordered_json& row, const FormalLog& v) {
        row.push_back(to_json(v));
    });
}

}  // namespace cmh::qseries
