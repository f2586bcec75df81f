#include "cmh/formal_log.hpp"

#include <cmath>

namespace cmh::qseries {

FormalLog FormalLog::from_rat(const Rat& r) {
    FormalLog f;
    f.rat = r;
    return f;
}

FormalLog FormalLog::log_term(int64_t p, const Rat& coeff) {
    FormalLog f;
    if (!coeff.is_zero()) f.logs[p] = coeff;
    return f;
}

FormalLog FormalLog::k00_term(int64_t D, const Rat& coeff) {
    FormalLog f;
    if (!coeff.is_zero()) f.k00[D] = coeff;
    return f;
}

bool FormalLog::is_zero() const {
    if (!rat.is_zero()) return false;
    for (auto& [p, c] : logs)
        if (!c.is_zero()) return false;
    for (auto& [d, c] : k00)
        if (!c.is_zero()) return false;
    return true;
}

void FormalLog::prune() {
    for (auto it = logs.begin(); it != logs.end();)
        it = it->second.is_zero() ? logs.erase(it) : std::next(it);
    for (auto it = k00.begin(); it != k00.end();)
        it = it->second.is_zero() ? k00.erase(it) : std::next(it);
}

FormalLog FormalLog::operator+(const FormalLog& o) const {
    FormalLog f(*this);
    f += o;
    return f;
}

FormalLog& FormalLog::operator+=(const FormalLog& o) {
    rat += o.rat;
    for (auto& [p, c] : o.logs) logs[p] += c;
    for (auto& [d, c] : o.k00) k00[d] += c;
    prune();
    return *this;
}

FormalLog FormalLog::operator-() const {
    FormalLog f;
    f.rat = -rat;
    for (auto& [p, c] : logs) f.logs[p] = -c;
    for (auto& [d, c] : k00) f.k00[d] = -c;
    return f;
}

FormalLog FormalLog::operator-(const FormalLog& o) const { return *this + (-o); }

FormalLog FormalLog::operator*(const Rat& r) const {
    FormalLog f;
    f.rat = rat * r;
    if (r.is_zero()) return f;
    for (auto& [p, c] : logs) f.logs[p] = c * r;
    for (auto& [d, c] : k00) f.k00[d] = c * r;
    return f;
}

bool FormalLog::operator==(const FormalLog& o) const { return (*this - o).is_zero(); }

double FormalLog::numeric(const std::function<double(int64_t)>& kappa00_eval) const {
    double v = rat.to_double();
    for (auto& [p, c] : logs) v += c.to_double() * std::log((double)p);
    for (auto& [d, c] : k00) v += c.to_double() * kappa00_eval(d);
    return v;
}

FormalLog operator*(const FormalLog&, const FormalLog&) {
    throw domain_error("FormalLog is a rational vector space, not a ring: product undefined");
}

}  // namespace cmh::qseries
