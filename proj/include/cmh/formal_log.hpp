#ifndef CMH_FORMAL_LOG_HPP
#define CMH_FORMAL_LOG_HPP

#include <functional>
#include <map>

#include "cmh/util.hpp"

namespace cmh::qseries {

// Exact element  rat + sum_p logs[p] * log p + sum_D k00[D] * kappa00(D).
// A rational vector space, not a ring: multiplying two FormalLog values is a
// domain error; only scaling by rationals is allowed.
struct FormalLog {
    Rat rat;
    std::map<int64_t, Rat> logs;  // prime -> coefficient
    std::map<int64_t, Rat> k00;   // fundamental discriminant -> coefficient

    static FormalLog from_rat(const Rat& r);
    static FormalLog log_term(int64_t p, const Rat& coeff);
    static FormalLog k00_term(int64_t D, const Rat& coeff);

    bool is_zero() const;
    void prune();  // drop zero entries

    FormalLog operator+(const FormalLog& o) const;
    FormalLog operator-(const FormalLog& o) const;
    FormalLog operator-() const;
    FormalLog operator*(const Rat& r) const;
    FormalLog& operator+=(const FormalLog& o);

    bool operator==(const FormalLog& o) const;
    bool operator!=(const FormalLog& o) const { return !(*this == o); }

    // numeric value; kappa00_eval supplies the value of the symbol kappa00(D)
    double numeric(const std::function<double(int64_t)>& kappa00_eval) const;
};

// not a ring: always throws
FormalLog operator*(const FormalLog& a, const FormalLog& b);

}  // namespace cmh::qseries

#endif
