#ifndef TADIC_ABSEXP_HPP
#define TADIC_ABSEXP_HPP

#include <cstdint>
#include <string>

namespace tadic {

// Exact absolute value p^exponent, or zero (exponent -inf).
// Multiplication adds exponents; -inf absorbs.
struct AbsExp {
    bool is_zero = true; // true: |x| = 0 (exponent -infinity)
    std::int64_t exp = 0;

    static AbsExp zero() { return AbsExp{}; }
    static AbsExp finite(std::int64_t e) { return AbsExp{false, e}; }

    friend AbsExp operator*(AbsExp a, AbsExp b) {
        if (a.is_zero || b.is_zero) return zero();
        return finite(a.exp + b.exp);
    }
    friend bool operator==(AbsExp a, AbsExp b) {
        if (a.is_zero || b.is_zero) return a.is_zero == b.is_zero;
        return a.exp == b.exp;
    }
    friend bool operator<(AbsExp a, AbsExp b) {
        if (a.is_zero) return !b.is_zero;
        if (b.is_zero) return false;
        return a.exp < b.exp;
    }
    friend bool operator<=(AbsExp a, AbsExp b) { return a == b || a < b; }

    std::string str() const { return is_zero ? "-inf" : std::to_string(exp); }
};

} // namespace tadic

#endif
