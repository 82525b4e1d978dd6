#ifndef TADIC_RATFUNC_HPP
#define TADIC_RATFUNC_HPP

#include <cstdint>
#include <utility>

#include "tadic/errors.hpp"
#include "tadic/laurent.hpp"
#include "tadic/poly.hpp"

namespace tadic {

// Element of F_p(t): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    explicit RatFunc(std::int64_t p)
        : num_(Poly::zero(p)), den_(Poly::constant(p, 1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.modulus() != den_.modulus()) throw domain_error("RatFunc: mixed moduli");
        if (den_.is_zero()) throw domain_error("RatFunc: zero denominator");
        normalize();
    }
    /*implicit*/ RatFunc(Poly num)
        : num_(std::move(num)), den_(Poly::constant(num_.modulus(), 1)) {}

    static RatFunc zero(std::int64_t p) { return RatFunc(p); }
    static RatFunc one(std::int64_t p) { return RatFunc(Poly::constant(p, 1)); }
    static RatFunc constant(std::int64_t p, std::int64_t c) { return RatFunc(Poly::constant(p, c)); }
    static RatFunc t(std::int64_t p) { return RatFunc(Poly::t(p)); }

    std::int64_t modulus() const { return num_.modulus(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    RatFunc inverse() const {
        if (is_zero()) throw domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Expansion in K = F((t^-1)) truncated to the given window.
    LaurentSeries to_series(std::int64_t prec) const {
        LaurentSeries n = LaurentSeries::from_poly(num_, Orientation::tinv,
                                                   prec + den_.deg() + 1);
        if (den_.is_one()) return n.truncated(prec);
        LaurentSeries d = LaurentSeries::from_poly(den_, Orientation::tinv,
                                                   prec + den_.deg() + 1);
        return (n * d.inverse()).truncated(prec);
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly::constant(modulus(), 1);
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        std::int64_t lc = den_.leading();
        if (lc != 1) {
            std::int64_t li = den_.field().inv(lc);
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }

    Poly num_, den_;
};

} // namespace tadic

#endif
