#ifndef TADIC_QUADEXT_HPP
#define TADIC_QUADEXT_HPP

#include <cstdint>
#include <utility>

#include "tadic/errors.hpp"
#include "tadic/laurent.hpp"
#include "tadic/ratfunc.hpp"

namespace tadic {

// beta^2 = 1 + t^{-1} = (t+1)/t as an exact rational function.
inline RatFunc beta_squared(std::int64_t p) {
    return RatFunc(Poly(p, {1, 1}), Poly::t(p));
}

// Element j + k*beta of L = F(beta), j, k in F(t).
class QuadElem {
public:
    explicit QuadElem(std::int64_t p) : j_(RatFunc::zero(p)), k_(RatFunc::zero(p)) {}
    QuadElem(RatFunc j, RatFunc k) : j_(std::move(j)), k_(std::move(k)) {
        if (j_.modulus() != k_.modulus()) throw domain_error("QuadElem: mixed moduli");
    }

    static QuadElem zero(std::int64_t p) { return QuadElem(p); }
    static QuadElem one(std::int64_t p) { return QuadElem(RatFunc::one(p), RatFunc::zero(p)); }
    static QuadElem beta(std::int64_t p) { return QuadElem(RatFunc::zero(p), RatFunc::one(p)); }
    static QuadElem from_rat(RatFunc j) {
        std::int64_t p = j.modulus();
        return QuadElem(std::move(j), RatFunc::zero(p));
    }

    std::int64_t modulus() const { return j_.modulus(); }
    const RatFunc& j() const { return j_; }
    const RatFunc& k() const { return k_; }
    bool is_zero() const { return j_.is_zero() && k_.is_zero(); }

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
        return QuadElem(a.j_ + b.j_, a.k_ + b.k_);
    }
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
        return QuadElem(a.j_ - b.j_, a.k_ - b.k_);
    }
    QuadElem operator-() const { return QuadElem(-j_, -k_); }

    friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
        RatFunc bsq = beta_squared(a.modulus());
        return QuadElem(a.j_ * b.j_ + a.k_ * b.k_ * bsq, a.j_ * b.k_ + a.k_ * b.j_);
    }

    // tau: j + k*beta -> j - k*beta.
    QuadElem conj() const { return QuadElem(j_, -k_); }

    // N(j + k beta) = j^2 - k^2 (1 + t^{-1}), an exact rational function.
    RatFunc norm() const { return j_ * j_ - k_ * k_ * beta_squared(modulus()); }

    QuadElem inverse() const {
        RatFunc n = norm();
        if (n.is_zero()) throw domain_error("QuadElem: inverse of zero");
        RatFunc ninv = n.inverse();
        return QuadElem(j_ * ninv, -(k_ * ninv));
    }
    friend QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }

    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.j_ == b.j_ && a.k_ == b.k_;
    }

private:
    RatFunc j_, k_;
};

// Integral over F[t] iff j in F[t] and k in t*F[t] (the integral closure is
// F[t, t*beta]).
inline bool is_integral(const QuadElem& a) {
    if (!a.j().is_polynomial() || !a.k().is_polynomial()) return false;
    return (a.k() / RatFunc::t(a.modulus())).is_polynomial();
}

// The analytic branch of beta in K, normalized to beta = 1 + <beta>.
struct BetaSeries {
    LaurentSeries series;

    std::int64_t modulus() const { return series.modulus(); }
};

inline BetaSeries beta_series(std::int64_t p, std::int64_t prec) {
    if (prec < 3) throw domain_error("beta_series: prec must be >= 3");
    LaurentSeries a = LaurentSeries(p, Orientation::tinv, 0, {1, 1}, 2);
    // 1 + t^{-1} is exact: widen the window before the square root.
    std::vector<std::int64_t> v(static_cast<std::size_t>(prec), 0);
    v[0] = 1;
    v[1] = 1;
    LaurentSeries full(p, Orientation::tinv, 0, std::move(v), prec);
    LaurentSeries b = full.sqrt_();
    if (b.coeff(0) != 1) b = -b; // branch with constant term 1
    return BetaSeries{b};
}

// phi_L: a -> (a, tau(a)) in K x K, truncated at beta's precision.
inline PairElem embed_pair(const QuadElem& a, const BetaSeries& beta) {
    std::int64_t prec = beta.series.prec();
    LaurentSeries js = a.j().to_series(prec);
    LaurentSeries ks = a.k().to_series(prec);
    LaurentSeries kb = ks * beta.series;
    return PairElem{js + kb, js - kb};
}

// The unit (beta-1)/(beta+1) = (2t+1) - 2t*beta, |.| = p^{-1}; its series
// image in K is the substitution target of eta.
inline QuadElem beta_minus_one_over_beta_plus_one(std::int64_t p) {
    return QuadElem(RatFunc(Poly(p, {1, 2})), RatFunc(Poly(p, {0, -2})));
}

// eta(t, t) = ((beta+1)/(beta-1), (beta-1)/(beta+1)); general pairs by
// coefficientwise substitution.  x lives in K = F((t^-1)), y in F((t)).
inline PairElem eta_map(const LaurentSeries& x, const LaurentSeries& y, const BetaSeries& beta) {
    if (x.orientation() != Orientation::tinv)
        throw domain_error("eta_map: first argument must have orientation t-inverse");
    if (y.orientation() != Orientation::t)
        throw domain_error("eta_map: second argument must have orientation t");
    LaurentSeries s = (beta.series - LaurentSeries::one(beta.modulus(), Orientation::tinv,
                                                        beta.series.prec())) *
                      (beta.series + LaurentSeries::one(beta.modulus(), Orientation::tinv,
                                                        beta.series.prec()))
                          .inverse();
    // x = sum b_n t^{-n}: substitute t^{-1} -> s.  y = sum c_n t^{n}:
    // substitute t -> s; both targets live in K.
    // y's indices already mean t^{n}, so the same substitution routine applies.
    LaurentSeries y_as_tinv(y.modulus(), Orientation::tinv, y.start(), y.coeffs(), y.prec());
    return PairElem{x.substitute(s), y_as_tinv.substitute(s)};
}

} // namespace tadic

#endif
