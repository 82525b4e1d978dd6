#ifndef TADIC_LAURENT_HPP
#define TADIC_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tadic/absexp.hpp"
#include "tadic/errors.hpp"
#include "tadic/field.hpp"
#include "tadic/poly.hpp"

namespace tadic {

// Orientation of the series variable:
//   tinv : element of F((t^-1)); index n holds the t^{-n} coefficient.
//   t    : element of F((t)) = F(t)_p; index n holds the t^{n} coefficient.
// Either way |element| = p^{-v} where v is the least index with a nonzero
// coefficient.
enum class Orientation { tinv, t };

// Absolute value of a truncated series: certified means |x| = p^exp exactly,
// otherwise only the bound |x| <= p^exp is known (all stored coefficients
// vanished).
struct SeriesAbs {
    bool certified = false;
    std::int64_t exp = 0;
};

// Truncated Laurent series with an absolute precision window [start, prec):
// element = sum_{n=start}^{prec-1} c[n-start] x^{-n} + O(x^{-prec}), x as
// dictated by the orientation.  Canonical form: leading stored coefficient
// nonzero, or the window is empty (start == prec) when every stored
// coefficient vanished.
class LaurentSeries {
public:
    LaurentSeries(std::int64_t p, Orientation o, std::int64_t start,
                  std::vector<std::int64_t> coeffs, std::int64_t prec)
        : fp_(p), o_(o), start_(start), prec_(prec) {
        if (start > prec) throw domain_error("LaurentSeries: start > prec");
        if (static_cast<std::int64_t>(coeffs.size()) != prec - start)
            throw domain_error("LaurentSeries: coefficient count does not match window");
        c_.reserve(coeffs.size());
        for (auto x : coeffs) c_.push_back(fp_.reduce(x));
        canonicalize();
    }

    static LaurentSeries zero(std::int64_t p, Orientation o, std::int64_t prec) {
        return LaurentSeries(p, o, prec, {}, prec);
    }
    static LaurentSeries constant(std::int64_t p, Orientation o, std::int64_t c, std::int64_t prec) {
        if (prec <= 0) return zero(p, o, prec);
        std::vector<std::int64_t> v(static_cast<std::size_t>(prec), 0);
        v[0] = c;
        return LaurentSeries(p, o, 0, std::move(v), prec);
    }
    static LaurentSeries one(std::int64_t p, Orientation o, std::int64_t prec) {
        return constant(p, o, 1, prec);
    }
    // c * x^{-n} (i.e. c*t^{-n} for tinv, c*t^{n} for t orientation).
    static LaurentSeries monomial(std::int64_t p, Orientation o, std::int64_t n,
                                  std::int64_t c, std::int64_t prec) {
        if (n >= prec) return zero(p, o, prec);
        std::vector<std::int64_t> v(static_cast<std::size_t>(prec - n), 0);
        v[0] = c;
        return LaurentSeries(p, o, n, std::move(v), prec);
    }
    // Exact polynomial as a series with the given window.
    static LaurentSeries from_poly(const Poly& f, Orientation o, std::int64_t prec) {
        if (f.is_zero()) return zero(f.modulus(), o, prec);
        // t^j sits at index -j (tinv) or +j (t orientation).
        std::int64_t lo = (o == Orientation::tinv) ? -f.deg() : 0;
        if (lo >= prec) return zero(f.modulus(), o, prec);
        std::vector<std::int64_t> v(static_cast<std::size_t>(prec - lo), 0);
        for (std::int64_t j = 0; j <= f.deg(); ++j) {
            std::int64_t idx = (o == Orientation::tinv) ? -j : j;
            if (idx < prec) v[static_cast<std::size_t>(idx - lo)] = f.coeff(j);
        }
        return LaurentSeries(f.modulus(), o, lo, std::move(v), prec);
    }

    std::int64_t modulus() const { return fp_.modulus(); }
    const Fp& field() const { return fp_; }
    Orientation orientation() const { return o_; }
    std::int64_t start() const { return start_; }
    std::int64_t prec() const { return prec_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    bool is_zero_to_prec() const { return c_.empty(); }

    // Valuation, certified only when a nonzero coefficient is stored.
    std::optional<std::int64_t> valuation() const {
        if (c_.empty()) return std::nullopt;
        return start_;
    }

    SeriesAbs magnitude() const {
        if (c_.empty()) return SeriesAbs{false, -prec_};
        return SeriesAbs{true, -start_};
    }

    AbsExp abs_exp() const {
        if (c_.empty())
            throw precision_error("LaurentSeries: absolute value not certified (zero to precision)");
        return AbsExp::finite(-start_);
    }

    // Coefficient at index n; n >= prec is outside the certified window.
    std::int64_t coeff(std::int64_t n) const {
        if (n >= prec_)
            throw precision_error("LaurentSeries: coefficient index " + std::to_string(n) +
                                  " beyond window prec " + std::to_string(prec_));
        if (n < start_) return 0;
        return c_[static_cast<std::size_t>(n - start_)];
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        a.check_compat(b);
        std::int64_t prec = std::min(a.prec_, b.prec_);
        std::int64_t start = std::min({a.start_, b.start_, prec});
        std::vector<std::int64_t> v(static_cast<std::size_t>(prec - start), 0);
        for (std::int64_t n = start; n < prec; ++n)
            v[static_cast<std::size_t>(n - start)] =
                a.fp_.add(a.stored(n), b.stored(n));
        return LaurentSeries(a.modulus(), a.o_, start, std::move(v), prec);
    }
    LaurentSeries operator-() const {
        LaurentSeries r(*this);
        for (auto& x : r.c_) x = fp_.neg(x);
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }

    // prec = min(prec_a + v_b, prec_b + v_a), v = valuation (start when the
    // window is all-zero); coefficients are exact convolutions in-window.
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        a.check_compat(b);
        std::int64_t va = a.start_, vb = b.start_;
        std::int64_t prec = std::min(a.prec_ + vb, b.prec_ + va);
        std::int64_t start = std::min(va + vb, prec);
        std::vector<std::int64_t> v(static_cast<std::size_t>(prec - start), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                std::int64_t n = a.start_ + static_cast<std::int64_t>(i) +
                                 b.start_ + static_cast<std::int64_t>(j);
                if (n >= prec) break;
                auto& slot = v[static_cast<std::size_t>(n - start)];
                slot = a.fp_.add(slot, a.fp_.mul(a.c_[i], b.c_[j]));
            }
        }
        return LaurentSeries(a.modulus(), a.o_, start, std::move(v), prec);
    }

    LaurentSeries scaled(std::int64_t c) const {
        c = fp_.reduce(c);
        LaurentSeries r(*this);
        for (auto& x : r.c_) x = fp_.mul(x, c);
        r.canonicalize();
        return r;
    }

    // Multiplication by the exact polynomial f (infinite-precision operand:
    // prec_result = prec + v_f, v_f = -deg f for tinv).
    LaurentSeries mul_poly(const Poly& f) const {
        if (f.modulus() != modulus()) throw domain_error("LaurentSeries: mixed moduli");
        if (f.is_zero()) return zero(modulus(), o_, prec_ + (o_ == Orientation::tinv ? 0 : 0));
        std::int64_t vf = (o_ == Orientation::tinv) ? -f.deg() : 0;
        std::int64_t prec = prec_ + vf;
        std::int64_t start = std::min(start_ + vf, prec);
        std::vector<std::int64_t> v(static_cast<std::size_t>(prec - start), 0);
        for (std::int64_t j = 0; j <= f.deg(); ++j) {
            std::int64_t fj = f.coeff(j);
            if (fj == 0) continue;
            std::int64_t idx = (o_ == Orientation::tinv) ? -j : j;
            for (std::size_t i = 0; i < c_.size(); ++i) {
                std::int64_t n = start_ + static_cast<std::int64_t>(i) + idx;
                if (n >= prec) break;
                auto& slot = v[static_cast<std::size_t>(n - start)];
                slot = fp_.add(slot, fp_.mul(c_[i], fj));
            }
        }
        return LaurentSeries(modulus(), o_, start, std::move(v), prec);
    }

    // Multiplication by the exact monomial t^k (k may be negative).
    LaurentSeries mul_t_power(std::int64_t k) const {
        std::int64_t d = (o_ == Orientation::tinv) ? -k : k;
        LaurentSeries r(*this);
        r.start_ += d;
        r.prec_ += d;
        return r;
    }

    LaurentSeries truncated(std::int64_t new_prec) const {
        if (new_prec >= prec_) return *this;
        std::int64_t start = std::min(start_, new_prec);
        std::vector<std::int64_t> v(c_.begin(),
                                    c_.begin() + static_cast<std::ptrdiff_t>(
                                        std::max<std::int64_t>(0, new_prec - start_)));
        return LaurentSeries(modulus(), o_, start, std::move(v), new_prec);
    }

    // Multiplicative inverse.  Requires a certified valuation; the result has
    // valuation -v and absolute precision prec - 2v (back-substitution).
    LaurentSeries inverse() const {
        if (c_.empty())
            throw domain_error("LaurentSeries: cannot certify invertibility (zero to precision)");
        std::int64_t v = start_;
        std::int64_t len = prec_ - v; // number of solvable coefficients
        std::int64_t c0inv = fp_.inv(c_[0]);
        std::vector<std::int64_t> w(static_cast<std::size_t>(len), 0);
        w[0] = c0inv;
        for (std::int64_t n = 1; n < len; ++n) {
            std::int64_t acc = 0;
            std::int64_t imax = std::min<std::int64_t>(n, static_cast<std::int64_t>(c_.size()) - 1);
            for (std::int64_t i = 1; i <= imax; ++i)
                acc = fp_.add(acc, fp_.mul(c_[static_cast<std::size_t>(i)],
                                           w[static_cast<std::size_t>(n - i)]));
            w[static_cast<std::size_t>(n)] = fp_.mul(fp_.neg(acc), c0inv);
        }
        return LaurentSeries(modulus(), o_, -v, std::move(w), -v + len);
    }

    // Square root (p odd).  Requires even valuation and a quadratic-residue
    // leading coefficient; branch: leading coefficient is the smaller
    // representative root.  Result window: [v/2, prec - v/2).
    LaurentSeries sqrt_() const {
        if (c_.empty())
            throw domain_error("LaurentSeries: cannot certify square root (zero to precision)");
        std::int64_t v = start_;
        if (v % 2 != 0)
            throw domain_error("LaurentSeries: odd valuation, no square root in K");
        if (!fp_.is_square(c_[0]))
            throw domain_error("LaurentSeries: leading coefficient is not a quadratic residue");
        std::int64_t len = prec_ - v;
        std::int64_t r0 = fp_.sqrt(c_[0]);
        std::int64_t inv2r0 = fp_.inv(fp_.mul(2 % modulus(), r0));
        std::vector<std::int64_t> r(static_cast<std::size_t>(len), 0);
        r[0] = r0;
        for (std::int64_t n = 1; n < len; ++n) {
            // 2 r0 r_n = a_n - sum_{i=1}^{n-1} r_i r_{n-i}
            std::int64_t acc = (n < static_cast<std::int64_t>(c_.size()))
                                   ? c_[static_cast<std::size_t>(n)]
                                   : 0;
            for (std::int64_t i = 1; i < n; ++i)
                acc = fp_.sub(acc, fp_.mul(r[static_cast<std::size_t>(i)],
                                           r[static_cast<std::size_t>(n - i)]));
            r[static_cast<std::size_t>(n)] = fp_.mul(acc, inv2r0);
        }
        std::int64_t h = v / 2;
        return LaurentSeries(modulus(), o_, h, std::move(r), h + len);
    }

    // Fractional part <a>: keep indices n >= 1.  Orientation tinv only.
    LaurentSeries frac_part() const {
        if (o_ != Orientation::tinv)
            throw domain_error("LaurentSeries: fractional part needs orientation t-inverse");
        if (prec_ <= 1)
            throw precision_error("LaurentSeries: insufficient precision for fractional part"
                                  " (window must reach index 1)");
        std::int64_t start = std::max<std::int64_t>(start_, 1);
        std::vector<std::int64_t> v(static_cast<std::size_t>(prec_ - start), 0);
        for (std::int64_t n = start; n < prec_; ++n)
            v[static_cast<std::size_t>(n - start)] = stored(n);
        return LaurentSeries(modulus(), o_, start, std::move(v), prec_);
    }

    // Polynomial part (tinv): the terms with index <= 0, certified up to the
    // window.  Requires the window to reach index 1 so that index 0 is seen.
    Poly poly_part() const {
        if (o_ != Orientation::tinv)
            throw domain_error("LaurentSeries: polynomial part needs orientation t-inverse");
        if (prec_ < 1)
            throw precision_error("LaurentSeries: window does not certify the polynomial part");
        if (start_ > 0) return Poly::zero(modulus());
        std::vector<std::int64_t> v(static_cast<std::size_t>(1 - start_), 0);
        for (std::int64_t n = start_; n <= 0; ++n)
            v[static_cast<std::size_t>(-n)] = stored(n);
        return Poly(modulus(), std::move(v));
    }

    // Substitute s for the formal variable x^{-1}: returns
    // sum_{n=start}^{prec-1} c_n s^n.  Requires |s| <= p^{-1} certified.
    // Negative indices use the inverse of s.
    LaurentSeries substitute(const LaurentSeries& s) const {
        if (s.modulus() != modulus()) throw domain_error("substitute: mixed moduli");
        auto vs = s.valuation();
        if (!vs) throw precision_error("substitute: |s| not certified");
        if (*vs <= 0) throw domain_error("substitute: divergent substitution (|s| >= 1)");
        // Tail O(x^{-prec}) of *this maps to O(s^{prec}):
        std::int64_t cap = prec_ * (*vs);
        Orientation o = s.orientation();
        // Horner over the nonnegative indices, highest first.
        LaurentSeries acc = zero(modulus(), o, cap + s.prec());
        for (std::int64_t n = prec_ - 1; n >= 0; --n) {
            acc = acc * s;
            std::int64_t cn = n >= start_ ? stored(n) : 0;
            if (cn != 0) acc = acc + constant(modulus(), o, cn, cap + s.prec());
        }
        if (start_ < 0) {
            // sum_{n=start}^{-1} c_n s^n = sinv * (c_{-1} + sinv*(c_{-2} + ...))
            LaurentSeries sinv = s.inverse();
            LaurentSeries acc2 = zero(modulus(), o, cap + s.prec());
            for (std::int64_t n = start_; n <= -1; ++n) {
                acc2 = acc2 * sinv;
                std::int64_t cn = stored(n);
                if (cn != 0) acc2 = acc2 + constant(modulus(), o, cn, cap + s.prec());
            }
            acc = acc + acc2 * sinv;
        }
        return acc.truncated(std::min(cap, acc.prec()));
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.modulus() == b.modulus() && a.o_ == b.o_ && a.start_ == b.start_ &&
               a.prec_ == b.prec_ && a.c_ == b.c_;
    }

    // True when a - b has no certified nonzero coefficient; window is the
    // overlap, reported through `window_prec`.
    static bool agree(const LaurentSeries& a, const LaurentSeries& b,
                      std::int64_t* window_prec = nullptr) {
        LaurentSeries d = a - b;
        if (window_prec) *window_prec = d.prec();
        return d.is_zero_to_prec();
    }

private:
    std::int64_t stored(std::int64_t n) const {
        if (n < start_ || n >= prec_) return 0;
        return c_[static_cast<std::size_t>(n - start_)];
    }
    void check_compat(const LaurentSeries& o) const {
        if (modulus() != o.modulus()) throw domain_error("LaurentSeries: mixed moduli");
        if (o_ != o.o_) throw domain_error("LaurentSeries: mixed orientations");
    }
    void canonicalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            start_ += static_cast<std::int64_t>(lead);
        }
        if (c_.empty()) start_ = prec_;
    }

    Fp fp_;
    Orientation o_;
    std::int64_t start_, prec_;
    std::vector<std::int64_t> c_;
};

// Element of K x K (or K x F(t)_p): componentwise ring operations.
struct PairElem {
    LaurentSeries first, second;

    friend PairElem operator+(const PairElem& a, const PairElem& b) {
        return {a.first + b.first, a.second + b.second};
    }
    friend PairElem operator-(const PairElem& a, const PairElem& b) {
        return {a.first - b.first, a.second - b.second};
    }
    friend PairElem operator*(const PairElem& a, const PairElem& b) {
        return {a.first * b.first, a.second * b.second};
    }
    PairElem operator-() const { return {-first, -second}; }
    PairElem inverse() const { return {first.inverse(), second.inverse()}; }
};

} // namespace tadic

#endif
