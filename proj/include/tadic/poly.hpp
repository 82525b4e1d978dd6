#ifndef TADIC_POLY_HPP
#define TADIC_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tadic/absexp.hpp"
#include "tadic/errors.hpp"
#include "tadic/field.hpp"

namespace tadic {

// Element of F_p[t].  Coefficients lowest degree first, no trailing zeros;
// |N| = p^{deg N} for N != 0, |0| = 0.
class Poly {
public:
    explicit Poly(std::int64_t p) : fp_(p) {}
    Poly(std::int64_t p, std::vector<std::int64_t> coeffs) : fp_(p) {
        c_.reserve(coeffs.size());
        for (auto x : coeffs) c_.push_back(fp_.reduce(x));
        trim();
    }

    static Poly zero(std::int64_t p) { return Poly(p); }
    static Poly constant(std::int64_t p, std::int64_t c) { return Poly(p, {c}); }
    static Poly t(std::int64_t p) { return Poly(p, {0, 1}); }
    static Poly t_power(std::int64_t p, std::int64_t k, std::int64_t c = 1) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
        v.back() = c;
        return Poly(p, std::move(v));
    }

    std::int64_t modulus() const { return fp_.modulus(); }
    const Fp& field() const { return fp_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    // deg 0 for nonzero constants, -1 for the zero polynomial.
    std::int64_t deg() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    std::int64_t coeff(std::int64_t i) const {
        if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }
    std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    AbsExp abs_exp() const { return c_.empty() ? AbsExp::zero() : AbsExp::finite(deg()); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same(b);
        std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a.fp_.add(a.coeff(static_cast<std::int64_t>(i)), b.coeff(static_cast<std::int64_t>(i)));
        return Poly(a.modulus(), std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = fp_.neg(x);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return zero(a.modulus());
        std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = a.fp_.add(r[i + j], a.fp_.mul(a.c_[i], b.c_[j]));
        return Poly(a.modulus(), std::move(r));
    }

    Poly scaled(std::int64_t c) const {
        Poly r(*this);
        c = fp_.reduce(c);
        for (auto& x : r.c_) x = fp_.mul(x, c);
        r.trim();
        return r;
    }

    // (q, r) with *this = q*b + r, deg r < deg b.
    std::pair<Poly, Poly> divmod(const Poly& b) const {
        check_same(b);
        if (b.is_zero()) throw domain_error("Poly: division by zero polynomial");
        Poly q(modulus()), r(*this);
        q.c_.assign(c_.size(), 0);
        std::int64_t linv = fp_.inv(b.leading());
        while (!r.is_zero() && r.deg() >= b.deg()) {
            std::int64_t d = r.deg() - b.deg();
            std::int64_t fac = fp_.mul(r.leading(), linv);
            q.c_[static_cast<std::size_t>(d)] = fac;
            r = r - (b * t_power(modulus(), d, fac));
        }
        q.trim();
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(fp_.inv(leading()));
    }

    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.modulus() == b.modulus() && a.c_ == b.c_;
    }

private:
    void check_same(const Poly& o) const {
        if (modulus() != o.modulus()) throw domain_error("Poly: mixed moduli");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Fp fp_;
    std::vector<std::int64_t> c_;
};

} // namespace tadic

#endif
