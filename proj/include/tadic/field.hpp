#ifndef TADIC_FIELD_HPP
#define TADIC_FIELD_HPP

#include <cstdint>
#include <string>

#include "tadic/errors.hpp"

namespace tadic {

// Arithmetic context for the prime field F_p, p an odd prime.
// Elements are plain int64_t residues in [0, p); containers carry the
// modulus, elements do not.
class Fp {
public:
    explicit Fp(std::int64_t p) : p_(p) {
        if (p < 3 || !is_prime(p))
            throw domain_error("Fp: modulus must be an odd prime, got " + std::to_string(p));
    }

    std::int64_t modulus() const { return p_; }

    std::int64_t reduce(std::int64_t x) const {
        std::int64_t r = x % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + p_ : s;
    }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }

    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        std::int64_t r = 1, b = a % p_;
        while (e > 0) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    std::int64_t inv(std::int64_t a) const {
        if (a % p_ == 0) throw domain_error("Fp: inverse of zero");
        return pow(reduce(a), p_ - 2);
    }

    bool is_square(std::int64_t a) const {
        a = reduce(a);
        if (a == 0) return true;
        return pow(a, (p_ - 1) / 2) == 1;
    }

    // Square root with the smaller integer representative; throws if a is
    // a non-residue. p is small, a direct scan is fine.
    std::int64_t sqrt(std::int64_t a) const {
        a = reduce(a);
        if (a == 0) return 0;
        for (std::int64_t r = 1; r <= p_ / 2; ++r)
            if (mul(r, r) == a) return r;
        throw domain_error("Fp: " + std::to_string(a) + " is not a square mod " + std::to_string(p_));
    }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::int64_t p_;
};

} // namespace tadic

#endif
