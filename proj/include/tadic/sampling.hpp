#ifndef TADIC_SAMPLING_HPP
#define TADIC_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "tadic/lattice.hpp"
#include "tadic/laurent.hpp"
#include "tadic/poly.hpp"
#include "tadic/quadext.hpp"
#include "tadic/ratfunc.hpp"
#include "tadic/resscalars.hpp"

namespace tadic {

// Seeded generators shared by property tests and the embed CLI.
class Sampler {
public:
    Sampler(std::int64_t p, std::uint64_t seed) : p_(p), rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    std::int64_t coeff() { return static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(p_)); }
    std::int64_t nonzero_coeff() {
        return 1 + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(p_ - 1));
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Poly poly(std::int64_t max_deg, bool nonzero = false) {
        std::int64_t d = range(0, max_deg);
        std::vector<std::int64_t> c(static_cast<std::size_t>(d + 1));
        for (auto& x : c) x = coeff();
        if (nonzero) c[static_cast<std::size_t>(d)] = nonzero_coeff();
        return Poly(p_, std::move(c));
    }

    RatFunc ratfunc(std::int64_t max_deg) {
        return RatFunc(poly(max_deg), poly(max_deg, true));
    }

    LaurentSeries series(std::int64_t start, std::int64_t prec) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(prec - start));
        for (auto& x : c) x = coeff();
        return LaurentSeries(p_, Orientation::tinv, start, std::move(c), prec);
    }
    LaurentSeries unit_series(std::int64_t start, std::int64_t prec) {
        LaurentSeries s = series(start, prec);
        if (s.is_zero_to_prec() || *s.valuation() != start) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(prec - start));
            for (auto& x : c) x = coeff();
            c[0] = nonzero_coeff();
            s = LaurentSeries(p_, Orientation::tinv, start, std::move(c), prec);
        }
        return s;
    }

    QuadElem quad(std::int64_t max_deg) { return QuadElem(ratfunc(max_deg), ratfunc(max_deg)); }
    QuadElem integral_quad(std::int64_t max_deg) {
        return QuadElem(RatFunc(poly(max_deg)), RatFunc(poly(max_deg) * Poly::t(p_)));
    }

    // Random element of SL_2(L) as a short word in elementary matrices.
    Mat2Q sl2_quad(std::int64_t max_deg, bool integral) {
        Mat2Q m = Mat2Q::identity(p_);
        std::int64_t steps = range(2, 4);
        for (std::int64_t s = 0; s < steps; ++s) {
            QuadElem theta = integral ? integral_quad(max_deg) : quad(max_deg);
            Mat2Q e = (rng_() & 1) ? Mat2Q{QuadElem::one(p_), theta, QuadElem::zero(p_), QuadElem::one(p_)}
                                   : Mat2Q{QuadElem::one(p_), QuadElem::zero(p_), theta, QuadElem::one(p_)};
            m = m * e;
        }
        return m;
    }

    // Random element of SL_2(K x K) as a word in u(.) and a(.) generators.
    Mat2P sl2_pair(std::int64_t prec) {
        auto rand_pair = [&] {
            return PairElem{series(range(-1, 2), prec), series(range(-1, 2), prec)};
        };
        auto rand_unit_pair = [&] {
            std::int64_t v1 = range(-1, 1), v2 = range(-1, 1);
            return PairElem{unit_series(v1, prec + v1), unit_series(v2, prec + v2)};
        };
        Mat2P m = pair_u(rand_pair(), p_, prec);
        std::int64_t steps = range(1, 3);
        for (std::int64_t s = 0; s < steps; ++s) {
            m = m * pair_a(rand_unit_pair());
            m = m * ((rng_() & 1) ? pair_u(rand_pair(), p_, prec)
                                  : pair_u_lower(rand_pair(), p_, prec));
        }
        return m;
    }

    // Random unimodular basis with polynomial entries of bounded degree,
    // built from elementary shears; retries until the degree cap holds.
    Lattice2 unimodular_poly_basis(std::int64_t entry_deg_cap, std::int64_t prec) {
        for (;;) {
            Poly a = Poly::constant(p_, 1), b = Poly::zero(p_), c = Poly::zero(p_),
                 d = Poly::constant(p_, 1);
            std::int64_t steps = range(1, 3);
            for (std::int64_t s = 0; s < steps; ++s) {
                Poly q = poly(2);
                if (rng_() & 1) { // column op: c2 += q c1
                    b = b + a * q;
                    d = d + c * q;
                } else { // c1 += q c2
                    a = a + b * q;
                    c = c + d * q;
                }
            }
            std::int64_t u = nonzero_coeff();
            a = a.scaled(u);
            c = c.scaled(u);
            const Fp fp(p_);
            b = b.scaled(fp.inv(u));
            d = d.scaled(fp.inv(u));
            if (a.deg() > entry_deg_cap || b.deg() > entry_deg_cap ||
                c.deg() > entry_deg_cap || d.deg() > entry_deg_cap)
                continue;
            Vec2 c1{LaurentSeries::from_poly(a, Orientation::tinv, prec),
                    LaurentSeries::from_poly(c, Orientation::tinv, prec)};
            Vec2 c2{LaurentSeries::from_poly(b, Orientation::tinv, prec),
                    LaurentSeries::from_poly(d, Orientation::tinv, prec)};
            return Lattice2{std::move(c1), std::move(c2), 0};
        }
    }

private:
    std::int64_t p_;
    std::mt19937_64 rng_;
};

} // namespace tadic

#endif
