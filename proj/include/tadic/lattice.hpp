#ifndef TADIC_LATTICE_HPP
#define TADIC_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tadic/errors.hpp"
#include "tadic/laurent.hpp"
#include "tadic/poly.hpp"

namespace tadic {

// Vector in K^2; norm = max of the coordinate absolute values.
struct Vec2 {
    LaurentSeries x, y;

    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    Vec2 mul_poly(const Poly& f) const { return {x.mul_poly(f), y.mul_poly(f)}; }

    // Norm exponent; certified unless both coordinates are zero to precision
    // or an uncertified bound dominates the certified coordinate.
    SeriesAbs norm() const {
        SeriesAbs mx = x.magnitude(), my = y.magnitude();
        if (mx.certified && my.certified)
            return {true, std::max(mx.exp, my.exp)};
        if (mx.certified && mx.exp >= my.exp) return mx;
        if (my.certified && my.exp >= mx.exp) return my;
        return {false, std::max(mx.exp, my.exp)};
    }

    bool has_ztp_coord() const { return x.is_zero_to_prec() || y.is_zero_to_prec(); }
};

// Rank-2 F[t]-module in K^2 spanned by the two columns, with a certified
// determinant exponent.
struct Lattice2 {
    Vec2 c1, c2;
    std::int64_t det_exp;

    static Lattice2 from_columns(Vec2 a, Vec2 b) {
        LaurentSeries det = a.x * b.y - a.y * b.x;
        auto v = det.valuation();
        if (!v) throw precision_error("Lattice2: determinant valuation not certified");
        return Lattice2{std::move(a), std::move(b), -*v};
    }
};

struct ReducedBasis {
    Vec2 v1, v2;          // |v1| <= |v2|, |v1| = lambda_1
    std::int64_t min_exp; // exponent of |v1|
    std::int64_t max_exp; // exponent of |v2|
    bool shortest_has_ztp_coord;
};

// Gaussian-style reduction for the sup norm over F((t^-1)): while the
// orthogonality defect is positive, the leading coefficient vectors of the
// two columns are proportional; cancelling the top of the longer column
// strictly decreases its norm.  Terminates with |v1||v2| = |det|.
inline ReducedBasis reduce_lattice2(const Lattice2& lat) {
    Vec2 v1 = lat.c1, v2 = lat.c2;
    auto leading = [](const Vec2& v, std::int64_t e) {
        // Top coefficient of each coordinate at exponent e (index -e), zero
        // if the coordinate does not attain the norm.
        std::pair<std::int64_t, std::int64_t> L{0, 0};
        SeriesAbs mx = v.x.magnitude(), my = v.y.magnitude();
        if (mx.certified && mx.exp == e) L.first = v.x.coeff(-e);
        if (my.certified && my.exp == e) L.second = v.y.coeff(-e);
        return L;
    };

    const Fp fp(v1.x.modulus());
    for (int iter = 0;; ++iter) {
        if (iter > 4096)
            throw precision_error("reduce_lattice2: no convergence (window exhausted)");
        SeriesAbs n1 = v1.norm(), n2 = v2.norm();
        if (!n1.certified || !n2.certified)
            throw precision_error("reduce_lattice2: column norm not certified within window");
        if (n2.exp < n1.exp) {
            std::swap(v1, v2);
            std::swap(n1, n2);
        }
        if (n1.exp + n2.exp == lat.det_exp) {
            return ReducedBasis{v1, v2, n1.exp, n2.exp, v1.has_ztp_coord()};
        }
        if (n1.exp + n2.exp < lat.det_exp)
            throw precision_error("reduce_lattice2: defect below zero, inconsistent windows");
        auto L1 = leading(v1, n1.exp);
        auto L2 = leading(v2, n2.exp);
        // Positive defect forces L2 parallel to L1: find the ratio.
        std::int64_t lam;
        if (L1.first != 0) {
            lam = fp.mul(L2.first, fp.inv(L1.first));
            if (fp.mul(lam, L1.second) != L2.second)
                throw precision_error("reduce_lattice2: leading vectors not proportional"
                                      " despite positive defect (precision exhausted)");
        } else {
            if (L2.first != 0)
                throw precision_error("reduce_lattice2: leading vectors not proportional"
                                      " despite positive defect (precision exhausted)");
            lam = fp.mul(L2.second, fp.inv(L1.second));
        }
        Poly q = Poly::t_power(v1.x.modulus(), n2.exp - n1.exp, lam);
        v2 = v2 - v1.mul_poly(q);
    }
}

// Mahler height of the trajectory point a(t^{m+n},1) u(t^{-2n} alpha^{-1}, 0):
// lattice columns (t^{m+n}, 0) and (t^{m-n} alpha^{-1}, t^{-m-n}); returns the
// lambda_1 exponent (det = 1, so the result is <= 0).
inline ReducedBasis mahler_reduce(std::int64_t m, std::int64_t n, const LaurentSeries& alpha) {
    if (!(m >= n && n >= 0)) throw domain_error("mahler_height: need m >= n >= 0");
    std::int64_t p = alpha.modulus();
    LaurentSeries ainv = alpha.inverse();
    std::int64_t prec = ainv.prec();
    Vec2 c1{LaurentSeries::monomial(p, Orientation::tinv, -(m + n), 1, prec),
            LaurentSeries::zero(p, Orientation::tinv, prec)};
    Vec2 c2{ainv.mul_t_power(m - n), LaurentSeries::monomial(p, Orientation::tinv, m + n, 1, prec)};
    return reduce_lattice2(Lattice2{std::move(c1), std::move(c2), 0});
}

inline std::int64_t mahler_height(std::int64_t m, std::int64_t n, const LaurentSeries& alpha) {
    return mahler_reduce(m, n, alpha).min_exp;
}

struct HeightEntry {
    std::int64_t m, n, exp;
    bool shortest_has_ztp_coord;
};

struct HeightGrid {
    std::vector<HeightEntry> entries; // ordered by (m, n), 0 <= n <= m <= M
    std::int64_t min_exp;
    // Entry witnessing an exact (to-precision) rational relation, when one
    // appeared in a shortest vector.
    std::optional<HeightEntry> ztp_witness;
};

inline HeightGrid trajectory_grid(const LaurentSeries& alpha, std::int64_t M) {
    HeightGrid grid;
    grid.min_exp = 0;
    for (std::int64_t m = 0; m <= M; ++m) {
        for (std::int64_t n = 0; n <= m; ++n) {
            ReducedBasis rb = mahler_reduce(m, n, alpha);
            // A rational relation shows up as the approximation coordinate
            // P t^{m+n} + Q t^{m-n} alpha^{-1} vanishing to precision; the
            // second coordinate vanishes only for the trivial Q = 0 vector.
            bool witness = rb.v1.x.is_zero_to_prec() && !rb.v1.y.is_zero_to_prec();
            HeightEntry e{m, n, rb.min_exp, witness};
            grid.min_exp = std::min(grid.min_exp, e.exp);
            if (e.shortest_has_ztp_coord && !grid.ztp_witness) grid.ztp_witness = e;
            grid.entries.push_back(e);
        }
    }
    return grid;
}

} // namespace tadic

#endif
