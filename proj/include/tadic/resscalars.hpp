#ifndef TADIC_RESSCALARS_HPP
#define TADIC_RESSCALARS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tadic/errors.hpp"
#include "tadic/laurent.hpp"
#include "tadic/quadext.hpp"
#include "tadic/ratfunc.hpp"

namespace tadic {

// 2x2 matrices over the various coefficient rings.
struct Mat2R { RatFunc a, b, c, d; };      // over F(t)
struct Mat2Q {                             // over L = F(beta), exact
    QuadElem a, b, c, d;

    friend Mat2Q operator*(const Mat2Q& x, const Mat2Q& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    QuadElem det() const { return a * d - b * c; }
    static Mat2Q identity(std::int64_t p) {
        return {QuadElem::one(p), QuadElem::zero(p), QuadElem::zero(p), QuadElem::one(p)};
    }
};
struct Mat2S {                             // over K
    LaurentSeries a, b, c, d;

    friend Mat2S operator*(const Mat2S& x, const Mat2S& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2S operator-(const Mat2S& x, const Mat2S& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    LaurentSeries det() const { return a * d - b * c; }
    Mat2S inverse() const {
        LaurentSeries di = det().inverse();
        return {d * di, -(b * di), -(c * di), a * di};
    }
};
struct Mat2P {                             // over K x K
    PairElem a, b, c, d;

    friend Mat2P operator*(const Mat2P& x, const Mat2P& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    PairElem det() const { return a * d - b * c; }
};

// u(theta) and a(theta) of the SL_2 generator notation, over K x K.
inline Mat2P pair_u(const PairElem& theta, std::int64_t p, std::int64_t prec) {
    PairElem one{LaurentSeries::one(p, Orientation::tinv, prec),
                 LaurentSeries::one(p, Orientation::tinv, prec)};
    PairElem zero{LaurentSeries::zero(p, Orientation::tinv, prec),
                  LaurentSeries::zero(p, Orientation::tinv, prec)};
    return Mat2P{one, theta, zero, one};
}
inline Mat2P pair_u_lower(const PairElem& theta, std::int64_t p, std::int64_t prec) {
    PairElem one{LaurentSeries::one(p, Orientation::tinv, prec),
                 LaurentSeries::one(p, Orientation::tinv, prec)};
    PairElem zero{LaurentSeries::zero(p, Orientation::tinv, prec),
                  LaurentSeries::zero(p, Orientation::tinv, prec)};
    return Mat2P{one, zero, theta, one};
}
inline Mat2P pair_a(const PairElem& alpha) {
    PairElem inv = alpha.inverse();
    std::int64_t p = alpha.first.modulus();
    std::int64_t prec = std::min(alpha.first.prec(), alpha.second.prec());
    PairElem zero{LaurentSeries::zero(p, Orientation::tinv, prec),
                  LaurentSeries::zero(p, Orientation::tinv, prec)};
    return Mat2P{alpha, zero, zero, inv};
}

// 4x4 matrix over K, block structure 2x2-of-2x2.
class Mat4 {
public:
    explicit Mat4(std::vector<LaurentSeries> entries) : e_(std::move(entries)) {
        if (e_.size() != 16) throw domain_error("Mat4: need 16 entries");
    }
    static Mat4 identity(std::int64_t p, std::int64_t prec) {
        std::vector<LaurentSeries> e;
        e.reserve(16);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                e.push_back(i == j ? LaurentSeries::one(p, Orientation::tinv, prec)
                                   : LaurentSeries::zero(p, Orientation::tinv, prec));
        return Mat4(std::move(e));
    }
    static Mat4 block_diag(const Mat2S& A, const Mat2S& B, std::int64_t p, std::int64_t prec) {
        auto z = [&] { return LaurentSeries::zero(p, Orientation::tinv, prec); };
        return Mat4({A.a, A.b, z(), z(),
                     A.c, A.d, z(), z(),
                     z(), z(), B.a, B.b,
                     z(), z(), B.c, B.d});
    }
    static Mat4 from_blocks(const Mat2S& A, const Mat2S& B, const Mat2S& C, const Mat2S& D) {
        return Mat4({A.a, A.b, B.a, B.b,
                     A.c, A.d, B.c, B.d,
                     C.a, C.b, D.a, D.b,
                     C.c, C.d, D.c, D.d});
    }

    const LaurentSeries& at(int i, int j) const { return e_[static_cast<std::size_t>(4 * i + j)]; }
    LaurentSeries& at(int i, int j) { return e_[static_cast<std::size_t>(4 * i + j)]; }

    friend Mat4 operator*(const Mat4& x, const Mat4& y) {
        std::vector<LaurentSeries> e;
        e.reserve(16);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                LaurentSeries s = x.at(i, 0) * y.at(0, j);
                for (int k = 1; k < 4; ++k) s = s + x.at(i, k) * y.at(k, j);
                e.push_back(std::move(s));
            }
        return Mat4(std::move(e));
    }
    friend Mat4 operator-(const Mat4& x, const Mat4& y) {
        std::vector<LaurentSeries> e;
        e.reserve(16);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) e.push_back(x.at(i, j) - y.at(i, j));
        return Mat4(std::move(e));
    }

    // Permutation expansion; 24 terms is fine at this size.
    LaurentSeries det() const {
        static const int perms[24][4] = {
            {0,1,2,3},{0,1,3,2},{0,2,1,3},{0,2,3,1},{0,3,1,2},{0,3,2,1},
            {1,0,2,3},{1,0,3,2},{1,2,0,3},{1,2,3,0},{1,3,0,2},{1,3,2,0},
            {2,0,1,3},{2,0,3,1},{2,1,0,3},{2,1,3,0},{2,3,0,1},{2,3,1,0},
            {3,0,1,2},{3,0,2,1},{3,1,0,2},{3,1,2,0},{3,2,0,1},{3,2,1,0}};
        static const int signs[24] = {1,-1,-1,1,1,-1,-1,1,1,-1,-1,1,
                                      1,-1,-1,1,1,-1,-1,1,1,-1,-1,1};
        std::optional<LaurentSeries> acc;
        for (int k = 0; k < 24; ++k) {
            LaurentSeries term = at(0, perms[k][0]) * at(1, perms[k][1]) *
                                 at(2, perms[k][2]) * at(3, perms[k][3]);
            if (signs[k] < 0) term = -term;
            acc = acc ? *acc + term : term;
        }
        return *acc;
    }

private:
    std::vector<LaurentSeries> e_;
};

// Regular representation of a = j + k*beta on the basis (1, t*beta):
// l_a = j*I + k*B with B = [[0, t+1], [1/t, 0]].
inline Mat2R l_matrix(const QuadElem& a) {
    std::int64_t p = a.modulus();
    RatFunc kt1 = a.k() * RatFunc(Poly(p, {1, 1}));
    RatFunc kdt = a.k() / RatFunc::t(p);
    return Mat2R{a.j(), kt1, kdt, a.j()};
}

// K-linear extension of phi_L(alpha) -> l_alpha to K x K:
// (x1, x2) = s*(1,1) + e*(beta,-beta) with s = (x1+x2)/2, e = (x1-x2)/(2*beta),
// so psi_0(x1, x2) = s*I + e*B.
inline Mat2S psi_scalar(const PairElem& x, const BetaSeries& beta) {
    std::int64_t p = x.first.modulus();
    const Fp fp(p);
    std::int64_t half = fp.inv(2 % p);
    LaurentSeries s = (x.first + x.second).scaled(half);
    LaurentSeries e = (x.first - x.second).scaled(half) * beta.series.inverse();
    Poly t1(p, {1, 1});
    return Mat2S{s, e.mul_poly(t1), e.mul_t_power(-1), s};
}

inline Mat4 psi(const Mat2P& x, const BetaSeries& beta) {
    return Mat4::from_blocks(psi_scalar(x.a, beta), psi_scalar(x.b, beta),
                             psi_scalar(x.c, beta), psi_scalar(x.d, beta));
}

inline Mat4 psi_of_quad(const Mat2Q& x, const BetaSeries& beta) {
    return psi(Mat2P{embed_pair(x.a, beta), embed_pair(x.b, beta),
                     embed_pair(x.c, beta), embed_pair(x.d, beta)},
               beta);
}

// gamma = diag(l_alpha, l_alpha) with alpha = (beta-1)/(beta+1); exact
// polynomial entries, det = 1.
inline Mat4 gamma_element(std::int64_t p, std::int64_t prec) {
    QuadElem alpha = beta_minus_one_over_beta_plus_one(p);
    Mat2R l = l_matrix(alpha);
    auto as_series = [&](const RatFunc& r) { return r.to_series(prec); };
    Mat2S block{as_series(l.a), as_series(l.b), as_series(l.c), as_series(l.d)};
    return Mat4::block_diag(block, block, p, prec);
}

struct GMatrices {
    Mat2S g1;       // rows (beta1, beta2) and (tau beta1, tau beta2), basis (1, t*beta)
    LaurentSeries c; // (beta1 tau(beta2) - beta2 tau(beta1))^{-1} = (-2 t beta)^{-1}
    Mat4 g;         // block-diag(g1, c*g1), det = 1
};

inline GMatrices g_matrices(const BetaSeries& beta) {
    std::int64_t p = beta.modulus();
    std::int64_t prec = beta.series.prec();
    LaurentSeries tb = beta.series.mul_t_power(1);
    LaurentSeries one = LaurentSeries::one(p, Orientation::tinv, prec);
    Mat2S g1{one, tb, one, -tb};
    LaurentSeries c = (-(tb + tb)).inverse();
    Mat2S cg1{g1.a * c, g1.b * c, g1.c * c, g1.d * c};
    return GMatrices{g1, c, Mat4::block_diag(g1, cg1, p, prec)};
}

// Diagonal of psi(a(alpha1, alpha2) z(zeta)) conjugated into D by g:
// (alpha1 zeta, alpha2 zeta^{-1}, alpha1^{-1} zeta, alpha2^{-1} zeta^{-1}).
inline std::array<LaurentSeries, 4> diag_from_pair(const LaurentSeries& a1,
                                                   const LaurentSeries& a2,
                                                   const LaurentSeries& zeta) {
    LaurentSeries zi = zeta.inverse();
    return {a1 * zeta, a2 * zi, a1.inverse() * zeta, a2.inverse() * zi};
}

struct ConjDiagResult {
    bool ok = false;
    std::string reason;
    std::optional<LaurentSeries> alpha1, alpha2, zeta;
    std::int64_t residual_prec = 0; // window on which the identity was checked
};

// Verify g^{-1} diag(d) g = psi(a(alpha1, alpha2) z) with alpha1, alpha2,
// zeta recovered from d: zeta^2 = d1 d3, alpha1 = d1/zeta, alpha2 = d2 zeta.
inline ConjDiagResult conj_diag_check(const std::array<LaurentSeries, 4>& d,
                                      const BetaSeries& beta) {
    ConjDiagResult res;
    for (const auto& di : d)
        if (di.is_zero_to_prec()) {
            res.reason = "diagonal entry zero to precision";
            return res;
        }
    LaurentSeries zsq = d[0] * d[2];
    LaurentSeries zeta(zsq);
    try {
        zeta = zsq.sqrt_();
    } catch (const domain_error&) {
        res.reason = "d1*d3 has no square root in K: not in psi(AZ)";
        return res;
    }
    LaurentSeries zi = zeta.inverse();
    LaurentSeries a1 = d[0] * zi;
    LaurentSeries a2 = d[1] * zeta;
    // d4 must match alpha2^{-1} zeta^{-1}, i.e. d2 d4 zeta^2 = 1.
    LaurentSeries check = d[1] * d[3] * zsq;
    LaurentSeries resid = check - LaurentSeries::one(check.modulus(), Orientation::tinv, check.prec());
    if (!resid.is_zero_to_prec()) {
        res.reason = "d2*d4 != zeta^{-2}: not in psi(AZ) to precision";
        return res;
    }
    GMatrices G = g_matrices(beta);
    Mat2S g1i = G.g1.inverse();
    auto conj_block = [&](const LaurentSeries& x, const LaurentSeries& y) {
        Mat2S diag{x, LaurentSeries::zero(x.modulus(), Orientation::tinv, x.prec()),
                   LaurentSeries::zero(x.modulus(), Orientation::tinv, x.prec()), y};
        return g1i * diag * G.g1;
    };
    Mat2S lhs1 = conj_block(d[0], d[1]);
    Mat2S lhs2 = conj_block(d[2], d[3]);
    Mat2S rhs1 = psi_scalar(PairElem{a1 * zeta, a2 * zi}, beta);
    Mat2S rhs2 = psi_scalar(PairElem{a1.inverse() * zeta, a2.inverse() * zi}, beta);
    Mat2S r1 = lhs1 - rhs1, r2 = lhs2 - rhs2;
    std::int64_t wp = r1.a.prec();
    for (const LaurentSeries* s : {&r1.a, &r1.b, &r1.c, &r1.d, &r2.a, &r2.b, &r2.c, &r2.d}) {
        wp = std::min(wp, s->prec());
        if (!s->is_zero_to_prec()) {
            res.reason = "residual exceeds window: not in psi(AZ) to precision";
            return res;
        }
    }
    res.ok = true;
    res.alpha1 = a1;
    res.alpha2 = a2;
    res.zeta = zeta;
    res.residual_prec = wp;
    return res;
}

struct SL4Verdict {
    bool yes = false; // yes-to-precision
    std::string reason;
    int row = -1, col = -1;
    std::int64_t index = 0, value = 0; // witness coefficient when no
};

// Membership in SL_4(F[t]) to precision: every certified t^{-n} (n >= 1)
// coefficient vanishes and det = 1 within window.
inline SL4Verdict in_SL4_Ft(const Mat4& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const LaurentSeries& s = m.at(i, j);
            if (s.prec() < 2)
                throw precision_error("in_SL4_Ft: entry window does not reach index 1");
            for (std::int64_t n = std::max<std::int64_t>(s.start(), 1); n < s.prec(); ++n)
                if (s.coeff(n) != 0)
                    return SL4Verdict{false, "negative-power coefficient", i, j, n, s.coeff(n)};
        }
    LaurentSeries det = m.det();
    LaurentSeries resid =
        det - LaurentSeries::one(det.modulus(), Orientation::tinv, det.prec());
    if (!resid.is_zero_to_prec())
        return SL4Verdict{false, "determinant != 1 within window", -1, -1,
                          *resid.valuation(), resid.coeffs().front()};
    return SL4Verdict{true, "", -1, -1, 0, 0};
}

} // namespace tadic

#endif
