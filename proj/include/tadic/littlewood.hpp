#ifndef TADIC_LITTLEWOOD_HPP
#define TADIC_LITTLEWOOD_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tadic/errors.hpp"
#include "tadic/lattice.hpp"
#include "tadic/laurent.hpp"
#include "tadic/poly.hpp"

namespace tadic {

struct ScoreWitness {
    std::int64_t k;
    Poly N;
};

// Canonical witness order: (k, deg N, coefficient tuple).
inline bool witness_less(const ScoreWitness& a, const ScoreWitness& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.N.deg() != b.N.deg()) return a.N.deg() < b.N.deg();
    return a.N.coeffs() < b.N.coeffs();
}

struct ScoreReport {
    bool zero_to_prec = false;     // verdict, never conflated with score 0
    std::int64_t score_exp = 0;    // score = p^score_exp when !zero_to_prec
    std::vector<ScoreWitness> witnesses;
    std::int64_t deg_max = 0, shift_max = 0, prec = 0, guard = 1;
};

namespace detail {

// Decode 1 <= code < p^{D+1} into a nonzero polynomial (digit i = coeff of t^i).
inline Poly decode_poly(std::int64_t code, std::int64_t p, std::int64_t D) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(D + 1), 0);
    for (std::int64_t i = 0; i <= D && code > 0; ++i) {
        c[static_cast<std::size_t>(i)] = code % p;
        code /= p;
    }
    return Poly(p, std::move(c));
}

struct ScorePartial {
    std::optional<std::int64_t> best;
    std::vector<ScoreWitness> attaining;
    std::vector<ScoreWitness> ztp;
};

inline void score_range(const LaurentSeries& alpha, std::int64_t D, std::int64_t k_lo,
                        std::int64_t k_hi, ScorePartial& out) {
    std::int64_t p = alpha.modulus();
    std::int64_t ncount = 1;
    for (std::int64_t i = 0; i <= D; ++i) ncount *= p;
    for (std::int64_t k = k_lo; k < k_hi; ++k) {
        LaurentSeries shifted = alpha.mul_t_power(k);
        for (std::int64_t code = 1; code < ncount; ++code) {
            Poly N = decode_poly(code, p, D);
            LaurentSeries frac = shifted.mul_poly(N).frac_part();
            if (frac.is_zero_to_prec()) {
                out.ztp.push_back(ScoreWitness{k, N});
                continue;
            }
            std::int64_t e = N.deg() - *frac.valuation();
            if (!out.best || e < *out.best) {
                out.best = e;
                out.attaining.clear();
            }
            if (e == *out.best) out.attaining.push_back(ScoreWitness{k, N});
        }
    }
}

} // namespace detail

// min over nonzero N with deg N <= D and 0 <= k <= K of |N| * |<N t^k alpha>|,
// as an exact exponent of p.  If some (N, k) zeroes the whole certified
// window, the verdict is zero-to-precision with that witness.
inline ScoreReport littlewood_score(const LaurentSeries& alpha, std::int64_t D, std::int64_t K,
                                    std::int64_t guard = 1, unsigned threads = 1) {
    if (alpha.orientation() != Orientation::tinv)
        throw domain_error("littlewood_score: alpha must have orientation t-inverse");
    if (D < 0 || K < 0) throw domain_error("littlewood_score: D and K must be >= 0");
    std::int64_t need = D + K + guard + 1;
    if (alpha.prec() < need)
        throw precision_error("littlewood_score: alpha precision " + std::to_string(alpha.prec()) +
                              " < required window " + std::to_string(need) +
                              " (= D + K + guard + 1)");

    unsigned T = std::max(1u, threads);
    std::vector<detail::ScorePartial> parts(T);
    if (T == 1) {
        detail::score_range(alpha, D, 0, K + 1, parts[0]);
    } else {
        std::vector<std::thread> pool;
        std::int64_t total = K + 1;
        for (unsigned w = 0; w < T; ++w) {
            std::int64_t lo = total * w / T, hi = total * (w + 1) / T;
            pool.emplace_back([&, w, lo, hi] { detail::score_range(alpha, D, lo, hi, parts[w]); });
        }
        for (auto& th : pool) th.join();
    }

    ScoreReport rep;
    rep.deg_max = D;
    rep.shift_max = K;
    rep.prec = alpha.prec();
    rep.guard = guard;
    std::vector<ScoreWitness> ztp;
    for (auto& pt : parts)
        for (auto& w : pt.ztp) ztp.push_back(w);
    if (!ztp.empty()) {
        std::sort(ztp.begin(), ztp.end(), witness_less);
        rep.zero_to_prec = true;
        rep.witnesses.push_back(ztp.front());
        return rep;
    }
    std::optional<std::int64_t> best;
    for (auto& pt : parts)
        if (pt.best && (!best || *pt.best < *best)) best = *pt.best;
    rep.score_exp = *best;
    for (auto& pt : parts)
        if (pt.best && *pt.best == *best)
            for (auto& w : pt.attaining) rep.witnesses.push_back(w);
    std::sort(rep.witnesses.begin(), rep.witnesses.end(), witness_less);
    return rep;
}

// Desk-scale check of the reduction chain from trajectory heights to the
// Littlewood score.
struct ConsistencyReport {
    // (a) mismatched-magnitude cases: |Q t^{-2n} alpha^{-1} + P| = max >= 1.
    std::int64_t case_a_samples = 0;
    std::int64_t case_a_failures = 0;
    // (b) matched minima: min over the grid of |P| * |Q + t^{2n} P alpha|
    // versus the Littlewood score with N = P.
    bool height_side_ztp = false;
    std::int64_t height_side_exp = 0;
    bool score_side_ztp = false;
    std::int64_t score_side_exp = 0;
    bool verdicts_agree = false;
};

inline ConsistencyReport score_height_consistency(const LaurentSeries& alpha, std::int64_t M,
                                                  std::int64_t D, std::int64_t K,
                                                  std::int64_t samples = 1000,
                                                  std::uint64_t seed = 1) {
    ConsistencyReport rep;
    std::int64_t p = alpha.modulus();
    LaurentSeries ainv = alpha.inverse();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    std::uniform_int_distribution<std::int64_t> shift(0, M);
    // (a): random P, Q != 0 and n, restricted to mismatched magnitudes.
    for (std::int64_t s = 0; s < samples; ++s) {
        std::uniform_int_distribution<std::int64_t> dd(0, D);
        std::int64_t dP = dd(rng), dQ = dd(rng), n = shift(rng);
        std::vector<std::int64_t> pc(static_cast<std::size_t>(dP + 1)), qc(static_cast<std::size_t>(dQ + 1));
        for (auto& c : pc) c = coeff(rng);
        for (auto& c : qc) c = coeff(rng);
        pc.back() = 1 + (coeff(rng) % (p - 1));
        qc.back() = 1 + (coeff(rng) % (p - 1));
        Poly P(p, pc), Q(p, qc);
        // |Q t^{-2n} alpha^{-1}| vs |P|
        auto va = ainv.valuation();
        std::int64_t mag_q = Q.deg() - 2 * n - *va; // exponent of |Q t^{-2n} alpha^{-1}|
        if (mag_q == P.deg()) continue;             // matched case handled by (b)
        ++rep.case_a_samples;
        LaurentSeries term = ainv.mul_poly(Q).mul_t_power(-2 * n) +
                             LaurentSeries::from_poly(P, Orientation::tinv, ainv.prec());
        auto mag = term.magnitude();
        bool ok = mag.certified && mag.exp == std::max(mag_q, P.deg()) && mag.exp >= 0;
        if (!ok) ++rep.case_a_failures;
    }
    // (b): min over n <= M, P nonzero with deg <= D of |P| * |<t^{2n} P alpha>|
    // (the optimal Q is minus the polynomial part).
    std::int64_t ncount = 1;
    for (std::int64_t i = 0; i <= D; ++i) ncount *= p;
    std::optional<std::int64_t> hbest;
    for (std::int64_t n = 0; 2 * n <= std::min(K, 2 * M); ++n) {
        LaurentSeries shifted = alpha.mul_t_power(2 * n);
        for (std::int64_t code = 1; code < ncount; ++code) {
            Poly P = detail::decode_poly(code, p, D);
            LaurentSeries frac = shifted.mul_poly(P).frac_part();
            if (frac.is_zero_to_prec()) {
                rep.height_side_ztp = true;
                continue;
            }
            std::int64_t e = P.deg() - *frac.valuation();
            if (!hbest || e < *hbest) hbest = e;
        }
    }
    if (!rep.height_side_ztp && hbest) rep.height_side_exp = *hbest;
    ScoreReport sr = littlewood_score(alpha, D, K);
    rep.score_side_ztp = sr.zero_to_prec;
    rep.score_side_exp = sr.score_exp;
    rep.verdicts_agree = (rep.height_side_ztp == rep.score_side_ztp);
    return rep;
}

} // namespace tadic

#endif
