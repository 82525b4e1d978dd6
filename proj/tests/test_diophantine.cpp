#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "tadic/autoseq.hpp"
#include "tadic/lattice.hpp"
#include "tadic/littlewood.hpp"
#include "tadic/ratfunc.hpp"
#include "tadic/sampling.hpp"

using namespace tadic;

namespace {

// Independent brute-force oracle for the Littlewood score: raw double loop
// over (N, k) with schoolbook polynomial multiplication against the
// coefficient array of alpha, no LaurentSeries involved.
struct OracleResult {
    bool ztp = false;
    std::int64_t exp = 0;
};

OracleResult littlewood_oracle(const std::vector<std::int64_t>& f /* f[n] = coeff of t^-n */,
                               std::int64_t p, std::int64_t D, std::int64_t K) {
    std::int64_t ncount = 1;
    for (std::int64_t i = 0; i <= D; ++i) ncount *= p;
    std::optional<std::int64_t> best;
    std::int64_t P = static_cast<std::int64_t>(f.size());
    for (std::int64_t k = 0; k <= K; ++k) {
        for (std::int64_t code = 1; code < ncount; ++code) {
            std::vector<std::int64_t> N;
            for (std::int64_t c = code; c > 0; c /= p) N.push_back(c % p);
            while (!N.empty() && N.back() == 0) N.pop_back();
            std::int64_t deg = static_cast<std::int64_t>(N.size()) - 1;
            // coefficient of t^-j in N t^k alpha:  sum_i N_i f[j + k + i]
            std::int64_t window = P - k - deg; // indices 1 .. window-1 certified
            std::int64_t v = -1;
            for (std::int64_t j = 1; j < window; ++j) {
                std::int64_t acc = 0;
                for (std::int64_t i = 0; i <= deg; ++i)
                    acc = (acc + N[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j + k + i)]) % p;
                if (acc != 0) { v = j; break; }
            }
            if (v < 0) return OracleResult{true, 0};
            std::int64_t e = deg - v;
            if (!best || e < *best) best = e;
        }
    }
    return OracleResult{false, *best};
}

// Exhaustive short-vector oracle for polynomial bases: enumerate candidate
// vectors by increasing norm exponent and test lattice membership with exact
// rational linear algebra.
std::int64_t shortest_oracle(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
    std::int64_t p = a.modulus();
    RatFunc det = RatFunc(a * d - b * c);
    REQUIRE(!det.is_zero());
    auto member = [&](const Poly& w1, const Poly& w2) {
        // solve (P,Q): a P + b Q = w1, c P + d Q = w2 by Cramer
        RatFunc P = RatFunc(w1 * d - b * w2) / det;
        RatFunc Q = RatFunc(a * w2 - w1 * c) / det;
        return P.is_polynomial() && Q.is_polynomial();
    };
    for (std::int64_t e = 0;; ++e) {
        std::int64_t count = 1;
        for (std::int64_t i = 0; i <= e; ++i) count *= p;
        for (std::int64_t c1 = 0; c1 < count; ++c1)
            for (std::int64_t c2 = 0; c2 < count; ++c2) {
                if (c1 == 0 && c2 == 0) continue;
                auto decode = [&](std::int64_t code) {
                    std::vector<std::int64_t> v;
                    for (; code > 0; code /= p) v.push_back(code % p);
                    return Poly(p, v);
                };
                Poly w1 = decode(c1), w2 = decode(c2);
                if (std::max(w1.deg(), w2.deg()) != e) continue;
                if (member(w1, w2)) return e;
            }
        REQUIRE(e < 8); // corpus bases always have short vectors
    }
}

// Enumeration oracle for the Mahler height: for each Q the optimal P is minus
// the polynomial part of t^{-2n} alpha^{-1} Q, so a single loop over Q is an
// exhaustive search over the stated (P, Q) box.
std::int64_t mahler_oracle(std::int64_t m, std::int64_t n, const LaurentSeries& alpha,
                           std::int64_t qdeg_cap) {
    std::int64_t p = alpha.modulus();
    LaurentSeries ainv = alpha.inverse();
    std::int64_t best = m + n; // Q = 0, P = 1
    std::int64_t qcount = 1;
    for (std::int64_t i = 0; i <= qdeg_cap; ++i) qcount *= p;
    for (std::int64_t code = 1; code < qcount; ++code) {
        std::vector<std::int64_t> qc;
        for (std::int64_t c = code; c > 0; c /= p) qc.push_back(c % p);
        Poly Q(p, qc);
        LaurentSeries w = ainv.mul_poly(Q).mul_t_power(-2 * n);
        LaurentSeries frac = w.frac_part();
        std::int64_t first = frac.is_zero_to_prec() ? -(frac.prec() - 1) - (m + n)
                                                    : (m + n) - *frac.valuation();
        std::int64_t second = Q.deg() - (m + n);
        best = std::min(best, std::max(first, second));
    }
    return best;
}

} // namespace

TEST_CASE("littlewood score trivial verdicts") {
    LaurentSeries zero = LaurentSeries::zero(3, Orientation::tinv, 16);
    ScoreReport r0 = littlewood_score(zero, 0, 0);
    CHECK(r0.zero_to_prec);
    REQUIRE(r0.witnesses.size() == 1);
    CHECK(r0.witnesses[0].k == 0);
    CHECK(r0.witnesses[0].N.is_one());

    LaurentSeries tinv = LaurentSeries::monomial(3, Orientation::tinv, 1, 1, 8);
    ScoreReport r1 = littlewood_score(tinv, 0, 1);
    CHECK(r1.zero_to_prec);
    REQUIRE(!r1.witnesses.empty());
    CHECK(r1.witnesses[0].k == 1);
    CHECK(r1.witnesses[0].N.is_one());

    CHECK_THROWS_AS(littlewood_score(tinv, 6, 20), precision_error);
}

TEST_CASE("littlewood score matches brute-force oracle") {
    std::int64_t prec = 64;
    LaurentSeries alpha = paperfold_series(PaperfoldParams(1, 3), prec);
    ScoreReport r = littlewood_score(alpha, 6, 20);
    CHECK(!r.zero_to_prec);
    CHECK(r.score_exp < 0);

    std::vector<std::int64_t> f(static_cast<std::size_t>(prec), 0);
    for (std::int64_t n = 1; n < prec; ++n)
        f[static_cast<std::size_t>(n)] = paperfold_term_int(n, 1) % 3;
    OracleResult o = littlewood_oracle(f, 3, 6, 20);
    CHECK(!o.ztp);
    CHECK(r.score_exp == o.exp);

    // witnesses reproduce the score
    for (const auto& w : r.witnesses) {
        LaurentSeries frac = alpha.mul_t_power(w.k).mul_poly(w.N).frac_part();
        REQUIRE(!frac.is_zero_to_prec());
        CHECK(w.N.deg() - *frac.valuation() == r.score_exp);
    }
}

TEST_CASE("littlewood score monotone in the search box and constant-invariant") {
    LaurentSeries alpha = paperfold_series(PaperfoldParams(1, 3), 48);
    ScoreReport small = littlewood_score(alpha, 2, 6);
    ScoreReport bigger_d = littlewood_score(alpha, 4, 6);
    ScoreReport bigger_k = littlewood_score(alpha, 2, 12);
    CHECK(bigger_d.score_exp <= small.score_exp);
    CHECK(bigger_k.score_exp <= small.score_exp);

    for (std::int64_t c = 2; c < 3; ++c) {
        ScoreReport scaled = littlewood_score(alpha.scaled(c), 2, 6);
        CHECK(scaled.score_exp == small.score_exp);
    }
}

TEST_CASE("littlewood score identical across worker counts") {
    LaurentSeries alpha = paperfold_series(PaperfoldParams(2, 5), 48);
    ScoreReport a = littlewood_score(alpha, 3, 10, 1, 1);
    ScoreReport b = littlewood_score(alpha, 3, 10, 1, 4);
    CHECK(a.zero_to_prec == b.zero_to_prec);
    CHECK(a.score_exp == b.score_exp);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
        CHECK(a.witnesses[i].k == b.witnesses[i].k);
        CHECK(a.witnesses[i].N == b.witnesses[i].N);
    }
}

TEST_CASE("lattice reduction on fixed bases") {
    std::int64_t p = 3, prec = 24;
    Vec2 e1{LaurentSeries::one(p, Orientation::tinv, prec),
            LaurentSeries::zero(p, Orientation::tinv, prec)};
    Vec2 e2{LaurentSeries::zero(p, Orientation::tinv, prec),
            LaurentSeries::one(p, Orientation::tinv, prec)};
    CHECK(reduce_lattice2(Lattice2{e1, e2, 0}).min_exp == 0);

    Vec2 d1{LaurentSeries::monomial(p, Orientation::tinv, -1, 1, prec),
            LaurentSeries::zero(p, Orientation::tinv, prec)};
    Vec2 d2{LaurentSeries::zero(p, Orientation::tinv, prec),
            LaurentSeries::monomial(p, Orientation::tinv, 1, 1, prec)};
    CHECK(reduce_lattice2(Lattice2{d1, d2, 0}).min_exp == -1);
}

TEST_CASE("lattice reduction agrees with enumeration on random unimodular bases") {
    for (std::int64_t p : {3, 5}) {
        Sampler smp(p, 20240601);
        for (int rep = 0; rep < 200; ++rep) {
            // generate the polynomial basis and its series form side by side
            Lattice2 lat = smp.unimodular_poly_basis(4, 24);
            Poly a = lat.c1.x.poly_part(), c = lat.c1.y.poly_part();
            Poly b = lat.c2.x.poly_part(), d = lat.c2.y.poly_part();
            ReducedBasis rb = reduce_lattice2(lat);
            CHECK(rb.min_exp == shortest_oracle(a, b, c, d));
            CHECK(rb.min_exp + rb.max_exp == 0); // lambda1*lambda2 = |det| exactly
        }
    }
}

TEST_CASE("mahler height basics and oracle agreement") {
    LaurentSeries alpha = paperfold_series(PaperfoldParams(1, 3), 64);
    CHECK(mahler_height(0, 0, alpha) == 0);
    for (std::int64_t m = 0; m <= 4; ++m)
        for (std::int64_t n = 0; n <= m; ++n) {
            std::int64_t h = mahler_height(m, n, alpha);
            CHECK(h <= 0);
            CHECK(h == mahler_oracle(m, n, alpha, m + n + 4));
        }
    CHECK_THROWS_AS(mahler_height(1, 2, alpha), domain_error);
}

TEST_CASE("trajectory grid plateau for the paperfolding counterexample") {
    LaurentSeries alpha = paperfold_series(PaperfoldParams(1, 3), 128);
    HeightGrid g0 = trajectory_grid(alpha, 0);
    REQUIRE(g0.entries.size() == 1);
    CHECK(g0.min_exp == 0);

    HeightGrid g20 = trajectory_grid(alpha, 20);
    HeightGrid g30 = trajectory_grid(alpha, 30);
    CHECK(g20.min_exp > -1000000);
    CHECK(g20.min_exp == g30.min_exp);
    CHECK(!g20.ztp_witness.has_value());
}

TEST_CASE("trajectory grid detects the rational degeneration") {
    LaurentSeries alpha = LaurentSeries::monomial(3, Orientation::tinv, 1, 1, 96);
    HeightGrid g10 = trajectory_grid(alpha, 10);
    HeightGrid g20 = trajectory_grid(alpha, 20);
    CHECK(g20.min_exp < g10.min_exp); // unbounded drop as M grows
    CHECK(g20.ztp_witness.has_value()); // exact relation shows in a shortest vector
}

TEST_CASE("score-height consistency") {
    LaurentSeries alpha = paperfold_series(PaperfoldParams(1, 3), 96);
    ConsistencyReport rep = score_height_consistency(alpha, 10, 6, 20, 1000, 7);
    CHECK(rep.case_a_samples > 200);
    CHECK(rep.case_a_failures == 0);
    CHECK(!rep.height_side_ztp);
    CHECK(!rep.score_side_ztp);
    CHECK(rep.verdicts_agree);
    CHECK(rep.height_side_exp < 0);

    LaurentSeries rat = LaurentSeries::monomial(3, Orientation::tinv, 1, 1, 96);
    ConsistencyReport rrat = score_height_consistency(rat, 10, 6, 20, 200, 7);
    CHECK(rrat.height_side_ztp);
    CHECK(rrat.score_side_ztp);
    CHECK(rrat.verdicts_agree);
}
