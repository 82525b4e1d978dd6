#ifndef TADIC_AUTOSEQ_HPP
#define TADIC_AUTOSEQ_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tadic/errors.hpp"
#include "tadic/laurent.hpp"

namespace tadic {

// n = 2^l * k with k odd.
inline std::pair<std::int64_t, std::int64_t> odd_part(std::int64_t n) {
    if (n <= 0) throw domain_error("odd_part: n must be positive");
    std::int64_t l = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++l;
    }
    return {l, n};
}

struct PaperfoldParams {
    std::int64_t m; // level, >= 1
    std::int64_t p; // target field modulus

    PaperfoldParams(std::int64_t m_, std::int64_t p_) : m(m_), p(p_) {
        if (m < 1) throw domain_error("PaperfoldParams: level m must be >= 1");
    }
};

// f_n = (1/2) * ((k - 1) mod 2^{m+1}), k the odd part of n; integer value in
// [0, 2^m - 1].
inline std::int64_t paperfold_term_int(std::int64_t n, std::int64_t m) {
    auto [l, k] = odd_part(n);
    (void)l;
    std::int64_t mask = (std::int64_t{1} << (m + 1)) - 1;
    return ((k - 1) & mask) >> 1;
}

// f_n reduced into F_p.
inline std::int64_t paperfold_term(std::int64_t n, const PaperfoldParams& params) {
    return paperfold_term_int(n, params.m) % params.p;
}

// alpha = sum_{n>=1} f_n t^{-n}, truncated: coefficients f_1 .. f_{prec-1}.
inline LaurentSeries paperfold_series(const PaperfoldParams& params, std::int64_t prec) {
    if (prec < 2) throw domain_error("paperfold_series: prec must be >= 2");
    std::vector<std::int64_t> v(static_cast<std::size_t>(prec - 1));
    for (std::int64_t n = 1; n < prec; ++n)
        v[static_cast<std::size_t>(n - 1)] = paperfold_term(n, params);
    return LaurentSeries(params.p, Orientation::tinv, 1, std::move(v), prec);
}

// Largest m with 2^m | p-1.
inline std::int64_t max_two_adic(std::int64_t p) {
    return odd_part(p - 1).first;
}

// Deterministic finite automaton with output: the 4-tuple (S, s0, mu, Phi).
struct DFAO {
    std::int64_t q;                                    // digit base
    std::int64_t initial;                              // s0
    std::vector<std::vector<std::int64_t>> transitions; // transitions[d][s]
    std::vector<std::int64_t> output;                  // Phi

    std::int64_t num_states() const { return static_cast<std::int64_t>(output.size()); }

    void validate() const {
        if (q < 2) throw domain_error("DFAO: base q must be >= 2");
        if (static_cast<std::int64_t>(transitions.size()) != q)
            throw domain_error("DFAO: need one transition map per digit");
        std::int64_t S = num_states();
        if (initial < 0 || initial >= S) throw domain_error("DFAO: initial state out of range");
        for (const auto& zeta : transitions) {
            if (static_cast<std::int64_t>(zeta.size()) != S)
                throw domain_error("DFAO: transition map not total");
            for (auto s : zeta)
                if (s < 0 || s >= S) throw domain_error("DFAO: transition target out of range");
        }
    }
};

// Feed the base-q digits of n, least significant first; n = 0 applies zeta_0
// once.
inline std::int64_t dfao_eval(const DFAO& aut, std::int64_t n) {
    if (n < 0) throw domain_error("dfao_eval: n must be nonnegative");
    std::int64_t s = aut.initial;
    if (n == 0) {
        s = aut.transitions[0][static_cast<std::size_t>(s)];
    } else {
        while (n > 0) {
            std::int64_t d = n % aut.q;
            s = aut.transitions[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
            n /= aut.q;
        }
    }
    return aut.output[static_cast<std::size_t>(s)];
}

// The 3-state base-3 automaton whose output is the indicator of powers of 3;
// its series sum f_n t^{-n} is a root of x^3 - x + t^{-1}.
inline DFAO christol_example() {
    DFAO a;
    a.q = 3;
    a.initial = 0;
    a.transitions = {
        {0, 2, 2}, // zeta_0
        {1, 2, 2}, // zeta_1
        {2, 2, 2}, // zeta_2
    };
    a.output = {0, 1, 0};
    return a;
}

} // namespace tadic

#endif
