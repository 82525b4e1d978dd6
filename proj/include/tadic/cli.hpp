#ifndef TADIC_CLI_HPP
#define TADIC_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tadic/autoseq.hpp"
#include "tadic/errors.hpp"
#include "tadic/json_io.hpp"
#include "tadic/lattice.hpp"
#include "tadic/littlewood.hpp"
#include "tadic/quadext.hpp"
#include "tadic/resscalars.hpp"
#include "tadic/sampling.hpp"

namespace tadic {
namespace cli {

using nlohmann::json;

struct RunConfig {
    std::int64_t p = 3;
    std::string m_level = "1"; // integer or "auto" (auto = max_two_adic(p))
    std::int64_t prec = 64;
    std::int64_t deg_max = 0, shift_max = 0, grid = 0;
    std::int64_t samples = 0;
    std::uint64_t seed = 1;
    std::int64_t threads = 1;
    std::string out_path;
    std::string format;
    std::string alpha_file;

    std::int64_t m() const {
        if (m_level == "auto") return max_two_adic(p);
        return std::stoll(m_level);
    }
};

inline json config_json(const RunConfig& c) {
    // worker count deliberately omitted: it never affects the result and the
    // emitted bytes must not depend on it
    return json{{"p", c.p},         {"m_level", c.m_level},   {"prec", c.prec},
                {"deg_max", c.deg_max}, {"shift_max", c.shift_max}, {"grid", c.grid},
                {"samples", c.samples}, {"seed", c.seed}};
}

inline int emit(const RunConfig& c, const std::string& text, std::ostream& out,
                std::ostream& err) {
    if (!c.out_path.empty()) {
        std::ofstream f(c.out_path);
        if (!f) {
            err << "cannot open output file: " << c.out_path << "\n";
            return 1;
        }
        f << text;
        return 0;
    }
    out << text;
    return 0;
}

inline LaurentSeries load_alpha(const RunConfig& c) {
    if (!c.alpha_file.empty()) {
        std::ifstream f(c.alpha_file);
        if (!f) throw domain_error("cannot open alpha file: " + c.alpha_file);
        json j;
        f >> j;
        return laurent_from_json(j);
    }
    return paperfold_series(PaperfoldParams(c.m(), c.p), c.prec);
}

inline std::string run_beta(const RunConfig& c) {
    BetaSeries b = beta_series(c.p, c.prec);
    json j{{"config", config_json(c)}, {"series", to_json(b.series)}};
    return j.dump(2) + "\n";
}

inline std::string run_paperfold(const RunConfig& c, std::int64_t count) {
    PaperfoldParams params(c.m(), c.p);
    std::ostringstream os;
    for (std::int64_t n = 1; n <= count; ++n) {
        if (n > 1) os << ",";
        os << paperfold_term(n, params);
    }
    os << "\n";
    return os.str();
}

inline std::string run_dfao_eval(const std::string& file, std::int64_t n) {
    std::ifstream f(file);
    if (!f) throw domain_error("cannot open DFAO file: " + file);
    json j;
    f >> j;
    DFAO a = dfao_from_json(j);
    a.validate();
    return std::to_string(dfao_eval(a, n)) + "\n";
}

inline std::string run_score(const RunConfig& c) {
    LaurentSeries alpha = load_alpha(c);
    ScoreReport r = littlewood_score(alpha, c.deg_max, c.shift_max, 1, c.threads);
    json jw = json::array();
    for (const auto& w : r.witnesses)
        jw.push_back(json{{"k", w.k}, {"N", to_json(w.N)}});
    json j{{"config", config_json(c)},
           {"verdict", r.zero_to_prec ? "zero-to-precision" : "score"},
           {"zero_to_prec", r.zero_to_prec},
           {"deg_max", r.deg_max},
           {"shift_max", r.shift_max},
           {"prec", r.prec},
           {"guard", r.guard},
           {"witnesses", jw}};
    if (!r.zero_to_prec) j["score_exp"] = r.score_exp;
    return j.dump(2) + "\n";
}

inline std::string run_trajectory(const RunConfig& c) {
    LaurentSeries alpha = load_alpha(c);
    HeightGrid g = trajectory_grid(alpha, c.grid);
    std::ostringstream os;
    os << "# config: p=" << c.p << " m_level=" << c.m_level << " grid=" << c.grid
       << " prec=" << c.prec << "\n";
    os << "m,n,height_exp\n";
    for (const auto& e : g.entries) os << e.m << "," << e.n << "," << e.exp << "\n";
    if (g.ztp_witness)
        os << "# ztp_witness: m=" << g.ztp_witness->m << " n=" << g.ztp_witness->n << "\n";
    os << "# min_exp=" << g.min_exp << "\n";
    return os.str();
}

inline std::string run_consistency(const RunConfig& c) {
    LaurentSeries alpha = load_alpha(c);
    ConsistencyReport r =
        score_height_consistency(alpha, c.grid, c.deg_max, c.shift_max, c.samples, c.seed);
    json j{{"config", config_json(c)},
           {"case_a_samples", r.case_a_samples},
           {"case_a_failures", r.case_a_failures},
           {"height_side_ztp", r.height_side_ztp},
           {"score_side_ztp", r.score_side_ztp},
           {"verdicts_agree", r.verdicts_agree}};
    if (!r.height_side_ztp) j["height_side_exp"] = r.height_side_exp;
    if (!r.score_side_ztp) j["score_side_exp"] = r.score_side_exp;
    return j.dump(2) + "\n";
}

inline std::string run_embed(const RunConfig& c, const std::string& check) {
    BetaSeries bs = beta_series(c.p, c.prec);
    json samples = json::array();
    bool ok = true;
    if (check == "gamma") {
        Mat4 g = gamma_element(c.p, c.prec);
        SL4Verdict v = in_SL4_Ft(g);
        LaurentSeries det = g.det();
        LaurentSeries resid = det - LaurentSeries::one(c.p, Orientation::tinv, det.prec());
        ok = v.yes && resid.is_zero_to_prec();
        samples.push_back(json{{"in_SL4_Ft", v.yes}, {"det_residual_prec", resid.prec()}});
    } else if (check == "hom") {
        Sampler smp(c.p, c.seed);
        for (std::int64_t s = 0; s < c.samples; ++s) {
            Mat2P x = smp.sl2_pair(c.prec / 2), y = smp.sl2_pair(c.prec / 2);
            Mat4 d = psi(x * y, bs) - psi(x, bs) * psi(y, bs);
            std::int64_t wp = d.at(0, 0).prec();
            bool sok = true;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    wp = std::min(wp, d.at(i, j).prec());
                    sok = sok && d.at(i, j).is_zero_to_prec();
                }
            ok = ok && sok;
            samples.push_back(json{{"ok", sok}, {"residual_bound_exp", -wp}});
        }
    } else if (check == "membership") {
        Sampler smp(c.p, c.seed);
        for (std::int64_t s = 0; s < c.samples; ++s) {
            Mat2Q m = smp.sl2_quad(2, s % 2 == 0);
            bool integral = is_integral(m.a) && is_integral(m.b) && is_integral(m.c) &&
                            is_integral(m.d);
            SL4Verdict v = in_SL4_Ft(psi_of_quad(m, bs));
            bool sok = v.yes == integral;
            ok = ok && sok;
            samples.push_back(json{{"ok", sok}, {"integral", integral}, {"in_SL4_Ft", v.yes}});
        }
    } else if (check == "conjugation") {
        Sampler smp(c.p, c.seed);
        std::int64_t prec = std::max<std::int64_t>(8, c.prec / 3);
        for (std::int64_t s = 0; s < c.samples; ++s) {
            LaurentSeries a1 = smp.unit_series(smp.range(-1, 1), prec);
            LaurentSeries a2 = smp.unit_series(smp.range(-1, 1), prec);
            LaurentSeries zeta = smp.unit_series(0, prec);
            ConjDiagResult r = conj_diag_check(diag_from_pair(a1, a2, zeta), bs);
            ok = ok && r.ok;
            json e{{"ok", r.ok}};
            if (r.ok)
                e["residual_bound_exp"] = -r.residual_prec;
            else
                e["reason"] = r.reason;
            samples.push_back(e);
        }
    } else {
        throw domain_error("embed: unknown check '" + check + "'");
    }
    json j{{"config", config_json(c)}, {"check", check}, {"ok", ok}, {"samples", samples}};
    return j.dump(2) + "\n";
}

// Dispatch; returns the process exit code.  Exit 0 on success, 1 on domain
// errors, 2 on precision exhaustion, 64 on usage errors.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"exact arithmetic toolkit for F_p((1/t))"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "field characteristic (odd prime)");
        sub->add_option("--prec", cfg.prec, "precision window");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--out", cfg.out_path, "write output to file");
        sub->add_option("--format", cfg.format, "output format (json|csv)");
        sub->add_option("--threads", cfg.threads, "worker threads");
    };

    CLI::App* beta = app.add_subcommand("beta", "series expansion of sqrt(1 + 1/t)");
    add_common(beta);

    std::int64_t count = 8;
    CLI::App* pf = app.add_subcommand("paperfold", "paperfolding sequence terms as CSV");
    add_common(pf);
    pf->add_option("--m-level", cfg.m_level, "folding level (integer or 'auto')");
    pf->add_option("--count", count, "number of terms");

    std::string dfao_file;
    std::int64_t dfao_n = 0;
    CLI::App* dfao = app.add_subcommand("dfao", "automaton-with-output operations");
    CLI::App* dfao_eval_cmd = dfao->add_subcommand("eval", "evaluate a DFAO at n");
    dfao_eval_cmd->add_option("--file", dfao_file, "DFAO description (JSON)")->required();
    dfao_eval_cmd->add_option("--n", dfao_n, "input value")->required();
    dfao->require_subcommand(1);

    CLI::App* score = app.add_subcommand("score", "Littlewood score search");
    add_common(score);
    score->add_option("--m-level", cfg.m_level, "folding level (integer or 'auto')");
    score->add_option("--deg-max", cfg.deg_max, "max degree of N");
    score->add_option("--shift-max", cfg.shift_max, "max shift k");
    score->add_option("--alpha-file", cfg.alpha_file, "series JSON for alpha");

    CLI::App* traj = app.add_subcommand("trajectory", "Mahler height grid as CSV");
    add_common(traj);
    traj->add_option("--m-level", cfg.m_level, "folding level (integer or 'auto')");
    traj->add_option("--grid", cfg.grid, "grid bound M (0 <= n <= m <= M)");
    traj->add_option("--alpha-file", cfg.alpha_file, "series JSON for alpha");

    std::string check = "gamma";
    CLI::App* embed = app.add_subcommand("embed", "restriction-of-scalars checks");
    add_common(embed);
    embed->add_option("--check", check, "gamma|hom|membership|conjugation");
    embed->add_option("--samples", cfg.samples, "sample count");

    CLI::App* cons = app.add_subcommand("consistency", "score vs height cross-check");
    add_common(cons);
    cons->add_option("--m-level", cfg.m_level, "folding level (integer or 'auto')");
    cons->add_option("--grid", cfg.grid, "grid bound M");
    cons->add_option("--deg-max", cfg.deg_max, "max degree of N");
    cons->add_option("--shift-max", cfg.shift_max, "max shift k");
    cons->add_option("--samples", cfg.samples, "sample count");
    cons->add_option("--alpha-file", cfg.alpha_file, "series JSON for alpha");

    std::vector<std::string> argv_store;
    argv_store.push_back("tadic");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 64;
    }

    try {
        if (beta->parsed()) return emit(cfg, run_beta(cfg), out, err);
        if (pf->parsed()) return emit(cfg, run_paperfold(cfg, count), out, err);
        if (dfao->parsed()) return emit(cfg, run_dfao_eval(dfao_file, dfao_n), out, err);
        if (score->parsed()) return emit(cfg, run_score(cfg), out, err);
        if (traj->parsed()) return emit(cfg, run_trajectory(cfg), out, err);
        if (embed->parsed()) return emit(cfg, run_embed(cfg, check), out, err);
        if (cons->parsed()) return emit(cfg, run_consistency(cfg), out, err);
    } catch (const precision_error& e) {
        err << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 64;
}

} // namespace cli
} // namespace tadic

#endif
