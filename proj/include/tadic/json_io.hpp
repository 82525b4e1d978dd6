#ifndef TADIC_JSON_IO_HPP
#define TADIC_JSON_IO_HPP

#include <json.hpp>

#include "tadic/autoseq.hpp"
#include "tadic/laurent.hpp"
#include "tadic/poly.hpp"
#include "tadic/quadext.hpp"
#include "tadic/ratfunc.hpp"
#include "tadic/resscalars.hpp"

namespace tadic {

using nlohmann::json;

inline json to_json(const Poly& f) {
    return json{{"p", f.modulus()}, {"coeffs", f.coeffs()}};
}
inline Poly poly_from_json(const json& j) {
    return Poly(j.at("p").get<std::int64_t>(), j.at("coeffs").get<std::vector<std::int64_t>>());
}

inline json to_json(const LaurentSeries& s) {
    return json{{"p", s.modulus()},
                {"orientation", s.orientation() == Orientation::tinv ? "tinv" : "t"},
                {"start", s.start()},
                {"prec", s.prec()},
                {"coeffs", s.coeffs()}};
}
inline LaurentSeries laurent_from_json(const json& j) {
    std::string o = j.at("orientation").get<std::string>();
    if (o != "tinv" && o != "t") throw domain_error("LaurentSeries JSON: bad orientation");
    return LaurentSeries(j.at("p").get<std::int64_t>(),
                         o == "tinv" ? Orientation::tinv : Orientation::t,
                         j.at("start").get<std::int64_t>(),
                         j.at("coeffs").get<std::vector<std::int64_t>>(),
                         j.at("prec").get<std::int64_t>());
}

inline json to_json(const DFAO& a) {
    return json{{"q", a.q},
                {"states", a.num_states()},
                {"initial", a.initial},
                {"transitions", a.transitions},
                {"output", a.output}};
}
inline DFAO dfao_from_json(const json& j) {
    DFAO a;
    a.q = j.at("q").get<std::int64_t>();
    a.initial = j.at("initial").get<std::int64_t>();
    a.transitions = j.at("transitions").get<std::vector<std::vector<std::int64_t>>>();
    a.output = j.at("output").get<std::vector<std::int64_t>>();
    a.validate();
    if (j.contains("states") && j.at("states").get<std::int64_t>() != a.num_states())
        throw domain_error("DFAO JSON: state count mismatch");
    return a;
}

inline json to_json(const RatFunc& r) {
    return json{{"num", r.num().coeffs()}, {"den", r.den().coeffs()}};
}
inline json to_json(const QuadElem& a) {
    return json{{"p", a.modulus()}, {"j", to_json(a.j())}, {"k", to_json(a.k())}};
}
inline QuadElem quad_from_json(const json& j) {
    std::int64_t p = j.at("p").get<std::int64_t>();
    auto rat = [&](const json& r) {
        return RatFunc(Poly(p, r.at("num").get<std::vector<std::int64_t>>()),
                       Poly(p, r.at("den").get<std::vector<std::int64_t>>()));
    };
    return QuadElem(rat(j.at("j")), rat(j.at("k")));
}

inline json to_json(const Mat4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"entries", rows}};
}
inline Mat4 mat4_from_json(const json& j) {
    std::vector<LaurentSeries> e;
    e.reserve(16);
    for (const auto& row : j.at("entries"))
        for (const auto& cell : row) e.push_back(laurent_from_json(cell));
    return Mat4(std::move(e));
}

} // namespace tadic

#endif
