#pragma once

#include <fstream>
#include <variant>

#include <json.hpp>

#include "bm2d/certificates.hpp"
#include "bm2d/estimator.hpp"

namespace bm2d {

/// A parsed input body: exact (rational) when any coordinate came in as a
/// "p/q" string, floating otherwise.
struct Body {
    std::variant<PolygonD, PolygonQ> poly;
    bool exact() const { return std::holds_alternative<PolygonQ>(poly); }
    PolygonD as_double() const {
        if (exact()) return to_double(std::get<PolygonQ>(poly));
        return std::get<PolygonD>(poly);
    }
};

inline Body parse_body_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("body: expected {\"vertices\": [[x, y], ...]}");
    bool exact = false;
    for (const auto& v : j["vertices"])
        for (const auto& c : v)
            if (c.is_string()) exact = true;
    auto coordQ = [](const nlohmann::json& c) -> Rational {
        if (c.is_string()) return parse_rational(c.get<std::string>());
        if (c.is_number_integer()) return Rational(c.get<long long>());
        if (c.is_number()) return rational_from_double(c.get<double>());
        throw ParseError("body: coordinate is neither a number nor a \"p/q\" string");
    };
    if (exact) {
        std::vector<PointQ> pts;
        for (const auto& v : j["vertices"]) {
            if (!v.is_array() || v.size() != 2) throw ParseError("body: vertex is not a pair");
            pts.push_back({coordQ(v[0]), coordQ(v[1])});
        }
        return {convex_hull(std::move(pts))};
    }
    std::vector<PointD> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) throw ParseError("body: vertex is not a pair");
        if (!v[0].is_number() || !v[1].is_number())
            throw ParseError("body: coordinate is neither a number nor a \"p/q\" string");
        pts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return {convex_hull(std::move(pts))};
}

inline Body parse_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return parse_body_json(j);
}

inline nlohmann::json to_json(const PolygonQ& P) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& p : P.vertices())
        verts.push_back({to_string(p.x), to_string(p.y)});
    return {{"vertices", verts}};
}

inline nlohmann::json to_json(const PolygonD& P) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& p : P.vertices()) verts.push_back({p.x, p.y});
    return {{"vertices", verts}};
}

inline nlohmann::json to_json(const Body& b) {
    if (b.exact()) return to_json(std::get<PolygonQ>(b.poly));
    return to_json(std::get<PolygonD>(b.poly));
}

inline nlohmann::json to_json(const AffineMapD& T) {
    return {{"linear", {T.a, T.b, T.c, T.d}}, {"shift", {T.shift.x, T.shift.y}}};
}

inline nlohmann::json to_json(const SandwichCertificate& c) {
    nlohmann::json frame;
    auto pts = [](const std::array<PointD, 6>& a) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& p : a) out.push_back({p.x, p.y});
        return out;
    };
    frame["M"] = pts(c.frame.M);
    frame["V"] = pts(c.frame.V);
    frame["B"] = pts(c.frame.B);
    frame["U"] = pts(c.frame.U);
    frame["W"] = pts(c.frame.W);
    frame["U_star"] = pts(c.frame.Ustar);
    frame["W_star"] = pts(c.frame.Wstar);
    frame["a_i"] = c.frame.a;
    frame["j"] = c.frame.j;
    nlohmann::json hex = nlohmann::json::array();
    for (const auto& p : c.hex.v) hex.push_back({p.x, p.y});
    return {{"a", c.a},         {"T", to_json(c.T)},       {"lower", to_json(c.lower)},
            {"upper", to_json(c.upper)}, {"hexagon", hex}, {"center", {c.hex.center.x, c.hex.center.y}},
            {"frame", frame},   {"residual", c.residual}};
}

template <class S>
nlohmann::json to_json(const CoverCertificate<S>& c) {
    auto num = [](const S& v) -> nlohmann::json {
        if constexpr (scalar_traits<S>::exact)
            return to_string(v);
        else
            return v;
    };
    return {{"a", num(c.a)},
            {"b", num(c.b)},
            {"ratio", num(c.ratio)},
            {"center", {num(c.center.x), num(c.center.y)}},
            {"covered", to_json(c.covered)},
            {"coverer", to_json(c.coverer)},
            {"exact", c.exact}};
}

inline nlohmann::json to_json(const DistanceCertificate& c) {
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& l : c.chain)
        chain.push_back({{"label", l.label},
                         {"inner", to_json(l.inner)},
                         {"outer", to_json(l.outer)},
                         {"violation", l.violation}});
    return {{"bound", c.bound},
            {"branch", c.branch},
            {"a", c.a},
            {"b", c.b},
            {"worst_violation", c.worst_violation},
            {"chain", chain}};
}

inline nlohmann::json to_json(const GridReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"margin", c.margin}});
    return {{"pass", r.pass()}, {"checks", checks}};
}

inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << data;
}

} // namespace bm2d
