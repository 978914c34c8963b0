#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bnlab/elliptic.hpp"
#include "bnlab/errors.hpp"
#include "bnlab/moduli.hpp"
#include "bnlab/rational.hpp"
#include "bnlab/surface.hpp"

namespace bnlab {

// Insertion-ordered JSON; all exact values are carried as strings so that a
// parse/dump cycle is byte-identical.
using Json = nlohmann::ordered_json;

/// Canonical text form: two-space indent, trailing newline.
[[nodiscard]] inline std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

[[nodiscard]] inline Json fixture_to_json(const NinePointFixture& f) {
    Json j;
    j["a"] = render(f.curve.a());
    j["b"] = render(f.curve.b());
    Json pts = Json::array();
    for (const auto& p : f.points) pts.push_back(Json::array({render(p.x()), render(p.y())}));
    j["points"] = std::move(pts);
    return j;
}

[[nodiscard]] inline NinePointFixture fixture_from_json(const Json& j) {
    try {
        EllipticCurveQ curve(parse_rat(j.at("a").get<std::string>()),
                             parse_rat(j.at("b").get<std::string>()));
        std::vector<RationalPoint> pts;
        for (const auto& e : j.at("points")) {
            if (!e.is_array() || e.size() != 2)
                throw InvalidFixture("each fixture point must be an [x, y] pair");
            pts.emplace_back(parse_rat(e.at(0).get<std::string>()),
                             parse_rat(e.at(1).get<std::string>()));
        }
        return NinePointFixture(std::move(curve), std::move(pts));
    } catch (const InvalidFixture&) {
        throw;
    } catch (const std::exception& e) {
        throw InvalidFixture(std::string("malformed fixture: ") + e.what());
    }
}

[[nodiscard]] inline NinePointFixture fixture_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidFixture(std::string("fixture is not valid JSON: ") + e.what());
    }
    return fixture_from_json(j);
}

/// Universal-curve class (or family degrees: same arity) with nonzero
/// boundary entries only.
[[nodiscard]] inline Json uc_class_to_json(const UCClass& c) {
    Json j;
    j["genus"] = c.genus();
    j["lambda"] = render(c.lambda());
    j["psi"] = render(c.psi());
    j["delta_irr"] = render(c.delta_irr());
    Json d = Json::object();
    for (long long i = 1; i <= c.genus() - 1; ++i)
        if (c.delta(i) != 0) d[std::to_string(i)] = render(c.delta(i));
    j["delta"] = std::move(d);
    return j;
}

[[nodiscard]] inline UCClass uc_class_from_json(const Json& j) {
    try {
        UCClass c(j.at("genus").get<long long>());
        c.lambda() = parse_rat(j.at("lambda").get<std::string>());
        c.psi() = parse_rat(j.at("psi").get<std::string>());
        c.delta_irr() = parse_rat(j.at("delta_irr").get<std::string>());
        for (const auto& [key, value] : j.at("delta").items())
            c.delta(parse_int(key).convert_to<long long>()) = parse_rat(value.get<std::string>());
        return c;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed class: ") + e.what());
    }
}

[[nodiscard]] inline Json surface_to_json(const SurfaceModel& m) {
    Json j;
    j["name"] = m.name;
    j["basis"] = m.lattice->basis();
    Json gram = Json::array();
    for (std::size_t i = 0; i < m.lattice->rank(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.lattice->rank(); ++k) row.push_back(render(m.lattice->gram(i, k)));
        gram.push_back(std::move(row));
    }
    j["gram"] = std::move(gram);
    Json canonical = Json::array();
    for (const auto& v : m.canonical.coeffs()) canonical.push_back(render(v));
    j["canonical"] = std::move(canonical);
    j["chi_O"] = render(m.chi_O);
    j["c2"] = render(m.c2);
    return j;
}

[[nodiscard]] inline SurfaceModel surface_from_json(const Json& j) {
    try {
        std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
        std::vector<std::vector<Int>> gram;
        for (const auto& row : j.at("gram")) {
            std::vector<Int> r;
            for (const auto& v : row) r.push_back(parse_int(v.get<std::string>()));
            gram.push_back(std::move(r));
        }
        auto lat = std::make_shared<const Lattice>(std::move(basis), std::move(gram));
        std::vector<Int> kc;
        for (const auto& v : j.at("canonical")) kc.push_back(parse_int(v.get<std::string>()));
        return SurfaceModel(j.at("name").get<std::string>(), lat, DivClass(lat, std::move(kc)),
                            parse_int(j.at("chi_O").get<std::string>()),
                            parse_int(j.at("c2").get<std::string>()));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed surface model: ") + e.what());
    }
}

}  // namespace bnlab
