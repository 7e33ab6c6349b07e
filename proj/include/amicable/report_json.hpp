#pragma once

/// @file report_json.hpp
/// @brief JSON encoding of search and verification reports.
///
/// Shape records are {kind, sides, area, perimeter} with sides ascending.
/// Anything that varies between identical runs (elapsed time) lives under
/// the top-level "volatile" key; canonical() strips it.

#include "amicable/reports.hpp"
#include "amicable/search.hpp"
#include "amicable/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <string>

namespace amicable::json_io {

using json = nlohmann::ordered_json;

inline json to_json(const search::ShapeFingerprint& s) {
    return {{"kind", s.kind}, {"sides", s.sides}, {"area", s.area}, {"perimeter", s.perimeter}};
}

inline json to_json(const search::AmicableMatch& m) {
    return {{"first", to_json(m.first)}, {"second", to_json(m.second)}};
}

inline json to_json(const lattice::LatticePoint& p) { return json::array({p.x, p.y}); }

inline search::ShapeFingerprint shape_from_json(const json& j) {
    search::ShapeFingerprint s{j.at("kind").get<std::string>(), j.at("sides").get<std::vector<integer>>(),
                               j.at("area").get<integer>(), j.at("perimeter").get<integer>()};
    if (!intrinsic_consistent(s))
        throw certificate_error("shape " + s.shape_id() + " has inconsistent area or perimeter");
    return s;
}

inline search::AmicableMatch match_from_json(const json& j) {
    search::AmicableMatch m{shape_from_json(j.at("first")), shape_from_json(j.at("second"))};
    if (!search::verify_certificate(m))
        throw certificate_error("pair " + m.first.shape_id() + " <-> " + m.second.shape_id() +
                                " fails cross equalities");
    return m;
}

inline std::string scope_note(search::Family f) {
    switch (f) {
    case search::Family::triangles:
        return "uniqueness is verified only for perimeters up to the bound";
    case search::Family::rectangles:
        return "complete: every amicable rectangle pair has sides at most 54";
    case search::Family::mixed:
        return "exploratory: cross-family pairs are not a proven classification";
    default:
        return "bounded search";
    }
}

inline json to_json(const search::SearchReport& r) {
    json pairs = json::array(), members = json::array();
    for (const auto& m : r.pairs) pairs.push_back(to_json(m));
    for (const auto& s : r.members) members.push_back(to_json(s));
    json j;
    j["family"] = search::to_string(r.family);
    j["bound"] = r.bound ? json(*r.bound) : json(nullptr);
    j["shapes_scanned"] = r.shapes_scanned;
    j["pairs"] = pairs;
    j["members"] = members;
    j["checks"] = json::array({{{"name", "certificates"}, {"status", "pass"}}});
    j["note"] = scope_note(r.family);
    j["volatile"] = {{"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
    return j;
}

/// Parses a report and re-verifies every certificate it carries.
inline search::SearchReport report_from_json(const json& j) {
    auto family = search::family_from_string(j.at("family").get<std::string>());
    if (!family) throw std::invalid_argument("unknown family " + j.at("family").dump());
    search::SearchReport r;
    r.family = *family;
    if (!j.at("bound").is_null()) r.bound = j.at("bound").get<integer>();
    r.shapes_scanned = j.at("shapes_scanned").get<integer>();
    for (const auto& p : j.at("pairs")) r.pairs.push_back(match_from_json(p));
    for (const auto& s : j.at("members")) {
        auto m = shape_from_json(s);
        if (m.area != m.perimeter) throw certificate_error("member " + m.shape_id() + " is not equable");
        r.members.push_back(std::move(m));
    }
    if (j.contains("volatile") && j["volatile"].contains("elapsed_ms"))
        r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::duration<double, std::milli>(j["volatile"]["elapsed_ms"].get<double>()));
    return r;
}

inline json to_json(const VerificationReport& v) {
    json checks = json::array(), pairs = json::array(), embeddings = json::array();
    for (const auto& c : v.checks)
        checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    for (const auto& m : v.pairs) pairs.push_back(to_json(m));
    for (const auto& e : v.embeddings)
        embeddings.push_back({{"sides", e.triangle.sides.as_vector()},
                              {"area", e.triangle.area},
                              {"vertices", json::array({to_json(e.embedding.v0), to_json(e.embedding.v1),
                                                        to_json(e.embedding.v2)})},
                              {"twice_area", e.twice_area},
                              {"squared_sides", e.squared_sides}});
    json eq_rect = json::array(), eq_tri = json::array();
    for (const auto& s : v.equable_rectangles) eq_rect.push_back(to_json(s));
    for (const auto& s : v.equable_triangles) eq_tri.push_back(to_json(s));

    json j;
    j["family"] = "all";
    j["bounds"] = {{"rect_max_side", v.config.rect_max_side},
                   {"tri_max_perimeter", v.config.tri_max_perimeter},
                   {"equable_max_perimeter", v.config.equable_max_perimeter}};
    j["pairs"] = pairs;
    j["checks"] = checks;
    j["embeddings"] = embeddings;
    j["equable"] = {{"rectangles", eq_rect}, {"triangles", eq_tri}};
    j["summary"] = {{"amicable_pairs", v.pairs.size()}, {"all_passed", v.all_passed()}};
    j["note"] = scope_note(search::Family::triangles);
    return j;
}

/// The report without its "volatile" section.
inline json canonical(json j) {
    if (j.is_object()) j.erase("volatile");
    return j;
}

} // namespace amicable::json_io
