#pragma once

// Table and CSV rendering for the command-line front end. JSON comes from
// amicable/report_json.hpp.

#include "amicable/report_json.hpp"
#include "amicable/rectangles.hpp"
#include "amicable/triangles.hpp"
#include "amicable/verify.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace amicable::cli {

enum class Format { table, json, csv };

inline std::string join_sides(const std::vector<integer>& sides, char sep) {
    std::string out;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(sides[i]);
    }
    return out;
}

// "1x34" for rectangles, "(3,25,26)" for triangles.
inline std::string shape_label(const search::ShapeFingerprint& s) {
    if (s.kind == "rect") return join_sides(s.sides, 'x');
    return "(" + join_sides(s.sides, ',') + ")";
}

inline void csv_header(std::ostream& os) { os << "family,a,b,x,y,area1,perim1,area2,perim2\n"; }

// Rectangles fill a,b and x,y with the two side pairs. Triangles put the
// whole side triple, dash-separated, in a and x and leave b and y empty.
inline void csv_row(std::ostream& os, const std::string& family, const search::AmicableMatch& m) {
    auto cols = [](const search::ShapeFingerprint& s) {
        if (s.kind == "rect") return std::to_string(s.sides[0]) + "," + std::to_string(s.sides[1]);
        return join_sides(s.sides, '-') + ",";
    };
    os << family << ',' << cols(m.first) << ',' << cols(m.second) << ',' << m.first.area << ','
       << m.first.perimeter << ',' << m.second.area << ',' << m.second.perimeter << '\n';
}

inline void pair_table(std::ostream& os, const std::vector<search::AmicableMatch>& pairs) {
    os << std::left << std::setw(4) << "#" << std::setw(14) << "first" << std::setw(14) << "second"
       << std::right << std::setw(7) << "area1" << std::setw(8) << "perim1" << std::setw(7) << "area2"
       << std::setw(8) << "perim2" << '\n';
    int i = 1;
    for (const auto& m : pairs) {
        os << std::left << std::setw(4) << i++ << std::setw(14) << shape_label(m.first) << std::setw(14)
           << ("<-> " + shape_label(m.second)) << std::right << std::setw(7) << m.first.area << std::setw(8)
           << m.first.perimeter << std::setw(7) << m.second.area << std::setw(8) << m.second.perimeter << '\n';
    }
}

inline void render(std::ostream& os, const search::SearchReport& r, Format f) {
    const std::string family = search::to_string(r.family);
    switch (f) {
    case Format::json:
        os << json_io::to_json(r).dump(2) << '\n';
        return;
    case Format::csv:
        if (!r.members.empty() || r.family == search::Family::equable_rectangles ||
            r.family == search::Family::equable_triangles) {
            os << "family,sides,area,perimeter\n";
            for (const auto& s : r.members)
                os << family << ',' << join_sides(s.sides, '-') << ',' << s.area << ',' << s.perimeter << '\n';
            return;
        }
        csv_header(os);
        for (const auto& m : r.pairs) csv_row(os, family, m);
        return;
    case Format::table:
        os << "family: " << family << "   bound: " << (r.bound ? std::to_string(*r.bound) : "none")
           << "   shapes scanned: " << r.shapes_scanned << '\n';
        if (r.family == search::Family::equable_rectangles || r.family == search::Family::equable_triangles) {
            for (const auto& s : r.members)
                os << "  " << shape_label(s) << "  area = perimeter = " << s.area << '\n';
            os << r.members.size() << " equable shapes\n";
        } else {
            pair_table(os, r.pairs);
            os << r.pairs.size() << " amicable pairs\n";
        }
        os << "note: " << json_io::scope_note(r.family) << '\n';
        return;
    }
}

inline void render(std::ostream& os, const VerificationReport& v, Format f) {
    switch (f) {
    case Format::json:
        os << json_io::to_json(v).dump(2) << '\n';
        return;
    case Format::csv:
        os << "check,status,detail\n";
        for (const auto& c : v.checks) os << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << c.detail << '\n';
        return;
    case Format::table:
        for (const auto& c : v.checks)
            os << std::left << std::setw(28) << c.name << (c.passed ? "pass" : "FAIL") << "  " << c.detail << '\n';
        os << '\n';
        pair_table(os, v.pairs);
        for (const auto& e : v.embeddings)
            os << "placement of (" << join_sides(e.triangle.sides.as_vector(), ',') << "): (" << e.embedding.v0.x
               << ',' << e.embedding.v0.y << ") (" << e.embedding.v1.x << ',' << e.embedding.v1.y << ") ("
               << e.embedding.v2.x << ',' << e.embedding.v2.y << ")  twice-area " << e.twice_area << '\n';
        os << "note: triangle " << json_io::scope_note(search::Family::triangles) << '\n';
        os << (v.all_passed() ? "all checks passed, " : "VERIFICATION FAILED, ") << v.pairs.size()
           << " amicable pairs total\n";
        return;
    }
}

} // namespace amicable::cli
