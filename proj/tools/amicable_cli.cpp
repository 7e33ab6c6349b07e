// amicable: enumerate, solve, embed and verify amicable and equable lattice
// rectangles and triangles.
//
// Exit codes: 0 success, 1 usage or input error, 2 well-formed input with a
// negative mathematical answer, 3 verification mismatch.

#include "render.hpp"

#include "amicable/rectangles.hpp"
#include "amicable/reports.hpp"
#include "amicable/triangles.hpp"
#include "amicable/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

using namespace amicable;
using cli::Format;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;
constexpr int kMismatch = 3;

const std::map<std::string, Format> kFormats{
    {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format: table, json or csv (default table)")
        ->transform(CLI::Validator(
            [](std::string& value) -> std::string {
                std::string key = CLI::detail::to_lower(value);
                auto it = kFormats.find(key);
                if (it == kFormats.end()) return "expected table, json or csv, got '" + value + "'";
                value = std::to_string(static_cast<int>(it->second));
                return {};
            },
            ""))
        ->type_name("FORMAT");
}

int rect_solve(integer a, integer x, Format format) {
    const auto outcome = rect::solve_partner(a, x);
    const auto& p = outcome.partner;
    const std::string status = p ? "solved" : "no-solution";
    switch (format) {
    case Format::json: {
        json_io::json j{{"a", a}, {"x", x}, {"status", status}};
        if (p) {
            j["b"] = p->b;
            j["y"] = p->y;
            j["first"] = json_io::to_json(fingerprint(rect::RectSides(a, p->b)));
            j["second"] = json_io::to_json(fingerprint(rect::RectSides(x, p->y)));
        } else {
            j["reason"] = rect::to_string(outcome.reason);
        }
        std::cout << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        std::cout << "a,x,status,b,y,reason\n"
                  << a << ',' << x << ',' << status << ',' << (p ? std::to_string(p->b) : "") << ','
                  << (p ? std::to_string(p->y) : "") << ',' << (p ? "" : rect::to_string(outcome.reason)) << '\n';
        break;
    case Format::table:
        if (p)
            std::cout << "a=" << a << " x=" << x << "  ->  b=" << p->b << " y=" << p->y << "   (" << a << "x"
                      << p->b << " <-> " << x << "x" << p->y << ")\n";
        else
            std::cout << "a=" << a << " x=" << x << "  ->  no solution (" << rect::to_string(outcome.reason)
                      << ")\n";
        break;
    }
    return p ? kOk : kNegative;
}

int tri_embed(integer a, integer b, integer c, Format format) {
    const tri::TriangleSides sides(a, b, c); // throws on triangle inequality
    const auto h = tri::as_heronian(sides);
    if (!h) {
        const std::string why = "not heronian: 16*area^2 = " + std::to_string(sides.sixteen_area_sq());
        if (format == Format::json)
            std::cout << json_io::json{{"sides", sides.as_vector()}, {"status", "not-heronian"},
                                       {"sixteen_area_sq", sides.sixteen_area_sq()}}
                             .dump(2)
                      << '\n';
        else
            std::cout << why << '\n';
        return kNegative;
    }
    const auto e = tri::embed_triangle(*h);
    if (!e) throw certificate_error("no lattice placement found for a heronian triangle");
    auto poly = e->polygon();
    auto squared = lattice::squared_side_lengths(poly);
    std::sort(squared.begin(), squared.end());
    const integer twice = lattice::twice_area(poly);
    switch (format) {
    case Format::json:
        std::cout << json_io::json{{"sides", sides.as_vector()},
                                   {"area", h->area},
                                   {"perimeter", h->perimeter()},
                                   {"vertices", json_io::json::array({json_io::to_json(e->v0), json_io::to_json(e->v1),
                                                                      json_io::to_json(e->v2)})},
                                   {"twice_area", twice},
                                   {"squared_sides", squared}}
                         .dump(2)
                  << '\n';
        break;
    case Format::csv:
        std::cout << "a,b,c,v0x,v0y,v1x,v1y,v2x,v2y,twice_area\n"
                  << sides.a() << ',' << sides.b() << ',' << sides.c() << ',' << e->v0.x << ',' << e->v0.y << ','
                  << e->v1.x << ',' << e->v1.y << ',' << e->v2.x << ',' << e->v2.y << ',' << twice << '\n';
        break;
    case Format::table:
        std::cout << "triangle (" << sides.a() << ',' << sides.b() << ',' << sides.c() << ")  area " << h->area
                  << "  perimeter " << h->perimeter() << '\n'
                  << "vertices (" << e->v0.x << ',' << e->v0.y << ") (" << e->v1.x << ',' << e->v1.y << ") ("
                  << e->v2.x << ',' << e->v2.y << ")\n"
                  << "squared sides " << squared[0] << ' ' << squared[1] << ' ' << squared[2] << "   twice-area "
                  << twice << '\n';
        break;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Amicable and equable polygons on the integer lattice"};
    app.require_subcommand(1);

    Format format = Format::table;
    VerifyConfig config;
    integer a = 0, x = 0;
    std::vector<integer> tri_sides;
    std::string fault;

    auto* rect_cmd = app.add_subcommand("rect", "Amicable rectangles")->require_subcommand(1);
    auto* rect_enum = rect_cmd->add_subcommand("enumerate", "All amicable rectangle pairs by divisor enumeration");
    add_format(rect_enum, format);
    auto* rect_solve_cmd = rect_cmd->add_subcommand("solve", "Solve for the partner rectangle given a and x");
    rect_solve_cmd->add_option("-a", a, "Short side of the first rectangle")->required()->check(CLI::PositiveNumber);
    rect_solve_cmd->add_option("-x", x, "Short side of the second rectangle")->required()->check(CLI::PositiveNumber);
    add_format(rect_solve_cmd, format);
    auto* rect_oracle = rect_cmd->add_subcommand("oracle", "Exhaustive scan of rectangle pairs");
    rect_oracle->add_option("--max-side", config.rect_max_side, "Largest side to scan")->check(CLI::PositiveNumber);
    add_format(rect_oracle, format);

    auto* tri_cmd = app.add_subcommand("tri", "Amicable and equable triangles")->require_subcommand(1);
    auto* tri_search = tri_cmd->add_subcommand("search", "Amicable heronian triangle pairs within a perimeter bound");
    tri_search->add_option("--max-perimeter", config.tri_max_perimeter, "Largest perimeter")
        ->check(CLI::Range(integer{3}, std::numeric_limits<integer>::max()));
    add_format(tri_search, format);
    auto* tri_embed_cmd = tri_cmd->add_subcommand("embed", "Place a heronian triangle on the lattice");
    tri_embed_cmd->add_option("sides", tri_sides, "Three side lengths")->required()->expected(3)->check(
        CLI::PositiveNumber);
    add_format(tri_embed_cmd, format);
    auto* tri_equable = tri_cmd->add_subcommand("equable", "Heronian triangles with area equal to perimeter");
    tri_equable->add_option("--max-perimeter", config.equable_max_perimeter, "Largest perimeter")
        ->check(CLI::Range(integer{3}, std::numeric_limits<integer>::max()));
    add_format(tri_equable, format);

    auto* equable_cmd = app.add_subcommand("equable", "Equable shapes")->require_subcommand(1);
    auto* equable_rect = equable_cmd->add_subcommand("rect", "Rectangles with area equal to perimeter");
    equable_rect->add_option("--max-side", config.rect_max_side, "Largest side")->check(CLI::PositiveNumber);
    add_format(equable_rect, format);

    auto* explore_cmd = app.add_subcommand("explore", "Exploratory searches")->require_subcommand(1);
    auto* explore_mixed = explore_cmd->add_subcommand("mixed", "Rectangle <-> triangle pairs (exploratory)");
    explore_mixed->add_option("--max-side", config.rect_max_side, "Largest rectangle side")
        ->check(CLI::PositiveNumber);
    explore_mixed->add_option("--max-perimeter", config.tri_max_perimeter, "Largest triangle perimeter")
        ->check(CLI::Range(integer{3}, std::numeric_limits<integer>::max()));
    add_format(explore_mixed, format);

    auto* verify_cmd = app.add_subcommand("verify", "Verification suite")->require_subcommand(1);
    auto* verify_all_cmd = verify_cmd->add_subcommand("all", "Run every check and print one consolidated report");
    verify_all_cmd->add_option("--max-side", config.rect_max_side, "Rectangle oracle bound")
        ->check(CLI::Range(integer{54}, std::numeric_limits<integer>::max()));
    verify_all_cmd->add_option("--max-perimeter", config.tri_max_perimeter, "Triangle search bound")
        ->check(CLI::Range(integer{54}, std::numeric_limits<integer>::max()));
    verify_all_cmd->add_option("--inject-fault", fault, "Force the named check to fail")->group("");
    add_format(verify_all_cmd, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (rect_enum->parsed()) {
            cli::render(std::cout, rect_divisor_report(), format);
        } else if (rect_solve_cmd->parsed()) {
            return rect_solve(a, x, format);
        } else if (rect_oracle->parsed()) {
            cli::render(std::cout, rect_oracle_report(config.rect_max_side), format);
        } else if (tri_search->parsed()) {
            cli::render(std::cout, tri_search_report(config.tri_max_perimeter), format);
        } else if (tri_embed_cmd->parsed()) {
            return tri_embed(tri_sides[0], tri_sides[1], tri_sides[2], format);
        } else if (tri_equable->parsed()) {
            cli::render(std::cout, equable_tri_report(config.equable_max_perimeter), format);
        } else if (equable_rect->parsed()) {
            cli::render(std::cout, equable_rect_report(config.rect_max_side), format);
        } else if (explore_mixed->parsed()) {
            cli::render(std::cout, mixed_report(config.rect_max_side, config.tri_max_perimeter), format);
        } else if (verify_all_cmd->parsed()) {
            if (!fault.empty()) config.inject_fault = fault;
            const auto report = verify_all(config);
            cli::render(std::cout, report, format);
            if (const auto* failed = report.first_failure()) {
                std::cerr << "verification failed: " << failed->name << ": " << failed->detail << '\n';
                return kMismatch;
            }
        }
    } catch (const certificate_error& e) {
        std::cerr << "certificate failure: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
