#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ratsearch/geometry.hpp"
#include "ratsearch/oracle.hpp"
#include "ratsearch/parse.hpp"
#include "ratsearch/scan.hpp"
#include "ratsearch/search.hpp"

using json = nlohmann::ordered_json;
using namespace ratsearch;

namespace {

struct Opts {
    std::string equation;
    std::string equation_file;
    std::string oracle;
    std::string format = "text";
    unsigned long first_cap = 10000;
    unsigned long candidate_cap = 10000;
    unsigned max_iter = 8;
    unsigned long height_scan = 100;
    bool strict = false;
    std::string ha, hb, hc;  // holzer positionals, arbitrary precision
};

json jrat(const Rat& q) {
    return json{{"num", num(q).get_str()}, {"den", den(q).get_str()}};
}

json jpoint(const ReducedPoint& pt) {
    return json{{"x", jrat(pt.x())}, {"y", jrat(pt.y())}, {"height", height(pt).get_str()}};
}

std::string point_text(const ReducedPoint& pt) {
    return "(" + to_string(pt.x()) + ", " + to_string(pt.y()) + ") height " +
           height(pt).get_str();
}

PlaneCurve load_curve(const Opts& o) {
    std::string text;
    if (!o.equation.empty()) {
        text = o.equation;
    } else if (!o.equation_file.empty()) {
        std::ifstream in(o.equation_file);
        if (!in) throw InputError("cannot read equation file: " + o.equation_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        throw InputError("no equation given (use -e or --equation-file)");
    }
    return PlaneCurve(parse_equation(text), true);
}

OracleSpec parse_oracle(const std::string& s) {
    if (s == "holzer") return HolzerOracle{};
    std::size_t colon = s.find(':');
    std::string kind = s.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "height-bound") {
        try {
            Int b(arg);
            if (b < 0) throw InputError("height bound must be nonnegative");
            return HeightBoundOracle{b};
        } catch (const std::invalid_argument&) {
            throw InputError("height-bound needs an integer, got: " + arg);
        }
    }
    if (kind == "list") {
        if (arg.empty()) throw InputError("list oracle needs a file path");
        return PointListOracle(read_point_list(arg));
    }
    throw InputError("unknown oracle: " + s +
                     " (expected height-bound:B, list:PATH, or holzer)");
}

Int parse_positive(const std::string& s, const char* what) {
    try {
        Int v(s);
        if (v < 1) throw InputError(std::string(what) + " must be a positive integer");
        return v;
    } catch (const std::invalid_argument&) {
        throw InputError(std::string(what) + " must be a positive integer, got: " + s);
    }
}

int run_decide(const Opts& o) {
    PlaneCurve F = load_curve(o);
    OracleVerdict v = decide(F, parse_oracle(o.oracle));
    if (o.format == "json") {
        json j;
        j["answer"] = v.answer;
        j["witness"] = v.witness ? jpoint(*v.witness) : json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else if (v.answer && v.witness) {
        std::cout << "YES (" << to_string(v.witness->x()) << ", " << to_string(v.witness->y())
                  << ")\n";
    } else {
        std::cout << (v.answer ? "YES\n" : "NO\n");
    }
    return 0;
}

int run_search(const Opts& o) {
    PlaneCurve F = load_curve(o);
    SearchConfig cfg;
    cfg.oracle = parse_oracle(o.oracle);
    cfg.first_solution_height_cap = o.first_cap;
    cfg.candidate_cap = o.candidate_cap;
    cfg.max_iterations = o.max_iter;
    cfg.strict_lift = o.strict;
    SearchReport rep = search_all(F, cfg);

    if (o.format == "json") {
        json j;
        j["status"] = rep.status == SearchStatus::Complete ? "complete" : "cap_exceeded";
        j["points"] = json::array();
        for (const ReducedPoint& pt : rep.points) j["points"].push_back(jpoint(pt));
        j["max_height"] = rep.max_height ? json(rep.max_height->get_str()) : json(nullptr);
        j["iterations"] = json::array();
        for (const IterationRecord& it : rep.iterations) {
            json rec;
            rec["p"] = jrat(it.p);
            rec["fiber"] = json::array();
            for (const ReducedPoint& pt : it.fiber_points) rec["fiber"].push_back(jpoint(pt));
            rec["center"] = it.center ? json{{"a", jrat(it.center->a)}, {"b", jrat(it.center->b)}}
                                      : json(nullptr);
            rec["image_degree"] = it.image ? json(it.image->degree()) : json(nullptr);
            j["iterations"].push_back(rec);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (rep.status == SearchStatus::Complete) {
            std::cout << "status: complete\n";
        } else {
            std::cout << "status: cap exceeded ("
                      << (rep.exhausted_cap == CapKind::FirstSolution
                              ? "first solution height cap"
                              : "iteration cap")
                      << ")\n";
        }
        std::cout << "points: " << rep.points.size() << "\n";
        for (const ReducedPoint& pt : rep.points) std::cout << "  " << point_text(pt) << "\n";
        std::cout << "max height: "
                  << (rep.max_height ? rep.max_height->get_str() : std::string("-")) << "\n";
        std::cout << "iterations: " << rep.iterations.size() << "\n";
        unsigned n = 0;
        for (const IterationRecord& it : rep.iterations) {
            std::cout << "  " << ++n << ": degree " << it.curve.degree() << ", puncture x = "
                      << to_string(it.p) << ", fiber " << it.fiber_points.size();
            if (it.center && it.image) {
                std::cout << ", center a = " << to_string(it.center->a)
                          << " b = " << to_string(it.center->b) << ", image degree "
                          << it.image->degree() << "\n";
            } else {
                std::cout << ", no projection (list exhausted)\n";
            }
        }
    }
    return rep.status == SearchStatus::Complete ? 0 : 2;
}

// one puncture-and-project round at the smallest solution's abscissa
struct StepOutcome {
    Rat p;
    std::vector<ReducedPoint> fiber;
    BirationalStep step;
};

std::optional<StepOutcome> one_step(const PlaneCurve& F, const Opts& o) {
    std::optional<ReducedPoint> first = find_first_solution(F, o.first_cap);
    if (!first) return std::nullopt;
    Rat p = first->x();
    std::vector<ReducedPoint> fiber;
    for (const Rat& y : solve_fiber(F, p)) fiber.push_back(reduce_point(p, y));
    SpaceCurve C = puncture_lift(F, p);
    CandidateCenter m = find_center(C, o.candidate_cap);
    return StepOutcome{p, fiber, project_from_center(C, m)};
}

void emit_step_fields(json& j, const StepOutcome& s) {
    j["p"] = jrat(s.p);
    j["fiber"] = json::array();
    for (const ReducedPoint& pt : s.fiber) j["fiber"].push_back(jpoint(pt));
    j["center"] = json{{"a", jrat(s.step.center.a)}, {"b", jrat(s.step.center.b)}};
    j["image_degree"] = s.step.image.degree();
    j["image"] = s.step.image.poly().str();
}

void emit_step_text(const StepOutcome& s) {
    std::cout << "puncture x = " << to_string(s.p) << "\n";
    std::cout << "fiber: " << s.fiber.size() << "\n";
    for (const ReducedPoint& pt : s.fiber) std::cout << "  " << point_text(pt) << "\n";
    std::cout << "center: a = " << to_string(s.step.center.a)
              << ", b = " << to_string(s.step.center.b) << "\n";
    std::cout << "image degree " << s.step.image.degree() << ": " << s.step.image.poly().str()
              << " = 0\n";
}

int run_transform(const Opts& o) {
    PlaneCurve F = load_curve(o);
    std::optional<StepOutcome> s = one_step(F, o);
    if (o.format == "json") {
        json j;
        j["status"] = s ? "complete" : "cap_exceeded";
        if (s) {
            emit_step_fields(j, *s);
        } else {
            j["p"] = nullptr;
            j["fiber"] = nullptr;
            j["center"] = nullptr;
            j["image_degree"] = nullptr;
            j["image"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
    } else if (s) {
        emit_step_text(*s);
    } else {
        std::cout << "no solution up to height " << o.first_cap << "; nothing to transform\n";
    }
    return s ? 0 : 2;
}

int run_screen(const Opts& o) {
    PlaneCurve F = load_curve(o);
    std::optional<StepOutcome> s = one_step(F, o);
    if (!s) {
        if (o.format == "json") {
            json j;
            j["status"] = "cap_exceeded";
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "no solution up to height " << o.first_cap << "; nothing to screen\n";
        }
        return 2;
    }

    // every rational point of the image must come from a rational point
    // upstairs; a miss means the center screening let a bad line through
    std::vector<ReducedPoint> image_pts = PointScan(s->step.image).up_to(o.height_scan);
    std::vector<ReducedPoint> anomalies;
    for (const ReducedPoint& Q : image_pts) {
        try {
            if (!lift_point(Q, s->step)) anomalies.push_back(Q);
        } catch (const AmbiguousLiftError&) {
            anomalies.push_back(Q);
        }
    }

    if (o.format == "json") {
        json j;
        j["status"] = "complete";
        emit_step_fields(j, *s);
        j["height_scan"] = o.height_scan;
        j["scanned"] = image_pts.size();
        j["anomalies"] = json::array();
        for (const ReducedPoint& Q : anomalies) j["anomalies"].push_back(jpoint(Q));
        std::cout << j.dump(2) << "\n";
    } else {
        emit_step_text(*s);
        std::cout << "scanned " << image_pts.size() << " image points up to height "
                  << o.height_scan << "\n";
        std::cout << "anomalies: " << anomalies.size() << "\n";
        for (const ReducedPoint& Q : anomalies) std::cout << "  " << point_text(Q) << "\n";
    }
    if (!anomalies.empty() && o.strict) return 4;
    return 0;
}

int run_holzer(const Opts& o) {
    Int a = parse_positive(o.ha, "a");
    Int b = parse_positive(o.hb, "b");
    Int c = parse_positive(o.hc, "c");
    Int bound = holzer_bound(a, b, c);
    std::optional<ReducedPoint> sol = holzer_decide(a, b, c);
    if (o.format == "json") {
        json j;
        j["bound"] = bound.get_str();
        j["solution"] = sol ? json{{"p", sol->p.get_str()},
                                   {"q", sol->q.get_str()},
                                   {"r", sol->r.get_str()}}
                            : json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else if (sol) {
        std::cout << "solution (" << sol->p.get_str() << ", " << sol->q.get_str() << ", "
                  << sol->r.get_str() << ") (Holzer bound " << bound.get_str() << ")\n";
    } else {
        std::cout << "no solution (Holzer bound " << bound.get_str() << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Opts o;
    CLI::App app{"exhaustive search for rational points on plane curves"};
    app.require_subcommand(1);

    auto add_equation = [&](CLI::App* sub) {
        CLI::Option* e = sub->add_option("-e,--equation", o.equation, "curve equation in x, y");
        CLI::Option* f =
            sub->add_option("--equation-file", o.equation_file, "file holding the equation");
        e->excludes(f);
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* sc_decide = app.add_subcommand("decide", "ask the oracle whether solutions exist");
    add_equation(sc_decide);
    sc_decide->add_option("--oracle", o.oracle, "height-bound:B | list:PATH | holzer")
        ->required();

    CLI::App* sc_search =
        app.add_subcommand("search", "enumerate every rational point on the curve");
    add_equation(sc_search);
    sc_search->add_option("--oracle", o.oracle, "height-bound:B | list:PATH | holzer")
        ->required();
    sc_search->add_option("--first-cap", o.first_cap, "height cap for the smallest solution");
    sc_search->add_option("--candidate-cap", o.candidate_cap, "projection center candidates");
    sc_search->add_option("--max-iter", o.max_iter, "puncture-and-project rounds");
    sc_search->add_flag("--strict", o.strict, "lift anomalies are fatal");

    CLI::App* sc_transform =
        app.add_subcommand("transform", "run one puncture-and-project round");
    add_equation(sc_transform);
    sc_transform->add_option("--first-cap", o.first_cap, "height cap for the smallest solution");
    sc_transform->add_option("--candidate-cap", o.candidate_cap,
                             "projection center candidates");

    CLI::App* sc_screen = app.add_subcommand(
        "screen", "run one round and check that image points lift back");
    add_equation(sc_screen);
    sc_screen->add_option("--first-cap", o.first_cap, "height cap for the smallest solution");
    sc_screen->add_option("--candidate-cap", o.candidate_cap, "projection center candidates");
    sc_screen->add_option("--height-scan", o.height_scan, "scan image points up to this height");
    sc_screen->add_flag("--strict", o.strict, "lift anomalies are fatal");

    CLI::App* sc_holzer =
        app.add_subcommand("holzer", "minimal solution of a*p^2 + b*q^2 = c*r^2");
    sc_holzer->add_option("a", o.ha, "coefficient a")->required();
    sc_holzer->add_option("b", o.hb, "coefficient b")->required();
    sc_holzer->add_option("c", o.hc, "coefficient c")->required();
    sc_holzer->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (*sc_decide) return run_decide(o);
        if (*sc_search) return run_search(o);
        if (*sc_transform) return run_transform(o);
        if (*sc_screen) return run_screen(o);
        if (*sc_holzer) return run_holzer(o);
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CandidateCapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // lift anomalies, projection postconditions, internal invariants
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
