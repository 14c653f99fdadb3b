#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sharpdeg/constructions.hpp"
#include "sharpdeg/json_io.hpp"
#include "sharpdeg/parse.hpp"
#include "sharpdeg/render.hpp"
#include "sharpdeg/transforms.hpp"

namespace sharpdeg::cli {

namespace {

struct Options {
    bool json = false;
    bool trace = false;
};

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(arg);
    if (!in) throw PreconditionError("cannot open file: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_bound_report(const BoundReport& r, const Options& opt, std::ostream& out) {
    if (opt.json) {
        out << bound_report_to_json(r) << "\n";
        return;
    }
    out << "n=" << r.n << " N=" << r.N << " degree=" << rational_to_string(r.actual_degree)
        << "\n";
    if (r.bounds.empty()) {
        out << "(no bound applies)\n";
        return;
    }
    for (const BoundEntry& e : r.bounds) {
        out << e.tag << "\tbound=" << rational_to_string(e.value)
            << "\tsatisfied=" << (e.satisfied ? "yes" : "NO") << (e.sharp ? "\tsharp" : "")
            << (e.conditional ? "\tconditional" : "");
        if (!e.note.empty()) out << "\t(" << e.note << ")";
        out << "\n";
    }
}

int cmd_analyze(const std::string& text, const Options& opt, bool reduce, std::ostream& out) {
    auto [p, style] = parse_polynomial(text);
    Polynomial P(0);
    int d = 0;
    ClassReport rep;
    if (style == VarStyle::Affine) {
        rep = class_membership(p);
        d = rep.degree;
        if (!rep.in_I || d < 1) {
            if (opt.json) out << class_report_to_json(rep) << "\n";
            else if (!rep.in_I) out << "not constant 1 on the hyperplane; no diagram\n";
            else out << "constant member; the diagram is empty\n";
            return 0;
        }
        P = homogenize_and_flip(p);
    } else {
        auto Q = try_divide_by_s(p);
        if (!Q) {
            if (opt.json) out << "{\"in_I\":false}\n";
            else out << "not a multiple of the hyperplane form\n";
            return 0;
        }
        P = p;
        auto pc = p_degree_and_count(P);
        rep.in_I = true;
        rep.in_H = false;
        rep.degree = pc.degree;
        rep.p_degree = pc.p_degree;
        rep.monomial_count = pc.monomial_count;
        d = pc.degree;
    }
    Polynomial Q = divide_by_s(P);
    NewtonDiagram D = diagram_of(Q, d);
    Support K = Support::of(D);
    SupportGeometry geom = support_geometry(K);
    rep.support_connected = geom.connected;
    int nodes_count = node_count(D);
    OverhangWitness over = (D.n() == 2 || D.n() == 3) ? has_overhang(K) : OverhangWitness{};

    if (opt.json) {
        std::ostringstream extra;
        extra << "{\"class\":" << class_report_to_json(rep) << ",\"nodes\":" << nodes_count
              << ",\"support_size\":" << geom.size << ",\"connected\":" << (geom.connected ? "true" : "false")
              << ",\"overhang\":" << (over.found ? "true" : "false");
        if (D.n() == 2)
            extra << ",\"sc\":\"" << rational_to_string(weighted_surface_count_2d(D)) << "\"";
        extra << ",\"diagram\":" << diagram_to_json(D) << "}";
        out << extra.str() << "\n";
    } else {
        out << "in_H=" << (rep.in_H ? "yes" : "no") << " in_I=" << (rep.in_I ? "yes" : "no")
            << " degree=" << rep.degree << " p_degree=" << rep.p_degree
            << " N=" << rep.monomial_count << "\n";
        out << "diagram: n=" << D.n() << " d=" << D.d() << " support=" << K.points.size()
            << " size=" << geom.size << (geom.connected ? " connected" : " disconnected")
            << (over.found ? " overhang" : " no-overhang") << "\n";
        out << "nodes=" << nodes_count;
        if (D.n() == 2) out << " sc=" << rational_to_string(weighted_surface_count_2d(D));
        out << "\n";
    }

    if (reduce && D.n() == 3) {
        NewtonDiagram cur = D;
        for (;;) {
            Reduce3dResult step = reduce_3d_step(cur);
            if (step.kind == Reduce3dResult::Kind::Terminal) {
                out << "terminal: full simplex of size " << support_geometry(Support::of(step.result)).size
                    << "\n";
                break;
            }
            out << (step.kind == Reduce3dResult::Kind::SliceOffFace ? "slice-off-face"
                                                                    : "fill-level")
                << ": support " << step.result.signs().size() << " points\n";
            if (opt.trace && step.receipt) out << receipt_to_json(*step.receipt) << "\n";
            cur = step.result;
        }
    }
    return 0;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& args,
                 const std::string& choices, const std::string& steps, bool allow_long,
                 const Options& opt, std::ostream& out) {
    if (family == "filledsharp") {
        if (args.size() != 1) throw PreconditionError("filledsharp expects: d");
        auto found = filledsharp_search(std::stoi(args[0]), allow_long);
        out << "[";
        for (std::size_t i = 0; i < found.size(); ++i) {
            if (i) out << ",";
            out << "\"" << print_polynomial(found[i], VarStyle::Affine) << "\"";
        }
        out << "]\n";
        return 0;
    }
    Polynomial p(0);
    if (family == "whitney") {
        if (args.size() != 2) throw PreconditionError("whitney expects: n d");
        int n = std::stoi(args[0]), d = std::stoi(args[1]);
        std::vector<MultiIndex> parsed_choices;
        if (!choices.empty()) {
            std::stringstream ss(choices);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto [cp, cs] = parse_polynomial(item, n);
                if (cp.term_count() != 1)
                    throw PreconditionError("whitney choices must be single monomials");
                parsed_choices.push_back(cp.terms().begin()->first);
            }
        }
        p = whitney(n, d, parsed_choices);
    } else if (family == "faran2") {
        p = faran_cubics().first;
    } else if (family == "faran3") {
        p = faran_cubics().second;
    } else if (family == "dkr2d") {
        if (args.size() != 1) throw PreconditionError("dkr2d expects: d");
        p = dkr_sharp_2d(std::stoi(args[0]));
    } else if (family == "inductive") {
        if (args.size() != 1) throw PreconditionError("inductive expects a base: s | faran3");
        p = (args[0] == "s") ? Polynomial::hyperplane_sum(3)
                             : (args[0] == "faran3" ? faran_cubics().second
                                                    : throw PreconditionError("unknown base"));
        if (!steps.empty()) {
            std::stringstream ss(steps);
            std::string item;
            while (std::getline(ss, item, ';')) {
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw PreconditionError("steps look like monomial:s or monomial:faran3");
                auto [mp, ms] = parse_polynomial(item.substr(0, colon), 3);
                if (mp.term_count() != 1)
                    throw PreconditionError("step monomial must be a single monomial");
                std::string g = item.substr(colon + 1);
                Polynomial gp = (g == "s") ? Polynomial::hyperplane_sum(3)
                                           : (g == "faran3" ? faran_cubics().second
                                                            : throw PreconditionError("unknown extension"));
                p = sharp_extend(p, mp.terms().begin()->first, gp);
            }
        }
    } else {
        throw PreconditionError("unknown family: " + family);
    }
    if (opt.json) {
        out << "{\"family\":\"" << family << "\",\"n\":" << p.nvars() << ",\"d\":" << p.degree()
            << ",\"N\":" << p.term_count() << ",\"polynomial\":\""
            << print_polynomial(p, VarStyle::Affine) << "\"}\n";
    } else {
        out << print_polynomial(p, VarStyle::Affine) << "\n";
    }
    return 0;
}

int cmd_verify_bounds(const std::string& text, const Options& opt, std::ostream& out) {
    std::string trimmed = text;
    auto pos = trimmed.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos) trimmed = trimmed.substr(pos);
    BoundReport report;
    if (trimmed.rfind("map", 0) == 0) {
        MonomialMap f = parse_map(trimmed);
        report = degree_report(f);
    } else {
        auto [p, style] = parse_polynomial(trimmed);
        if (style == VarStyle::Homogeneous)
            throw PreconditionError("verify-bounds expects an affine polynomial or a map");
        report = verify_bound(p);
    }
    print_bound_report(report, opt, out);
    for (const BoundEntry& e : report.bounds)
        if (!e.satisfied && !e.conditional) return 1;  // a proved inequality failed
    return 0;
}

int cmd_enumerate(const std::string& theorem, int dmax, bool allow_long, const Options& opt,
                  std::ostream& out) {
    SweepTheorem t;
    if (theorem == "T3.4") t = SweepTheorem::T34;
    else if (theorem == "T5.2") t = SweepTheorem::T52;
    else throw PreconditionError("theorem must be T3.4 or T5.2");
    Certificate cert = exhaustive_bound_verify(t, dmax, allow_long);
    if (opt.json) {
        out << certificate_to_json(cert) << "\n";
    } else {
        out << cert.theorem << (cert.ok ? " verified" : " VIOLATED") << "\n";
        for (const SweepEntry& e : cert.entries)
            out << "d=" << e.d << " supports=" << e.support_count << " min_nodes=" << e.min_nodes
                << " bound=" << e.bound << "\n";
    }
    return cert.ok ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& format, std::ostream& out) {
    NewtonDiagram D = diagram_from_json(read_input(file));
    RenderFormat f = (format == "svg") ? RenderFormat::Svg : RenderFormat::Ascii;
    out << render_diagram(D, f);
    return 0;
}

int cmd_convert(const std::string& text, const Options& opt, std::ostream& out) {
    std::string trimmed = text;
    auto pos = trimmed.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos) trimmed = trimmed.substr(pos);
    if (trimmed.rfind("map", 0) == 0 || trimmed.rfind("{", 0) == 0) {
        MonomialMap f = trimmed[0] == '{' ? map_from_json(trimmed) : parse_map(trimmed);
        Polynomial R = real_polynomial_of_map(f);
        if (opt.json)
            out << "{\"real_polynomial\":\"" << print_polynomial(R, VarStyle::Homogeneous)
                << "\"}\n";
        else out << print_polynomial(R, VarStyle::Homogeneous) << "\n";
        return 0;
    }
    auto [p, style] = parse_polynomial(trimmed);
    if (style == VarStyle::Homogeneous)
        throw PreconditionError("convert expects an affine polynomial or a map");
    MonomialMap f = map_of_positive_polynomial(p);
    if (opt.json) out << map_to_json(f) << "\n";
    else out << print_map(f) << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Newton-diagram analysis of polynomials constant on a hyperplane"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "JSON output");
    app.add_flag("--trace", opt.trace, "emit transform receipts");

    std::string poly_text, family, map_or_poly, theorem = "T3.4", render_file,
                render_format = "ascii", choices, steps;
    std::vector<std::string> family_args;
    bool reduce = false, allow_long = false;
    int dmax = 3;

    auto* analyze = app.add_subcommand("analyze", "class membership and diagram statistics");
    analyze->add_option("polynomial", poly_text)->required();
    analyze->add_flag("--reduce", reduce, "run the 3D reduction loop");

    auto* generate = app.add_subcommand("generate", "sharp family generators and searches");
    generate->add_option("family", family,
                         "whitney | faran2 | faran3 | dkr2d | inductive | filledsharp")
        ->required();
    generate->add_option("args", family_args, "family arguments");
    generate->add_option("--choices", choices, "comma-separated whitney replacement monomials");
    generate->add_option("--steps", steps, "semicolon-separated inductive steps monomial:g");
    generate->add_flag("--long", allow_long, "allow the long-running search degrees");

    auto* verify = app.add_subcommand("verify-bounds", "report every applicable degree bound");
    verify->add_option("input", map_or_poly, "polynomial or map text")->required();

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive support sweeps");
    enumerate->add_option("theorem", theorem, "T3.4 | T5.2")->required();
    enumerate->add_option("--dmax", dmax, "largest size to sweep");
    enumerate->add_flag("--long", allow_long, "allow the long-running sizes");

    auto* render = app.add_subcommand("render", "draw a diagram from its JSON file");
    render->add_option("file", render_file, "diagram JSON path, or - for stdin")->required();
    render->add_option("--format", render_format, "ascii | svg");

    auto* convert = app.add_subcommand("convert", "map <-> polynomial bridge");
    convert->add_option("input", map_or_poly, "polynomial or map text")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(poly_text, opt, reduce, out);
        if (generate->parsed())
            return cmd_generate(family, family_args, choices, steps, allow_long, opt, out);
        if (verify->parsed()) return cmd_verify_bounds(map_or_poly, opt, out);
        if (enumerate->parsed()) return cmd_enumerate(theorem, dmax, allow_long, opt, out);
        if (render->parsed()) return cmd_render(render_file, render_format, out);
        if (convert->parsed()) return cmd_convert(map_or_poly, opt, out);
    } catch (const ContradictionError& e) {
        err << "property violation: " << e.what() << "\n";
        return 1;
    } catch (const CapExceededError& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace sharpdeg::cli
