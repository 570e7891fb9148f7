// dualis: exact projective dualization of polynomial ideals, with the
// supporting Groebner, pedal/inversion, and plotting subcommands.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dualis/dualize.hpp"
#include "dualis/parse.hpp"
#include "dualis/plane_curves.hpp"
#include "dualis/plot.hpp"
#include "dualis/print.hpp"

namespace {

using namespace dualis;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitStepLimit = 4;

struct PredicateFalse {}; // unwinds to exit code 1

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Structural, "cannot read input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Structural, "cannot write output file '" + path + "'");
    out << text;
}

IdealDocument load_document(const std::string& path) { return parse_ideal(read_input(path)); }

BuchbergerOptions options_from_env() {
    BuchbergerOptions options;
    const char* limit = std::getenv("DUALIS_STEP_LIMIT");
    if (limit != nullptr && *limit != '\0') {
        char* end = nullptr;
        unsigned long long value = std::strtoull(limit, &end, 10);
        if (end == nullptr || *end != '\0' || value == 0)
            throw Error(ErrorCode::Structural,
                        "DUALIS_STEP_LIMIT must be a positive integer");
        options.step_limit = value;
    }
    return options;
}

PlaneCurve curve_from_document(const IdealDocument& doc) {
    Ideal ideal = doc.to_ideal();
    if (ideal.ring().size() != 2)
        throw Error(ErrorCode::Structural, "plane-curve commands need a 2-variable ring");
    if (ideal.generators().size() != 1)
        throw Error(ErrorCode::Structural, "plane-curve commands need exactly one polynomial");
    return PlaneCurve(ideal.ring(), ideal.generators().front());
}

Rational parse_rational_flag(const std::string& text) {
    try {
        return Rational::from_string(text);
    } catch (const Error&) {
        throw Error(ErrorCode::Structural, "malformed rational '" + text + "'");
    }
}

EliminationStrategy strategy_flag(bool lex) {
    return lex ? EliminationStrategy::PureLex : EliminationStrategy::BlockDegRevLex;
}

void print_bool(bool value) { std::cout << (value ? "true" : "false") << "\n"; }

int run(CLI::App& app, int argc, char** argv) {
    BuchbergerOptions options = options_from_env();
    app.require_subcommand(1);

    // --- dual ---------------------------------------------------------
    auto* dual_cmd = app.add_subcommand("dual", "Dual ideal of a homogeneous ideal");
    std::string dual_in, dual_out;
    bool dual_show_system = false, dual_show_gb = false, dual_lex = false;
    dual_cmd->add_option("-i,--input", dual_in, "ideal file ('-' for stdin)")->required();
    dual_cmd->add_option("-o,--output", dual_out, "output file (default stdout)");
    dual_cmd->add_flag("--show-system", dual_show_system, "also print the extended system");
    dual_cmd->add_flag("--show-gb", dual_show_gb, "also print the elimination basis");
    dual_cmd->add_flag("--lex", dual_lex, "use the pure-lex elimination fallback");
    dual_cmd->callback([&] {
        Ideal ideal = load_document(dual_in).to_ideal();
        DualComputation result = dualize_full(ideal, strategy_flag(dual_lex), options);
        std::string out;
        if (dual_show_system) out += "# system\n" + print_ideal(result.system.system);
        if (dual_show_gb)
            out += "# elimination basis\n" +
                   print_ideal(Ideal(result.system.extended_ring, result.elimination_basis.basis));
        if (result.degenerate)
            std::cerr << "warning: dual ideal is zero (degenerate elimination)\n";
        out += print_ideal(result.dual);
        write_output(dual_out, out);
    });

    // --- bidual -------------------------------------------------------
    auto* bidual_cmd = app.add_subcommand("bidual", "Dual of the dual, compared with the input");
    std::string bidual_in, bidual_out;
    bool bidual_lex = false;
    bidual_cmd->add_option("-i,--input", bidual_in, "ideal file ('-' for stdin)")->required();
    bidual_cmd->add_option("-o,--output", bidual_out, "output file (default stdout)");
    bidual_cmd->add_flag("--lex", bidual_lex, "use the pure-lex elimination fallback");
    bidual_cmd->callback([&] {
        Ideal ideal = load_document(bidual_in).to_ideal();
        DoubleDualReport report = double_dual_check(ideal, strategy_flag(bidual_lex), options);
        std::string out = "# dual\n" + print_ideal(report.dual);
        out += "# bidual\n" + print_ideal(report.bidual);
        out += std::string("# equal: ") + (report.equal ? "true" : "false") + "\n";
        write_output(bidual_out, out);
    });

    // --- gb -----------------------------------------------------------
    auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis");
    std::string gb_in, gb_out, gb_order = "degrevlex";
    gb_cmd->add_option("-i,--input", gb_in, "ideal file ('-' for stdin)")->required();
    gb_cmd->add_option("-o,--output", gb_out, "output file (default stdout)");
    gb_cmd->add_option("--order", gb_order, "lex, degrevlex, or block:K");
    gb_cmd->callback([&] {
        Ideal ideal = load_document(gb_in).to_ideal();
        MonomialOrder order = MonomialOrder::degrevlex();
        if (gb_order == "lex") {
            order = MonomialOrder::lex();
        } else if (gb_order == "degrevlex") {
            order = MonomialOrder::degrevlex();
        } else if (gb_order.rfind("block:", 0) == 0) {
            int k = std::atoi(gb_order.c_str() + 6);
            if (k <= 0 || static_cast<std::size_t>(k) >= ideal.ring().size())
                throw Error(ErrorCode::Structural, "block:K needs 0 < K < ring size");
            order = MonomialOrder::elimination(static_cast<std::size_t>(k), ideal.ring().size());
        } else {
            throw Error(ErrorCode::Structural, "unknown order '" + gb_order + "'");
        }
        GroebnerBasis gb = reduced_groebner_basis(ideal, order, options);
        write_output(gb_out, print_ideal(Ideal(ideal.ring(), gb.basis)));
    });

    // --- nf -----------------------------------------------------------
    auto* nf_cmd = app.add_subcommand("nf", "Normal form of a polynomial");
    std::string nf_in, nf_out, nf_poly;
    nf_cmd->add_option("-i,--input", nf_in, "ideal file ('-' for stdin)")->required();
    nf_cmd->add_option("-p,--poly", nf_poly, "polynomial in the ideal's ring")->required();
    nf_cmd->add_option("-o,--output", nf_out, "output file (default stdout)");
    nf_cmd->callback([&] {
        IdealDocument doc = load_document(nf_in);
        Polynomial p = parse_polynomial(nf_poly, doc.ring);
        GroebnerBasis gb = reduced_groebner_basis(doc.to_ideal(), MonomialOrder::degrevlex(),
                                                  options);
        Polynomial r = normal_form(p, gb.basis, gb.order);
        write_output(nf_out, print_polynomial(r) + "\n");
    });

    // --- eliminate ------------------------------------------------------
    auto* elim_cmd = app.add_subcommand("eliminate", "Elimination ideal of the first K variables");
    std::string elim_in, elim_out;
    int elim_k = 0;
    bool elim_lex = false;
    elim_cmd->add_option("-i,--input", elim_in, "ideal file ('-' for stdin)")->required();
    elim_cmd->add_option("-k", elim_k, "number of leading variables to eliminate")->required();
    elim_cmd->add_option("-o,--output", elim_out, "output file (default stdout)");
    elim_cmd->add_flag("--lex", elim_lex, "use the pure-lex elimination fallback");
    elim_cmd->callback([&] {
        Ideal ideal = load_document(elim_in).to_ideal();
        if (elim_k < 0 || static_cast<std::size_t>(elim_k) >= ideal.ring().size())
            throw Error(ErrorCode::Structural, "-k must satisfy 0 <= K < ring size");
        Ideal eliminated = elimination_ideal(ideal, static_cast<std::size_t>(elim_k),
                                             strategy_flag(elim_lex), options);
        write_output(elim_out, print_ideal(eliminated));
    });

    // --- member / radmember -------------------------------------------
    auto* member_cmd = app.add_subcommand("member", "Ideal membership test");
    std::string member_in, member_poly;
    member_cmd->add_option("-i,--input", member_in, "ideal file ('-' for stdin)")->required();
    member_cmd->add_option("-p,--poly", member_poly, "polynomial to test")->required();
    member_cmd->callback([&] {
        IdealDocument doc = load_document(member_in);
        Polynomial p = parse_polynomial(member_poly, doc.ring);
        bool inside = ideal_membership(p, doc.to_ideal(), options);
        print_bool(inside);
        if (!inside) throw PredicateFalse{};
    });

    auto* radmember_cmd = app.add_subcommand("radmember", "Radical membership test");
    std::string radmember_in, radmember_poly;
    radmember_cmd->add_option("-i,--input", radmember_in, "ideal file ('-' for stdin)")->required();
    radmember_cmd->add_option("-p,--poly", radmember_poly, "polynomial to test")->required();
    radmember_cmd->callback([&] {
        IdealDocument doc = load_document(radmember_in);
        Polynomial p = parse_polynomial(radmember_poly, doc.ring);
        bool inside = radical_membership(p, doc.to_ideal(), options);
        print_bool(inside);
        if (!inside) throw PredicateFalse{};
    });

    // --- equal / contains ----------------------------------------------
    auto* equal_cmd = app.add_subcommand("equal", "Ideal equality test");
    std::string equal_in, equal_other;
    equal_cmd->add_option("-i,--input", equal_in, "ideal file ('-' for stdin)")->required();
    equal_cmd->add_option("-j,--other", equal_other, "second ideal file")->required();
    equal_cmd->callback([&] {
        Ideal a = load_document(equal_in).to_ideal();
        Ideal b = load_document(equal_other).to_ideal();
        bool eq = ideal_equal(a, b, options);
        print_bool(eq);
        if (!eq) throw PredicateFalse{};
    });

    auto* contains_cmd = app.add_subcommand("contains", "Is the second ideal inside the first?");
    std::string contains_in, contains_other;
    contains_cmd->add_option("-i,--input", contains_in, "ideal file ('-' for stdin)")->required();
    contains_cmd->add_option("-j,--other", contains_other, "second ideal file")->required();
    contains_cmd->callback([&] {
        Ideal outer = load_document(contains_in).to_ideal();
        Ideal inner = load_document(contains_other).to_ideal();
        bool holds = ideal_contains(outer, inner, options);
        print_bool(holds);
        if (!holds) throw PredicateFalse{};
    });

    // --- diagram --------------------------------------------------------
    auto* diagram_cmd = app.add_subcommand("diagram", "Inclusion checks of the dualization diagram");
    std::string diagram_in, diagram_radical;
    diagram_cmd->add_option("-i,--input", diagram_in, "ideal file ('-' for stdin)")->required();
    diagram_cmd->add_option("--radical", diagram_radical, "radical candidate ideal file");
    diagram_cmd->callback([&] {
        Ideal ideal = load_document(diagram_in).to_ideal();
        std::optional<Ideal> candidate;
        if (!diagram_radical.empty()) candidate = load_document(diagram_radical).to_ideal();
        DiagramReport report = check_diagram(ideal, candidate,
                                             EliminationStrategy::BlockDegRevLex, options);
        std::string out = "# D(I)\n" + print_ideal(report.dual_of_ideal);
        if (report.dual_of_radical) out += "# D(radical)\n" + print_ideal(*report.dual_of_radical);
        out += std::string("D(I) in rad(D(I)): ") +
               (report.dual_in_its_radical ? "true" : "false") + "\n";
        if (report.radical_dual_in_its_radical)
            out += std::string("D(rad) in rad(D(rad)): ") +
                   (*report.radical_dual_in_its_radical ? "true" : "false") + "\n";
        if (report.bent_arrow)
            out += std::string("rad(D(rad)) in rad(D(I)) (empirical): ") +
                   (*report.bent_arrow ? "true" : "false") + "\n";
        write_output("", out);
    });

    // --- homogenize / dehomogenize ---------------------------------------
    auto* homog_cmd = app.add_subcommand("homogenize", "Homogenize every generator");
    std::string homog_in, homog_out, homog_var;
    int homog_pos = 0;
    homog_cmd->add_option("-i,--input", homog_in, "ideal file ('-' for stdin)")->required();
    homog_cmd->add_option("--var", homog_var, "homogenizing variable name")->required();
    homog_cmd->add_option("--pos", homog_pos, "position of the new variable (default 0)");
    homog_cmd->add_option("-o,--output", homog_out, "output file (default stdout)");
    homog_cmd->callback([&] {
        if (is_reserved_name(homog_var))
            throw Error(ErrorCode::ReservedName, "variable name '" + homog_var + "' is reserved");
        Ideal ideal = load_document(homog_in).to_ideal();
        if (homog_pos < 0 || static_cast<std::size_t>(homog_pos) > ideal.ring().size())
            throw Error(ErrorCode::Structural, "--pos out of range");
        std::vector<Polynomial> gens;
        for (const auto& g : ideal.generators())
            gens.push_back(homogenize(g, homog_var, static_cast<std::size_t>(homog_pos),
                                      MonomialOrder::degrevlex()));
        if (gens.empty())
            throw Error(ErrorCode::EmptyIdeal, "cannot homogenize the zero ideal");
        Ring extended = gens.front().ring();
        write_output(homog_out, print_ideal(Ideal(extended, std::move(gens))));
    });

    auto* dehomog_cmd = app.add_subcommand("dehomogenize", "Set a variable to 1 and drop it");
    std::string dehomog_in, dehomog_out, dehomog_var;
    dehomog_cmd->add_option("-i,--input", dehomog_in, "ideal file ('-' for stdin)")->required();
    dehomog_cmd->add_option("--var", dehomog_var, "variable to substitute with 1")->required();
    dehomog_cmd->add_option("-o,--output", dehomog_out, "output file (default stdout)");
    dehomog_cmd->callback([&] {
        Ideal ideal = load_document(dehomog_in).to_ideal();
        auto index = ideal.ring().index_of(dehomog_var);
        if (!index)
            throw Error(ErrorCode::UnknownVariable,
                        "unknown variable '" + dehomog_var + "'");
        std::vector<Polynomial> gens;
        Ring smaller;
        for (const auto& g : ideal.generators()) {
            gens.push_back(dehomogenize(g, *index, MonomialOrder::degrevlex()));
            smaller = gens.back().ring();
        }
        if (gens.empty()) throw Error(ErrorCode::EmptyIdeal, "cannot dehomogenize the zero ideal");
        write_output(dehomog_out, print_ideal(Ideal(smaller, std::move(gens))));
    });

    // --- pedal / invert / dualpedal ---------------------------------------
    auto* pedal_cmd = app.add_subcommand("pedal", "Pedal curve w.r.t. the origin");
    std::string pedal_in, pedal_out;
    pedal_cmd->add_option("-i,--input", pedal_in, "curve file ('-' for stdin)")->required();
    pedal_cmd->add_option("-o,--output", pedal_out, "output file (default stdout)");
    pedal_cmd->callback([&] {
        PlaneCurve curve = curve_from_document(load_document(pedal_in));
        PedalResult result = pedal_implicit(curve, options);
        if (!result.principal)
            std::cerr << "warning: pedal locus is not a curve; printing the full ideal\n";
        write_output(pedal_out, print_ideal(result.ideal));
    });

    auto* invert_cmd = app.add_subcommand("invert", "Inversion in a circle about the origin");
    std::string invert_in, invert_out, invert_r2 = "-1";
    invert_cmd->add_option("-i,--input", invert_in, "curve file ('-' for stdin)")->required();
    invert_cmd->add_option("--r2", invert_r2, "squared inversion radius (default -1)");
    invert_cmd->add_option("-o,--output", invert_out, "output file (default stdout)");
    invert_cmd->callback([&] {
        PlaneCurve curve = curve_from_document(load_document(invert_in));
        InversionResult result =
            invert_implicit(curve, InversionRadiusSquared(parse_rational_flag(invert_r2)));
        if (result.through_origin)
            std::cerr << "warning: curve passes through the origin\n";
        write_output(invert_out, print_ideal(Ideal(result.curve.ring, {result.curve.f})));
    });

    auto* dualpedal_cmd = app.add_subcommand("dualpedal", "Affine dual: inversion of the pedal");
    std::string dualpedal_in, dualpedal_out, dualpedal_r2 = "-1";
    dualpedal_cmd->add_option("-i,--input", dualpedal_in, "curve file ('-' for stdin)")->required();
    dualpedal_cmd->add_option("--r2", dualpedal_r2, "squared inversion radius (default -1)");
    dualpedal_cmd->add_option("-o,--output", dualpedal_out, "output file (default stdout)");
    dualpedal_cmd->callback([&] {
        PlaneCurve curve = curve_from_document(load_document(dualpedal_in));
        PlaneCurve result = dual_via_pedal(
            curve, InversionRadiusSquared(parse_rational_flag(dualpedal_r2)), options);
        write_output(dualpedal_out, print_ideal(Ideal(result.ring, {result.f})));
    });

    // --- plot -------------------------------------------------------------
    auto* plot_cmd = app.add_subcommand("plot", "SVG contour plot of plane curves");
    std::vector<std::string> plot_in;
    std::string plot_out, plot_window;
    int plot_res = 64;
    plot_cmd->add_option("-i,--input", plot_in, "curve file (repeatable)")->required();
    plot_cmd->add_option("--window", plot_window, "XMIN,XMAX,YMIN,YMAX")->required();
    plot_cmd->add_option("--res", plot_res, "grid cells per axis (default 64)");
    plot_cmd->add_option("-o,--output", plot_out, "output SVG file (default stdout)");
    plot_cmd->callback([&] {
        PlotSpec spec;
        std::vector<std::string> parts;
        std::stringstream ss(plot_window);
        std::string part;
        while (std::getline(ss, part, ',')) parts.push_back(part);
        if (parts.size() != 4)
            throw Error(ErrorCode::Window, "--window needs XMIN,XMAX,YMIN,YMAX");
        spec.xmin = parse_rational_flag(parts[0]);
        spec.xmax = parse_rational_flag(parts[1]);
        spec.ymin = parse_rational_flag(parts[2]);
        spec.ymax = parse_rational_flag(parts[3]);
        spec.resolution = plot_res;
        std::vector<PlaneCurve> curves;
        for (const auto& path : plot_in)
            curves.push_back(curve_from_document(load_document(path)));
        write_output(plot_out, plot_implicit(curves, spec));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact projective dualization of polynomial ideals"};
    try {
        return run(app, argc, argv);
    } catch (const PredicateFalse&) {
        return kExitFalse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::Parse:
            case ErrorCode::UnknownVariable:
            case ErrorCode::ReservedName:
                return kExitParse;
            case ErrorCode::StepLimit:
                return kExitStepLimit;
            default:
                return kExitPrecondition;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}
