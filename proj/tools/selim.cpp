#include <selim/error.hpp>
#include <selim/json_io.hpp>
#include <selim/series.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using selim::io::json;

struct Options {
    std::string input;
    bool as_json = false;
    bool all_methods = false;
    bool matrix_only = false;
    std::int64_t players = 0;
    std::uint64_t seed = 0;
    std::string support_file;
    std::optional<std::size_t> samples;
    std::vector<std::string> test_point;
};

std::string monomial_label(const std::vector<std::string>& vars, const selim::ExponentVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars[i];
        if (e[i] != 1)
            out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

void emit(const json& doc) {
    std::cout << doc.dump(2) << "\n";
}

void report_value(const Options& opt, const std::string& command, const std::string& value,
                  const std::map<std::string, std::string>& methods) {
    if (opt.as_json) {
        json out;
        out["command"] = command;
        if (!methods.empty()) {
            json m;
            for (const auto& [name, v] : methods)
                m[name] = v;
            out["methods"] = m;
        }
        out["value"] = value;
        emit(out);
        return;
    }
    if (!methods.empty()) {
        for (const auto& [name, v] : methods)
            std::cout << name << "  " << v << "\n";
        std::cout << "agreement  ok\n";
    }
    std::cout << value << "\n";
}

void require_agreement(const std::map<std::string, std::string>& methods) {
    for (const auto& [name, v] : methods)
        if (v != methods.begin()->second)
            throw selim::invariant_error("methods disagree: " + methods.begin()->first + " = " +
                                         methods.begin()->second + " but " + name + " = " + v);
}

// ---------------------------------------------------------------- bounds

void run_bounds_product(const Options& opt) {
    const auto doc = selim::io::parse_degree_matrix_doc(selim::io::load_document(opt.input));
    const selim::Integer value = selim::mbezout_product(doc.entries, doc.blocks);
    std::map<std::string, std::string> methods;
    if (opt.all_methods) {
        methods["product"] = selim::to_string(value);
        const auto unit = selim::SimplexBlockSystem::with_unit_simplices(doc.blocks, doc.entries);
        methods["permanent-mv"] = selim::to_string(selim::mixed_volume_permanent(unit));
        require_agreement(methods);
    }
    report_value(opt, "bounds product", selim::to_string(value), methods);
}

void run_bounds_gf(const Options& opt) {
    const auto doc = selim::io::parse_degree_matrix_doc(selim::io::load_document(opt.input));
    const selim::Integer value = selim::mbezout_generating_function(doc.entries, doc.blocks);
    std::map<std::string, std::string> methods;
    if (opt.all_methods) {
        methods["generating-function"] = selim::to_string(value);
        const selim::DegreeMatrix expanded = selim::expand_block_rows(doc.entries, doc.blocks);
        methods["product"] = selim::to_string(selim::mbezout_product(expanded, doc.blocks));
        const auto unit = selim::SimplexBlockSystem::with_unit_simplices(doc.blocks, expanded);
        methods["permanent-mv"] = selim::to_string(selim::mixed_volume_permanent(unit));
        require_agreement(methods);
    }
    report_value(opt, "bounds gf", selim::to_string(value), methods);
}

void run_bounds_tmne(const Options& opt) {
    const selim::Integer value = selim::tmne_bound(opt.players);
    std::map<std::string, std::string> methods;
    if (opt.all_methods) {
        methods["series"] = selim::to_string(value);
        const auto s = static_cast<std::size_t>(opt.players);
        selim::QMatrix m(s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                m.at(i, j) = (i == j) ? 0 : 1;
        methods["permanent"] = selim::to_string(selim::permanent_ryser(m));
        require_agreement(methods);
    }
    report_value(opt, "bounds tmne", selim::to_string(value), methods);
}

void run_bounds_permanent_mv(const Options& opt) {
    const auto doc = selim::io::parse_degree_matrix_doc(selim::io::load_document(opt.input));
    std::vector<selim::Rational> volumes;
    if (doc.volumes) {
        volumes = *doc.volumes;
    } else {
        for (std::int64_t n : doc.blocks.sizes)
            volumes.push_back(selim::make_rational(selim::Integer(1),
                                                   selim::factorial(static_cast<std::uint64_t>(n))));
    }
    const selim::SimplexBlockSystem sys(doc.blocks, doc.entries, volumes);
    const selim::Rational value = selim::mixed_volume_permanent(sys);
    std::map<std::string, std::string> methods;
    if (opt.all_methods) {
        methods["ryser"] = selim::to_string(value);
        const selim::QMatrix expanded = selim::expand_columns(doc.entries, doc.blocks);
        if (expanded.rows() <= 8) {
            selim::Rational brute = selim::permanent_bruteforce(expanded);
            for (const selim::Rational& v : volumes)
                brute *= v;
            methods["bruteforce"] = selim::to_string(brute);
        }
        require_agreement(methods);
    }
    report_value(opt, "bounds permanent-mv", selim::to_string(value), methods);
}

void run_bounds_mixed_area(const Options& opt) {
    const auto doc = selim::io::parse_polygon_pair_doc(selim::io::load_document(opt.input));
    const selim::Integer value = selim::mixed_area_2d(doc.p, doc.q);
    std::map<std::string, std::string> methods;
    if (opt.all_methods) {
        methods["edge-merge"] = selim::to_string(value);
        const selim::Integer hull_route =
            (selim::twice_area(selim::minkowski_sum_by_hull(doc.p, doc.q)) -
             selim::twice_area(doc.p) - selim::twice_area(doc.q)) /
            2;
        methods["hull"] = selim::to_string(hull_route);
        require_agreement(methods);
    }
    report_value(opt, "bounds mixed-area", selim::to_string(value), methods);
}

// ------------------------------------------------------------- resultant

json sylvester_matrix_json(const selim::UnivariatePair& pair, const selim::QMatrix& m) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    json row_labels = json::array();
    const std::string var = pair.f.vars().front();
    for (std::int64_t k = pair.deg_g; k-- > 0;)
        row_labels.push_back("f*" + var + "^" + std::to_string(k));
    for (std::int64_t k = pair.deg_f; k-- > 0;)
        row_labels.push_back("g*" + var + "^" + std::to_string(k));
    out["row_labels"] = row_labels;
    json col_labels = json::array();
    for (std::int64_t k = pair.deg_f + pair.deg_g; k-- > 0;)
        col_labels.push_back(var + "^" + std::to_string(k));
    out["col_labels"] = col_labels;
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(selim::to_string(m.at(i, j)));
        entries.push_back(row);
    }
    out["entries"] = entries;
    return out;
}

void run_resultant_sylvester(const Options& opt) {
    const selim::UnivariatePair pair =
        selim::io::parse_univariate_pair_doc(selim::io::load_document(opt.input));
    const selim::QMatrix m = selim::sylvester_matrix(pair);
    if (opt.matrix_only) {
        emit(sylvester_matrix_json(pair, m));
        return;
    }
    const selim::Rational value = selim::det_fraction_free(m);
    if (opt.as_json) {
        json out;
        out["command"] = "resultant sylvester";
        out["resultant"] = selim::to_string(value);
        emit(out);
    } else {
        std::cout << selim::to_string(value) << "\n";
    }
}

void run_resultant_macaulay(const Options& opt) {
    const selim::DenseHomogeneousSystem sys =
        selim::io::parse_polynomial_system_doc(selim::io::load_document(opt.input));
    if (opt.matrix_only) {
        const selim::MacaulayMatrix m = selim::macaulay_matrix(sys);
        json out;
        out["rows"] = m.matrix.rows();
        out["cols"] = m.matrix.cols();
        out["critical_degree"] = m.critical_degree;
        const std::vector<std::string>& vars = sys.polys.front().vars();
        json labels = json::array();
        for (const auto& mono : m.monomials)
            labels.push_back(monomial_label(vars, mono));
        out["row_labels"] = labels;
        out["col_labels"] = labels;
        out["row_block"] = m.row_block;
        out["reduced_rows"] = m.reduced_rows;
        out["reduced_cols"] = m.reduced_cols;
        json entries = json::array();
        for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.matrix.cols(); ++j)
                row.push_back(selim::to_string(m.matrix.at(i, j)));
            entries.push_back(row);
        }
        out["entries"] = entries;
        emit(out);
        return;
    }
    const selim::Rational value = selim::macaulay_resultant(sys);
    if (opt.as_json) {
        json out;
        out["command"] = "resultant macaulay";
        out["resultant"] = selim::to_string(value);
        emit(out);
    } else {
        std::cout << selim::to_string(value) << "\n";
    }
}

// ------------------------------------------------------------------ game

selim::BilinearTriple triple_from_document(const json& doc) {
    const std::string kind = selim::io::document_kind(doc);
    if (kind == "bilinear-triple")
        return selim::io::parse_bilinear_triple_doc(doc);
    if (kind == "payoff-tensor") {
        const selim::PayoffTensor tensor = selim::io::parse_payoff_tensor_doc(doc);
        try {
            return selim::to_bilinear_triple(selim::build_tmne_system(tensor));
        } catch (const selim::dimension_error& e) {
            throw selim::schema_error(std::string("not a 2x2x2 game: ") + e.what());
        }
    }
    throw selim::schema_error("kind: expected \"payoff-tensor\" or \"bilinear-triple\", got \"" +
                              kind + "\"");
}

void run_game_build(const Options& opt) {
    const json doc = selim::io::load_document(opt.input);
    const selim::PayoffTensor tensor = selim::io::parse_payoff_tensor_doc(doc);
    const selim::TMNESystem sys = selim::build_tmne_system(tensor);

    const bool is_2x2x2 =
        sys.blocks.block_count() == 3 && sys.blocks.total() == 3 && sys.equations.size() == 3;
    if (opt.as_json) {
        if (is_2x2x2) {
            try {
                emit(selim::io::bilinear_triple_to_json(selim::to_bilinear_triple(sys)));
                return;
            } catch (const selim::domain_error&) {
                // an identically zero equation cannot form a triple; fall
                // through to the generic system document
            }
        }
        json out;
        out["variables"] = sys.variables;
        out["blocks"] = sys.blocks.sizes;
        json eqs = json::array();
        for (std::size_t k = 0; k < sys.equations.size(); ++k) {
            json e;
            e["player"] = sys.equation_player[k] + 1;
            e["polynomial"] = selim::io::polynomial_to_json(sys.equations[k]);
            eqs.push_back(e);
        }
        out["equations"] = eqs;
        emit(out);
        return;
    }
    for (std::size_t k = 0; k < sys.equations.size(); ++k)
        std::cout << "player " << sys.equation_player[k] + 1 << ": " << sys.equations[k].str()
                  << " = 0\n";
}

void run_game_discriminant(const Options& opt) {
    const selim::BilinearTriple t = triple_from_document(selim::io::load_document(opt.input));
    const selim::Rational value = selim::discriminant_2x2x2(t);
    if (opt.as_json) {
        json out;
        out["command"] = "game discriminant";
        out["discriminant"] = selim::to_string(value);
        emit(out);
    } else {
        std::cout << selim::to_string(value) << "\n";
    }
}

json ratio_json(const selim::ProjectiveRatio& r) {
    return json::array({selim::to_string(r.num), selim::to_string(r.den)});
}

std::string ratio_text(const selim::ProjectiveRatio& r) {
    return "(" + selim::to_string(r.num) + " : " + selim::to_string(r.den) + ")";
}

std::string position_text(selim::RootPosition p) {
    switch (p) {
    case selim::RootPosition::interior: return "interior";
    case selim::RootPosition::coordinate_hyperplane: return "on a coordinate hyperplane";
    default: return "indeterminate fiber";
    }
}

void run_game_solve(const Options& opt) {
    const selim::BilinearTriple t = triple_from_document(selim::io::load_document(opt.input));
    const selim::SolveResult solved = selim::solve_2x2x2(t);

    if (opt.as_json) {
        json out;
        out["command"] = "game solve";
        out["eliminant"] = {{"u^2", selim::to_string(solved.eliminant.a2)},
                            {"u", selim::to_string(solved.eliminant.a1)},
                            {"1", selim::to_string(solved.eliminant.a0)}};
        switch (solved.kind) {
        case selim::RootClass::rational_roots: out["class"] = "rational"; break;
        case selim::RootClass::irrational_pair: out["class"] = "irrational-pair"; break;
        case selim::RootClass::complex_pair: out["class"] = "complex-pair"; break;
        }
        json roots = json::array();
        for (const selim::RootTriple& r : solved.roots) {
            json jr;
            jr["x"] = ratio_json(r.x);
            jr["y"] = ratio_json(r.y);
            jr["z"] = ratio_json(r.z);
            jr["multiplicity"] = r.multiplicity;
            jr["position"] = position_text(r.position);
            roots.push_back(jr);
        }
        out["roots"] = roots;
        emit(out);
        return;
    }

    const auto signed_term = [](const selim::Rational& c, const std::string& monomial) {
        const selim::Rational mag = c < 0 ? selim::Rational(-c) : c;
        return std::string(c < 0 ? " - " : " + ") + selim::to_string(mag) +
               (monomial.empty() ? "" : "*" + monomial);
    };
    std::cout << "eliminant in u = x1/x0: " << selim::to_string(solved.eliminant.a2) << "*u^2"
              << signed_term(solved.eliminant.a1, "u") << signed_term(solved.eliminant.a0, "")
              << "\n";
    if (solved.kind == selim::RootClass::irrational_pair) {
        std::cout << "two conjugate irrational roots (discriminant "
                  << selim::to_string(solved.eliminant.discriminant()) << " is not a square)\n";
        return;
    }
    if (solved.kind == selim::RootClass::complex_pair) {
        std::cout << "two complex conjugate roots (discriminant "
                  << selim::to_string(solved.eliminant.discriminant()) << " < 0)\n";
        return;
    }
    for (std::size_t k = 0; k < solved.roots.size(); ++k) {
        const selim::RootTriple& r = solved.roots[k];
        std::cout << "root " << k + 1 << ": x = " << ratio_text(r.x) << ", y = " << ratio_text(r.y)
                  << ", z = " << ratio_text(r.z) << ", multiplicity " << r.multiplicity << " ["
                  << position_text(r.position) << "]\n";
    }
}

void run_game_double_root(const Options& opt) {
    const selim::BilinearTriple t = selim::construct_double_root(opt.seed);
    emit(selim::io::bilinear_triple_to_json(t));
}

// ----------------------------------------------------------- implicitize

void run_implicitize(const Options& opt) {
    const selim::ParametricPlaneCurve curve =
        selim::io::parse_parametric_curve_doc(selim::io::load_document(opt.input));
    selim::SupportSet support = selim::predict_support(curve);
    if (!opt.support_file.empty())
        support = selim::io::parse_support_points(selim::io::load_document(opt.support_file));

    const selim::ImplicitResult result = selim::implicit_equation(curve, support);

    std::optional<bool> member;
    if (!opt.test_point.empty()) {
        const selim::Rational px = selim::rational_from_string(opt.test_point[0]);
        const selim::Rational py = selim::rational_from_string(opt.test_point[1]);
        const std::size_t count = opt.samples ? *opt.samples : support.size() + 2;
        const selim::InterpolationMatrix m =
            selim::build_interpolation_matrix(curve, support, count);
        member = selim::membership_test(m, px, py);
    }

    if (opt.as_json) {
        json out;
        out["command"] = "implicitize";
        out["polynomial"] = selim::io::polynomial_to_json(result.equation);
        out["rendered"] = result.equation.str();
        out["kernel_dimension"] = result.kernel_dimension;
        out["support_superset_warning"] = result.support_superset_warning;
        if (member)
            out["membership"] = *member;
        emit(out);
        return;
    }
    if (member) {
        std::cout << (*member ? "true" : "false") << "\n";
        return;
    }
    std::cout << result.equation.str() << "\n";
    if (result.support_superset_warning)
        std::cout << "warning: kernel dimension " << result.kernel_dimension
                  << "; the support strictly contains the implicit support\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for sparse elimination: root bounds, resultant matrices, "
                 "the 2x2x2 equilibrium discriminant, and curve implicitization"};
    app.require_subcommand(1);
    Options opt;

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "problem document (JSON file path, or - for stdin)")
            ->required();
    };

    CLI::App* bounds = app.add_subcommand("bounds", "root bounds for semi-mixed systems");
    bounds->require_subcommand(1);
    CLI::App* b_product =
        bounds->add_subcommand("product", "coefficient of the product of linear forms");
    add_input(b_product);
    CLI::App* b_gf =
        bounds->add_subcommand("gf", "generating-function bound for square semi-mixed systems");
    add_input(b_gf);
    CLI::App* b_tmne = bounds->add_subcommand("tmne", "bound for the totally mixed Nash system");
    b_tmne->add_option("--players", opt.players, "number of players")->required();
    CLI::App* b_mv =
        bounds->add_subcommand("permanent-mv", "mixed volume via the permanent formula");
    add_input(b_mv);
    CLI::App* b_area = bounds->add_subcommand("mixed-area", "mixed area of two lattice polygons");
    add_input(b_area);
    for (CLI::App* cmd : {b_product, b_gf, b_tmne, b_mv, b_area})
        cmd->add_flag("--all", opt.all_methods, "run every applicable method and cross-check");

    CLI::App* resultant = app.add_subcommand("resultant", "Sylvester and Macaulay resultants");
    resultant->require_subcommand(1);
    CLI::App* r_syl =
        resultant->add_subcommand("sylvester", "resultant of two univariate polynomials");
    add_input(r_syl);
    CLI::App* r_mac = resultant->add_subcommand("macaulay", "rational formula det M / det M'");
    add_input(r_mac);
    for (CLI::App* cmd : {r_syl, r_mac})
        cmd->add_flag("--matrix-only", opt.matrix_only, "print the labeled matrix instead");

    CLI::App* game = app.add_subcommand("game", "totally mixed equilibrium systems");
    game->require_subcommand(1);
    CLI::App* g_build = game->add_subcommand("build", "payoff tensor to polynomial system");
    add_input(g_build);
    CLI::App* g_disc = game->add_subcommand("discriminant", "6x6 determinant of a 2x2x2 system");
    add_input(g_disc);
    CLI::App* g_solve = game->add_subcommand("solve", "exact roots of a 2x2x2 system");
    add_input(g_solve);
    CLI::App* g_double =
        game->add_subcommand("double-root", "generate an instance with a multiple root");
    g_double->add_option("--seed", opt.seed, "random seed")->default_val(0);

    CLI::App* implicitize =
        app.add_subcommand("implicitize", "implicit equation of a parametric plane curve");
    add_input(implicitize);
    implicitize->add_option("--support-file", opt.support_file,
                            "JSON file {\"points\": [[i,j],...]} overriding the predicted support");
    std::size_t samples_value = 0;
    CLI::Option* samples_opt =
        implicitize->add_option("--samples", samples_value, "row count of the membership matrix");
    implicitize
        ->add_option("--test-point", opt.test_point, "rational point X Y for the membership test")
        ->expected(2);

    for (CLI::App* cmd : {b_product, b_gf, b_tmne, b_mv, b_area, r_syl, r_mac, g_build, g_disc,
                          g_solve, g_double, implicitize})
        cmd->add_flag("--json", opt.as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
        if (samples_opt->count() > 0)
            opt.samples = samples_value;

        if (b_product->parsed()) run_bounds_product(opt);
        else if (b_gf->parsed()) run_bounds_gf(opt);
        else if (b_tmne->parsed()) run_bounds_tmne(opt);
        else if (b_mv->parsed()) run_bounds_permanent_mv(opt);
        else if (b_area->parsed()) run_bounds_mixed_area(opt);
        else if (r_syl->parsed()) run_resultant_sylvester(opt);
        else if (r_mac->parsed()) run_resultant_macaulay(opt);
        else if (g_build->parsed()) run_game_build(opt);
        else if (g_disc->parsed()) run_game_discriminant(opt);
        else if (g_solve->parsed()) run_game_solve(opt);
        else if (g_double->parsed()) run_game_double_root(opt);
        else if (implicitize->parsed()) run_implicitize(opt);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const selim::invariant_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const selim::degenerate_error& e) {
        std::cerr << "degenerate specialization: " << e.what() << "\n";
        return 4;
    } catch (const selim::support_error& e) {
        std::cerr << "support too small: " << e.what() << "; widen the support set\n";
        return 5;
    } catch (const selim::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
