#include <selim/json_io.hpp>

#include <selim/error.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace selim::io {

namespace {

const json& require_field(const json& doc, const std::string& name) {
    if (!doc.is_object())
        throw schema_error("expected a JSON object");
    const auto it = doc.find(name);
    if (it == doc.end())
        throw schema_error("missing field \"" + name + "\"");
    return *it;
}

const json& require_array(const json& value, const std::string& path) {
    if (!value.is_array())
        throw schema_error(path + ": expected an array");
    return value;
}

std::int64_t parse_int(const json& value, const std::string& path) {
    if (value.is_number_integer())
        return value.get<std::int64_t>();
    if (value.is_number_unsigned()) {
        const auto v = value.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw schema_error(path + ": integer out of range");
        return static_cast<std::int64_t>(v);
    }
    throw schema_error(path + ": expected an integer");
}

std::vector<std::int64_t> parse_int_list(const json& value, const std::string& path) {
    require_array(value, path);
    std::vector<std::int64_t> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(parse_int(value[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

void check_kind(const json& doc, const std::string& expected) {
    const std::string kind = document_kind(doc);
    if (kind != expected)
        throw schema_error("kind: expected \"" + expected + "\", got \"" + kind + "\"");
}

template <typename F>
auto rethrow_domain_as_schema(const std::string& path, F&& body) {
    try {
        return body();
    } catch (const schema_error&) {
        throw;
    } catch (const error& e) {
        throw schema_error(path + ": " + e.what());
    }
}

} // namespace

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw schema_error("input is not valid JSON");
    return doc;
}

json load_document(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return parse_text(buffer.str());
    }
    std::ifstream in(path);
    if (!in)
        throw schema_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str());
}

std::string document_kind(const json& doc) {
    const json& kind = require_field(doc, "kind");
    if (!kind.is_string())
        throw schema_error("kind: expected a string");
    return kind.get<std::string>();
}

Rational parse_rational(const json& value, const std::string& path) {
    if (value.is_string())
        return rethrow_domain_as_schema(path,
                                        [&] { return rational_from_string(value.get<std::string>()); });
    if (value.is_number_integer() || value.is_number_unsigned())
        return rethrow_domain_as_schema(path, [&] { return rational_from_string(value.dump()); });
    if (value.is_number_float())
        throw schema_error(path + ": floating-point literals are not exact; use a string \"p/q\"");
    throw schema_error(path + ": expected a rational as string or integer");
}

json rational_to_json(const Rational& value) {
    return json(to_string(value));
}

Polynomial parse_polynomial(const json& value, const std::string& path) {
    std::vector<std::string> vars;
    const json& jvars = require_array(require_field(value, "vars"), path + ".vars");
    for (std::size_t i = 0; i < jvars.size(); ++i) {
        if (!jvars[i].is_string())
            throw schema_error(path + ".vars[" + std::to_string(i) + "]: expected a string");
        vars.push_back(jvars[i].get<std::string>());
    }
    if (vars.empty())
        throw schema_error(path + ".vars: at least one variable required");

    Polynomial p(vars);
    const json& jterms = require_array(require_field(value, "terms"), path + ".terms");
    for (std::size_t i = 0; i < jterms.size(); ++i) {
        const std::string term_path = path + ".terms[" + std::to_string(i) + "]";
        const json& term = jterms[i];
        const Rational coeff = parse_rational(require_field(term, "coeff"), term_path + ".coeff");
        const std::vector<std::int64_t> exps =
            parse_int_list(require_field(term, "exps"), term_path + ".exps");
        if (exps.size() != vars.size())
            throw schema_error(term_path + ".exps: expected " + std::to_string(vars.size()) +
                               " entries");
        rethrow_domain_as_schema(term_path, [&] { p.add_term(exps, coeff); return 0; });
    }
    return p;
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["coeff"] = rational_to_json(c);
        term["exps"] = e;
        terms.push_back(std::move(term));
    }
    json out;
    out["vars"] = p.vars();
    out["terms"] = std::move(terms);
    return out;
}

DegreeMatrixDoc parse_degree_matrix_doc(const json& doc) {
    check_kind(doc, "degree-matrix");
    const std::vector<std::int64_t> sizes = parse_int_list(require_field(doc, "blocks"), "blocks");
    BlockStructure blocks = rethrow_domain_as_schema("blocks", [&] { return BlockStructure(sizes); });

    const json& jrows = require_array(require_field(doc, "entries"), "entries");
    if (jrows.empty())
        throw schema_error("entries: must be nonempty");
    std::vector<std::int64_t> flat;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < jrows.size(); ++i) {
        const std::string row_path = "entries[" + std::to_string(i) + "]";
        const std::vector<std::int64_t> row = parse_int_list(jrows[i], row_path);
        if (i == 0) {
            cols = row.size();
            if (cols == 0)
                throw schema_error(row_path + ": must be nonempty");
        } else if (row.size() != cols) {
            throw schema_error(row_path + ": ragged rows");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    DegreeMatrix entries = rethrow_domain_as_schema(
        "entries", [&] { return DegreeMatrix(jrows.size(), cols, std::move(flat)); });

    std::optional<std::vector<Rational>> volumes;
    if (doc.contains("volumes")) {
        const json& jv = require_array(doc["volumes"], "volumes");
        std::vector<Rational> vols;
        for (std::size_t i = 0; i < jv.size(); ++i)
            vols.push_back(parse_rational(jv[i], "volumes[" + std::to_string(i) + "]"));
        volumes = std::move(vols);
    }
    return DegreeMatrixDoc{std::move(blocks), std::move(entries), std::move(volumes)};
}

namespace {

ConvexPolygon parse_polygon(const json& value, const std::string& path) {
    require_array(value, path);
    if (value.empty())
        throw schema_error(path + ": at least one point required");
    std::vector<LatticePoint> points;
    points.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string pt_path = path + "[" + std::to_string(i) + "]";
        const std::vector<std::int64_t> pt = parse_int_list(value[i], pt_path);
        if (pt.size() != 2)
            throw schema_error(pt_path + ": expected [x, y]");
        constexpr std::int64_t bound = 1'000'000'000'000LL;
        if (pt[0] < -bound || pt[0] > bound || pt[1] < -bound || pt[1] > bound)
            throw schema_error(pt_path + ": coordinate out of range");
        points.push_back({pt[0], pt[1]});
    }
    return ConvexPolygon::hull_of(std::move(points));
}

} // namespace

PolygonPairDoc parse_polygon_pair_doc(const json& doc) {
    check_kind(doc, "polygon-pair");
    return PolygonPairDoc{parse_polygon(require_field(doc, "p"), "p"),
                          parse_polygon(require_field(doc, "q"), "q")};
}

UnivariatePair parse_univariate_pair_doc(const json& doc) {
    check_kind(doc, "univariate-pair");
    Polynomial f = parse_polynomial(require_field(doc, "f"), "f");
    Polynomial g = parse_polynomial(require_field(doc, "g"), "g");
    return rethrow_domain_as_schema("(f, g)",
                                    [&] { return UnivariatePair::create(std::move(f), std::move(g)); });
}

DenseHomogeneousSystem parse_polynomial_system_doc(const json& doc) {
    check_kind(doc, "polynomial-system");
    const json& jpolys = require_array(require_field(doc, "polys"), "polys");
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < jpolys.size(); ++i)
        polys.push_back(parse_polynomial(jpolys[i], "polys[" + std::to_string(i) + "]"));
    return rethrow_domain_as_schema(
        "polys", [&] { return DenseHomogeneousSystem::create(std::move(polys)); });
}

namespace {

void flatten_payoff_tensor(const json& value, const std::vector<std::int64_t>& extents,
                           std::size_t depth, const std::string& path,
                           std::vector<Rational>& out) {
    if (depth == extents.size()) {
        out.push_back(parse_rational(value, path));
        return;
    }
    require_array(value, path);
    if (value.size() != static_cast<std::size_t>(extents[depth]))
        throw schema_error(path + ": expected " + std::to_string(extents[depth]) + " entries");
    for (std::size_t i = 0; i < value.size(); ++i)
        flatten_payoff_tensor(value[i], extents, depth + 1, path + "[" + std::to_string(i) + "]",
                              out);
}

} // namespace

PayoffTensor parse_payoff_tensor_doc(const json& doc) {
    check_kind(doc, "payoff-tensor");
    const std::vector<std::int64_t> strategies =
        parse_int_list(require_field(doc, "strategies"), "strategies");
    const json& jp = require_array(require_field(doc, "payoffs"), "payoffs");
    if (jp.size() != strategies.size())
        throw schema_error("payoffs: expected one tensor per player");
    std::vector<std::vector<Rational>> tensors;
    for (std::size_t j = 0; j < jp.size(); ++j) {
        std::vector<Rational> flat;
        flatten_payoff_tensor(jp[j], strategies, 0, "payoffs[" + std::to_string(j) + "]", flat);
        tensors.push_back(std::move(flat));
    }
    return rethrow_domain_as_schema(
        "payoffs", [&] { return PayoffTensor::create(strategies, std::move(tensors)); });
}

namespace {

std::array<Rational, 4> parse_quadruple(const json& value, const std::string& path) {
    require_array(value, path);
    if (value.size() != 4)
        throw schema_error(path + ": expected exactly 4 coefficients");
    std::array<Rational, 4> out;
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = parse_rational(value[i], path + "[" + std::to_string(i) + "]");
    return out;
}

} // namespace

BilinearTriple parse_bilinear_triple_doc(const json& doc) {
    check_kind(doc, "bilinear-triple");
    std::array<Rational, 4> a = parse_quadruple(require_field(doc, "a"), "a");
    std::array<Rational, 4> b = parse_quadruple(require_field(doc, "b"), "b");
    std::array<Rational, 4> c = parse_quadruple(require_field(doc, "c"), "c");
    return rethrow_domain_as_schema(
        "(a, b, c)", [&] { return BilinearTriple::create(std::move(a), std::move(b), std::move(c)); });
}

json bilinear_triple_to_json(const BilinearTriple& t) {
    const auto quad = [](const std::array<Rational, 4>& q) {
        json out = json::array();
        for (const Rational& v : q)
            out.push_back(rational_to_json(v));
        return out;
    };
    json out;
    out["kind"] = "bilinear-triple";
    out["a"] = quad(t.a);
    out["b"] = quad(t.b);
    out["c"] = quad(t.c);
    return out;
}

namespace {

Polynomial parse_coefficient_list(const json& value, const std::string& path) {
    require_array(value, path);
    if (value.empty())
        throw schema_error(path + ": at least one coefficient required");
    Polynomial p(std::vector<std::string>{"t"});
    for (std::size_t i = 0; i < value.size(); ++i)
        p.add_term({static_cast<std::int64_t>(i)},
                   parse_rational(value[i], path + "[" + std::to_string(i) + "]"));
    return p;
}

} // namespace

ParametricPlaneCurve parse_parametric_curve_doc(const json& doc) {
    check_kind(doc, "parametric-curve");
    Polynomial x = parse_coefficient_list(require_field(doc, "x"), "x");
    Polynomial y = parse_coefficient_list(require_field(doc, "y"), "y");
    return rethrow_domain_as_schema(
        "(x, y)", [&] { return ParametricPlaneCurve::create(std::move(x), std::move(y)); });
}

SupportSet parse_support_points(const json& doc) {
    const json& jpts = require_array(require_field(doc, "points"), "points");
    std::vector<ExponentVector> pts;
    for (std::size_t i = 0; i < jpts.size(); ++i)
        pts.push_back(parse_int_list(jpts[i], "points[" + std::to_string(i) + "]"));
    return rethrow_domain_as_schema("points", [&] { return SupportSet::of(std::move(pts)); });
}

} // namespace selim::io
