#pragma once

#include <selim/bounds.hpp>
#include <selim/game.hpp>
#include <selim/implicit.hpp>
#include <selim/polygon.hpp>
#include <selim/resultant.hpp>

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace selim::io {

using json = nlohmann::ordered_json;

/*
 * Problem documents are JSON objects with a "kind" discriminator:
 *   degree-matrix    {"blocks": [n_j...], "entries": [[...]...], "volumes"?: [rat...]}
 *   polygon-pair     {"p": [[x,y]...], "q": [[x,y]...]}
 *   univariate-pair  {"f": <polynomial>, "g": <polynomial>}
 *   polynomial-system{"polys": [<polynomial>...]}
 *   payoff-tensor    {"strategies": [m_j...], "payoffs": [<nested arrays>...]}
 *   bilinear-triple  {"a": [4 rat], "b": [4 rat], "c": [4 rat]}
 *   parametric-curve {"x": [rat... ascending], "y": [rat...]}
 * Rationals are strings "p/q" (or exact JSON integers); floats are rejected.
 * An optional "description" string is allowed everywhere.
 */

json parse_text(const std::string& text);

/// Reads a file, or stdin when the path is "-".
json load_document(const std::string& path);

std::string document_kind(const json& doc);

Rational parse_rational(const json& value, const std::string& path);
json rational_to_json(const Rational& value);

Polynomial parse_polynomial(const json& value, const std::string& path);
json polynomial_to_json(const Polynomial& p);

struct DegreeMatrixDoc {
    BlockStructure blocks;
    DegreeMatrix entries;
    std::optional<std::vector<Rational>> volumes;
};
DegreeMatrixDoc parse_degree_matrix_doc(const json& doc);

struct PolygonPairDoc {
    ConvexPolygon p;
    ConvexPolygon q;
};
PolygonPairDoc parse_polygon_pair_doc(const json& doc);

UnivariatePair parse_univariate_pair_doc(const json& doc);

DenseHomogeneousSystem parse_polynomial_system_doc(const json& doc);

PayoffTensor parse_payoff_tensor_doc(const json& doc);

BilinearTriple parse_bilinear_triple_doc(const json& doc);
json bilinear_triple_to_json(const BilinearTriple& t);

ParametricPlaneCurve parse_parametric_curve_doc(const json& doc);

/// {"points": [[i,j], ...]} for user-supplied supports.
SupportSet parse_support_points(const json& doc);

} // namespace selim::io
