#pragma once

#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "germ/errors.hpp"
#include "germ/gaussian.hpp"
#include "germ/linear_map.hpp"
#include "germ/normalize.hpp"
#include "germ/transformation.hpp"

namespace germ {

using json = nlohmann::ordered_json;

/// File schema for a germ: dimension, truncation degree, linear part, and a
/// list of monomial terms with exact string-encoded coefficients.
///
/// {
///   "n": 2, "truncation": 6,
///   "lambda": {"kind": "diagonal", "entries": ["2", "3"]},
///   "terms": [{"coord": 1, "exponents": [2, 0], "coeff": {"re": "1", "im": "0"}}]
/// }
inline json germ_to_json(const FormalTransformation& f) {
    json out;
    out["n"] = f.dim();
    out["truncation"] = f.truncation();
    json lambda;
    switch (f.linear().kind()) {
        case LinearKind::zero: lambda["kind"] = "zero"; break;
        case LinearKind::identity: lambda["kind"] = "identity"; break;
        case LinearKind::diagonal: {
            lambda["kind"] = "diagonal";
            json entries = json::array();
            for (const auto& e : f.linear().diagonal_entries()) entries.push_back(to_string(e));
            lambda["entries"] = std::move(entries);
            break;
        }
        case LinearKind::general:
            throw unsupported_error("germ files only describe diagonal linear parts");
    }
    out["lambda"] = std::move(lambda);
    json terms = json::array();
    for (int d = 2; d <= f.truncation(); ++d) {
        const HomogeneousMap& h = f.term(d);
        const auto& qs = monomials_of_degree(f.dim(), d);
        for (int j = 0; j < f.dim(); ++j)
            for (std::size_t k = 0; k < qs.size(); ++k) {
                const GaussianRational& c = h.comp[static_cast<std::size_t>(j)].c[k];
                if (c.is_zero()) continue;
                json term;
                term["coord"] = j;
                term["exponents"] = qs[k];
                term["coeff"] = {{"re", to_string(c.re())}, {"im", to_string(c.im())}};
                terms.push_back(std::move(term));
            }
    }
    out["terms"] = std::move(terms);
    return out;
}

inline GaussianRational coeff_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw input_error("coeff must be an object with string fields 're' and 'im'");
    return {parse_rational(j.at("re").get<std::string>()),
            parse_rational(j.at("im").get<std::string>())};
}

inline FormalTransformation germ_from_json(const json& in) try {
    if (!in.is_object()) throw input_error("germ file: top level must be an object");
    for (const char* key : {"n", "truncation", "lambda", "terms"})
        if (!in.contains(key)) throw input_error(std::string("germ file: missing field '") + key + "'");
    const int n = in.at("n").get<int>();
    const int truncation = in.at("truncation").get<int>();
    if (n < 1) throw input_error("germ file: n must be >= 1");
    if (truncation < 2) throw input_error("germ file: truncation must be >= 2");

    const json& lambda_json = in.at("lambda");
    const std::string kind = lambda_json.at("kind").get<std::string>();
    LinearMap lambda;
    if (kind == "zero")
        lambda = LinearMap::zero(n);
    else if (kind == "identity")
        lambda = LinearMap::identity(n);
    else if (kind == "diagonal") {
        if (!lambda_json.contains("entries"))
            throw input_error("germ file: diagonal lambda requires 'entries'");
        std::vector<GaussianRational> entries;
        for (const auto& e : lambda_json.at("entries"))
            entries.push_back(parse_gaussian(e.get<std::string>()));
        if (entries.size() != static_cast<std::size_t>(n))
            throw input_error("germ file: lambda needs exactly n entries");
        lambda = LinearMap::diagonal(entries);
    } else
        throw input_error("germ file: lambda kind must be zero, identity, or diagonal");

    FormalTransformation f(lambda, truncation);
    std::set<std::pair<int, MultiIndex>> seen;
    for (const auto& term : in.at("terms")) {
        const int coord = term.at("coord").get<int>();
        if (coord < 0 || coord >= n) throw input_error("germ file: coord out of range");
        MultiIndex q = term.at("exponents").get<MultiIndex>();
        if (q.size() != static_cast<std::size_t>(n))
            throw input_error("germ file: exponents need exactly n entries");
        for (int e : q)
            if (e < 0) throw input_error("germ file: negative exponent");
        const int d = degree(q);
        if (d < 2 || d > truncation)
            throw input_error("germ file: term degrees must lie in [2, truncation]");
        if (!seen.insert({coord, q}).second)
            throw input_error("germ file: duplicate (coord, exponents) entry");
        GaussianRational c = coeff_from_json(term.at("coeff"));
        HomogeneousMap h = f.term(d);
        h.comp[static_cast<std::size_t>(coord)].c[monomial_rank(q)] += c;
        f.set_term(std::move(h));
    }
    return f;
} catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("germ file: ") + e.what());
}

inline json result_to_json(const FormalTransformation& input, const NormalFormResult& result) {
    json out;
    out["order"] = result.order == NormalFormOrder::pd ? "pd" : "second";
    out["mu"] = result.mu;
    out["normal_form"] = germ_to_json(result.g);
    out["conjugation"] = germ_to_json(result.phi);
    json diag = json::array();
    for (const auto& row : result.diagnostics)
        diag.push_back({{"d", row.d},
                        {"dim_im", row.dim_im},
                        {"dim_ker", row.dim_ker},
                        {"complement_rank", row.complement_rank},
                        {"infinite_order_ok", row.infinite_order_ok}});
    out["diagnostics"] = std::move(diag);
    out["input_truncation"] = input.truncation();
    return out;
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(e.what());  // message carries the position
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text);
}

enum class ResultPart { normal_form, conjugation };

/// Reads a germ either from a plain germ file or from the named part of a
/// result file, so verify can consume normalize output directly.
inline FormalTransformation load_germ_file(const std::string& path,
                                           ResultPart part = ResultPart::normal_form) try {
    json j = load_json_file(path);
    if (j.contains("normal_form"))
        return germ_from_json(
            j.at(part == ResultPart::normal_form ? "normal_form" : "conjugation"));
    return germ_from_json(j);
} catch (const nlohmann::json::exception& e) {
    throw input_error(std::string(path) + ": " + e.what());
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace germ
