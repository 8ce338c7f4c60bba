#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "germ/gaussian.hpp"
#include "germ/homogeneous.hpp"
#include "germ/multi_index.hpp"
#include "germ/operators.hpp"
#include "germ/transformation.hpp"

namespace germ {

/// Variable names: z, w for two variables; z1..zn otherwise.
inline std::vector<std::string> variable_names(int n) {
    if (n == 1) return {"z"};
    if (n == 2) return {"z", "w"};
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

inline std::string render_monomial(const MultiIndex& q, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t v = 0; v < q.size(); ++v) {
        if (q[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[v];
        if (q[v] > 1) out += "^" + std::to_string(q[v]);
    }
    return out.empty() ? "1" : out;
}

inline std::string render_coeff(const GaussianRational& c) {
    std::string s = to_string(c);
    bool composite = !c.is_real() && c.re() != 0;
    return composite ? "(" + s + ")" : s;
}

inline std::string render_poly(const HPoly& p, const std::vector<std::string>& vars) {
    const auto& qs = monomials_of_degree(p.n, p.d);
    std::string out;
    for (std::size_t k = 0; k < qs.size(); ++k) {
        const GaussianRational& c = p.c[k];
        if (c.is_zero()) continue;
        std::string mono = render_monomial(qs[k], vars);
        std::string coeff = render_coeff(c);
        std::string term;
        if (coeff == "1")
            term = mono;
        else if (coeff == "-1")
            term = "-" + mono;
        else
            term = coeff + "*" + mono;
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

inline std::string render_map(const HomogeneousMap& h) {
    const auto vars = variable_names(h.n);
    std::string out = "(";
    for (int j = 0; j < h.n; ++j) {
        if (j > 0) out += ", ";
        out += render_poly(h.comp[static_cast<std::size_t>(j)], vars);
    }
    return out + ")";
}

inline std::string render_transformation(const FormalTransformation& f) {
    const auto vars = variable_names(f.dim());
    std::string out = "(";
    for (int j = 0; j < f.dim(); ++j) {
        if (j > 0) out += ", ";
        std::string coord;
        for (int d = 1; d <= f.truncation(); ++d) {
            HomogeneousMap h = homogeneous_term(f, d);
            std::string piece = render_poly(h.comp[static_cast<std::size_t>(j)], vars);
            if (piece == "0") continue;
            if (coord.empty())
                coord = piece;
            else if (piece[0] == '-')
                coord += " - " + piece.substr(1);
            else
                coord += " + " + piece;
        }
        out += coord.empty() ? "0" : coord;
    }
    return out + ")";
}

inline std::string render_basis(const SubspaceBasis& basis, const std::string& indent = "  ") {
    std::string out;
    for (const auto& v : basis.vectors) out += indent + render_map(v) + "\n";
    if (basis.vectors.empty()) out = indent + "(empty)\n";
    return out;
}

}  // namespace germ
