#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/errors.hpp"
#include "germ/gaussian.hpp"
#include "germ/homogeneous.hpp"
#include "germ/linear_map.hpp"
#include "germ/operators.hpp"
#include "germ/rational.hpp"
#include "germ/transformation.hpp"

namespace germ {

/// The eleven quadratic models for 2-dimensional germs, up to linear
/// conjugacy. Labels follow the characteristic-direction naming.
enum class CaseLabel {
    inf,
    c1_00,
    c1_10,
    c1_11,
    c2_001,
    c2_011,
    c2_10rho,
    c2_11rho,
    c3_100,
    c3_rho10,
    c3_rhotau1,
};

struct CaseId {
    CaseLabel label = CaseLabel::inf;
    std::optional<Rational> rho;
    std::optional<Rational> tau;
};

inline const std::vector<std::pair<CaseLabel, const char*>>& case_label_table() {
    static const std::vector<std::pair<CaseLabel, const char*>> table = {
        {CaseLabel::inf, "inf"},           {CaseLabel::c1_00, "1_00"},
        {CaseLabel::c1_10, "1_10"},        {CaseLabel::c1_11, "1_11"},
        {CaseLabel::c2_001, "2_001"},      {CaseLabel::c2_011, "2_011"},
        {CaseLabel::c2_10rho, "2_10rho"},  {CaseLabel::c2_11rho, "2_11rho"},
        {CaseLabel::c3_100, "3_100"},      {CaseLabel::c3_rho10, "3_rho10"},
        {CaseLabel::c3_rhotau1, "3_rhotau1"},
    };
    return table;
}

inline std::string to_string(CaseLabel label) {
    for (const auto& [l, s] : case_label_table())
        if (l == label) return s;
    throw internal_error("case label table out of sync");
}

inline CaseLabel parse_case_label(const std::string& s) {
    for (const auto& [l, name] : case_label_table())
        if (s == name) return l;
    throw input_error("unknown case label '" + s + "'");
}

inline bool case_takes_rho(CaseLabel label) {
    return label == CaseLabel::c2_10rho || label == CaseLabel::c2_11rho ||
           label == CaseLabel::c3_rho10 || label == CaseLabel::c3_rhotau1;
}

inline bool case_takes_tau(CaseLabel label) { return label == CaseLabel::c3_rhotau1; }

/// Enforces the per-case parameter constraints.
inline void validate_case(const CaseId& id) {
    const std::string name = to_string(id.label);
    if (!case_takes_rho(id.label) && id.rho)
        throw input_error("case " + name + " takes no rho parameter");
    if (!case_takes_tau(id.label) && id.tau)
        throw input_error("case " + name + " takes no tau parameter");
    if (case_takes_rho(id.label) && !id.rho)
        throw input_error("case " + name + " requires rho");
    if (case_takes_tau(id.label) && !id.tau)
        throw input_error("case " + name + " requires tau");
    if (id.rho && *id.rho == 0) throw input_error("case " + name + " requires rho != 0");
    if (id.tau && *id.tau == 0) throw input_error("case " + name + " requires tau != 0");
    if (id.label == CaseLabel::c3_rho10 && *id.rho == 1)
        throw input_error("case 3_rho10 requires rho != 1");
    if (id.label == CaseLabel::c3_rhotau1 && *id.rho + *id.tau == 1)
        throw input_error("case 3_rhotau1 requires rho + tau != 1");
}

namespace detail {

inline HomogeneousMap uv_map(int d) { return HomogeneousMap(2, d); }

inline void add_u(HomogeneousMap& m, int j, const GaussianRational& c) {
    m.comp[0].c[static_cast<std::size_t>(j)] += c;
}
inline void add_v(HomogeneousMap& m, int j, const GaussianRational& c) {
    m.comp[1].c[static_cast<std::size_t>(j)] += c;
}

inline HomogeneousMap u_basis(int d, int j) {
    HomogeneousMap m = uv_map(d);
    add_u(m, j, 1);
    return m;
}
inline HomogeneousMap v_basis(int d, int j) {
    HomogeneousMap m = uv_map(d);
    add_v(m, j, 1);
    return m;
}

/// (c1 (az + bw)^D, c2 (az + bw)^D) expanded into monomial coordinates.
inline HomogeneousMap binomial_power_map(int D, const GaussianRational& a,
                                         const GaussianRational& b, const GaussianRational& c1,
                                         const GaussianRational& c2) {
    HomogeneousMap m = uv_map(D);
    for (int j = 0; j <= D; ++j) {
        GaussianRational coeff =
            GaussianRational(Rational(binomial(static_cast<unsigned>(D), static_cast<unsigned>(j)))) *
            pow(a, static_cast<unsigned>(j)) * pow(b, static_cast<unsigned>(D - j));
        add_u(m, j, c1 * coeff);
        add_v(m, j, c2 * coeff);
    }
    return m;
}

}  // namespace detail

/// Exact quadratic term of the labeled case.
inline HomogeneousMap quadratic_case(const CaseId& id) {
    validate_case(id);
    using detail::uv_map;
    HomogeneousMap f2 = uv_map(2);
    auto z2 = [&](int coord, GaussianRational c) { f2.comp[static_cast<std::size_t>(coord)].c[2] += c; };
    auto zw = [&](int coord, GaussianRational c) { f2.comp[static_cast<std::size_t>(coord)].c[1] += c; };
    auto w2 = [&](int coord, GaussianRational c) { f2.comp[static_cast<std::size_t>(coord)].c[0] += c; };
    const GaussianRational rho = id.rho ? GaussianRational(*id.rho) : GaussianRational(0);
    const GaussianRational tau = id.tau ? GaussianRational(*id.tau) : GaussianRational(0);
    switch (id.label) {
        case CaseLabel::inf:  // (z^2, zw)
            z2(0, 1), zw(1, 1);
            break;
        case CaseLabel::c1_00:  // (0, -z^2)
            z2(1, -1);
            break;
        case CaseLabel::c1_10:  // (-z^2, -(z^2 + zw))
            z2(0, -1), z2(1, -1), zw(1, -1);
            break;
        case CaseLabel::c1_11:  // (-zw, -(z^2 + w^2))
            zw(0, -1), z2(1, -1), w2(1, -1);
            break;
        case CaseLabel::c2_001:  // (0, zw)
            zw(1, 1);
            break;
        case CaseLabel::c2_011:  // (zw, zw + w^2)
            zw(0, 1), zw(1, 1), w2(1, 1);
            break;
        case CaseLabel::c2_10rho:  // (-rho z^2, (1-rho) zw)
            z2(0, -rho), zw(1, GaussianRational(1) - rho);
            break;
        case CaseLabel::c2_11rho:  // (rho z^2 + zw, (1+rho) zw + w^2)
            z2(0, rho), zw(0, 1), zw(1, GaussianRational(1) + rho), w2(1, 1);
            break;
        case CaseLabel::c3_100:  // (z^2 - zw, 0)
            z2(0, 1), zw(0, -1);
            break;
        case CaseLabel::c3_rho10:  // (rho(-z^2 + zw), (1-rho)(zw - w^2))
            z2(0, -rho), zw(0, rho);
            zw(1, GaussianRational(1) - rho), w2(1, -(GaussianRational(1) - rho));
            break;
        case CaseLabel::c3_rhotau1:  // (-rho z^2 + (1-tau) zw, (1-rho) zw - tau w^2)
            z2(0, -rho), zw(0, GaussianRational(1) - tau);
            zw(1, GaussianRational(1) - rho), w2(1, -tau);
            break;
    }
    return f2;
}

/// Classification of a nonzero rational rho by the second-order resonance
/// pattern of the case with quadratic term (-rho z^2, (1-rho) zw) over the
/// identity linear part.
struct RhoRegime {
    enum class Kind {
        generic,                // (i)   rho outside both resonance sets
        one_plus_inverse,       // (ii)  rho = 1 + 1/n
        one_plus_two_over_odd,  // (iii) rho = 1 + 2/m, m odd
        negative_inverse,       // (iv)  rho = -1/n
        one,                    // (v)   rho = 1
        unit_interval,          // (vi)  rho = a/b in (0,1)
    };
    Kind kind = Kind::generic;
    mpz_class n;  // (ii)/(iv)
    mpz_class m;  // (iii)
    mpz_class a, b;  // (vi)
};

inline RhoRegime classify_rho(const Rational& rho) {
    if (rho == 0) throw input_error("rho must be nonzero");
    RhoRegime out;
    if (rho == 1) {
        out.kind = RhoRegime::Kind::one;
        return out;
    }
    if (rho > 0 && rho < 1) {
        out.kind = RhoRegime::Kind::unit_interval;
        out.a = rho.get_num();
        out.b = rho.get_den();
        return out;
    }
    if (rho < 0 && rho.get_num() == -1) {
        out.kind = RhoRegime::Kind::negative_inverse;
        out.n = rho.get_den();
        return out;
    }
    if (rho > 1) {
        Rational excess = rho - 1;
        if (excess.get_num() == 1) {
            out.kind = RhoRegime::Kind::one_plus_inverse;
            out.n = excess.get_den();
            return out;
        }
        if (excess.get_num() == 2) {  // canonical form, so the denominator is odd
            out.kind = RhoRegime::Kind::one_plus_two_over_odd;
            out.m = excess.get_den();
            return out;
        }
    }
    out.kind = RhoRegime::Kind::generic;
    return out;
}

inline std::string regime_label(RhoRegime::Kind kind) {
    switch (kind) {
        case RhoRegime::Kind::generic: return "(i)";
        case RhoRegime::Kind::one_plus_inverse: return "(ii)";
        case RhoRegime::Kind::one_plus_two_over_odd: return "(iii)";
        case RhoRegime::Kind::negative_inverse: return "(iv)";
        case RhoRegime::Kind::one: return "(v)";
        case RhoRegime::Kind::unit_interval: return "(vi)";
    }
    throw internal_error("unreachable");
}

/// Per-degree resonance sets of the tangent-to-identity case 2_10rho, plus
/// exact membership of rho in their unions.
struct ResonanceSets {
    Rational rho;
    int d_max = 0;
    std::vector<std::vector<Rational>> e_d;  // E_d for d = 2..d_max
    std::vector<std::vector<Rational>> f_d;  // F_d for d = 3..d_max
    bool rho_in_e = false;
    bool rho_in_f = false;
    RhoRegime regime;
};

inline ResonanceSets resonance_sets(const Rational& rho, int d_max) {
    if (rho == 0) throw input_error("rho must be nonzero");
    ResonanceSets out;
    out.rho = rho;
    out.d_max = d_max;
    out.regime = classify_rho(rho);
    for (int d = 2; d <= d_max; ++d) {
        std::vector<Rational> e;
        for (int j = 0; j <= d; ++j) {
            Rational val(d - j - 1, d - 1);
            val.canonicalize();
            if (val != 0) e.push_back(val);
        }
        out.e_d.push_back(std::move(e));
        if (d >= 3) {
            std::vector<Rational> f;
            for (int j = 0; j <= d - 1; ++j) {
                Rational val(d - j, d - 2);
                val.canonicalize();
                f.push_back(val);
            }
            out.f_d.push_back(std::move(f));
        }
    }
    // closed descriptions of the unions over all d
    out.rho_in_e = (rho > 0 && rho <= 1) || (rho < 0 && rho.get_num() == -1);
    out.rho_in_f = (rho > 0 && rho <= 1) ||
                   (rho > 1 && (Rational(rho - 1).get_num() == 1 || Rational(rho - 1).get_num() == 2));
    return out;
}

namespace detail {

/// Complement generators for the superattracting (zero linear part) table.
inline SubspaceBasis complement_lambda_zero(const CaseId& id, int d) {
    const int D = d + 1;
    SubspaceBasis out{2, D, {}};
    auto& gens = out.vectors;
    switch (id.label) {
        case CaseLabel::inf:
        case CaseLabel::c1_10: {
            gens.push_back(u_basis(D, 0));
            HomogeneousMap g = uv_map(D);
            add_u(g, 1, D);
            add_v(g, 0, -2);
            gens.push_back(g);
            break;
        }
        case CaseLabel::c1_00: {
            for (int j = 0; j <= D; ++j) gens.push_back(u_basis(D, j));
            gens.push_back(v_basis(D, 0));
            break;
        }
        case CaseLabel::c1_11: {
            gens.push_back(binomial_power_map(D, 1, 1, -2, 1));
            gens.push_back(binomial_power_map(D, -1, 1, 2, 1));
            break;
        }
        case CaseLabel::c2_001: {
            for (int j = 0; j <= D; ++j) gens.push_back(u_basis(D, j));
            break;
        }
        case CaseLabel::c2_011: {
            HomogeneousMap g = uv_map(D);
            add_u(g, D - 1, D);
            add_v(g, D - 1, -D);
            add_v(g, D, 2);
            gens.push_back(g);
            HomogeneousMap h = uv_map(D);
            add_u(h, D, 1);
            add_v(h, D, -1);
            gens.push_back(h);
            break;
        }
        case CaseLabel::c2_10rho: {
            const GaussianRational rho(*id.rho);
            if (*id.rho == 1) {
                gens.push_back(u_basis(D, 0));
                for (int j = 0; j <= D; ++j) gens.push_back(v_basis(D, j));
            } else {
                gens.push_back(u_basis(D, 0));
                HomogeneousMap g = uv_map(D);
                add_u(g, 1, (rho - GaussianRational(1)) * GaussianRational(D));
                add_v(g, 0, GaussianRational(-2) * rho);
                gens.push_back(g);
            }
            break;
        }
        case CaseLabel::c2_11rho: {
            const Rational& rho = *id.rho;
            if (rho == -1) {
                gens.push_back(binomial_power_map(D, GaussianRational(make_rational(1, 2)), 1, 1,
                                                  GaussianRational(make_rational(-1, 4))));
                gens.push_back(v_basis(D, D));
            } else {
                // two-parameter family via the coefficient recurrences; the
                // unknowns are t_j = b_j / C(D, j), s_j = a_j / C(D, j)
                for (int pick = 0; pick < 2; ++pick) {
                    Rational b0 = pick == 0 ? 1 : 0;
                    Rational b1 = pick == 0 ? 0 : 1;
                    std::vector<Rational> t(static_cast<std::size_t>(D) + 1);
                    t[0] = b0;
                    t[1] = b1 / Rational(D);
                    t[1].canonicalize();
                    for (int j = 2; j <= D; ++j) {
                        Rational val = Rational(-2) / (1 + rho) * t[static_cast<std::size_t>(j - 1)] -
                                       Rational(1) / (rho * (1 + rho)) * t[static_cast<std::size_t>(j - 2)];
                        val.canonicalize();
                        t[static_cast<std::size_t>(j)] = val;
                    }
                    HomogeneousMap g = uv_map(D);
                    Rational a0 = (3 * rho - 1) * b0 + 2 * rho * (1 + rho) / Rational(D) * b1;
                    Rational a1 = Rational(-2 * D) * b0 - (1 + rho) * b1;
                    a0.canonicalize();
                    a1.canonicalize();
                    add_u(g, 0, GaussianRational(a0));
                    add_u(g, 1, GaussianRational(a1));
                    for (int j = 2; j <= D; ++j) {
                        Rational sj = t[static_cast<std::size_t>(j - 2)] / rho;
                        sj.canonicalize();
                        Rational aj = sj * Rational(binomial(static_cast<unsigned>(D),
                                                             static_cast<unsigned>(j)));
                        aj.canonicalize();
                        add_u(g, j, GaussianRational(aj));
                    }
                    for (int j = 0; j <= D; ++j) {
                        Rational bj = t[static_cast<std::size_t>(j)] *
                                      Rational(binomial(static_cast<unsigned>(D),
                                                        static_cast<unsigned>(j)));
                        bj.canonicalize();
                        add_v(g, j, GaussianRational(bj));
                    }
                    gens.push_back(g);
                }
            }
            break;
        }
        case CaseLabel::c3_100: {
            for (int j = 0; j <= D; ++j) gens.push_back(v_basis(D, j));
            break;
        }
        case CaseLabel::c3_rho10: {
            const Rational& rho = *id.rho;
            for (int pick = 0; pick < 2; ++pick) {
                Rational b0 = pick == 0 ? 1 : 0;
                Rational b1 = pick == 0 ? 0 : 1;
                HomogeneousMap g = uv_map(D);
                for (int j = 0; j <= D; ++j) {
                    Rational bin(binomial(static_cast<unsigned>(D), static_cast<unsigned>(j)));
                    Rational bj = bin * (Rational(j) / Rational(D) * b1 - Rational(j - 1) * b0);
                    Rational aj = (rho - 1) / rho * bin *
                                  (Rational(2 - j) / Rational(D) * b1 + Rational(j - 3) * b0);
                    bj.canonicalize();
                    aj.canonicalize();
                    add_u(g, j, GaussianRational(aj));
                    add_v(g, j, GaussianRational(bj));
                }
                gens.push_back(g);
            }
            break;
        }
        case CaseLabel::c3_rhotau1: {
            const Rational& rho = *id.rho;
            const Rational& tau = *id.tau;
            if (rho == 1 && tau == 1) {
                gens.push_back(u_basis(D, 0));
                gens.push_back(v_basis(D, D));
            } else if (tau == 1) {
                gens.push_back(u_basis(D, 0));
                Rational k = Rational(2) / (1 - rho);
                Rational c1 = (1 - rho) * (1 - rho) / (4 * rho);
                k.canonicalize();
                c1.canonicalize();
                gens.push_back(binomial_power_map(D, GaussianRational(k), 1, GaussianRational(c1), 1));
            } else if (rho == 1) {
                gens.push_back(v_basis(D, D));
                Rational m = (1 - tau) / Rational(2);
                Rational c2 = (1 - tau) * (1 - tau) / (4 * tau);
                m.canonicalize();
                c2.canonicalize();
                gens.push_back(binomial_power_map(D, GaussianRational(m), 1, 1, GaussianRational(c2)));
            } else {
                // generic recurrences; unknowns t_j = b_j / C(D, j), s_j = a_j / C(D, j)
                for (int pick = 0; pick < 2; ++pick) {
                    Rational b0 = pick == 0 ? 1 : 0;
                    Rational b1 = pick == 0 ? 0 : 1;
                    std::vector<Rational> t(static_cast<std::size_t>(D) + 1);
                    std::vector<Rational> s(static_cast<std::size_t>(D) + 1);
                    t[0] = b0;
                    t[1] = b1 / Rational(D);
                    t[1].canonicalize();
                    for (int j = 2; j <= D; ++j) {
                        Rational val = Rational(-2) * tau / (rho - 1) * t[static_cast<std::size_t>(j - 1)] -
                                       tau * (tau - 1) / (rho * (rho - 1)) *
                                           t[static_cast<std::size_t>(j - 2)];
                        val.canonicalize();
                        t[static_cast<std::size_t>(j)] = val;
                    }
                    s[1] = -((rho - 1) * t[1] + 2 * tau * t[0]) / (tau - 1);
                    s[0] = -((rho - 1) * t[0] + 2 * rho * s[1]) / (tau - 1);
                    s[0].canonicalize();
                    s[1].canonicalize();
                    for (int j = 2; j <= D; ++j) {
                        Rational val = tau / rho * t[static_cast<std::size_t>(j - 2)];
                        val.canonicalize();
                        s[static_cast<std::size_t>(j)] = val;
                    }
                    HomogeneousMap g = uv_map(D);
                    for (int j = 0; j <= D; ++j) {
                        Rational bin(binomial(static_cast<unsigned>(D), static_cast<unsigned>(j)));
                        Rational aj = s[static_cast<std::size_t>(j)] * bin;
                        Rational bj = t[static_cast<std::size_t>(j)] * bin;
                        aj.canonicalize();
                        bj.canonicalize();
                        add_u(g, j, GaussianRational(aj));
                        add_v(g, j, GaussianRational(bj));
                    }
                    gens.push_back(g);
                }
            }
            break;
        }
    }
    return out;
}

/// Complement generators for the tangent-to-identity table. Only the cases
/// worked out over the identity linear part are covered.
inline SubspaceBasis complement_lambda_identity(const CaseId& id, int d) {
    const int D = d + 1;
    SubspaceBasis out{2, D, {}};
    auto& gens = out.vectors;
    switch (id.label) {
        case CaseLabel::inf: {
            if (d == 2) {
                for (int j = 0; j <= 3; ++j) gens.push_back(u_basis(3, j));
            } else {
                gens.push_back(u_basis(D, 0));
                HomogeneousMap g = uv_map(D);
                add_u(g, 1, D);
                add_v(g, 0, d - 2);
                gens.push_back(g);
            }
            break;
        }
        case CaseLabel::c1_00: {
            gens.push_back(u_basis(D, 0));
            gens.push_back(u_basis(D, 1));
            gens.push_back(v_basis(D, 0));
            HomogeneousMap g = uv_map(D);
            add_u(g, 2, 1);
            add_v(g, 1, 1);
            gens.push_back(g);
            break;
        }
        case CaseLabel::c1_10: {
            if (d == 2) {
                gens.push_back(u_basis(3, 0));
                gens.push_back(u_basis(3, 1));
                HomogeneousMap g = uv_map(3);
                add_u(g, 2, 3);
                add_v(g, 0, 2);
                gens.push_back(g);
            } else {
                gens.push_back(u_basis(D, 0));
                HomogeneousMap g = uv_map(D);
                add_u(g, 1, D);
                add_v(g, 0, d - 2);
                gens.push_back(g);
            }
            break;
        }
        case CaseLabel::c2_001: {
            gens.push_back(u_basis(D, 0));
            gens.push_back(u_basis(D, D));
            HomogeneousMap g = uv_map(D);
            add_u(g, 1, D);
            add_v(g, 0, d);
            gens.push_back(g);
            break;
        }
        case CaseLabel::c2_10rho: {
            const Rational& rho = *id.rho;
            RhoRegime regime = classify_rho(rho);
            if (regime.kind == RhoRegime::Kind::one) {
                gens.push_back(u_basis(D, 0));
                gens.push_back(u_basis(D, 3));
                gens.push_back(v_basis(D, 0));
                gens.push_back(v_basis(D, 1));
                break;
            }
            if (d == 2) {
                gens.push_back(u_basis(3, 0));
                HomogeneousMap g = uv_map(3);
                Rational c = 3 * (1 - rho);
                c.canonicalize();
                add_u(g, 1, GaussianRational(c));
                add_v(g, 0, 2);
                gens.push_back(g);
                gens.push_back(u_basis(3, 3));
            } else {
                gens.push_back(u_basis(D, 0));
                HomogeneousMap g = uv_map(D);
                Rational cu = (1 - rho) * D;
                Rational cv = Rational(d) - Rational(d) * rho + 2 * rho;
                cu.canonicalize();
                cv.canonicalize();
                add_u(g, 1, GaussianRational(cu));
                add_v(g, 0, GaussianRational(cv));
                gens.push_back(g);
            }
            // regime-specific extra generators at the resonance degrees
            if (regime.kind == RhoRegime::Kind::one_plus_inverse && regime.n + 2 == d)
                gens.push_back(u_basis(D, 2));
            if (regime.kind == RhoRegime::Kind::negative_inverse && regime.n + 1 == d)
                gens.push_back(v_basis(D, D));
            if (regime.kind == RhoRegime::Kind::unit_interval) {
                const mpz_class& a = regime.a;
                const mpz_class& b = regime.b;
                mpz_class ell;
                if ((d - 1) % b == 0 && (ell = (d - 1) / b) >= 1) {
                    mpz_class idx = (b - a) * ell;  // column of the paired generator
                    mpz_class cu_z = (b - a) * (a * ell + 1);
                    mpz_class cv_z = a * (idx + 2);
                    HomogeneousMap g = uv_map(D);
                    add_u(g, static_cast<int>(idx.get_si()) + 2, GaussianRational(Rational(cu_z)));
                    add_v(g, static_cast<int>(idx.get_si()) + 1, GaussianRational(Rational(cv_z)));
                    gens.push_back(g);
                }
                if ((d - 2) % b == 0 && (ell = (d - 2) / b) >= 1) {
                    mpz_class idx = (b - a) * ell + 3;
                    gens.push_back(u_basis(D, static_cast<int>(idx.get_si())));
                }
            }
            break;
        }
        default:
            throw input_error("case " + to_string(id.label) +
                              " is not covered over the identity linear part");
    }
    return out;
}

}  // namespace detail

/// The tabulated Fischer orthocomplement of Im L_{F2,Lambda}|_{H^d}
/// (target degree d+1) for the given case, expanded into monomial
/// coordinates. Covers every case over the zero linear part and the cases
/// inf, 1_00, 1_10, 2_001, 2_10rho over the identity.
inline SubspaceBasis expected_complement(const CaseId& id, LinearKind lambda_kind, int d) {
    validate_case(id);
    if (d < 2) throw input_error("expected_complement: source degree must be >= 2");
    if (lambda_kind == LinearKind::zero) return detail::complement_lambda_zero(id, d);
    if (lambda_kind == LinearKind::identity) return detail::complement_lambda_identity(id, d);
    throw input_error("expected_complement: linear part must be zero or identity");
}

/// Closed-form complement generators for the square-root parameterizations
/// of cases 2_11rho and 3_rhotau1 over the zero linear part. Absent when the
/// required square root is irrational over Q(i).
inline std::optional<SubspaceBasis> expected_complement_closed(const CaseId& id, int d) {
    validate_case(id);
    const int D = d + 1;
    using detail::add_u;
    using detail::add_v;
    using detail::uv_map;
    auto bin = [&](int j) {
        return GaussianRational(Rational(binomial(static_cast<unsigned>(D), static_cast<unsigned>(j))));
    };
    auto ipow = [](const GaussianRational& x, int e) {
        if (e >= 0) return pow(x, static_cast<unsigned>(e));
        return pow(GaussianRational(1) / x, static_cast<unsigned>(-e));
    };

    if (id.label == CaseLabel::c2_11rho) {
        const Rational& rho_q = *id.rho;
        if (rho_q == -1) return std::nullopt;
        auto sq = sqrt_if_exact(Rational(-rho_q));
        if (!sq) return std::nullopt;
        GaussianRational rho(rho_q);
        GaussianRational m = (*sq - rho) / (rho * (GaussianRational(1) + rho));
        GaussianRational nn = -(*sq + rho) / (rho * (GaussianRational(1) + rho));
        SubspaceBasis out{2, D, {}};
        for (int pick = 0; pick < 2; ++pick) {
            GaussianRational b0 = pick == 0 ? 1 : 0;
            GaussianRational b1 = pick == 0 ? 0 : 1;
            std::vector<GaussianRational> b(static_cast<std::size_t>(D) + 1);
            for (int j = 0; j <= D; ++j) {
                GaussianRational diff = ipow(m, j) - ipow(nn, j);
                GaussianRational sum = ipow(m, j) + ipow(nn, j);
                b[static_cast<std::size_t>(j)] =
                    GaussianRational(1) / (GaussianRational(2) * *sq) * bin(j) *
                    (rho * (GaussianRational(1) + rho) / GaussianRational(D) * diff * b1 +
                     (rho * diff + *sq * sum) * b0);
            }
            HomogeneousMap g = uv_map(D);
            GaussianRational a0 = (GaussianRational(3) * rho - GaussianRational(1)) * b0 +
                                  GaussianRational(2) * rho * (GaussianRational(1) + rho) /
                                      GaussianRational(D) * b1;
            GaussianRational a1 =
                GaussianRational(-2 * D) * b0 - (GaussianRational(1) + rho) * b1;
            add_u(g, 0, a0);
            add_u(g, 1, a1);
            for (int j = 2; j <= D; ++j)
                add_u(g, j, bin(j) / bin(j - 2) * b[static_cast<std::size_t>(j - 2)] / rho);
            for (int j = 0; j <= D; ++j) add_v(g, j, b[static_cast<std::size_t>(j)]);
            out.vectors.push_back(g);
        }
        return out;
    }

    if (id.label == CaseLabel::c3_rhotau1) {
        const Rational& rho_q = *id.rho;
        const Rational& tau_q = *id.tau;
        if (rho_q == 1 || tau_q == 1) return std::nullopt;
        Rational disc = rho_q * tau_q * (rho_q + tau_q - 1);
        disc.canonicalize();
        auto sq = sqrt_if_exact(disc);
        if (!sq || sq->is_zero()) return std::nullopt;
        GaussianRational rho(rho_q), tau(tau_q);
        GaussianRational rt = rho * tau;
        GaussianRational denom = rho * (rho - GaussianRational(1));
        GaussianRational m = (*sq - rt) / denom;
        GaussianRational nn = -(*sq + rt) / denom;
        SubspaceBasis out{2, D, {}};
        auto bracket = [&](int e, const GaussianRational& b0, const GaussianRational& b1) {
            GaussianRational diff = ipow(m, e) - ipow(nn, e);
            GaussianRational sum = ipow(m, e) + ipow(nn, e);
            return rho * (rho - GaussianRational(1)) / GaussianRational(D) * diff * b1 +
                   (rt * diff + *sq * sum) * b0;
        };
        for (int pick = 0; pick < 2; ++pick) {
            GaussianRational b0 = pick == 0 ? 1 : 0;
            GaussianRational b1 = pick == 0 ? 0 : 1;
            HomogeneousMap g = uv_map(D);
            for (int j = 0; j <= D; ++j) {
                GaussianRational bj =
                    GaussianRational(1) / (GaussianRational(2) * *sq) * bin(j) * bracket(j, b0, b1);
                GaussianRational aj = tau / (GaussianRational(2) * rho * *sq) * bin(j) *
                                      bracket(j - 2, b0, b1);
                add_u(g, j, aj);
                add_v(g, j, bj);
            }
            out.vectors.push_back(g);
        }
        return out;
    }

    return std::nullopt;
}

/// Whether every term of G beyond degree 2 lies in the tabulated complement
/// span for the case (exact membership, degree by degree).
inline bool shape_check(const CaseId& id, LinearKind lambda_kind, const FormalTransformation& g) {
    for (int degree = 3; degree <= g.truncation(); ++degree) {
        const HomogeneousMap& term = g.term(degree);
        if (term.is_zero()) continue;
        SubspaceBasis basis = expected_complement(id, lambda_kind, degree - 1);
        if (!span_contains(basis, term)) return false;
    }
    return true;
}

}  // namespace germ
