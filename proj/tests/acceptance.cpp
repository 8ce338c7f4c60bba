// Acceptance suite: exercises the full catalog and the normalization
// pipeline end to end. Every check is exact (literal equality over Q(i));
// each top-level criterion prints one PASS/FAIL line.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "germ/catalog.hpp"
#include "germ/io.hpp"
#include "germ/normalize.hpp"
#include "../tests/testutil.hpp"

using namespace germ;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

void criterion(int number, const std::string& title, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title << "\n";
    for (const auto& msg : g_notes) std::cout << "         " << msg << "\n";
    g_notes.clear();
    if (!ok) ++g_failures;
}

const LinearMap O2 = LinearMap::zero(2);
const LinearMap I2 = LinearMap::identity(2);

SubspaceBasis computed_complement(const HomogeneousMap& f2, const LinearMap& lambda, int d) {
    auto op = operator_matrix_l_p_lambda(f2, lambda, monomial_basis(2, d));
    return image_complement(op, FischerMetric(2, d + 1));
}

bool golden_case(const CaseId& id, const LinearMap& lambda, LinearKind kind, int d,
                 std::size_t expected_rank) {
    HomogeneousMap f2 = quadratic_case(id);
    SubspaceBasis computed = computed_complement(f2, lambda, d);
    SubspaceBasis tabulated = expected_complement(id, kind, d);
    bool ok = span_equal(computed, tabulated) && computed.rank() == expected_rank &&
              tabulated.rank() == expected_rank;
    if (!ok) {
        std::ostringstream os;
        os << "case " << to_string(id.label);
        if (id.rho) os << " rho=" << to_string(*id.rho);
        if (id.tau) os << " tau=" << to_string(*id.tau);
        os << " d=" << d << ": computed rank " << computed.rank() << ", tabulated rank "
           << tabulated.rank() << ", expected " << expected_rank
           << (span_equal(computed, tabulated) ? "" : ", spans differ");
        note(os.str());
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 1

bool superattracting_golden_suite() {
    bool ok = true;
    struct Row {
        CaseId id;
        // complement rank as a function of the source degree d
        std::size_t (*rank)(int);
    };
    auto rank2 = [](int) -> std::size_t { return 2; };
    auto rank_d3 = [](int d) -> std::size_t { return static_cast<std::size_t>(d) + 3; };
    auto rank_d2 = [](int d) -> std::size_t { return static_cast<std::size_t>(d) + 2; };
    std::vector<Row> rows = {
        {{CaseLabel::inf, {}, {}}, rank2},
        {{CaseLabel::c1_00, {}, {}}, rank_d3},
        {{CaseLabel::c1_10, {}, {}}, rank2},
        {{CaseLabel::c1_11, {}, {}}, rank2},
        {{CaseLabel::c2_001, {}, {}}, rank_d2},
        {{CaseLabel::c2_011, {}, {}}, rank2},
        {{CaseLabel::c2_10rho, make_rational(2), {}}, rank2},
        {{CaseLabel::c2_10rho, make_rational(1, 2), {}}, rank2},
        {{CaseLabel::c2_10rho, make_rational(-1), {}}, rank2},
        // the fully degenerate parameter of 2_10rho: complement rank d+3
        // (one u generator plus the d+2 v's)
        {{CaseLabel::c2_10rho, make_rational(1), {}}, rank_d3},
        {{CaseLabel::c2_11rho, make_rational(4), {}}, rank2},
        {{CaseLabel::c2_11rho, make_rational(-1), {}}, rank2},
        {{CaseLabel::c3_100, {}, {}}, rank_d2},
        {{CaseLabel::c3_rho10, make_rational(2), {}}, rank2},
        {{CaseLabel::c3_rho10, make_rational(-1), {}}, rank2},
        {{CaseLabel::c3_rhotau1, make_rational(1), make_rational(1)}, rank2},
        {{CaseLabel::c3_rhotau1, make_rational(2), make_rational(1)}, rank2},
        {{CaseLabel::c3_rhotau1, make_rational(1), make_rational(2)}, rank2},
        {{CaseLabel::c3_rhotau1, make_rational(5), make_rational(5)}, rank2},
    };
    for (const auto& row : rows)
        for (int d = 2; d <= 7; ++d)
            ok &= golden_case(row.id, O2, LinearKind::zero, d, row.rank(d));

    // closed-form generators (square-root parameterization) where exact
    CaseId rho4{CaseLabel::c2_11rho, make_rational(4), {}};
    CaseId five5{CaseLabel::c3_rhotau1, make_rational(5), make_rational(5)};
    for (int d = 2; d <= 7; ++d) {
        auto c1 = expected_complement_closed(rho4, d);
        auto c2 = expected_complement_closed(five5, d);
        if (!c1 || !span_equal(*c1, computed_complement(quadratic_case(rho4), O2, d))) {
            note("closed form 2_11rho rho=4 failed at d=" + std::to_string(d));
            ok = false;
        }
        if (!c2 || !span_equal(*c2, computed_complement(quadratic_case(five5), O2, d))) {
            note("closed form 3_rhotau1 (5,5) failed at d=" + std::to_string(d));
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 2

bool tangent_to_identity_golden_suite() {
    bool ok = true;
    std::vector<CaseId> plain = {
        {CaseLabel::inf, {}, {}},
        {CaseLabel::c1_00, {}, {}},
        {CaseLabel::c1_10, {}, {}},
        {CaseLabel::c2_001, {}, {}},
    };
    for (const auto& id : plain)
        for (int d = 2; d <= 7; ++d) {
            HomogeneousMap f2 = quadratic_case(id);
            SubspaceBasis computed = computed_complement(f2, I2, d);
            SubspaceBasis tabulated = expected_complement(id, LinearKind::identity, d);
            if (!span_equal(computed, tabulated)) {
                note("case " + to_string(id.label) + " d=" + std::to_string(d) + ": spans differ");
                ok = false;
            }
        }

    // all six rho regimes; rho = 5 serves the generic regime and is accepted
    // only after the classifier confirms it avoids both resonance sets
    struct RhoRow {
        const char* rho;
        RhoRegime::Kind kind;
        // source degrees (within 2..7) where the complement rank exceeds 2
        std::vector<int> jump_degrees;
    };
    std::vector<RhoRow> rho_rows = {
        {"5", RhoRegime::Kind::generic, {2}},
        {"3", RhoRegime::Kind::one_plus_two_over_odd, {2}},          // m=1: d=m+2=3 keeps rank 2
        {"3/2", RhoRegime::Kind::one_plus_inverse, {2, 4}},          // n=2: d=n+2=4
        {"5/3", RhoRegime::Kind::one_plus_two_over_odd, {2}},        // m=3: d=5 keeps rank 2
        {"-1/2", RhoRegime::Kind::negative_inverse, {2, 3}},         // n=2: d=n+1=3
        {"1", RhoRegime::Kind::one, {2, 3, 4, 5, 6, 7}},             // rank 4 throughout
        {"2/3", RhoRegime::Kind::unit_interval, {2, 4, 5, 7}},       // b=3: d=4,7 and d=5
    };
    for (const auto& row : rho_rows) {
        Rational rho = parse_rational(row.rho);
        auto regime = classify_rho(rho);
        if (regime.kind != row.kind) {
            note(std::string("rho=") + row.rho + ": wrong regime " + regime_label(regime.kind));
            ok = false;
            continue;
        }
        if (row.kind == RhoRegime::Kind::generic) {
            auto sets = resonance_sets(rho, 7);
            if (sets.rho_in_e || sets.rho_in_f) {
                note(std::string("rho=") + row.rho + " unexpectedly resonant");
                ok = false;
                continue;
            }
        }
        CaseId id{CaseLabel::c2_10rho, rho, {}};
        HomogeneousMap f2 = quadratic_case(id);
        for (int d = 2; d <= 7; ++d) {
            SubspaceBasis computed = computed_complement(f2, I2, d);
            SubspaceBasis tabulated = expected_complement(id, LinearKind::identity, d);
            bool jump = false;
            for (int jd : row.jump_degrees) jump |= (jd == d);
            std::size_t want = row.kind == RhoRegime::Kind::one ? 4 : (jump ? 3 : 2);
            // the tabulated generator lists must themselves be independent
            std::size_t tab_rank = rank(Matrix::from_rows(tabulated.flattened()));
            if (!span_equal(computed, tabulated) || computed.rank() != want || tab_rank != want) {
                std::ostringstream os;
                os << "rho=" << row.rho << " d=" << d << ": rank " << computed.rank()
                   << " tabulated rank " << tab_rank << " want " << want
                   << (span_equal(computed, tabulated) ? "" : ", spans differ");
                note(os.str());
                ok = false;
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 3

bool second_order_end_to_end() {
    bool ok = true;
    testutil::Rng rng(2024);
    std::vector<CaseId> cases = {
        {CaseLabel::inf, {}, {}},
        {CaseLabel::c1_10, {}, {}},
        {CaseLabel::c1_11, {}, {}},
        {CaseLabel::c2_011, {}, {}},
    };
    const int runs_per_case = 50;
    const int N = 6;
    for (const auto& id : cases) {
        HomogeneousMap f2 = quadratic_case(id);
        // kernel bases of L_{F2,O} per source degree, for the H-perpendicularity check
        std::vector<SubspaceBasis> kernels;
        for (int s = 2; s <= N - 1; ++s)
            kernels.push_back(kernel_basis(operator_matrix_l_p_lambda(f2, O2, monomial_basis(2, s))));

        for (int run = 0; run < runs_per_case; ++run) {
            FormalTransformation f(O2, N);
            f.set_term(f2);
            for (int d = 3; d <= N; ++d) f.set_term(rng.map(2, d));

            NormalFormResult res = second_order_normalize(f, N);
            bool verify = verify_conjugacy(f, res.g, res.phi, N);
            bool shape = shape_check(id, LinearKind::zero, res.g);
            NormalFormResult res2 = second_order_normalize(f, N);
            bool deterministic = res.g == res2.g && res.phi == res2.phi &&
                                 germ_to_json(res.g).dump() == germ_to_json(res2.g).dump();
            bool perp = true;
            for (int s = 2; s <= N - 1; ++s)
                for (const auto& kv : kernels[static_cast<std::size_t>(s - 2)].vectors)
                    perp &= fischer_inner(res.phi.term(s), kv) == GaussianRational(0);
            if (!(verify && shape && deterministic && perp)) {
                std::ostringstream os;
                os << "case " << to_string(id.label) << " run " << run << ":"
                   << (verify ? "" : " conjugacy") << (shape ? "" : " shape")
                   << (deterministic ? "" : " determinism") << (perp ? "" : " kernel-perp");
                note(os.str());
                ok = false;
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool poincare_dulac_suite() {
    bool ok = true;
    testutil::Rng rng(2025);
    LinearMap d23 = LinearMap::diagonal({GaussianRational(2), GaussianRational(3)});
    for (int run = 0; run < 20; ++run) {
        FormalTransformation f = rng.transformation(d23, 6);
        NormalFormResult res = pd_normalize(f, 6);
        if (!res.g.is_linear() || !verify_conjugacy(f, res.g, res.phi, 6)) {
            note("diag(2,3) run " + std::to_string(run) + " failed to linearize");
            ok = false;
        }
    }
    LinearMap d24 = LinearMap::diagonal({GaussianRational(2), GaussianRational(4)});
    for (int run = 0; run < 20; ++run) {
        FormalTransformation f = rng.transformation(d24, 6);
        NormalFormResult res = pd_normalize(f, 6);
        bool line_only = verify_conjugacy(f, res.g, res.phi, 6);
        for (int d = 2; d <= 6; ++d) {
            HomogeneousMap t = res.g.term(d);
            GaussianRational kept = t.comp[1].c[monomial_rank({2, 0})];
            HomogeneousMap only_line(2, d);
            if (d == 2) only_line += kept * HomogeneousMap::monomial(2, {2, 0}, 1);
            line_only &= t == only_line;
        }
        // degree-2 resonant coefficient survives unchanged
        line_only &= res.g.term(2).comp[1].c[monomial_rank({2, 0})] ==
                     f.term(2).comp[1].c[monomial_rank({2, 0})];
        if (!line_only) {
            note("diag(2,4) run " + std::to_string(run) + " kept the wrong monomials");
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 5

bool algebraic_identity_suites() {
    bool ok = true;
    const int runs = 100;
    testutil::Rng rng(2026);

    // Jacobian-polarization identity
    for (int k = 0; k < runs; ++k) {
        int d = rng.integer(2, 5);
        HomogeneousMap p = rng.map(2, d);
        auto v = rng.point(2), z = rng.point(2);
        std::vector<std::vector<GaussianRational>> args{v};
        for (int i = 1; i < d; ++i) args.push_back(z);
        if (polarize_directional(p, v, z) != polarize_full(p, args)) {
            note("Jacobian identity failed at instance " + std::to_string(k));
            ok = false;
            break;
        }
    }

    // composition-polarization identity
    for (int k = 0; k < runs; ++k) {
        int r = rng.integer(2, 3);
        HomogeneousMap kmap = rng.map(2, r);
        std::vector<HomogeneousMap> hs;
        std::vector<int> degs;
        int d = 0;
        for (int i = 0; i < r; ++i) {
            int di = rng.integer(1, 2);
            if (d + di > 5) di = 1;
            degs.push_back(di);
            hs.push_back(rng.map(2, di));
            d += di;
        }
        HomogeneousMap p = polarize_full(kmap, hs);
        auto v = rng.point(2), w = rng.point(2);
        std::vector<std::vector<GaussianRational>> diag_args{v};
        for (int i = 1; i < d; ++i) diag_args.push_back(w);
        auto lhs = polarize_full(p, diag_args);
        std::vector<GaussianRational> acc(2);
        for (int j = 0; j < r; ++j) {
            std::vector<std::vector<GaussianRational>> args;
            for (int i = 0; i < r; ++i) {
                if (i == j) {
                    std::vector<std::vector<GaussianRational>> inner{v};
                    for (int t = 1; t < degs[static_cast<std::size_t>(i)]; ++t) inner.push_back(w);
                    args.push_back(polarize_full(hs[static_cast<std::size_t>(i)], inner));
                } else {
                    args.push_back(hs[static_cast<std::size_t>(i)].eval(w));
                }
            }
            auto term = polarize_full(kmap, args);
            for (std::size_t t = 0; t < 2; ++t)
                acc[t] += GaussianRational(degs[static_cast<std::size_t>(j)]) * term[t];
        }
        Rational inv_d(1, d);
        inv_d.canonicalize();
        for (auto& x : acc) x *= GaussianRational(inv_d);
        if (lhs != acc) {
            note("composition-polarization identity failed at instance " + std::to_string(k));
            ok = false;
            break;
        }
    }

    // resonance equivalence through multilinear maps
    LinearMap pm = LinearMap::diagonal({GaussianRational(1), GaussianRational(-1)});
    for (int k = 0; k < runs; ++k) {
        int d = rng.integer(2, 5);
        HomogeneousMap h = rng.combination(resonant_basis(pm, d));
        std::vector<std::vector<GaussianRational>> args, largs;
        for (int i = 0; i < d; ++i) {
            auto p = rng.point(2);
            largs.push_back(pm.apply(p));
            args.push_back(std::move(p));
        }
        if (polarize_full(h, largs) != pm.apply(polarize_full(h, args))) {
            note("resonance equivalence (forward) failed at instance " + std::to_string(k));
            ok = false;
            break;
        }
    }
    {
        // converse: every non-resonant monomial violates the identity somewhere
        LinearMap d24 = LinearMap::diagonal({GaussianRational(2), GaussianRational(4)});
        std::vector<GaussianRational> ones{1, 1};
        for (int d = 2; d <= 5 && ok; ++d) {
            auto qs = monomials_of_degree(2, d);
            for (int coord = 0; coord < 2 && ok; ++coord)
                for (const auto& q : qs) {
                    if (d24.power(q) == d24.diagonal_entries()[static_cast<std::size_t>(coord)])
                        continue;
                    HomogeneousMap mono = HomogeneousMap::monomial(2, q, coord);
                    std::vector<std::vector<GaussianRational>> diag(static_cast<std::size_t>(d),
                                                                    ones);
                    std::vector<std::vector<GaussianRational>> ldiag(static_cast<std::size_t>(d),
                                                                     d24.apply(ones));
                    if (polarize_full(mono, ldiag) == d24.apply(polarize_full(mono, diag))) {
                        note("non-resonant monomial passed the resonance identity");
                        ok = false;
                        break;
                    }
                }
        }
    }

    // the operator preserves resonance
    for (int k = 0; k < runs; ++k) {
        const LinearMap& lam = k % 2 == 0 ? pm : I2;
        HomogeneousMap p = rng.combination(resonant_basis(lam, 2));
        HomogeneousMap h = rng.combination(resonant_basis(lam, rng.integer(2, 4)));
        if (!is_resonant(lam, l_p_lambda(p, lam, h))) {
            note("operator image lost resonance at instance " + std::to_string(k));
            ok = false;
            break;
        }
    }

    // inverses of resonant conjugations stay resonant
    for (int k = 0; k < runs; ++k) {
        const LinearMap& lam = k % 2 == 0 ? pm : O2;
        FormalTransformation phi = FormalTransformation::identity(2, 5);
        for (int d = 2; d <= 5; ++d) phi.set_term(rng.combination(resonant_basis(lam, d)));
        if (!is_resonant(lam, invert_truncated(phi, 5))) {
            note("resonant inverse failed at instance " + std::to_string(k));
            ok = false;
            break;
        }
    }

    // residual formula at nu = mu + 1 via direct composition
    for (int k = 0; k < runs; ++k) {
        const LinearMap& lam = k % 3 == 0 ? pm : (k % 3 == 1 ? O2 : I2);
        const int N = 5;
        int mu = rng.integer(2, 3);
        FormalTransformation f = rng.resonant_transformation(lam, N, mu);
        if (f.term(mu).is_zero()) continue;
        HomogeneousMap h2 = rng.combination(resonant_basis(lam, 2));
        FormalTransformation phi = FormalTransformation::identity(2, N);
        phi.set_term(h2);
        FormalTransformation conj =
            compose_truncated(invert_truncated(phi, N), compose_truncated(f, phi, N), N);
        bool inst = conj.term(mu) == f.term(mu) &&
                    conj.term(mu + 1) == f.term(mu + 1) - l_p_lambda(f.term(mu), lam, h2);
        for (int nu = 2; nu < mu; ++nu) inst &= conj.term(nu).is_zero();
        if (!inst) {
            note("residual formula failed at instance " + std::to_string(k));
            ok = false;
            break;
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 6

bool resonance_classifier_suite() {
    bool ok = true;
    struct Expect {
        const char* rho;
        RhoRegime::Kind kind;
    };
    std::vector<Expect> table = {
        {"3", RhoRegime::Kind::one_plus_two_over_odd},
        {"2", RhoRegime::Kind::one_plus_inverse},
        {"3/2", RhoRegime::Kind::one_plus_inverse},
        {"5/3", RhoRegime::Kind::one_plus_two_over_odd},
        {"7/5", RhoRegime::Kind::one_plus_two_over_odd},
        {"-1", RhoRegime::Kind::negative_inverse},
        {"-1/2", RhoRegime::Kind::negative_inverse},
        {"-1/4", RhoRegime::Kind::negative_inverse},
        {"1", RhoRegime::Kind::one},
        {"1/2", RhoRegime::Kind::unit_interval},
        {"2/3", RhoRegime::Kind::unit_interval},
        {"5/7", RhoRegime::Kind::unit_interval},
    };
    for (const auto& row : table) {
        Rational rho = parse_rational(row.rho);
        auto sets = resonance_sets(rho, 10);
        if (sets.regime.kind != row.kind) {
            note(std::string("rho=") + row.rho + ": regime " + regime_label(sets.regime.kind));
            ok = false;
            continue;
        }
        // per-degree membership must match vanishing coefficients in the
        // operator matrix columns
        CaseId id{CaseLabel::c2_10rho, rho, {}};
        HomogeneousMap f2 = quadratic_case(id);
        for (int d = 2; d <= 10; ++d) {
            auto op = operator_matrix_l_p_lambda(f2, I2, monomial_basis(2, d));
            std::size_t per = monomial_count(2, d + 1);
            // rho in E_d  <=>  L(v_{d,j}) = 0 for some j; the v_{d,j} column
            // sits at index d+1+j in the coordinate-major source basis
            bool zero_v_column = false;
            for (int j = 0; j <= d; ++j) {
                auto col_v = op.mat.column(static_cast<std::size_t>(d + 1 + j));
                bool zero = true;
                for (const auto& c : col_v) zero &= c.is_zero();
                zero_v_column |= zero;
            }
            bool in_e_d = false;
            for (const auto& x : sets.e_d[static_cast<std::size_t>(d - 2)]) in_e_d |= (x == rho);
            if (in_e_d != zero_v_column) {
                note(std::string("rho=") + row.rho + " d=" + std::to_string(d) +
                     ": E_d membership disagrees with the operator matrix");
                ok = false;
            }
            // rho in F_d  <=>  L(u_{d,j}) loses its u-component for some j <= d-1
            if (d >= 3) {
                bool u_component_vanishes = false;
                for (int j = 0; j <= d - 1; ++j) {
                    auto col_u = op.mat.column(static_cast<std::size_t>(j));
                    bool zero_u = true;
                    for (std::size_t r = 0; r < per; ++r) zero_u &= col_u[r].is_zero();
                    u_component_vanishes |= zero_u;
                }
                bool in_f_d = false;
                for (const auto& x : sets.f_d[static_cast<std::size_t>(d - 3)]) in_f_d |= (x == rho);
                if (in_f_d != u_component_vanishes) {
                    note(std::string("rho=") + row.rho + " d=" + std::to_string(d) +
                         ": F_d membership disagrees with the operator matrix");
                    ok = false;
                }
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 7

bool infinite_order_suite() {
    bool ok = true;
    std::vector<CaseId> trivial_kernel = {
        {CaseLabel::inf, {}, {}},
        {CaseLabel::c1_10, {}, {}},
        {CaseLabel::c1_11, {}, {}},
        {CaseLabel::c2_011, {}, {}},
        {CaseLabel::c2_10rho, make_rational(2), {}},
        {CaseLabel::c2_10rho, make_rational(1, 2), {}},
        {CaseLabel::c2_10rho, make_rational(-1), {}},
        {CaseLabel::c2_11rho, make_rational(4), {}},
        {CaseLabel::c2_11rho, make_rational(-1), {}},
        {CaseLabel::c3_rho10, make_rational(2), {}},
        {CaseLabel::c3_rho10, make_rational(-1), {}},
        {CaseLabel::c3_rhotau1, make_rational(1), make_rational(1)},
        {CaseLabel::c3_rhotau1, make_rational(5), make_rational(5)},
    };
    std::vector<CaseId> nontrivial_kernel = {
        {CaseLabel::c1_00, {}, {}},
        {CaseLabel::c2_001, {}, {}},
        {CaseLabel::c2_10rho, make_rational(1), {}},
        {CaseLabel::c3_100, {}, {}},
    };
    auto run = [&](const CaseId& id, bool expect_trivial) {
        HomogeneousMap f2 = quadratic_case(id);
        auto flags = infinite_order_condition(f2, O2, 8);
        for (int d = 2; d <= 8; ++d) {
            bool trivial = flags[static_cast<std::size_t>(d - 2)];
            if (trivial != expect_trivial) {
                note("case " + to_string(id.label) + " d=" + std::to_string(d) +
                     ": kernel triviality " + (trivial ? "holds" : "fails") + ", expected " +
                     (expect_trivial ? "holds" : "fails"));
                return false;
            }
            // eqdinfo cross-check: trivial kernel <=> complement rank 2
            auto comp = computed_complement(f2, O2, d);
            if (trivial != (comp.rank() == 2)) {
                note("case " + to_string(id.label) + " d=" + std::to_string(d) +
                     ": rank-2 equivalence violated");
                return false;
            }
        }
        return true;
    };
    for (const auto& id : trivial_kernel) ok &= run(id, true);
    for (const auto& id : nontrivial_kernel) ok &= run(id, false);
    return ok;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();

    criterion(1, "superattracting golden complement suite (11 cases, d = 2..7)",
              superattracting_golden_suite());
    criterion(2, "tangent-to-identity golden complement suite (4 cases + 6 rho regimes)",
              tangent_to_identity_golden_suite());
    auto t_n = std::chrono::steady_clock::now();
    criterion(3, "second-order normalization end to end (200 random germs, N = 6)",
              second_order_end_to_end());
    double sec3 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_n).count();
    criterion(4, "Poincare-Dulac suite (diag(2,3) linearizes; diag(2,4) keeps the z^2 line)",
              poincare_dulac_suite());
    criterion(5, "algebraic identity suites (100 exact instances each)", algebraic_identity_suites());
    criterion(6, "resonance classifier agrees with the operator matrices (d <= 10)",
              resonance_classifier_suite());
    criterion(7, "kernel triviality separates the degenerate cases (d = 2..8)",
              infinite_order_suite());

    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion 3 runtime: " << sec3 << " s (budget 30 s)\n";
    std::cout << "total runtime: " << total << " s\n";
    if (sec3 > 30.0) {
        std::cout << "[FAIL] criterion 3 exceeded its runtime budget\n";
        ++g_failures;
    }
    std::cout << (g_failures == 0 ? "all criteria passed\n"
                                  : std::to_string(g_failures) + " criteria failed\n");
    return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
