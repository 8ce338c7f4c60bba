#include <exception>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "germ/catalog.hpp"
#include "germ/io.hpp"
#include "germ/normalize.hpp"
#include "germ/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;

struct CaseOptions {
    std::string case_label;
    std::string rho;
    std::string tau;
};

germ::CaseId build_case(const CaseOptions& opt) {
    germ::CaseId id;
    id.label = germ::parse_case_label(opt.case_label);
    if (!opt.rho.empty()) id.rho = germ::parse_rational(opt.rho);
    if (!opt.tau.empty()) id.tau = germ::parse_rational(opt.tau);
    germ::validate_case(id);
    return id;
}

germ::LinearKind parse_lambda_kind(const std::string& s) {
    if (s == "zero") return germ::LinearKind::zero;
    if (s == "identity") return germ::LinearKind::identity;
    throw germ::input_error("lambda must be 'zero' or 'identity'");
}

int run_normalize(const std::string& input, const CaseOptions& case_opt,
                  const std::string& lambda_kind, const std::string& order, int degree,
                  const std::string& output) {
    germ::FormalTransformation f;
    if (!input.empty()) {
        f = germ::load_germ_file(input);
    } else if (!case_opt.case_label.empty()) {
        germ::CaseId id = build_case(case_opt);
        int cap = degree > 0 ? degree : 6;
        germ::LinearMap lambda = parse_lambda_kind(lambda_kind) == germ::LinearKind::zero
                                     ? germ::LinearMap::zero(2)
                                     : germ::LinearMap::identity(2);
        f = germ::FormalTransformation(lambda, cap);
        f.set_term(germ::quadratic_case(id));
    } else {
        throw germ::input_error("normalize needs --input or --case");
    }
    const int n_degree = degree > 0 ? degree : f.truncation();
    if (n_degree > f.truncation())
        throw germ::input_error("--degree exceeds the file truncation");

    germ::NormalFormResult result;
    if (order == "pd") {
        result = germ::pd_normalize(f, n_degree);
    } else if (order == "second") {
        germ::NormalFormResult pd = germ::pd_normalize(f, n_degree);
        result = germ::second_order_normalize(pd.g, n_degree);
        result.phi = germ::compose_truncated(pd.phi, result.phi, n_degree);
        germ::internal_check(germ::verify_conjugacy(f, result.g, result.phi, n_degree),
                             "combined conjugation failed verification");
    } else {
        throw germ::input_error("--order must be 'pd' or 'second'");
    }

    std::cout << "order: " << (result.order == germ::NormalFormOrder::pd ? "pd" : "second")
              << "   first nonlinear degree: " << (result.mu == 0 ? "none" : std::to_string(result.mu))
              << "\n";
    std::cout << "normal form: " << germ::render_transformation(result.g) << "\n";
    std::cout << std::setw(4) << "d" << std::setw(8) << "dim_im" << std::setw(9) << "dim_ker"
              << std::setw(12) << "complement" << std::setw(19) << "infinite_order_ok" << "\n";
    for (const auto& row : result.diagnostics)
        std::cout << std::setw(4) << row.d << std::setw(8) << row.dim_im << std::setw(9)
                  << row.dim_ker << std::setw(12) << row.complement_rank << std::setw(19)
                  << (row.infinite_order_ok ? "yes" : "no") << "\n";

    if (!output.empty()) germ::write_json_file(output, germ::result_to_json(f, result));
    return kExitOk;
}

int run_complement(const CaseOptions& case_opt, const std::string& lambda_kind, int degree,
                   const std::string& output) {
    germ::CaseId id = build_case(case_opt);
    germ::LinearKind kind = parse_lambda_kind(lambda_kind);
    if (degree < 2) throw germ::input_error("--degree must be >= 2");

    germ::LinearMap lambda = kind == germ::LinearKind::zero ? germ::LinearMap::zero(2)
                                                            : germ::LinearMap::identity(2);
    germ::HomogeneousMap f2 = germ::quadratic_case(id);
    auto op = germ::operator_matrix_l_p_lambda(f2, lambda, germ::monomial_basis(2, degree));
    auto computed = germ::image_complement(op, germ::FischerMetric(2, degree + 1));

    std::optional<germ::SubspaceBasis> expected;
    try {
        expected = germ::expected_complement(id, kind, degree);
    } catch (const germ::input_error&) {
        // no tabulated reference for this case over this linear part
    }

    std::cout << "case " << germ::to_string(id.label) << ", lambda " << lambda_kind
              << ", source degree " << degree << "\n";
    std::cout << "computed complement (rank " << computed.rank() << "):\n"
              << germ::render_basis(computed);
    if (expected) {
        std::cout << "tabulated complement (rank " << expected->rank() << "):\n"
                  << germ::render_basis(*expected);
        bool match = germ::span_equal(computed, *expected);
        std::cout << "verdict: " << (match ? "match" : "MISMATCH") << "\n";
        if (!output.empty()) {
            germ::json j;
            j["case"] = germ::to_string(id.label);
            j["degree"] = degree;
            j["computed_rank"] = computed.rank();
            j["tabulated_rank"] = expected->rank();
            j["match"] = match;
            germ::write_json_file(output, j);
        }
        if (!match) return kExitInternal;  // tables and computation disagree: a bug
    } else {
        std::cout << "tabulated complement: not available for this combination\n";
    }
    return kExitOk;
}

int run_resonance(const std::string& rho_str, int max_degree) {
    germ::Rational rho = germ::parse_rational(rho_str);
    if (rho == 0) throw germ::input_error("--rho must be nonzero");
    auto sets = germ::resonance_sets(rho, max_degree);
    std::cout << "rho = " << germ::to_string(rho) << "\n";
    std::cout << "regime " << germ::regime_label(sets.regime.kind);
    switch (sets.regime.kind) {
        case germ::RhoRegime::Kind::one_plus_inverse:
            std::cout << "  rho = 1 + 1/n with n = " << sets.regime.n.get_str();
            break;
        case germ::RhoRegime::Kind::one_plus_two_over_odd:
            std::cout << "  rho = 1 + 2/m with m = " << sets.regime.m.get_str();
            break;
        case germ::RhoRegime::Kind::negative_inverse:
            std::cout << "  rho = -1/n with n = " << sets.regime.n.get_str();
            break;
        case germ::RhoRegime::Kind::unit_interval:
            std::cout << "  rho = a/b with a = " << sets.regime.a.get_str()
                      << ", b = " << sets.regime.b.get_str();
            break;
        default: break;
    }
    std::cout << "\n";
    std::cout << "rho in E: " << (sets.rho_in_e ? "yes" : "no")
              << "   rho in F: " << (sets.rho_in_f ? "yes" : "no") << "\n";
    for (int d = 2; d <= max_degree; ++d) {
        std::cout << "  d=" << d << "  E_d = {";
        const auto& e = sets.e_d[static_cast<std::size_t>(d - 2)];
        for (std::size_t k = 0; k < e.size(); ++k)
            std::cout << (k ? ", " : "") << germ::to_string(e[k]);
        std::cout << "}";
        if (d >= 3) {
            std::cout << "  F_d = {";
            const auto& fd = sets.f_d[static_cast<std::size_t>(d - 3)];
            for (std::size_t k = 0; k < fd.size(); ++k)
                std::cout << (k ? ", " : "") << germ::to_string(fd[k]);
            std::cout << "}";
        }
        bool in_ed = false, in_fd = false;
        for (const auto& x : sets.e_d[static_cast<std::size_t>(d - 2)]) in_ed |= (x == rho);
        if (d >= 3)
            for (const auto& x : sets.f_d[static_cast<std::size_t>(d - 3)]) in_fd |= (x == rho);
        if (in_ed || in_fd)
            std::cout << "   <- rho in " << (in_ed ? "E_d" : "") << (in_ed && in_fd ? ", " : "")
                      << (in_fd ? "F_d" : "");
        std::cout << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& f_path, const std::string& g_path, const std::string& phi_path,
               int degree) {
    germ::FormalTransformation f = germ::load_germ_file(f_path);
    germ::FormalTransformation g = germ::load_germ_file(g_path, germ::ResultPart::normal_form);
    germ::FormalTransformation phi = germ::load_germ_file(phi_path, germ::ResultPart::conjugation);
    if (f.dim() != g.dim() || f.dim() != phi.dim())
        throw germ::input_error("verify: dimension mismatch between files");
    int cap = degree > 0 ? degree : std::min({f.truncation(), g.truncation(), phi.truncation()});
    if (cap > std::min({f.truncation(), g.truncation(), phi.truncation()}))
        throw germ::input_error("--degree exceeds a file truncation");
    auto mismatch = germ::conjugacy_mismatch(f, g, phi, cap);
    if (!mismatch) {
        std::cout << "conjugacy verified through degree " << cap << "\n";
        return kExitOk;
    }
    auto vars = germ::variable_names(f.dim());
    std::cout << "conjugacy fails at degree " << mismatch->d << ", coordinate " << mismatch->coord
              << ", monomial " << germ::render_monomial(mismatch->exponents, vars) << ": "
              << germ::to_string(mismatch->lhs) << " vs " << germ::to_string(mismatch->rhs) << "\n";
    return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normal forms of formal self-maps: Poincare-Dulac and second-order"
                 " (Fischer-orthocomplement) reductions over Q(i)"};
    app.require_subcommand(1);

    CaseOptions case_opt;
    std::string input, output, order = "second", lambda_kind = "zero", rho_str;
    int degree = 0, max_degree = 8;

    auto* normalize = app.add_subcommand("normalize", "Normalize a germ file or a case preset");
    normalize->add_option("--input", input, "germ JSON file");
    normalize->add_option("--case", case_opt.case_label, "quadratic case preset label");
    normalize->add_option("--rho", case_opt.rho, "case parameter rho (rational)");
    normalize->add_option("--tau", case_opt.tau, "case parameter tau (rational)");
    normalize->add_option("--lambda", lambda_kind, "preset linear part: zero|identity");
    normalize->add_option("--order", order, "pd|second (default second)");
    normalize->add_option("--degree", degree, "truncation degree for the run");
    normalize->add_option("--output", output, "write the result JSON here");

    auto* complement = app.add_subcommand("complement", "Image orthocomplement for a case");
    complement->add_option("--case", case_opt.case_label, "quadratic case label")->required();
    complement->add_option("--rho", case_opt.rho, "case parameter rho");
    complement->add_option("--tau", case_opt.tau, "case parameter tau");
    complement->add_option("--lambda", lambda_kind, "zero|identity");
    complement->add_option("--degree", degree, "source degree d")->required();
    complement->add_option("--output", output, "write a JSON summary here");

    auto* resonance = app.add_subcommand("resonance", "Resonance sets E_d/F_d for case 2_10rho");
    resonance->add_option("--rho", rho_str, "rational rho != 0")->required();
    resonance->add_option("--max-degree", max_degree, "largest degree to list (default 8)");

    std::string f_path, g_path, phi_path;
    auto* verify = app.add_subcommand("verify", "Check G = Phi^-1 o F o Phi for three files");
    verify->add_option("f", f_path, "input germ F")->required();
    verify->add_option("g", g_path, "normal form G (germ or result file)")->required();
    verify->add_option("phi", phi_path, "conjugation Phi (germ or result file)")->required();
    verify->add_option("--degree", degree, "verification degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (normalize->parsed())
            return run_normalize(input, case_opt, lambda_kind, order, degree, output);
        if (complement->parsed()) return run_complement(case_opt, lambda_kind, degree, output);
        if (resonance->parsed()) return run_resonance(rho_str, max_degree);
        if (verify->parsed()) return run_verify(f_path, g_path, phi_path, degree);
    } catch (const germ::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const germ::unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInputError;
}
