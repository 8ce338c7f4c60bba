#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "germ/errors.hpp"
#include "germ/fischer.hpp"
#include "germ/homogeneous.hpp"
#include "germ/linear_map.hpp"
#include "germ/matrix.hpp"
#include "germ/operators.hpp"
#include "germ/transformation.hpp"

namespace germ {

enum class NormalFormOrder { pd, second };

struct DegreeDiagnostics {
    int d = 0;
    std::size_t dim_im = 0;
    std::size_t dim_ker = 0;
    std::size_t complement_rank = 0;
    bool infinite_order_ok = false;  // criterion held through this degree
};

/// Output of a normalization run: the normal form G, the conjugation Phi
/// (identity linear part) with G = Phi^{-1} o F o Phi up to the truncation,
/// and per-degree linear-algebra diagnostics.
struct NormalFormResult {
    FormalTransformation g;
    FormalTransformation phi;
    NormalFormOrder order = NormalFormOrder::pd;
    int mu = 0;  // order of the first nonzero nonlinear term; 0 when G is linear
    std::vector<DegreeDiagnostics> diagnostics;
};

struct ConjugacyMismatch {
    int d = 0;
    int coord = 0;
    MultiIndex exponents;
    GaussianRational lhs;  // {Phi o G}_d coefficient
    GaussianRational rhs;  // {F o Phi}_d coefficient
};

/// First coefficient where Phi o G and F o Phi differ through degree N, or
/// nothing when G = Phi^{-1} o F o Phi holds exactly.
inline std::optional<ConjugacyMismatch> conjugacy_mismatch(const FormalTransformation& f,
                                                           const FormalTransformation& g,
                                                           const FormalTransformation& phi,
                                                           int N) {
    if (phi.linear().kind() != LinearKind::identity)
        throw std::invalid_argument("verify_conjugacy: conjugation must have identity linear part");
    FormalTransformation lhs = compose_truncated(phi.truncated(N), g.truncated(N), N);
    FormalTransformation rhs = compose_truncated(f.truncated(N), phi.truncated(N), N);
    for (int d = 1; d <= N; ++d) {
        HomogeneousMap a = homogeneous_term(lhs, d);
        HomogeneousMap b = homogeneous_term(rhs, d);
        if (a == b) continue;
        const auto& qs = monomials_of_degree(f.dim(), d);
        for (int j = 0; j < f.dim(); ++j)
            for (std::size_t k = 0; k < qs.size(); ++k) {
                const auto& ca = a.comp[static_cast<std::size_t>(j)].c[k];
                const auto& cb = b.comp[static_cast<std::size_t>(j)].c[k];
                if (ca != cb) return ConjugacyMismatch{d, j, qs[k], ca, cb};
            }
    }
    return std::nullopt;
}

inline bool verify_conjugacy(const FormalTransformation& f, const FormalTransformation& g,
                             const FormalTransformation& phi, int N) {
    return !conjugacy_mismatch(f, g, phi, N).has_value();
}

/// Per-degree kernel triviality of L_{F2,Lambda} restricted to the resonant
/// subspaces: entry d-2 answers whether Ker L|_{H^d_Lambda} = {O}, for
/// d = 2..d_max. When every entry holds, a second order normal form with
/// first term F2 is also an infinite order normal form (checked degree by
/// degree, so this is evidence up to d_max, not a proof for all d).
inline std::vector<bool> infinite_order_condition(const HomogeneousMap& f2,
                                                  const LinearMap& lambda, int d_max) {
    if (f2.d != 2) throw std::invalid_argument("infinite_order_condition: F2 must have degree 2");
    if (!lambda.is_diagonal())
        throw unsupported_error("infinite_order_condition: requires diagonal linear part");
    std::vector<bool> out;
    out.reserve(d_max >= 2 ? static_cast<std::size_t>(d_max - 1) : 0);
    for (int d = 2; d <= d_max; ++d) {
        SubspaceBasis res = resonant_basis(lambda, d);
        if (res.vectors.empty()) {
            out.push_back(true);
            continue;
        }
        OperatorMatrix m = operator_matrix_l_p_lambda(f2, lambda, res);
        out.push_back(rank(m.mat) == res.vectors.size());
    }
    return out;
}

namespace detail {

/// Cumulative infinite-order flags for the diagnostics rows: row for degree d
/// reports whether the kernel criterion held for all source degrees < d.
inline void fill_infinite_order_flags(NormalFormResult& result, int N) {
    const int mu = result.g.order();
    if (mu != 2) {
        for (auto& row : result.diagnostics) row.infinite_order_ok = false;
        return;
    }
    HomogeneousMap g2 = result.g.term(2);
    std::vector<bool> per_degree = infinite_order_condition(g2, result.g.linear(), N);
    auto held_through = [&](int d) {
        for (int s = 2; s <= d - 1; ++s)
            if (!per_degree[static_cast<std::size_t>(s - 2)]) return false;
        return true;
    };
    for (auto& row : result.diagnostics) row.infinite_order_ok = held_through(row.d);
}

}  // namespace detail

/// Classical Poincare-Dulac normalization for diagonal linear parts: removes
/// every non-resonant monomial through degree N. The conjugation term H_nu is
/// picked with zero resonant component, which fixes one representative among
/// the possible conjugations.
inline NormalFormResult pd_normalize(const FormalTransformation& f, int N) {
    if (!f.linear().is_diagonal())
        throw unsupported_error("pd_normalize: requires diagonal linear part");
    if (N < 2 || N > f.truncation())
        throw std::invalid_argument("pd_normalize: truncation out of range");
    const int n = f.dim();
    const LinearMap& lambda = f.linear();
    auto eigen = lambda.diagonal_entries();

    NormalFormResult result;
    result.order = NormalFormOrder::pd;
    result.g = FormalTransformation(lambda, N);
    result.phi = FormalTransformation::identity(n, N);

    for (int nu = 2; nu <= N; ++nu) {
        FormalTransformation conj =
            compose_truncated(invert_truncated(result.phi, nu),
                              compose_truncated(f.truncated(nu), result.phi.truncated(nu), nu), nu);
        HomogeneousMap residual = conj.term(nu);

        HomogeneousMap g_nu(n, nu);
        HomogeneousMap h_nu(n, nu);
        const auto& qs = monomials_of_degree(n, nu);
        std::size_t resonant_count = 0;
        for (int j = 0; j < n; ++j)
            for (std::size_t k = 0; k < qs.size(); ++k) {
                GaussianRational eigen_gap = lambda.power(qs[k]) - eigen[static_cast<std::size_t>(j)];
                bool resonant = eigen_gap.is_zero();
                if (resonant) ++resonant_count;
                const GaussianRational& c = residual.comp[static_cast<std::size_t>(j)].c[k];
                if (resonant)
                    g_nu.comp[static_cast<std::size_t>(j)].c[k] = c;
                else if (!c.is_zero())
                    h_nu.comp[static_cast<std::size_t>(j)].c[k] = c / eigen_gap;
            }
        result.g.set_term(g_nu);
        result.phi.set_term(h_nu);

        std::size_t space_dim = static_cast<std::size_t>(n) * qs.size();
        result.diagnostics.push_back(DegreeDiagnostics{
            nu, space_dim - resonant_count, resonant_count, resonant_count, false});
    }

    result.mu = result.g.order();
    detail::fill_infinite_order_flags(result, N);
    internal_check(verify_conjugacy(f, result.g, result.phi, N),
                   "pd_normalize: conjugacy verification failed");
    return result;
}

namespace detail {

/// Splits residual = G_d + L(H) in H^d, with H in the resonant degree-s
/// source space and Fischer-perpendicular to Ker L, G_d Fischer-perpendicular
/// to Im L. Exact least squares through the normal equations of the Gram
/// system; unique, hence deterministic.
struct SplitResult {
    std::vector<GaussianRational> h_coords;  // w.r.t. the source basis
    HomogeneousMap g_d;
};

inline SplitResult split_against_image(const OperatorMatrix& op, const FischerMetric& target_metric,
                                       const HomogeneousMap& residual) {
    const std::size_t tdim = op.target_dim();
    const std::size_t cols = op.mat.cols();
    std::vector<GaussianRational> r = residual.flatten();

    if (cols == 0) return {{}, residual};

    // normal equations: (M* W M) x = M* W r
    Matrix gram(cols, cols);
    std::vector<GaussianRational> rhs(cols);
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            GaussianRational s(0);
            for (std::size_t k = 0; k < tdim; ++k)
                s += op.mat.at(k, i).conj() * GaussianRational(target_metric.flat_weight(k)) *
                     op.mat.at(k, j);
            gram.at(i, j) = s;
        }
        GaussianRational s(0);
        for (std::size_t k = 0; k < tdim; ++k)
            s += op.mat.at(k, i).conj() * GaussianRational(target_metric.flat_weight(k)) * r[k];
        rhs[i] = s;
    }
    auto x = solve(gram, rhs);
    internal_check(x.has_value(), "split: normal equations inconsistent");

    // source metric: the source basis is made of monomial maps, which are
    // Fischer-orthogonal with weights given by their exponents
    std::vector<Rational> src_w;
    src_w.reserve(cols);
    for (const auto& b : op.source_basis) {
        internal_check(b.d == op.d_src, "split: mixed source degrees");
        GaussianRational norm = fischer_inner(b, b);
        internal_check(norm.is_real() && norm.re() > 0, "split: degenerate source metric");
        src_w.push_back(norm.re());
    }

    // project x away from Ker M in the source metric
    auto kernel_coords = nullspace(op.mat);
    if (!kernel_coords.empty()) {
        const std::size_t kn = kernel_coords.size();
        Matrix kgram(kn, kn);
        std::vector<GaussianRational> krhs(kn);
        for (std::size_t a = 0; a < kn; ++a) {
            for (std::size_t b = 0; b < kn; ++b) {
                GaussianRational s(0);
                for (std::size_t k = 0; k < cols; ++k)
                    s += kernel_coords[a][k].conj() * GaussianRational(src_w[k]) *
                         kernel_coords[b][k];
                kgram.at(a, b) = s;
            }
            GaussianRational s(0);
            for (std::size_t k = 0; k < cols; ++k)
                s += kernel_coords[a][k].conj() * GaussianRational(src_w[k]) * (*x)[k];
            krhs[a] = s;
        }
        auto y = solve(kgram, krhs);
        internal_check(y.has_value(), "split: kernel Gram system inconsistent");
        for (std::size_t a = 0; a < kn; ++a)
            for (std::size_t k = 0; k < cols; ++k) (*x)[k] -= (*y)[a] * kernel_coords[a][k];
    }

    std::vector<GaussianRational> image_part = op.mat.apply(*x);
    std::vector<GaussianRational> g_flat(tdim);
    for (std::size_t k = 0; k < tdim; ++k) g_flat[k] = r[k] - image_part[k];
    return {std::move(*x), HomogeneousMap::unflatten(op.n, op.d_tgt, g_flat)};
}

}  // namespace detail

/// Second order normal form: beyond the first nonlinear term G_mu = F_mu,
/// every degree-d term of G lies in the Fischer-orthocomplement of
/// Im L_{F_mu,Lambda} restricted to the resonant subspace of degree d-mu+1,
/// and the conjugation terms lie in the resonant subspace, perpendicular to
/// Ker L_{F_mu,Lambda}. The input must already be Lambda-resonant (run
/// pd_normalize first; vacuous for zero or identity linear part).
inline NormalFormResult second_order_normalize(const FormalTransformation& f, int N) {
    if (!f.linear().is_diagonal())
        throw unsupported_error("second_order_normalize: requires diagonal linear part");
    if (N < 2 || N > f.truncation())
        throw std::invalid_argument("second_order_normalize: truncation out of range");
    if (!is_resonant(f.linear(), f.truncated(N)))
        throw std::invalid_argument(
            "second_order_normalize: input must be resonant (apply pd_normalize first)");
    const int n = f.dim();
    const LinearMap& lambda = f.linear();

    NormalFormResult result;
    result.order = NormalFormOrder::second;
    result.g = FormalTransformation(lambda, N);
    result.phi = FormalTransformation::identity(n, N);

    int mu = 0;
    for (int d = 2; d <= N; ++d)
        if (!f.term(d).is_zero()) {
            mu = d;
            break;
        }
    result.mu = mu;
    if (mu == 0) return result;  // G = Lambda, Phi = I

    for (int d = 2; d <= mu; ++d) result.g.set_term(f.term(d));
    HomogeneousMap f_mu = f.term(mu);

    for (int d = mu + 1; d <= N; ++d) {
        const int s = d - mu + 1;
        FormalTransformation conj =
            compose_truncated(invert_truncated(result.phi, d),
                              compose_truncated(f.truncated(d), result.phi.truncated(d), d), d);
        HomogeneousMap residual = conj.term(d);

        SubspaceBasis source = resonant_basis(lambda, s);
        OperatorMatrix op = operator_matrix_l_p_lambda(f_mu, lambda, source);
        FischerMetric metric(n, d);
        auto split = detail::split_against_image(op, metric, residual);

        HomogeneousMap h_s(n, s);
        for (std::size_t k = 0; k < split.h_coords.size(); ++k) {
            if (split.h_coords[k].is_zero()) continue;
            HomogeneousMap t = source.vectors[k];
            t *= split.h_coords[k];
            h_s += t;
        }
        result.phi.set_term(std::move(h_s));
        result.g.set_term(split.g_d);

        std::size_t im_rank = rank(op.mat);
        result.diagnostics.push_back(DegreeDiagnostics{d, im_rank,
                                                       source.vectors.size() - im_rank,
                                                       op.target_dim() - im_rank, false});
    }

    detail::fill_infinite_order_flags(result, N);
    internal_check(verify_conjugacy(f, result.g, result.phi, N),
                   "second_order_normalize: conjugacy verification failed");
    internal_check(is_resonant(lambda, result.g),
                   "second_order_normalize: output lost resonance");
    internal_check(is_resonant(lambda, result.phi),
                   "second_order_normalize: conjugation lost resonance");
    return result;
}

}  // namespace germ
