#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "germ/fischer.hpp"
#include "germ/homogeneous.hpp"
#include "germ/linear_map.hpp"
#include "germ/matrix.hpp"
#include "germ/multi_index.hpp"
#include "germ/transformation.hpp"

namespace germ {

/// L_Lambda(H) = H o Lambda - Lambda H, degree-preserving.
inline HomogeneousMap l_lambda(const LinearMap& lambda, const HomogeneousMap& h) {
    if (lambda.dim() != h.n) throw std::invalid_argument("l_lambda: dimension mismatch");
    HomogeneousMap out(h.n, h.d);
    for (int j = 0; j < h.n; ++j)
        out.comp[static_cast<std::size_t>(j)] = subst_linear(h.comp[static_cast<std::size_t>(j)], lambda);
    // subtract Lambda * H
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j) {
            const GaussianRational& a = lambda.at(i, j);
            if (a.is_zero()) continue;
            HPoly t = h.comp[static_cast<std::size_t>(j)];
            t *= a;
            out.comp[static_cast<std::size_t>(i)] -= t;
        }
    return out;
}

/// L_{P,Lambda}(H) = (Jac H)(Lambda z) P(z) - (Jac P)(z) H(z), mapping
/// degree d to degree d + mu - 1 for P of degree mu.
inline HomogeneousMap l_p_lambda(const HomogeneousMap& p, const LinearMap& lambda,
                                 const HomogeneousMap& h) {
    if (p.n != h.n || lambda.dim() != h.n)
        throw std::invalid_argument("l_p_lambda: dimension mismatch");
    HomogeneousMap lambda_map = HomogeneousMap::from_linear(lambda);
    HomogeneousMap id_map = HomogeneousMap::from_linear(LinearMap::identity(h.n));
    // d * H~(P(z), Lz, ..., Lz) - mu * P~(H(z), z, ..., z)
    HomogeneousMap first = polarize_directional(h, p, lambda_map);
    first *= GaussianRational(h.d);
    HomogeneousMap second = polarize_directional(p, h, id_map);
    second *= GaussianRational(p.d);
    return first - second;
}

/// Whether H o Lambda = Lambda H exactly.
inline bool is_resonant(const LinearMap& lambda, const HomogeneousMap& h) {
    return l_lambda(lambda, h).is_zero();
}

/// Whether F o Lambda = Lambda F term by term up to the truncation. The
/// linear part must commute with Lambda.
inline bool is_resonant(const LinearMap& lambda, const FormalTransformation& f) {
    if (lambda.dim() != f.dim()) throw std::invalid_argument("is_resonant: dimension mismatch");
    if (!(f.linear() * lambda == lambda * f.linear())) return false;
    for (int d = 2; d <= f.truncation(); ++d)
        if (!is_resonant(lambda, f.term(d))) return false;
    return true;
}

/// List of homogeneous maps spanning a subspace of H^degree; vectors are
/// kept linearly independent.
struct SubspaceBasis {
    int n = 0;
    int degree = 0;
    std::vector<HomogeneousMap> vectors;

    std::size_t rank() const { return vectors.size(); }

    std::vector<std::vector<GaussianRational>> flattened() const {
        std::vector<std::vector<GaussianRational>> out;
        out.reserve(vectors.size());
        for (const auto& v : vectors) out.push_back(v.flatten());
        return out;
    }
};

inline bool span_contains(const SubspaceBasis& basis, const HomogeneousMap& v) {
    if (v.n != basis.n || v.d != basis.degree)
        throw std::invalid_argument("span_contains: shape mismatch");
    return in_span(basis.flattened(), v.flatten());
}

/// Mutual membership in both directions.
inline bool span_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.n != b.n || a.degree != b.degree) return false;
    for (const auto& v : a.vectors)
        if (!span_contains(b, v)) return false;
    for (const auto& v : b.vectors)
        if (!span_contains(a, v)) return false;
    return true;
}

/// All Lambda-resonant monomials z^Q e_j of degree d (those with
/// Lambda^Q = lambda_j), for diagonal Lambda.
inline SubspaceBasis resonant_basis(const LinearMap& lambda, int d) {
    if (!lambda.is_diagonal())
        throw std::invalid_argument("resonant_basis: requires diagonal linear part");
    const int n = lambda.dim();
    auto diag = lambda.diagonal_entries();
    SubspaceBasis out{n, d, {}};
    const auto& qs = monomials_of_degree(n, d);
    for (int j = 0; j < n; ++j)
        for (const auto& q : qs)
            if (lambda.power(q) == diag[static_cast<std::size_t>(j)])
                out.vectors.push_back(HomogeneousMap::monomial(n, q, j));
    return out;
}

/// Full monomial basis of H^d, coordinate-major (u's then v's for n = 2).
inline SubspaceBasis monomial_basis(int n, int d) {
    SubspaceBasis out{n, d, {}};
    const auto& qs = monomials_of_degree(n, d);
    for (int j = 0; j < n; ++j)
        for (const auto& q : qs) out.vectors.push_back(HomogeneousMap::monomial(n, q, j));
    return out;
}

/// Matrix of an operator restricted to a basis of a degree-d source space;
/// column k holds the flattened coefficients of the image of basis vector k
/// in the full target space H^{d_tgt}.
struct OperatorMatrix {
    int n = 0;
    int d_src = 0;
    int d_tgt = 0;
    std::vector<HomogeneousMap> source_basis;
    Matrix mat;  // (n * dim H^{d_tgt}) x |source_basis|

    std::size_t target_dim() const {
        return static_cast<std::size_t>(n) * monomial_count(n, d_tgt);
    }
};

inline OperatorMatrix operator_matrix_l_lambda(const LinearMap& lambda,
                                               const SubspaceBasis& source) {
    OperatorMatrix out;
    out.n = source.n;
    out.d_src = source.degree;
    out.d_tgt = source.degree;
    out.source_basis = source.vectors;
    std::vector<std::vector<GaussianRational>> cols;
    cols.reserve(source.vectors.size());
    for (const auto& v : source.vectors) cols.push_back(l_lambda(lambda, v).flatten());
    out.mat = cols.empty() ? Matrix(out.target_dim(), 0) : Matrix::from_columns(cols);
    return out;
}

inline OperatorMatrix operator_matrix_l_p_lambda(const HomogeneousMap& p, const LinearMap& lambda,
                                                 const SubspaceBasis& source) {
    OperatorMatrix out;
    out.n = source.n;
    out.d_src = source.degree;
    out.d_tgt = source.degree + p.d - 1;
    out.source_basis = source.vectors;
    std::vector<std::vector<GaussianRational>> cols;
    cols.reserve(source.vectors.size());
    for (const auto& v : source.vectors) cols.push_back(l_p_lambda(p, lambda, v).flatten());
    out.mat = cols.empty() ? Matrix(out.target_dim(), 0) : Matrix::from_columns(cols);
    return out;
}

/// Exact basis of the Fischer-orthogonal complement of the column space of M
/// inside the full target space: the nullspace of the weighted conjugate
/// transpose W-adjoint system. Returned in reduced echelon form.
inline SubspaceBasis image_complement(const OperatorMatrix& m, const FischerMetric& metric) {
    if (metric.d != m.d_tgt || metric.n != m.n)
        throw std::invalid_argument("image_complement: metric degree mismatch");
    const std::size_t tdim = m.target_dim();
    const std::size_t ncols = m.mat.cols();
    // rows: one per operator column; columns: target coordinates
    Matrix sys(ncols, tdim);
    for (std::size_t i = 0; i < ncols; ++i)
        for (std::size_t k = 0; k < tdim; ++k)
            sys.at(i, k) = GaussianRational(metric.flat_weight(k)) * m.mat.at(k, i).conj();
    auto null_vecs = nullspace(std::move(sys));
    auto canon = row_space_basis(null_vecs);
    SubspaceBasis out{m.n, m.d_tgt, {}};
    out.vectors.reserve(canon.size());
    for (const auto& v : canon) out.vectors.push_back(HomogeneousMap::unflatten(m.n, m.d_tgt, v));
    return out;
}

/// Exact nullspace of M expressed back in the source space (combinations of
/// the source basis vectors). Returned in reduced echelon form.
inline SubspaceBasis kernel_basis(const OperatorMatrix& m) {
    auto null_vecs = nullspace(m.mat);
    auto canon = row_space_basis(null_vecs);
    SubspaceBasis out{m.n, m.d_src, {}};
    out.vectors.reserve(canon.size());
    for (const auto& x : canon) {
        HomogeneousMap v(m.n, m.d_src);
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k].is_zero()) continue;
            HomogeneousMap t = m.source_basis[k];
            t *= x[k];
            v += t;
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

}  // namespace germ
