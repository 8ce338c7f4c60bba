#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "germ/homogeneous.hpp"
#include "germ/linear_map.hpp"

namespace germ {

/// Formal transformation truncated at degree N: linear term plus homogeneous
/// terms of degrees 2..N. Immutable in spirit; all operations return new
/// values.
class FormalTransformation {
public:
    FormalTransformation() = default;

    FormalTransformation(LinearMap linear, int truncation)
        : n_(linear.dim()), N_(truncation), linear_(std::move(linear)) {
        if (truncation < 1) throw std::invalid_argument("transformation: truncation must be >= 1");
        terms_.reserve(N_ >= 2 ? static_cast<std::size_t>(N_ - 1) : 0);
        for (int d = 2; d <= N_; ++d) terms_.emplace_back(n_, d);
    }

    static FormalTransformation identity(int n, int truncation) {
        return {LinearMap::identity(n), truncation};
    }

    int dim() const { return n_; }
    int truncation() const { return N_; }
    const LinearMap& linear() const { return linear_; }

    /// Degree-d homogeneous term; the linear part viewed as a map for d = 1.
    const HomogeneousMap& term(int d) const {
        if (d < 2 || d > N_) throw std::out_of_range("transformation: degree out of range");
        return terms_[static_cast<std::size_t>(d - 2)];
    }

    void set_term(HomogeneousMap h) {
        if (h.d < 2 || h.d > N_ || h.n != n_)
            throw std::invalid_argument("transformation: bad term shape");
        terms_[static_cast<std::size_t>(h.d - 2)] = std::move(h);
    }

    void add_term(const HomogeneousMap& h) {
        if (h.d < 2 || h.d > N_ || h.n != n_)
            throw std::invalid_argument("transformation: bad term shape");
        terms_[static_cast<std::size_t>(h.d - 2)] += h;
    }

    bool is_linear() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const HomogeneousMap& t) { return t.is_zero(); });
    }

    /// Smallest d >= 2 with a nonzero term, or 0 if purely linear.
    int order() const {
        for (const auto& t : terms_)
            if (!t.is_zero()) return t.d;
        return 0;
    }

    /// Same transformation with the truncation degree changed; raising it
    /// pads with zero terms, lowering it drops terms.
    FormalTransformation truncated(int truncation) const {
        FormalTransformation out(linear_, truncation);
        for (int d = 2; d <= std::min(N_, truncation); ++d) out.set_term(term(d));
        return out;
    }

    friend bool operator==(const FormalTransformation& a, const FormalTransformation& b) {
        return a.n_ == b.n_ && a.N_ == b.N_ && a.linear_ == b.linear_ && a.terms_ == b.terms_;
    }

private:
    int n_ = 0;
    int N_ = 1;
    LinearMap linear_;
    std::vector<HomogeneousMap> terms_;
};

/// {F}_d as a homogeneous map, including d = 1.
inline HomogeneousMap homogeneous_term(const FormalTransformation& f, int d) {
    if (d < 1 || d > f.truncation())
        throw std::out_of_range("homogeneous_term: degree out of range");
    if (d == 1) return HomogeneousMap::from_linear(f.linear());
    return f.term(d);
}

/// F o G truncated at degree N, by direct substitution of G's expansion into
/// every monomial of F. Powers of the coordinates of G are cached across all
/// degrees of F.
inline FormalTransformation compose_truncated(const FormalTransformation& f,
                                              const FormalTransformation& g, int N) {
    if (f.dim() != g.dim()) throw std::invalid_argument("compose: dimension mismatch");
    if (N < 1 || N > std::min(f.truncation(), g.truncation()))
        throw std::invalid_argument("compose: truncation out of range");
    const int n = f.dim();
    TruncMap gt = trunc_map(n, N);
    for (int j = 0; j < n; ++j)
        gt[static_cast<std::size_t>(j)].add_homogeneous(
            HomogeneousMap::from_linear(g.linear()).comp[static_cast<std::size_t>(j)]);
    for (int d = 2; d <= N; ++d)
        for (int j = 0; j < n; ++j)
            gt[static_cast<std::size_t>(j)].add_homogeneous(g.term(d).comp[static_cast<std::size_t>(j)]);

    std::vector<std::vector<TruncPoly>> powers(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        powers[static_cast<std::size_t>(v)].push_back(TruncPoly::constant(n, N, 1));
    auto power = [&](int v, int e) -> const TruncPoly& {
        auto& cache = powers[static_cast<std::size_t>(v)];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(mul(cache.back(), gt[static_cast<std::size_t>(v)]));
        return cache[static_cast<std::size_t>(e)];
    };

    TruncMap acc = trunc_map(n, N);
    for (int d = 1; d <= N; ++d) {
        HomogeneousMap fd = homogeneous_term(f, d);
        if (fd.is_zero()) continue;
        const auto& qs = monomials_of_degree(n, d);
        for (int j = 0; j < n; ++j)
            for (std::size_t k = 0; k < qs.size(); ++k) {
                const GaussianRational& c = fd.comp[static_cast<std::size_t>(j)].c[k];
                if (c.is_zero()) continue;
                TruncPoly term = TruncPoly::constant(n, N, c);
                for (int v = 0; v < n; ++v) {
                    int e = qs[k][static_cast<std::size_t>(v)];
                    if (e > 0) term = mul(term, power(v, e));
                }
                acc[static_cast<std::size_t>(j)] += term;
            }
    }

    LinearMap lin = f.linear() * g.linear();
    FormalTransformation out(lin, N);
    for (int d = 2; d <= N; ++d) {
        HomogeneousMap h(n, d);
        for (int j = 0; j < n; ++j)
            h.comp[static_cast<std::size_t>(j)] = acc[static_cast<std::size_t>(j)].deg[static_cast<std::size_t>(d)];
        out.set_term(std::move(h));
    }
    return out;
}

/// Inverse of Phi = I + sum H_d, truncated at N, by the degree-d recursion
/// K_d = -H_d - sum over splittings of K~_r(H_{d_1}, ..., H_{d_r}). The
/// splitting sum over ordered tuples equals the degree-d term of the partial
/// inverse composed with Phi, which is how it is evaluated here.
inline FormalTransformation invert_truncated(const FormalTransformation& phi, int N) {
    if (phi.linear().kind() != LinearKind::identity)
        throw std::invalid_argument("invert: linear part must be the identity");
    if (N < 1 || N > phi.truncation())
        throw std::invalid_argument("invert: truncation out of range");
    const int n = phi.dim();
    FormalTransformation inv = FormalTransformation::identity(n, N);
    for (int d = 2; d <= N; ++d) {
        FormalTransformation partial =
            compose_truncated(inv.truncated(d), phi.truncated(d), d);
        inv.set_term(-partial.term(d));
    }
    return inv;
}

}  // namespace germ
