#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "germ/gaussian.hpp"
#include "germ/multi_index.hpp"

namespace germ {

enum class LinearKind { zero, identity, diagonal, general };

/// Square matrix over Q(i) with a structure flag kept consistent with the
/// entries. Holds the linear term of a formal transformation.
class LinearMap {
public:
    LinearMap() = default;

    explicit LinearMap(int n, std::vector<GaussianRational> entries)
        : n_(n), a_(std::move(entries)) {
        if (n <= 0 || a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw std::invalid_argument("linear map: bad entry count");
        classify();
    }

    static LinearMap zero(int n) {
        return LinearMap(n, std::vector<GaussianRational>(
                                static_cast<std::size_t>(n) * static_cast<std::size_t>(n)));
    }

    static LinearMap identity(int n) {
        LinearMap m = zero(n);
        for (int i = 0; i < n; ++i) m.a_[m.idx(i, i)] = 1;
        m.classify();
        return m;
    }

    static LinearMap diagonal(const std::vector<GaussianRational>& diag) {
        LinearMap m = zero(static_cast<int>(diag.size()));
        for (int i = 0; i < m.n_; ++i) m.a_[m.idx(i, i)] = diag[static_cast<std::size_t>(i)];
        m.classify();
        return m;
    }

    int dim() const { return n_; }
    LinearKind kind() const { return kind_; }
    bool is_diagonal() const { return kind_ != LinearKind::general; }

    const GaussianRational& at(int row, int col) const { return a_[idx(row, col)]; }

    void set(int row, int col, GaussianRational value) {
        a_[idx(row, col)] = std::move(value);
        classify();
    }

    /// Eigenvalue list for diagonal maps.
    std::vector<GaussianRational> diagonal_entries() const {
        if (!is_diagonal()) throw std::invalid_argument("linear map: not diagonal");
        std::vector<GaussianRational> d;
        d.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) d.push_back(at(i, i));
        return d;
    }

    /// Lambda^Q = lambda_1^{q_1} ... lambda_n^{q_n} for diagonal maps.
    GaussianRational power(const MultiIndex& q) const {
        auto diag = diagonal_entries();
        GaussianRational r(1);
        for (int i = 0; i < n_; ++i)
            r *= pow(diag[static_cast<std::size_t>(i)],
                     static_cast<unsigned>(q[static_cast<std::size_t>(i)]));
        return r;
    }

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const {
        if (v.size() != static_cast<std::size_t>(n_))
            throw std::invalid_argument("linear map: dimension mismatch");
        std::vector<GaussianRational> out(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            GaussianRational s(0);
            for (int j = 0; j < n_; ++j) s += at(i, j) * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = s;
        }
        return out;
    }

    friend LinearMap operator*(const LinearMap& a, const LinearMap& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("linear map: dimension mismatch");
        LinearMap out = zero(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                GaussianRational s(0);
                for (int k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
                out.a_[out.idx(i, j)] = s;
            }
        out.classify();
        return out;
    }

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    void classify() {
        bool all_zero = true, is_id = true, diag = true;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const GaussianRational& e = a_[idx(i, j)];
                if (!e.is_zero()) all_zero = false;
                if (i == j ? e != GaussianRational(1) : !e.is_zero()) is_id = false;
                if (i != j && !e.is_zero()) diag = false;
            }
        kind_ = all_zero    ? LinearKind::zero
                : is_id     ? LinearKind::identity
                : diag      ? LinearKind::diagonal
                            : LinearKind::general;
    }

    std::size_t idx(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(col);
    }

    int n_ = 0;
    std::vector<GaussianRational> a_;
    LinearKind kind_ = LinearKind::zero;
};

}  // namespace germ
