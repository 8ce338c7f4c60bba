#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "germ/gaussian.hpp"

namespace germ {

/// Dense matrix over Q(i) with exact Gaussian elimination. Sizes here stay
/// tiny (coefficient spaces of low-degree maps), so everything is direct.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GaussianRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<GaussianRational>>& cols) {
        if (cols.empty()) return {};
        Matrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw std::invalid_argument("matrix: ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("matrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::vector<GaussianRational> column(std::size_t j) const {
        std::vector<GaussianRational> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    std::vector<GaussianRational> row(std::size_t i) const {
        std::vector<GaussianRational> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix: dimension mismatch");
        std::vector<GaussianRational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            GaussianRational s(0);
            for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * x[j];
            out[i] = s;
        }
        return out;
    }

    /// In-place reduced row echelon form; returns the pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t pr = 0;
        for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
            std::size_t sel = pr;
            while (sel < rows_ && at(sel, pc).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != pr)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(pr, j));
            GaussianRational inv = GaussianRational(1) / at(pr, pc);
            for (std::size_t j = pc; j < cols_; ++j) at(pr, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == pr || at(i, pc).is_zero()) continue;
                GaussianRational factor = at(i, pc);
                for (std::size_t j = pc; j < cols_; ++j) at(i, j) -= factor * at(pr, j);
            }
            pivots.push_back(pc);
            ++pr;
        }
        return pivots;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> a_;
};

inline std::size_t rank(Matrix m) { return m.rref().size(); }

/// Basis of the nullspace of m, one vector per free column, canonicalized by
/// the reduced echelon construction (deterministic).
inline std::vector<std::vector<GaussianRational>> nullspace(Matrix m) {
    const std::size_t nc = m.cols();
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> v(nc);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Canonical basis of the row space: stack the vectors, reduce, keep nonzero
/// rows. Two spanning sets are span-equal iff this agrees.
inline std::vector<std::vector<GaussianRational>> row_space_basis(
    const std::vector<std::vector<GaussianRational>>& rows) {
    if (rows.empty()) return {};
    Matrix m = Matrix::from_rows(rows);
    std::size_t r = m.rref().size();
    std::vector<std::vector<GaussianRational>> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i) out.push_back(m.row(i));
    return out;
}

/// Solves A x = b exactly; std::nullopt when inconsistent. Free variables are
/// set to zero, so the result is deterministic.
inline std::optional<std::vector<GaussianRational>> solve(const Matrix& a,
                                                          const std::vector<GaussianRational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<GaussianRational> x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, a.cols());
    return x;
}

/// Whether v lies in the span of the given vectors.
inline bool in_span(const std::vector<std::vector<GaussianRational>>& span_vectors,
                    const std::vector<GaussianRational>& v) {
    bool v_zero = true;
    for (const auto& x : v)
        if (!x.is_zero()) {
            v_zero = false;
            break;
        }
    if (v_zero) return true;
    if (span_vectors.empty()) return false;
    return solve(Matrix::from_columns(span_vectors), v).has_value();
}

}  // namespace germ
