#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "germ/homogeneous.hpp"
#include "germ/multi_index.hpp"

namespace germ {

/// Diagonal weights of the Fischer Hermitian product on H^d: the monomial
/// z^Q e_j has weight q_1! ... q_n! / d!, independent of the coordinate j.
/// A lightweight handle over the memoized weight tables.
struct FischerMetric {
    int n = 0;
    int d = 0;

    FischerMetric(int n_, int d_) : n(n_), d(d_) {}

    const std::vector<Rational>& weights() const { return fischer_weights(n, d); }

    /// Weight of the k-th flattened coefficient of a degree-d map.
    const Rational& flat_weight(std::size_t k) const {
        const auto& w = weights();
        return w[k % w.size()];
    }
};

/// <P, Q> = sum over monomials of weight * coeff_P * conj(coeff_Q);
/// conjugate-linear in the second argument.
inline GaussianRational fischer_inner(const HomogeneousMap& p, const HomogeneousMap& q) {
    if (p.n != q.n || p.d != q.d) throw std::invalid_argument("fischer: degree mismatch");
    const auto& weights = fischer_weights(p.n, p.d);
    GaussianRational out(0);
    for (int j = 0; j < p.n; ++j) {
        const auto& pc = p.comp[static_cast<std::size_t>(j)].c;
        const auto& qc = q.comp[static_cast<std::size_t>(j)].c;
        for (std::size_t k = 0; k < pc.size(); ++k) {
            if (pc[k].is_zero() || qc[k].is_zero()) continue;
            out += GaussianRational(weights[k]) * pc[k] * qc[k].conj();
        }
    }
    return out;
}

}  // namespace germ
