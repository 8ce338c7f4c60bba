#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

/// Exponent vector Q = (q_1, ..., q_n); z^Q = z_1^{q_1} ... z_n^{q_n}.
using MultiIndex = std::vector<int>;

inline int degree(const MultiIndex& q) {
    int d = 0;
    for (int e : q) d += e;
    return d;
}

/// Number of degree-d monomials in n variables: C(d+n-1, n-1). Sizes stay
/// small here, so plain integer arithmetic suffices.
inline std::size_t monomial_count(int n, int d) {
    if (n <= 0) throw std::invalid_argument("monomial_count: n must be positive");
    if (d < 0) return 0;
    unsigned long long count = 1;
    for (int k = 1; k <= n - 1; ++k) count = count * static_cast<unsigned long long>(d + k) /
                                            static_cast<unsigned long long>(k);
    return static_cast<std::size_t>(count);
}

/// All degree-d multi-indices in n variables, in increasing lexicographic
/// order of the exponent vector. For n = 2 this lists (0,d), (1,d-1), ...,
/// (d,0), so position j holds z^j w^{d-j}. Tables are memoized; callers
/// receive a stable reference.
inline const std::vector<MultiIndex>& monomials_of_degree(int n, int d) {
    static std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;

    std::vector<MultiIndex> out;
    out.reserve(monomial_count(n, d));
    MultiIndex cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n - 1) {
            cur[static_cast<std::size_t>(var)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    return cache.emplace(std::make_pair(n, d), std::move(out)).first->second;
}

/// Position of q among the degree-deg(q) monomials, matching
/// monomials_of_degree order.
inline std::size_t monomial_rank(const MultiIndex& q) {
    const int n = static_cast<int>(q.size());
    int remaining = degree(q);
    std::size_t rank = 0;
    for (int var = 0; var < n - 1; ++var) {
        for (int e = 0; e < q[static_cast<std::size_t>(var)]; ++e)
            rank += monomial_count(n - 1 - var, remaining - e);
        remaining -= q[static_cast<std::size_t>(var)];
    }
    return rank;
}

/// Fischer weight of z^Q: q_1! ... q_n! / (q_1 + ... + q_n)!.
inline Rational fischer_weight(const MultiIndex& q) {
    mpz_class num = 1;
    for (int e : q) num *= factorial(static_cast<unsigned>(e));
    Rational w(num, factorial(static_cast<unsigned>(degree(q))));
    w.canonicalize();
    return w;
}

/// Memoized Fischer weights for the degree-d monomials of n variables,
/// in monomials_of_degree order.
inline const std::vector<Rational>& fischer_weights(int n, int d) {
    static std::map<std::pair<int, int>, std::vector<Rational>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
    std::vector<Rational> weights;
    const auto& qs = monomials_of_degree(n, d);
    weights.reserve(qs.size());
    for (const auto& q : qs) weights.push_back(fischer_weight(q));
    return cache.emplace(std::make_pair(n, d), std::move(weights)).first->second;
}

}  // namespace germ
