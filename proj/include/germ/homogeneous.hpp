#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "germ/gaussian.hpp"
#include "germ/linear_map.hpp"
#include "germ/multi_index.hpp"

namespace germ {

/// Homogeneous scalar polynomial of degree d in n variables; dense
/// coefficients in monomials_of_degree order.
struct HPoly {
    int n = 0;
    int d = 0;
    std::vector<GaussianRational> c;

    HPoly() = default;
    HPoly(int n_, int d_) : n(n_), d(d_), c(monomial_count(n_, d_)) {}

    const GaussianRational& coeff(const MultiIndex& q) const { return c[monomial_rank(q)]; }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    HPoly& operator+=(const HPoly& o) {
        check_shape(o);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
        return *this;
    }
    HPoly& operator-=(const HPoly& o) {
        check_shape(o);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
        return *this;
    }
    HPoly& operator*=(const GaussianRational& s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const GaussianRational& s, HPoly p) { return p *= s; }
    friend bool operator==(const HPoly& a, const HPoly& b) {
        return a.n == b.n && a.d == b.d && a.c == b.c;
    }

    void check_shape(const HPoly& o) const {
        if (n != o.n || d != o.d) throw std::invalid_argument("hpoly: shape mismatch");
    }
};

inline HPoly hpoly_monomial(int n, const MultiIndex& q, GaussianRational coeff = 1) {
    HPoly p(n, degree(q));
    p.c[monomial_rank(q)] = std::move(coeff);
    return p;
}

namespace detail {

/// rank(qa[i] + qb[j]) lookups for monomial products, memoized per
/// (n, deg a, deg b).
inline const std::vector<std::vector<std::size_t>>& product_rank_table(int n, int da, int db) {
    static std::map<std::tuple<int, int, int>, std::vector<std::vector<std::size_t>>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, da, db});
    if (it != cache.end()) return it->second;
    const auto& qa = monomials_of_degree(n, da);
    const auto& qb = monomials_of_degree(n, db);
    std::vector<std::vector<std::size_t>> table(qa.size(), std::vector<std::size_t>(qb.size()));
    MultiIndex q(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < qa.size(); ++i)
        for (std::size_t j = 0; j < qb.size(); ++j) {
            for (std::size_t v = 0; v < q.size(); ++v) q[v] = qa[i][v] + qb[j][v];
            table[i][j] = monomial_rank(q);
        }
    return cache.emplace(std::make_tuple(n, da, db), std::move(table)).first->second;
}

}  // namespace detail

inline HPoly mul(const HPoly& a, const HPoly& b) {
    if (a.n != b.n) throw std::invalid_argument("hpoly: dimension mismatch");
    HPoly out(a.n, a.d + b.d);
    const auto& table = detail::product_rank_table(a.n, a.d, b.d);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            out.c[table[i][j]] += a.c[i] * b.c[j];
        }
    }
    return out;
}

/// Partial derivative with respect to variable var; degree drops by one.
inline HPoly diff(const HPoly& p, int var) {
    if (p.d == 0) return HPoly(p.n, 0);
    HPoly out(p.n, p.d - 1);
    const auto& qs = monomials_of_degree(p.n, p.d);
    for (std::size_t k = 0; k < qs.size(); ++k) {
        int e = qs[k][static_cast<std::size_t>(var)];
        if (e == 0 || p.c[k].is_zero()) continue;
        MultiIndex q = qs[k];
        q[static_cast<std::size_t>(var)] -= 1;
        out.c[monomial_rank(q)] += GaussianRational(e) * p.c[k];
    }
    return out;
}

inline GaussianRational eval(const HPoly& p, std::span<const GaussianRational> z) {
    if (z.size() != static_cast<std::size_t>(p.n))
        throw std::invalid_argument("hpoly: dimension mismatch");
    GaussianRational out(0);
    const auto& qs = monomials_of_degree(p.n, p.d);
    for (std::size_t k = 0; k < qs.size(); ++k) {
        if (p.c[k].is_zero()) continue;
        GaussianRational term = p.c[k];
        for (std::size_t v = 0; v < z.size(); ++v)
            term *= pow(z[v], static_cast<unsigned>(qs[k][v]));
        out += term;
    }
    return out;
}

/// p(Az) for a linear map A; stays homogeneous of the same degree.
inline HPoly subst_linear(const HPoly& p, const LinearMap& a) {
    if (p.n != a.dim()) throw std::invalid_argument("hpoly: dimension mismatch");
    HPoly out(p.n, p.d);
    const auto& qs = monomials_of_degree(p.n, p.d);
    // rows of A as degree-1 polynomials
    std::vector<HPoly> rows;
    rows.reserve(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
        HPoly row(p.n, 1);
        for (int j = 0; j < p.n; ++j) {
            MultiIndex q(static_cast<std::size_t>(p.n), 0);
            q[static_cast<std::size_t>(j)] = 1;
            row.c[monomial_rank(q)] = a.at(i, j);
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < qs.size(); ++k) {
        if (p.c[k].is_zero()) continue;
        HPoly term(p.n, 0);
        term.c[0] = p.c[k];
        for (int v = 0; v < p.n; ++v)
            for (int e = 0; e < qs[k][static_cast<std::size_t>(v)]; ++e)
                term = mul(term, rows[static_cast<std::size_t>(v)]);
        out += term;
    }
    return out;
}

/// n-tuple of degree-d homogeneous polynomials: element of H^d. Carries
/// F_d, H_d, and the operator images; the standard basis vectors are
/// monomial maps z^Q e_j.
struct HomogeneousMap {
    int n = 0;
    int d = 0;
    std::vector<HPoly> comp;  // comp.size() == n

    HomogeneousMap() = default;
    HomogeneousMap(int n_, int d_) : n(n_), d(d_), comp(static_cast<std::size_t>(n_), HPoly(n_, d_)) {}

    static HomogeneousMap monomial(int n, const MultiIndex& q, int coord,
                                   GaussianRational coeff = 1) {
        HomogeneousMap m(n, degree(q));
        m.comp[static_cast<std::size_t>(coord)] = hpoly_monomial(n, q, std::move(coeff));
        return m;
    }

    static HomogeneousMap from_linear(const LinearMap& a) {
        HomogeneousMap m(a.dim(), 1);
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                MultiIndex q(static_cast<std::size_t>(a.dim()), 0);
                q[static_cast<std::size_t>(j)] = 1;
                m.comp[static_cast<std::size_t>(i)].c[monomial_rank(q)] = a.at(i, j);
            }
        return m;
    }

    /// Coefficient-space dimension: n * C(d+n-1, n-1).
    std::size_t space_dim() const { return static_cast<std::size_t>(n) * monomial_count(n, d); }

    /// Flattened coefficients, coordinate-major: for n = 2 this lists the
    /// u_{d,0..d} block then the v_{d,0..d} block.
    std::vector<GaussianRational> flatten() const {
        std::vector<GaussianRational> out;
        out.reserve(space_dim());
        for (const auto& p : comp) out.insert(out.end(), p.c.begin(), p.c.end());
        return out;
    }

    static HomogeneousMap unflatten(int n, int d, std::span<const GaussianRational> v) {
        HomogeneousMap m(n, d);
        if (v.size() != m.space_dim()) throw std::invalid_argument("homogeneous map: bad length");
        std::size_t per = monomial_count(n, d);
        for (int j = 0; j < n; ++j)
            for (std::size_t k = 0; k < per; ++k)
                m.comp[static_cast<std::size_t>(j)].c[k] = v[static_cast<std::size_t>(j) * per + k];
        return m;
    }

    bool is_zero() const {
        for (const auto& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }

    HomogeneousMap& operator+=(const HomogeneousMap& o) {
        check_shape(o);
        for (std::size_t j = 0; j < comp.size(); ++j) comp[j] += o.comp[j];
        return *this;
    }
    HomogeneousMap& operator-=(const HomogeneousMap& o) {
        check_shape(o);
        for (std::size_t j = 0; j < comp.size(); ++j) comp[j] -= o.comp[j];
        return *this;
    }
    HomogeneousMap& operator*=(const GaussianRational& s) {
        for (auto& p : comp) p *= s;
        return *this;
    }
    friend HomogeneousMap operator+(HomogeneousMap a, const HomogeneousMap& b) { return a += b; }
    friend HomogeneousMap operator-(HomogeneousMap a, const HomogeneousMap& b) { return a -= b; }
    friend HomogeneousMap operator-(HomogeneousMap a) {
        return a *= GaussianRational(-1);
    }
    friend HomogeneousMap operator*(const GaussianRational& s, HomogeneousMap m) { return m *= s; }
    friend bool operator==(const HomogeneousMap& a, const HomogeneousMap& b) {
        return a.n == b.n && a.d == b.d && a.comp == b.comp;
    }

    std::vector<GaussianRational> eval(std::span<const GaussianRational> z) const {
        std::vector<GaussianRational> out;
        out.reserve(comp.size());
        for (const auto& p : comp) out.push_back(germ::eval(p, z));
        return out;
    }

    void check_shape(const HomogeneousMap& o) const {
        if (n != o.n || d != o.d) throw std::invalid_argument("homogeneous map: shape mismatch");
    }
};

/// Truncated polynomial: homogeneous slices for degrees 0..N.
struct TruncPoly {
    int n = 0;
    int N = 0;
    std::vector<HPoly> deg;  // deg[k] has degree k; size N+1

    TruncPoly() = default;
    TruncPoly(int n_, int N_) : n(n_), N(N_) {
        deg.reserve(static_cast<std::size_t>(N_) + 1);
        for (int k = 0; k <= N_; ++k) deg.emplace_back(n_, k);
    }

    static TruncPoly constant(int n, int N, const GaussianRational& v) {
        TruncPoly p(n, N);
        p.deg[0].c[0] = v;
        return p;
    }

    bool is_zero() const {
        for (const auto& p : deg)
            if (!p.is_zero()) return false;
        return true;
    }

    TruncPoly& operator+=(const TruncPoly& o) {
        check_shape(o);
        for (std::size_t k = 0; k < deg.size(); ++k) deg[k] += o.deg[k];
        return *this;
    }
    TruncPoly& operator*=(const GaussianRational& s) {
        for (auto& p : deg) p *= s;
        return *this;
    }
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }

    void add_homogeneous(const HPoly& h, const GaussianRational& scale = 1) {
        if (h.d > N) return;
        HPoly t = h;
        t *= scale;
        deg[static_cast<std::size_t>(h.d)] += t;
    }

    void check_shape(const TruncPoly& o) const {
        if (n != o.n || N != o.N) throw std::invalid_argument("trunc poly: shape mismatch");
    }
};

inline TruncPoly mul(const TruncPoly& a, const TruncPoly& b) {
    a.check_shape(b);
    TruncPoly out(a.n, a.N);
    for (int i = 0; i <= a.N; ++i) {
        if (a.deg[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= a.N; ++j) {
            if (b.deg[static_cast<std::size_t>(j)].is_zero()) continue;
            out.deg[static_cast<std::size_t>(i + j)] +=
                mul(a.deg[static_cast<std::size_t>(i)], b.deg[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

/// n-tuple of truncated polynomials; working form for compositions.
using TruncMap = std::vector<TruncPoly>;

inline TruncMap trunc_map(int n, int N) {
    return TruncMap(static_cast<std::size_t>(n), TruncPoly(n, N));
}

/// Substitutes the tuple g into every component of the homogeneous map h,
/// truncating at g's cap. Powers of the g_i are cached across monomials.
inline TruncMap substitute(const HomogeneousMap& h, const TruncMap& g) {
    if (g.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("substitute: dimension mismatch");
    const int N = g.empty() ? 0 : g[0].N;
    const int n = h.n;
    // powers[v][e] = g[v]^e
    std::vector<std::vector<TruncPoly>> powers(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        powers[static_cast<std::size_t>(v)].push_back(TruncPoly::constant(n, N, 1));
    auto power = [&](int v, int e) -> const TruncPoly& {
        auto& cache = powers[static_cast<std::size_t>(v)];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(mul(cache.back(), g[static_cast<std::size_t>(v)]));
        return cache[static_cast<std::size_t>(e)];
    };
    TruncMap out = trunc_map(n, N);
    const auto& qs = monomials_of_degree(n, h.d);
    for (int j = 0; j < n; ++j) {
        const HPoly& p = h.comp[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < qs.size(); ++k) {
            if (p.c[k].is_zero()) continue;
            TruncPoly term = TruncPoly::constant(n, N, p.c[k]);
            for (int v = 0; v < n; ++v) {
                int e = qs[k][static_cast<std::size_t>(v)];
                if (e > 0) term = mul(term, power(v, e));
            }
            out[static_cast<std::size_t>(j)] += term;
        }
    }
    return out;
}

/// P~(v_1, ..., v_d) at points, via the polarization identity
/// P~ = (1/d!) sum over nonempty S of (-1)^{d-|S|} P(sum_{i in S} v_i).
inline std::vector<GaussianRational> polarize_full(
    const HomogeneousMap& p, const std::vector<std::vector<GaussianRational>>& args) {
    const int d = p.d;
    if (static_cast<int>(args.size()) != d)
        throw std::invalid_argument("polarize_full: expected exactly d arguments");
    for (const auto& v : args)
        if (v.size() != static_cast<std::size_t>(p.n))
            throw std::invalid_argument("polarize_full: dimension mismatch");
    std::vector<GaussianRational> acc(static_cast<std::size_t>(p.n));
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<GaussianRational> z(static_cast<std::size_t>(p.n));
        int bits = 0;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                ++bits;
                for (std::size_t v = 0; v < z.size(); ++v) z[v] += args[static_cast<std::size_t>(i)][v];
            }
        GaussianRational sign((d - bits) % 2 == 0 ? 1 : -1);
        auto val = p.eval(z);
        for (std::size_t v = 0; v < z.size(); ++v) acc[v] += sign * val[v];
    }
    Rational inv_fact(1, factorial(static_cast<unsigned>(d)));
    inv_fact.canonicalize();
    GaussianRational scale{inv_fact};
    for (auto& x : acc) x *= scale;
    return acc;
}

/// Same polarization identity with homogeneous-map arguments; the result is
/// homogeneous of degree sum(deg args). Feeds the composition and inversion
/// formulas for homogeneous terms.
inline HomogeneousMap polarize_full(const HomogeneousMap& p,
                                    const std::vector<HomogeneousMap>& args) {
    const int d = p.d;
    if (static_cast<int>(args.size()) != d)
        throw std::invalid_argument("polarize_full: expected exactly d arguments");
    int target = 0;
    for (const auto& a : args) {
        if (a.n != p.n) throw std::invalid_argument("polarize_full: dimension mismatch");
        target += a.d;
    }
    HomogeneousMap acc(p.n, target);
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        TruncMap z = trunc_map(p.n, target);
        int bits = 0;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                ++bits;
                const auto& a = args[static_cast<std::size_t>(i)];
                for (int j = 0; j < p.n; ++j)
                    z[static_cast<std::size_t>(j)].add_homogeneous(a.comp[static_cast<std::size_t>(j)]);
            }
        GaussianRational sign((d - bits) % 2 == 0 ? 1 : -1);
        TruncMap val = substitute(p, z);
        for (int j = 0; j < p.n; ++j) {
            HPoly piece = val[static_cast<std::size_t>(j)].deg[static_cast<std::size_t>(target)];
            piece *= sign;
            acc.comp[static_cast<std::size_t>(j)] += piece;
        }
    }
    Rational inv_fact(1, factorial(static_cast<unsigned>(d)));
    inv_fact.canonicalize();
    acc *= GaussianRational{inv_fact};
    return acc;
}

/// Jacobian of a homogeneous map: entry (i, j) = d comp_i / d z_j.
inline std::vector<std::vector<HPoly>> jacobian(const HomogeneousMap& h) {
    std::vector<std::vector<HPoly>> jac(static_cast<std::size_t>(h.n));
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j)
            jac[static_cast<std::size_t>(i)].push_back(diff(h.comp[static_cast<std::size_t>(i)], j));
    return jac;
}

/// Directional polarization at points: P~(v, z, ..., z) = (1/d) Jac(P)(z) v.
inline std::vector<GaussianRational> polarize_directional(
    const HomogeneousMap& p, std::span<const GaussianRational> v,
    std::span<const GaussianRational> z) {
    if (v.size() != static_cast<std::size_t>(p.n) || z.size() != static_cast<std::size_t>(p.n))
        throw std::invalid_argument("polarize_directional: dimension mismatch");
    auto jac = jacobian(p);
    Rational inv_d(1, p.d);
    inv_d.canonicalize();
    std::vector<GaussianRational> out(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
        GaussianRational s(0);
        for (int j = 0; j < p.n; ++j)
            s += eval(jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], z) *
                 v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s * GaussianRational{inv_d};
    }
    return out;
}

/// Directional polarization with polynomial arguments:
/// P~(V(z), W(z), ..., W(z)) = (1/d) Jac(P)(W(z)) V(z), homogeneous of degree
/// deg V + (d-1) deg W. Used to build the conjugation operators.
inline HomogeneousMap polarize_directional(const HomogeneousMap& p, const HomogeneousMap& v,
                                           const HomogeneousMap& w) {
    if (v.n != p.n || w.n != p.n)
        throw std::invalid_argument("polarize_directional: dimension mismatch");
    const int target = v.d + (p.d - 1) * w.d;
    // substitute w into each Jacobian entry, then multiply by v
    TruncMap wt = trunc_map(p.n, (p.d - 1) * w.d);
    for (int j = 0; j < p.n; ++j)
        wt[static_cast<std::size_t>(j)].add_homogeneous(w.comp[static_cast<std::size_t>(j)]);
    auto jac = jacobian(p);
    HomogeneousMap out(p.n, target);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            const HPoly& entry = jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (entry.is_zero() || v.comp[static_cast<std::size_t>(j)].is_zero()) continue;
            // entry has degree p.d - 1; entry(W(z)) is homogeneous of degree
            // (p.d - 1) * w.d
            HomogeneousMap entry_map(p.n, p.d - 1);
            entry_map.comp[0] = entry;
            TruncMap composed = substitute(entry_map, wt);
            HPoly entry_at_w = composed[0].deg[static_cast<std::size_t>((p.d - 1) * w.d)];
            out.comp[static_cast<std::size_t>(i)] +=
                mul(entry_at_w, v.comp[static_cast<std::size_t>(j)]);
        }
    Rational inv_d(1, p.d);
    inv_d.canonicalize();
    out *= GaussianRational{inv_d};
    return out;
}

}  // namespace germ
