#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "dsr/extremal.hpp"
#include "dsr/graph.hpp"

namespace dsr {

struct SpectralResult {
    double radius = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

struct SpectralOptions {
    double rayleigh_tol = 1e-12; // successive Rayleigh-quotient change
    double residual_tol = 1e-10; // inf-norm of D*v - mu*v at termination
    int max_iterations = 100000;
};

namespace spectral_detail {

// Power iteration on a dense nonnegative matrix, all-ones start vector.
// The matrices here are irreducible (distance matrices of connected graphs,
// equitable quotients of them), so the Perron root dominates and the
// all-ones vector has positive overlap with the Perron vector.
template <class At>
SpectralResult power_iteration(int n, At at, const SpectralOptions& opt) {
    std::vector<double> v(n, 1.0), w(n, 0.0);
    double mu_prev = 0.0;
    for (int it = 0; it < opt.max_iterations; ++it) {
        double dot_vw = 0.0, dot_vv = 0.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
            w[i] = s;
            dot_vw += v[i] * s;
            dot_vv += v[i] * v[i];
            norm = std::max(norm, std::abs(s));
        }
        double mu = dot_vw / dot_vv;
        if (norm == 0.0) return {0.0, it + 1, 0.0}; // 1x1 zero matrix
        // v carries unit inf-norm from the previous step, so w - mu*v is the
        // eigen-residual for it
        double residual = 0.0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(w[i] - mu * v[i]));
        bool settled =
            it > 0 && std::abs(mu - mu_prev) <= opt.rayleigh_tol && residual <= opt.residual_tol;
        mu_prev = mu;
        if (settled) return {mu, it + 1, residual};
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    throw convergence_error("power iteration did not converge within the iteration cap", mu_prev);
}

} // namespace spectral_detail

inline SpectralResult distance_spectral_radius(const DistanceMatrix& d,
                                               const SpectralOptions& opt = {}) {
    return spectral_detail::power_iteration(
        d.order(), [&](int i, int j) { return static_cast<double>(d.at(i, j)); }, opt);
}

inline SpectralResult distance_spectral_radius(const Graph& g, const SpectralOptions& opt = {}) {
    return distance_spectral_radius(all_pairs_distances(g), opt);
}

// Block-averaged matrix of a partitioned distance matrix. `equitable` is
// checked exactly on the integer entries: every row of each sub-block must
// have the same row sum.
struct QuotientMatrix {
    int t = 0;
    std::vector<double> entries; // row-major t*t
    std::vector<int> block_sizes;
    bool equitable = false;

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * t + j]; }
};

inline QuotientMatrix quotient_matrix(const DistanceMatrix& d,
                                      const std::vector<std::vector<int>>& partition) {
    int n = d.order();
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty()) throw std::invalid_argument("empty partition block");
        for (int v : partition[b]) {
            if (v < 0 || v >= n || owner[v] != -1)
                throw std::invalid_argument("partition must cover 0..n-1 exactly once");
            owner[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("partition must cover 0..n-1 exactly once");

    int t = static_cast<int>(partition.size());
    QuotientMatrix q;
    q.t = t;
    q.entries.assign(static_cast<std::size_t>(t) * t, 0.0);
    q.equitable = true;
    for (int i = 0; i < t; ++i) {
        q.block_sizes.push_back(static_cast<int>(partition[i].size()));
        for (int j = 0; j < t; ++j) {
            long long first = -1;
            long long total = 0;
            bool constant = true;
            for (int r : partition[i]) {
                long long row = 0;
                for (int c : partition[j]) row += d.at(r, c);
                if (first == -1)
                    first = row;
                else if (row != first)
                    constant = false;
                total += row;
            }
            q.entries[static_cast<std::size_t>(i) * t + j] =
                static_cast<double>(total) / static_cast<double>(partition[i].size());
            if (!constant) q.equitable = false;
        }
    }
    return q;
}

// Canonical partition of an extremal graph's vertex set: hub | clique | independent.
inline std::vector<std::vector<int>> extremal_partition(const ExtremalParams& p) {
    p.validate();
    std::vector<std::vector<int>> blocks(3);
    int a = p.clique_size();
    for (int v = 0; v < p.s; ++v) blocks[0].push_back(v);
    for (int v = p.s; v < p.s + a; ++v) blocks[1].push_back(v);
    for (int v = p.s + a; v < p.n; ++v) blocks[2].push_back(v);
    return blocks;
}

// The closed-form 3x3 equitable quotient of D(extremal_graph(p)), rows
// ordered hub, clique, independent.
inline QuotientMatrix extremal_quotient(const ExtremalParams& p) {
    p.validate();
    double s = p.s, a = p.clique_size(), b = p.independent_size();
    QuotientMatrix q;
    q.t = 3;
    q.block_sizes = {p.s, p.clique_size(), p.independent_size()};
    q.entries = {s - 1, a,         b,
                 s,     a - 1,     2 * b,
                 s,     2 * a,     2 * (b - 1)};
    q.equitable = true;
    return q;
}

inline SpectralResult quotient_spectral_radius(const QuotientMatrix& q,
                                               const SpectralOptions& opt = {}) {
    return spectral_detail::power_iteration(q.t, [&](int i, int j) { return q.at(i, j); }, opt);
}

// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct CubicPoly {
    double c2 = 0.0, c1 = 0.0, c0 = 0.0;

    double eval(double x) const { return ((x + c2) * x + c1) * x + c0; }
    double deriv(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }
};

// Exact integer coefficients (c2, c1, c0) of the characteristic cubics of the
// extremal quotient matrices, one closed form per published shape.
inline std::array<long long, 3> cubic_coeffs_family_a(long long n, long long s, long long k) {
    return {-s - n - k + 4,
            5 * s * s - 2 * n * s + 7 * k * s - s - 2 * k * n - 3 * n + 2 * k * k - k + 5,
            -2 * s * s * s + (n - 3 * k + 5) * s * s + (k * n - 2 * n - k * k + 7 * k) * s -
                2 * k * n - 2 * n + 2 * k * k + 2};
}

// Family A at k = 1, as published in the factor-theorem form.
inline std::array<long long, 3> cubic_coeffs_family_a_k1(long long n, long long s) {
    return {3 - s - n,
            5 * s * s - 2 * n * s + 6 * s - 5 * n + 6,
            -2 * s * s * s + (n + 2) * s * s + (6 - n) * s - 4 * n + 4};
}

inline std::array<long long, 3> cubic_coeffs_family_b(long long n, long long s, long long k) {
    return {-k * s - n + 3,
            2 * k * k * s * s + 3 * k * s * s - 2 * k * n * s + 3 * k * s + 3 * s - 5 * n + 6,
            -(k * k + k) * s * s * s + (k * n + 2 * k * k + k - 1) * s * s +
                (n - 2 * k * n + 4 * k + 2) * s + 4 - 4 * n};
}

inline CubicPoly char_poly_family(const ExtremalParams& p) {
    p.validate();
    auto c = p.family == Family::A ? cubic_coeffs_family_a(p.n, p.s, p.k)
                                   : cubic_coeffs_family_b(p.n, p.s, p.k);
    return {static_cast<double>(c[0]), static_cast<double>(c[1]), static_cast<double>(c[2])};
}

// Characteristic cubic of an arbitrary 3x3 matrix: c2 = -trace, c1 = sum of
// principal 2x2 minors, c0 = -det.
inline CubicPoly char_poly_3x3(const QuotientMatrix& q) {
    if (q.t != 3) throw std::invalid_argument("char_poly_3x3 requires a 3x3 quotient");
    auto m = [&](int i, int j) { return q.at(i, j); };
    double tr = m(0, 0) + m(1, 1) + m(2, 2);
    double minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
                    m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                 m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                 m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return {-tr, minors, -det};
}

// Largest real root of a monic cubic, to 1e-10 absolute. The bracket comes
// from the critical points of f (a monic cubic is positive right of its
// largest real root), then bisection with a Newton polish. Bracketing by
// critical points avoids the branch-selection pitfalls of closed-form
// Cardano near coincident roots.
inline double largest_real_root(const CubicPoly& c, double lo_hint = 0.0, double hi_hint = 0.0) {
    double bound = 1.0 + std::max({std::abs(c.c2), std::abs(c.c1), std::abs(c.c0)});
    double lo, hi;
    double disc = c.c2 * c.c2 - 3.0 * c.c1; // f' = 3x^2 + 2 c2 x + c1
    if (disc >= 0.0) {
        double x_min = (-c.c2 + std::sqrt(disc)) / 3.0; // local minimum
        double x_max = (-c.c2 - std::sqrt(disc)) / 3.0; // local maximum
        // multiple root at the local minimum; bisection cannot resolve the
        // sign there, so return it directly
        double scale = (1.0 + std::abs(x_min)) * (1.0 + std::abs(x_min)) * (1.0 + std::abs(x_min));
        if (std::abs(c.eval(x_min)) <= 1e-13 * scale) return x_min;
        if (c.eval(x_min) <= 0.0) {
            lo = x_min;
            hi = bound;
        } else {
            // only real root lies left of the local maximum
            lo = -bound;
            hi = x_max;
        }
    } else {
        lo = -bound;
        hi = bound;
    }
    if (lo_hint < hi_hint) {
        if (c.eval(lo_hint) <= 0.0 && lo_hint > lo) lo = lo_hint;
        if (c.eval(hi_hint) >= 0.0 && hi_hint < hi) hi = hi_hint;
    }
    if (!(c.eval(lo) <= 0.0 && c.eval(hi) >= 0.0))
        throw std::runtime_error("largest_real_root: failed to bracket a sign change");
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        if (c.eval(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        double fp = c.deriv(x);
        if (std::abs(fp) < 1e-14) break;
        double step = c.eval(x) / fp;
        double next = x - step;
        if (next < lo || next > hi) break;
        x = next;
    }
    return x;
}

// Radius of an extremal family graph via its closed-form cubic.
inline double extremal_radius_by_root(const ExtremalParams& p) {
    return largest_real_root(char_poly_family(p), p.n - 1.0, 3.0 * p.n);
}

} // namespace dsr
