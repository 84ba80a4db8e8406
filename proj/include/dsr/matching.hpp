#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// 2^n subset enumeration is the oracle of record; 26 keeps it under a minute
// while covering the theorems' smallest valid instances (n = 22 and n = 17).
inline constexpr int kExhaustiveCap = 26;

struct DeficiencyResult {
    int value = 0;              // max over S of i(G-S) - w|S|
    std::vector<int> witness;   // attaining S: minimum size, then lexicographic
};

// Stores 2*alpha_f exactly; no floating point in combinatorial results.
struct FractionalMatchingNumber {
    int twice_value = 0;

    bool is_integer() const { return twice_value % 2 == 0; }
};

inline int isolated_count(const Graph& g, const std::vector<int>& s) {
    int n = g.order();
    std::vector<char> in_s(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("isolated_count: vertex out of range");
        in_s[v] = 1;
    }
    int count = 0;
    for (int v = 0; v < n; ++v) {
        if (in_s[v]) continue;
        bool isolated = true;
        for (int u : g.neighbors(v)) {
            if (!in_s[u]) {
                isolated = false;
                break;
            }
        }
        if (isolated) ++count;
    }
    return count;
}

namespace matching_detail {

inline std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
    int n = g.order();
    std::vector<std::uint32_t> nb(n, 0);
    for (auto [u, v] : g.edges()) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    return nb;
}

inline std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// {v0 < v1 < ...} order; prefers the set whose sorted vertex list is
// lexicographically smaller.
inline bool lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Walks all subsets S in reflected-Gray-code order, maintaining for every
// vertex its count of neighbors outside S and the isolated-vertex count
// incrementally; calls visit(mask, size, isolated) per subset and stops early
// when it returns true. One vertex toggles per step, so a step costs
// deg(toggled).
template <class Visit>
void for_each_subset(const Graph& g, Visit visit) {
    int n = g.order();
    if (n > kExhaustiveCap)
        throw capability_error("subset enumeration capped at n <= " +
                               std::to_string(kExhaustiveCap) +
                               " (use the pruned mode for larger graphs)");
    auto nb = neighbor_masks(g);
    std::vector<int> outdeg(n);
    for (int v = 0; v < n; ++v) outdeg[v] = std::popcount(nb[v]);

    std::uint32_t s_mask = 0;
    int size = 0;
    int isolated = 0;
    for (int v = 0; v < n; ++v)
        if (outdeg[v] == 0) ++isolated; // pre-existing isolated vertices

    if (visit(s_mask, size, isolated)) return;
    std::uint64_t total = 1ull << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int u = std::countr_zero(i);
        std::uint32_t bit = 1u << u;
        if (!(s_mask & bit)) {
            // u enters S
            if (outdeg[u] == 0) --isolated;
            std::uint32_t rest = nb[u];
            while (rest) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                if (--outdeg[w] == 0 && !(s_mask & (1u << w))) ++isolated;
            }
            s_mask |= bit;
            ++size;
        } else {
            // u leaves S
            std::uint32_t rest = nb[u];
            while (rest) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                if (outdeg[w] == 0 && !(s_mask & (1u << w))) --isolated;
                ++outdeg[w];
            }
            s_mask &= ~bit;
            --size;
            if (outdeg[u] == 0) ++isolated;
        }
        if (visit(s_mask, size, isolated)) return;
    }
}

} // namespace matching_detail

// Exact maximum of i(G-S) - weight*|S| over all S, by 2^n enumeration.
// weight = 1 is the deficiency; weight = k serves the star-factor condition.
inline DeficiencyResult max_weighted_deficiency(const Graph& g, int weight = 1) {
    using namespace matching_detail;
    int best = -g.order() * weight - 1;
    std::uint32_t best_mask = 0;
    int best_size = 0;
    for_each_subset(g, [&](std::uint32_t mask, int size, int isolated) {
        int value = isolated - weight * size;
        if (value > best || (value == best && (size < best_size ||
                             (size == best_size && lex_less(mask, best_mask))))) {
            best = value;
            best_mask = mask;
            best_size = size;
        }
        return false;
    });
    return {best, mask_to_set(best_mask)};
}

inline DeficiencyResult max_deficiency(const Graph& g) { return max_weighted_deficiency(g, 1); }

// Early-exit decision form: is there an S with i(G-S) - weight*|S| >= threshold?
inline bool deficiency_at_least(const Graph& g, int weight, int threshold) {
    bool found = false;
    matching_detail::for_each_subset(g, [&](std::uint32_t, int size, int isolated) {
        found = isolated - weight * size >= threshold;
        return found;
    });
    return found;
}

// Pruned mode: for an optimal pair (S, T = isolated set of G-S), replacing S
// by N(T) never decreases the deficiency, so it suffices to scan S = N(T)
// over independent sets T. Exhaustive mode stays the oracle of record.
inline DeficiencyResult max_deficiency_pruned(const Graph& g, int weight = 1) {
    using namespace matching_detail;
    int n = g.order();
    if (n > 32) throw capability_error("pruned deficiency enumeration capped at n <= 32");
    auto nb = neighbor_masks(g);

    int best = -1;
    std::uint32_t best_s = 0;
    int best_size = n + 1;
    auto consider = [&](std::uint32_t t_mask) {
        std::uint32_t s_mask = 0;
        std::uint32_t rest = t_mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            s_mask |= nb[v];
        }
        s_mask &= ~t_mask;
        int size = std::popcount(s_mask);
        // count all vertices isolated in G - S, not only T
        int isolated = 0;
        for (int v = 0; v < n; ++v)
            if (!(s_mask & (1u << v)) && (nb[v] & ~s_mask) == 0) ++isolated;
        int value = isolated - weight * size;
        if (value > best || (value == best && (size < best_size ||
                             (size == best_size && lex_less(s_mask, best_s))))) {
            best = value;
            best_s = s_mask;
            best_size = size;
        }
    };

    // DFS over independent sets
    std::vector<std::uint32_t> stack_t{0u};
    std::vector<int> stack_next{0};
    consider(0u);
    while (!stack_t.empty()) {
        std::uint32_t t = stack_t.back();
        int start = stack_next.back();
        stack_t.pop_back();
        stack_next.pop_back();
        for (int v = start; v < n; ++v) {
            if ((t & (1u << v)) || (nb[v] & t)) continue;
            std::uint32_t t2 = t | (1u << v);
            consider(t2);
            stack_t.push_back(t2);
            stack_next.push_back(v + 1);
        }
    }
    return {best, mask_to_set(best_s)};
}

inline FractionalMatchingNumber fractional_matching_number(const Graph& g) {
    return {g.order() - max_deficiency(g).value};
}

inline bool has_fractional_perfect_matching(const Graph& g) {
    return fractional_matching_number(g).twice_value == g.order();
}

// Spanning subgraph with every component an edge or a cycle exists iff
// i(G-S) <= |S| for all S; the k in {K_2, C_k} plays no role here.
inline bool has_k2_ck_factor(const Graph& g) {
    return !deficiency_at_least(g, 1, 1);
}

// Star factor with stars of at most k leaves exists iff i(G-S) <= k|S| for all S.
inline bool has_star_factor(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("star factor requires k >= 2");
    return !deficiency_at_least(g, k, 1);
}

// Brute-force cross-check: maximize the total weight over all half-integral
// edge weightings (values 0, 1/2, 1) subject to load <= 1 at every vertex.
// Half-integral weights suffice because twice the optimum is an integer.
// DFS over edges with load pruning; m <= 12 keeps 3^m tractable.
inline FractionalMatchingNumber half_integral_oracle(const Graph& g) {
    auto edges = g.edges();
    if (edges.size() > 12)
        throw capability_error("half-integral oracle capped at m <= 12 edges");
    int n = g.order();
    std::vector<int> load(n, 0); // in half-units, cap 2 per vertex
    int best = 0;
    int total = 0;
    auto rec = [&](auto&& self, std::size_t e) -> void {
        if (total + 2 * static_cast<int>(edges.size() - e) <= best) return; // cannot improve
        if (e == edges.size()) {
            if (total > best) best = total;
            return;
        }
        auto [u, v] = edges[e];
        for (int w = 2; w >= 0; --w) {
            if (load[u] + w > 2 || load[v] + w > 2) continue;
            load[u] += w;
            load[v] += w;
            total += w;
            self(self, e + 1);
            load[u] -= w;
            load[v] -= w;
            total -= w;
        }
    };
    rec(rec, 0);
    return {best};
}

} // namespace dsr
