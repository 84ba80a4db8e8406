#pragma once

#include <cstdint>
#include <random>

#include "dsr/graph.hpp"

namespace dsr {

// Seeded generator of connected graphs with minimum degree >= delta.
//
// Algorithm (std::mt19937_64 throughout, fixed draw order, so a seed pins
// the output within this implementation):
//   1. G(n,p): every pair (u,v), u<v, in lexicographic order, independently
//      with probability p.
//   2. Degree repair: for each vertex in ascending order with degree < delta,
//      add edges to uniformly chosen non-neighbors until degree >= delta.
//   3. Connectivity repair: while disconnected, add a bridge between a random
//      vertex of the first component and a random vertex of another.
//   4. Re-check; bridges cannot lower degrees, so one pass of 2+3 suffices,
//      but the loop guards against future edits (K_n is a fixed point).
inline Graph random_min_degree_graph(int n, int delta, double p, std::uint64_t seed) {
    if (n <= delta || delta < 1) throw std::invalid_argument("need n > delta >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("need 0 < p < 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);

    for (int pass = 0; pass < n + 2; ++pass) {
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            while (g.degree(v) < delta) {
                std::vector<int> candidates;
                for (int u = 0; u < n; ++u)
                    if (u != v && !g.has_edge(u, v)) candidates.push_back(u);
                std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
                g.add_edge(v, candidates[pick(rng)]);
                changed = true;
            }
        }
        auto comps = g.components();
        for (std::size_t c = 1; c < comps.size(); ++c) {
            std::uniform_int_distribution<std::size_t> pick0(0, comps[0].size() - 1);
            std::uniform_int_distribution<std::size_t> pickc(0, comps[c].size() - 1);
            g.add_edge(comps[0][pick0(rng)], comps[c][pickc(rng)]);
            changed = true;
        }
        if (!changed) break;
    }
    return g;
}

// True when step 1 alone already met both constraints (used to tune p so
// that repair stays rare and the degree distribution stays close to G(n,p)).
inline bool random_graph_needed_repair(int n, int delta, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g.min_degree() < delta || !g.is_connected();
}

} // namespace dsr
