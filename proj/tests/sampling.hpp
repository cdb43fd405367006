#pragma once

#include <optional>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "spanlf/solver.hpp"

namespace sampling {

using spanlf::Graph;
using spanlf::LinearForest;

struct AugmentInstance {
    Graph g;
    LinearForest f;
    int u = -1;
    int v = -1;
};

// Forest from a random vertex order, split at non-edges and at a few extra
// random places.
inline LinearForest random_forest(std::mt19937_64& rng, const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution cut(0.15);
    LinearForest f;
    for (int v : order) {
        if (f.paths.empty() || !g.has_edge(f.paths.back().back(), v) || cut(rng)) f.paths.push_back({v});
        else f.paths.back().push_back(v);
    }
    return f;
}

// A maximum forest with one path cut at a random edge.
inline std::optional<LinearForest> maximum_minus_one(std::mt19937_64& rng, const Graph& g) {
    LinearForest f = spanlf::max_linear_forest(g).witness;
    std::vector<int> long_paths;
    for (int i = 0; i < static_cast<int>(f.paths.size()); ++i)
        if (f.paths[i].size() > 1) long_paths.push_back(i);
    if (long_paths.empty()) return std::nullopt;
    const int pi = long_paths[rng() % long_paths.size()];
    auto p = f.paths[pi];
    const std::size_t at = 1 + rng() % (p.size() - 1);
    f.paths[pi].assign(p.begin(), p.begin() + at);
    f.paths.emplace_back(p.begin() + at, p.end());
    return f;
}

// Rejection sampling of (g, f, u, v) meeting the augmentation preconditions.
// Half the forests are maximum-minus-one, half come from random orders.
inline AugmentInstance augment_instance(std::mt19937_64& rng, int max_order = 14) {
    for (;;) {
        const int n = 4 + static_cast<int>(rng() % (max_order - 3));
        const Graph g = oracle::random_graph(rng, n);
        std::optional<LinearForest> f;
        if (rng() % 2) f = maximum_minus_one(rng, g);
        else f = random_forest(rng, g);
        if (!f) continue;
        const int k = static_cast<int>(f->paths.size());
        if (k < 2) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (a == b) continue;
                const auto& pa = f->paths[a];
                const auto& pb = f->paths[b];
                for (int u : {pa.front(), pa.back()})
                    for (int v : {pb.front(), pb.back()})
                        if (g.degree(u) + g.degree(v) >= n - k + 1) pairs.push_back({u, v});
            }
        if (pairs.empty()) continue;
        const auto [u, v] = pairs[rng() % pairs.size()];
        return {g, *f, u, v};
    }
}

}  // namespace sampling
