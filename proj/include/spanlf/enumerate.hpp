#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spanlf/budget.hpp"
#include "spanlf/canonical.hpp"
#include "spanlf/graph.hpp"

namespace spanlf {

inline constexpr int kDefaultSearchOrderCap = 14;

struct SearchSpec {
    int n = 0;
    int k = 0;
    /// Cap on complement edges; defaults to C(n,2) - lower_bound(n, k).
    std::optional<int> max_complement_edges;
    BudgetLimits budget{};
    int workers = 1;
    /// Lifts the n <= 14 guardrail (canonical forms still cap n at 16).
    bool allow_large = false;
};

/// The complement-edge cap m̄ in effect for spec.
int complement_cap(const SearchSpec& spec);

/// One canonical representative per isomorphism class of graphs on n vertices
/// with edge count in [min_edges, max_edges], sorted by canonical code. Built
/// level by level: every class with e+1 edges is an edge-extension of a class
/// with e edges. Works from the complement side when that is shallower.
/// Returns std::nullopt when the budget runs out.
std::optional<std::vector<Graph>> graph_classes(int n, int min_edges, int max_edges, Budget& budget,
                                                int workers = 1);

struct EnumerationStats {
    std::uint64_t classes = 0;
    bool complete = true;
};

/// Streams one graph per isomorphism class on spec.n vertices whose
/// complement has at most complement_cap(spec) edges, in order of ascending
/// complement edge count, then canonical code.
EnumerationStats enumerate_candidates(const SearchSpec& spec,
                                      const std::function<void(const Graph&)>& visit);

/// Complements C with at most max_edges edges in which every edge uv has
/// d_C(u) + d_C(v) >= n + k - 2, one per isomorphism class, keyed by code.
/// These are exactly the complements of graphs where every non-adjacent pair
/// has degree sum at most n - k. Returns std::nullopt on budget exhaustion.
std::optional<std::vector<Graph>> heavy_complements(int n, int k, int max_edges, Budget& budget,
                                                    int workers = 1);

}  // namespace spanlf
