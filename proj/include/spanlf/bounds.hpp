#pragma once

#include <cstdint>

#include "spanlf/graph.hpp"

namespace spanlf {

/// Exact binomial coefficient; throws DomainError on overflow or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// C(n-k+1, 2), the edge count of K_{n-k+1} plus k-1 isolated vertices.
/// Requires k >= 1, n >= k.
std::int64_t lower_bound(int n, int k);

/// C(n-k+1, 2) + (k^2-3k+4)/2. Only defined for n >= 3k, k >= 2; refused
/// with DomainError elsewhere.
std::int64_t upper_bound(int n, int k);

/// (k^2-3k+4)/2, the gap between the two bounds.
std::int64_t bound_gap(int k);

bool bounds_apply(int n, int k);

struct BoundPair {
    int n = 0;
    int k = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool applicable = false;
};

/// Lower bound always; upper bound only when applicable (otherwise 0).
BoundPair bound_pair(int n, int k);

/// K_{n-k+1} on vertices 0..n-k plus k-1 isolated vertices.
Graph build_g0(int n, int k);

}  // namespace spanlf
