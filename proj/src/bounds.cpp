#include "spanlf/bounds.hpp"

#include <limits>
#include <string>

#include "spanlf/errors.hpp"

namespace spanlf {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw DomainError("binomial arguments must be non-negative");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // C(n-k+i, i) = C(n-k+i-1, i-1) * (n-k+i) / i, exact at every step.
    unsigned __int128 result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (result > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t lower_bound(int n, int k) {
    if (k < 1 || n < k)
        throw DomainError("lower bound needs k >= 1 and n >= k, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    return binomial(n - k + 1, 2);
}

std::int64_t bound_gap(int k) {
    const std::int64_t kk = k;
    // k^2 - 3k = k(k-3) is always even.
    return (kk * kk - 3 * kk + 4) / 2;
}

bool bounds_apply(int n, int k) { return k >= 2 && n >= 3 * k; }

std::int64_t upper_bound(int n, int k) {
    if (!bounds_apply(n, k))
        throw DomainError("upper bound is only proved for n >= 3k and k >= 2, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
    return lower_bound(n, k) + bound_gap(k);
}

BoundPair bound_pair(int n, int k) {
    BoundPair b{n, k, lower_bound(n, k), 0, bounds_apply(n, k)};
    if (b.applicable) b.upper = upper_bound(n, k);
    return b;
}

Graph build_g0(int n, int k) {
    if (k < 1 || n < k)
        throw DomainError("G0 needs k >= 1 and n >= k, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    Graph g(n);
    const int clique = n - k + 1;
    for (int a = 0; a < clique; ++a)
        for (int b = a + 1; b < clique; ++b) g.add_edge(a, b);
    return g;
}

}  // namespace spanlf
