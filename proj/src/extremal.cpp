#include "spanlf/extremal.hpp"

#include <algorithm>
#include <map>

#include "spanlf/bounds.hpp"
#include "spanlf/errors.hpp"
#include "spanlf/graph6.hpp"
#include "spanlf/solver.hpp"

namespace spanlf {
namespace {

void check_spec(const SearchSpec& spec) {
    if (spec.k < 1 || spec.n < spec.k)
        throw DomainError("extremal search needs 1 <= k <= n, got n=" + std::to_string(spec.n) +
                          " k=" + std::to_string(spec.k));
    if (spec.n > kDefaultSearchOrderCap && !spec.allow_large)
        throw DomainError("extremal search is capped at n = 14 by default");
    if (spec.n > kMaxCanonicalOrder) throw DomainError("extremal search supports n <= 16");
    if (spec.workers < 1) throw DomainError("worker count must be at least 1");
    if (complement_cap(spec) < 0) throw DomainError("complement edge cap must be non-negative");
}

// Scans complements by ascending edge count and stops after the first level
// that contains a graph whose complement avoids the family.
void scan_levels(const std::vector<Graph>& complements, int k, ExtremalResult& result) {
    std::map<int, std::vector<const Graph*>> by_level;
    for (const Graph& c : complements) by_level[c.edge_count()].push_back(&c);
    for (const auto& [missing, level] : by_level) {
        std::vector<std::string> found;
        for (const Graph* c : level) {
            const Graph g = complement(*c);
            if (path_cover_number(g) >= k) found.push_back(canonical_code(g).bytes);
        }
        if (!found.empty()) {
            std::sort(found.begin(), found.end());
            result.exact_value = pairs(result.n) - missing;
            result.witnesses = std::move(found);
            return;
        }
    }
    // Nothing within the cap: the cap was overridden below C(n,2) - lower.
    result.complete = false;
}

}  // namespace

ExtremalResult ex_exact(const SearchSpec& spec, SearchStrategy strategy) {
    check_spec(spec);
    Budget budget(spec.budget);
    ExtremalResult result;
    result.n = spec.n;
    result.k = spec.k;
    result.lower = lower_bound(spec.n, spec.k);
    if (bounds_apply(spec.n, spec.k)) result.upper = upper_bound(spec.n, spec.k);
    result.complement_cap = complement_cap(spec);
    result.exact_value = result.lower;

    std::optional<std::vector<Graph>> complements;
    if (strategy == SearchStrategy::closure) {
        complements = heavy_complements(spec.n, spec.k, result.complement_cap, budget, spec.workers);
    } else {
        complements = graph_classes(spec.n, 0, result.complement_cap, budget, spec.workers);
    }
    if (!complements) {
        result.complete = false;
    } else {
        result.enumerated = complements->size();
        scan_levels(*complements, spec.k, result);
    }
    if (!result.complete) {
        result.exact_value = result.lower;
        result.witnesses.clear();
    }
    if (result.complete && result.upper)
        result.within_bounds = result.lower <= result.exact_value && result.exact_value <= *result.upper;
    result.elapsed_ms = budget.elapsed_seconds() * 1000.0;
    return result;
}

std::string witness_catalog(const ExtremalResult& result) {
    if (!result.complete) return {};
    std::string out;
    for (const auto& w : result.witnesses) {
        out += w;
        out += '\n';
    }
    return out;
}

}  // namespace spanlf
