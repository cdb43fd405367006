#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanlf/enumerate.hpp"

namespace spanlf {

enum class SearchStrategy {
    /// Only complements in which every edge is heavy (see heavy_complements).
    /// An edge-maximum graph avoiding the family is edge-maximal, and by the
    /// augmentation step every non-adjacent pair in it has degree
    /// sum at most n-k, so nothing optimal is skipped.
    closure,
    /// Every isomorphism class with at most m̄ complement edges.
    complete,
};

struct ExtremalResult {
    int n = 0;
    int k = 0;
    /// Maximum edge count over avoiding graphs; when incomplete, the best
    /// value certified so far (at least the G0 construction).
    std::int64_t exact_value = 0;
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
    /// Canonical graph6 of every edge-maximum avoiding graph, sorted.
    std::vector<std::string> witnesses;
    std::uint64_t enumerated = 0;
    int complement_cap = 0;
    /// Set only when the bounds apply (n >= 3k, k >= 2) and the run completed.
    std::optional<bool> within_bounds;
    bool complete = true;
    double elapsed_ms = 0;
};

ExtremalResult ex_exact(const SearchSpec& spec, SearchStrategy strategy = SearchStrategy::closure);

/// Newline-separated graph6 of the witnesses in canonical order. Empty when
/// the run did not complete.
std::string witness_catalog(const ExtremalResult& result);

}  // namespace spanlf
