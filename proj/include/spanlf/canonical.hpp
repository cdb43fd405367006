#pragma once

#include <compare>
#include <string>
#include <vector>

#include "spanlf/graph.hpp"

namespace spanlf {

inline constexpr int kMaxCanonicalOrder = 16;

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonically relabeled graph.
struct CanonicalCode {
    std::string bytes;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
    CanonicalCode code;
    /// labeling[v] is the canonical position of vertex v.
    std::vector<int> labeling;
    Graph graph;
};

/// Colour refinement plus individualisation, with twin and automorphism
/// pruning. Throws DomainError for n > 16.
CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

}  // namespace spanlf
