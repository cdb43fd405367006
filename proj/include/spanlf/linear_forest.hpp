#pragma once

#include <string>
#include <vector>

#include "spanlf/graph.hpp"

namespace spanlf {

using VertexSequence = std::vector<int>;

/// Spanning linear forest: vertex-disjoint paths covering every vertex of the
/// host graph. A single-vertex sequence is an isolated vertex (a path of
/// length zero).
struct LinearForest {
    std::vector<VertexSequence> paths;

    int vertex_count() const;
    int edge_count() const { return vertex_count() - static_cast<int>(paths.size()); }
    int isolated_count() const;

    /// Orients every path so its first vertex is the smaller endpoint and
    /// sorts the paths by first vertex.
    void normalize();

    static LinearForest trivial(int n);

    friend bool operator==(const LinearForest&, const LinearForest&) = default;
};

struct ForestValidation {
    bool valid = true;
    std::string reason;

    explicit operator bool() const { return valid; }
};

ForestValidation validate_forest(const Graph& g, const LinearForest& f);

struct ForestStructure {
    /// Endpoints of all paths; an isolated vertex contributes itself once.
    VertexSet endpoint_set = 0;
    int isolated_count = 0;
    int component_count = 0;
};

ForestStructure forest_structure(const LinearForest& f);

/// Order n and parameter k of the family of spanning linear forests with at
/// least n-k+1 edges.
struct FamilySpec {
    int n = 0;
    int k = 0;
};

/// Serialises as {"paths": [[v, ...], ...]}.
std::string forest_to_json(const LinearForest& f);
LinearForest forest_from_json(const std::string& text);

}  // namespace spanlf
