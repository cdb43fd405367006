#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spanlf {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Undirected simple graph on at most 64 labeled vertices, one adjacency
/// bitset per vertex. Vertices are 0-indexed.
class Graph {
public:
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    VertexSet neighbors(int v) const;
    const std::vector<VertexSet>& rows() const { return adj_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Checks symmetry, absence of loops and that no bit lies outside [0, n).
    /// Returns an empty string when valid, otherwise the first violation.
    std::string validate() const;

    /// Graph induced by relabeling: vertex v of *this becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

inline int degree(const Graph& g, int v) { return g.degree(v); }

/// C(n, 2) with n >= 0.
inline std::int64_t pairs(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

}  // namespace spanlf
