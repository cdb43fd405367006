#include "spanlf/graph.hpp"

#include "spanlf/errors.hpp"

namespace spanlf {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::malformed_header: return "malformed_header";
        case ParseErrorKind::byte_out_of_range: return "byte_out_of_range";
        case ParseErrorKind::truncated: return "truncated";
        case ParseErrorKind::trailing_garbage: return "trailing_garbage";
        case ParseErrorKind::too_many_vertices: return "too_many_vertices";
        case ParseErrorKind::malformed_json: return "malformed_json";
    }
    return "unknown";
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0), 0) {
    if (n < 1 || n > kMaxVertices)
        throw DomainError("graph order must lie in [1, 64], got " + std::to_string(n));
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.adj_[v] = full_set(n) & ~bit(v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1U;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return popcount(adj_[v]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += popcount(row);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (VertexSet rest = adj_[u] & ~full_set(u + 1); rest; rest &= rest - 1)
            out.emplace_back(u, lowest(rest));
    return out;
}

std::string Graph::validate() const {
    const VertexSet all = full_set(n_);
    for (int u = 0; u < n_; ++u) {
        if (adj_[u] & ~all) return "row " + std::to_string(u) + " has bits outside [0, n)";
        if (adj_[u] & bit(u)) return "loop at vertex " + std::to_string(u);
        for (VertexSet rest = adj_[u]; rest; rest &= rest - 1) {
            int v = lowest(rest);
            if (!((adj_[v] >> u) & 1U))
                return "asymmetric pair " + std::to_string(u) + "," + std::to_string(v);
        }
    }
    return {};
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
        for (VertexSet rest = adj_[u]; rest; rest &= rest - 1)
            out.adj_[perm[u]] |= bit(perm[lowest(rest)]);
    return out;
}

Graph complement(const Graph& g) {
    Graph out = Graph::complete(g.order());
    for (auto [u, v] : g.edges()) out.remove_edge(u, v);
    return out;
}

}  // namespace spanlf
