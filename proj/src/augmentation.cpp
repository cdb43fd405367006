#include "spanlf/augmentation.hpp"

#include <algorithm>

#include "spanlf/errors.hpp"

namespace spanlf {

JoinContext build_join(const Graph& g, int k) {
    if (k < 1) throw DomainError("join needs k >= 1");
    const int n = g.order();
    if (n + k - 1 > kMaxVertices)
        throw DomainError("join graph would have " + std::to_string(n + k - 1) + " vertices (max 64)");
    JoinContext ctx{g, k - 1, Graph(n + k - 1)};
    for (auto [a, b] : g.edges()) ctx.joined.add_edge(a, b);
    for (int h = n; h < n + k - 1; ++h)
        for (int w = 0; w < n; ++w) ctx.joined.add_edge(h, w);
    return ctx;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int n = g.order();
    if (static_cast<int>(cycle.size()) != n || n < 3) return false;
    VertexSet seen = 0;
    for (int v : cycle) {
        if (v < 0 || v >= n || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
    return true;
}

std::vector<int> ore_rotation(const Graph& g, const std::vector<int>& ham_path) {
    const int n = g.order();
    if (n < 3) throw PreconditionError("a Hamiltonian cycle needs at least 3 vertices");
    LinearForest as_forest{{ham_path}};
    if (auto check = validate_forest(g, as_forest); !check)
        throw PreconditionError("not a Hamiltonian path: " + check.reason);

    const int u = ham_path.front();
    const int v = ham_path.back();
    const int sum = g.degree(u) + g.degree(v);
    if (sum < n)
        throw PreconditionError("endpoint degree sum " + std::to_string(sum) + " is below n = " +
                                std::to_string(n));
    if (g.has_edge(u, v)) return ham_path;

    for (int i = 0; i + 1 < n; ++i) {
        if (g.has_edge(u, ham_path[i + 1]) && g.has_edge(v, ham_path[i])) {
            // u .. path[i], v, path[n-2] .. path[i+1], back to u.
            std::vector<int> cycle(ham_path.begin(), ham_path.begin() + i + 1);
            cycle.insert(cycle.end(), ham_path.rbegin(), ham_path.rend() - (i + 1));
            return cycle;
        }
    }
    throw InvariantViolation("no crossing pair despite endpoint degree sum >= n");
}

LinearForest lemma3_augment(const Graph& g, const LinearForest& f, int u, int v) {
    const int n = g.order();
    if (auto check = validate_forest(g, f); !check)
        throw PreconditionError("forest is not a valid spanning linear forest: " + check.reason);
    const int k = static_cast<int>(f.paths.size());
    if (k < 2) throw PreconditionError("forest must have at least two components (k >= 2)");
    if (u < 0 || u >= n || v < 0 || v >= n) throw PreconditionError("endpoint out of range");

    auto component_of = [&](int x) {
        for (int i = 0; i < k; ++i)
            if (std::find(f.paths[i].begin(), f.paths[i].end(), x) != f.paths[i].end()) return i;
        return -1;
    };
    const int cu = component_of(u);
    const int cv = component_of(v);
    auto is_end = [&](int x, int c) { return f.paths[c].front() == x || f.paths[c].back() == x; };
    if (!is_end(u, cu)) throw PreconditionError("u = " + std::to_string(u) + " is not a path endpoint");
    if (!is_end(v, cv)) throw PreconditionError("v = " + std::to_string(v) + " is not a path endpoint");
    if (cu == cv)
        throw PreconditionError("u and v are endpoints of the same component");
    const int sum = g.degree(u) + g.degree(v);
    if (sum < n - k + 1)
        throw PreconditionError("degree sum d(u)+d(v) = " + std::to_string(sum) + " is below n-k+1 = " +
                                std::to_string(n - k + 1));

    const JoinContext ctx = build_join(g, k);

    // Component of u first (starting at u), component of v last (ending at
    // v), the rest in index order, one helper between consecutive paths.
    std::vector<int> order{cu};
    for (int i = 0; i < k; ++i)
        if (i != cu && i != cv) order.push_back(i);
    order.push_back(cv);

    std::vector<int> ham_path;
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexSequence piece = f.paths[order[i]];
        if (i == 0 && piece.front() != u) std::reverse(piece.begin(), piece.end());
        if (i + 1 == order.size() && piece.back() != v) std::reverse(piece.begin(), piece.end());
        ham_path.insert(ham_path.end(), piece.begin(), piece.end());
        if (i + 1 < order.size()) ham_path.push_back(n + static_cast<int>(i));
    }

    const std::vector<int> cycle = ore_rotation(ctx.joined, ham_path);

    // Rotate so the cycle starts right after a helper, then cut at helpers.
    const auto first_helper =
        std::find_if(cycle.begin(), cycle.end(), [&](int x) { return ctx.is_helper(x); });
    std::vector<int> rotated(first_helper + 1, cycle.end());
    rotated.insert(rotated.end(), cycle.begin(), first_helper + 1);

    LinearForest out;
    VertexSequence current;
    for (int x : rotated) {
        if (ctx.is_helper(x)) {
            if (current.empty()) throw InvariantViolation("adjacent helpers on the join cycle");
            out.paths.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(x);
        }
    }
    out.normalize();
    if (out.edge_count() != n - k + 1 || !validate_forest(g, out))
        throw InvariantViolation("augmented forest does not have n-k+1 edges");
    return out;
}

namespace {

struct Move {
    int isolated_index;
    int path_index;
    int position;  // index of the neighbour inside the path
};

// First applicable move in ascending isolated vertex, then path index, then
// position along the path.
bool find_move(const Graph& g, const LinearForest& f, Move& move) {
    const int count = static_cast<int>(f.paths.size());
    std::vector<int> isolated;
    for (int i = 0; i < count; ++i)
        if (f.paths[i].size() == 1) isolated.push_back(i);
    std::sort(isolated.begin(), isolated.end(),
              [&](int a, int b) { return f.paths[a][0] < f.paths[b][0]; });
    for (int xi : isolated) {
        const int x = f.paths[xi][0];
        for (int pi = 0; pi < count; ++pi) {
            if (pi == xi) continue;
            const auto& p = f.paths[pi];
            const int m = static_cast<int>(p.size());
            for (int t = 0; t < m; ++t) {
                if (!g.has_edge(x, p[t])) continue;
                const bool centre_of_three = m == 3 && t == 1;
                if (centre_of_three) continue;
                move = {xi, pi, t};
                return true;
            }
        }
    }
    return false;
}

}  // namespace

LinearForest reduce_isolated(const Graph& g, const LinearForest& f) {
    if (auto check = validate_forest(g, f); !check)
        throw PreconditionError("forest is not a valid spanning linear forest: " + check.reason);
    LinearForest cur = f;
    cur.normalize();
    Move move{};
    while (find_move(g, cur, move)) {
        const int x = cur.paths[move.isolated_index][0];
        VertexSequence p = cur.paths[move.path_index];
        const int m = static_cast<int>(p.size());
        const int t = move.position;
        std::vector<VertexSequence> replacement;
        if (t == 0) {
            // Endpoint or another isolated vertex: attach directly.
            VertexSequence joined{x};
            joined.insert(joined.end(), p.begin(), p.end());
            replacement.push_back(std::move(joined));
        } else if (t == m - 1) {
            p.push_back(x);
            replacement.push_back(std::move(p));
        } else if (t == 1) {
            // y1 y2 x  and  y3 .. ym
            replacement.push_back({p[0], p[1], x});
            replacement.emplace_back(p.begin() + 2, p.end());
        } else {
            // y1 .. y(t-1)  and  x y(t) .. ym
            replacement.emplace_back(p.begin(), p.begin() + t);
            VertexSequence tail{x};
            tail.insert(tail.end(), p.begin() + t, p.end());
            replacement.push_back(std::move(tail));
        }
        const int hi = std::max(move.isolated_index, move.path_index);
        const int lo = std::min(move.isolated_index, move.path_index);
        cur.paths.erase(cur.paths.begin() + hi);
        cur.paths.erase(cur.paths.begin() + lo);
        for (auto& r : replacement) cur.paths.push_back(std::move(r));
        cur.normalize();
    }
    return cur;
}

}  // namespace spanlf
