#include "spanlf/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "spanlf/errors.hpp"
#include "spanlf/graph6.hpp"

namespace spanlf {
namespace {

constexpr std::size_t kMaxGenerators = 64;

using Colouring = std::array<int, kMaxCanonicalOrder>;

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run() {
        Colouring colour{};
        refine(colour, 1);
        std::vector<int> prefix;
        search(colour, prefix);

        CanonicalForm out{CanonicalCode{}, std::vector<int>(n_), g_.relabeled(best_lab_)};
        for (int v = 0; v < n_; ++v) out.labeling[v] = best_lab_[v];
        out.code.bytes = to_graph6(out.graph);
        return out;
    }

private:
    // Iterated colour refinement. Colours are dense ranks of signatures
    // (own colour, neighbour counts per colour), so the result depends only
    // on the isomorphism type of the coloured graph.
    int refine(Colouring& colour, int classes) const {
        struct Sig {
            std::array<int, kMaxCanonicalOrder + 1> key;
            int vertex;
        };
        for (;;) {
            std::array<Sig, kMaxCanonicalOrder> sigs{};
            for (int v = 0; v < n_; ++v) {
                auto& key = sigs[v].key;
                key.fill(0);
                key[0] = colour[v];
                for (VertexSet rest = g_.rows()[v]; rest; rest &= rest - 1)
                    ++key[1 + colour[lowest(rest)]];
                sigs[v].vertex = v;
            }
            std::sort(sigs.begin(), sigs.begin() + n_,
                      [](const Sig& a, const Sig& b) { return a.key < b.key; });
            int next = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && sigs[i].key != sigs[i - 1].key) ++next;
                colour[sigs[i].vertex] = next;
            }
            if (next + 1 == classes) return classes;
            classes = next + 1;
        }
    }

    static int class_count(const Colouring& colour, int n) {
        return *std::max_element(colour.begin(), colour.begin() + n) + 1;
    }

    bool twins(int u, int v) const {
        return (g_.rows()[u] & ~bit(v)) == (g_.rows()[v] & ~bit(u));
    }

    int find(std::vector<int>& parent, int x) const {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // Orbits of the group generated by known automorphisms that fix every
    // vertex of the prefix.
    std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : generators_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(parent, v);
                int b = find(parent, gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
        return parent;
    }

    void leaf(const Colouring& colour) {
        std::vector<int> lab(n_);
        for (int v = 0; v < n_; ++v) lab[v] = colour[v];
        std::vector<VertexSet> cert(n_, 0);
        for (int v = 0; v < n_; ++v) {
            VertexSet row = 0;
            for (VertexSet rest = g_.rows()[v]; rest; rest &= rest - 1) row |= bit(lab[lowest(rest)]);
            cert[lab[v]] = row;
        }
        if (best_cert_.empty() || cert > best_cert_) {
            best_cert_ = std::move(cert);
            best_lab_ = std::move(lab);
            return;
        }
        if (cert == best_cert_ && generators_.size() < kMaxGenerators) {
            // Vertex v sits where best_lab_^{-1}(lab[v]) sat in the best leaf.
            std::vector<int> inverse(n_);
            for (int v = 0; v < n_; ++v) inverse[best_lab_[v]] = v;
            std::vector<int> gamma(n_);
            for (int v = 0; v < n_; ++v) gamma[v] = inverse[lab[v]];
            generators_.push_back(std::move(gamma));
        }
    }

    void search(const Colouring& colour, std::vector<int>& prefix) {
        const int classes = class_count(colour, n_);
        if (classes == n_) {
            leaf(colour);
            return;
        }
        std::array<int, kMaxCanonicalOrder> size{};
        for (int v = 0; v < n_; ++v) ++size[colour[v]];
        int target = 0;
        while (size[target] < 2) ++target;

        std::vector<int> tried;
        for (int v = 0; v < n_; ++v) {
            if (colour[v] != target) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
            if (!tried.empty()) {
                auto orbit = orbits_fixing(prefix);
                if (std::any_of(tried.begin(), tried.end(),
                                [&](int u) { return orbit[u] == orbit[v]; }))
                    continue;
            }
            tried.push_back(v);

            // Individualise v: it gets its own class ordered just before the
            // rest of its old class.
            Colouring child{};
            for (int u = 0; u < n_; ++u)
                child[u] = u == v ? target : colour[u] + (colour[u] >= target ? 1 : 0);
            refine(child, classes + 1);
            prefix.push_back(v);
            search(child, prefix);
            prefix.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<VertexSet> best_cert_;
    std::vector<int> best_lab_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder)
        throw DomainError("canonical form supports at most 16 vertices, got " +
                          std::to_string(g.order()));
    return CanonicalSearch(g).run();
}

CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

}  // namespace spanlf
