#include "spanlf/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "spanlf/bounds.hpp"
#include "spanlf/errors.hpp"

namespace spanlf {
namespace {

using ClassMap = std::map<CanonicalCode, Graph>;

// Runs body(i, sink) for i in [0, count) on up to `workers` threads. Each
// thread fills its own map; the maps are merged afterwards, so the result
// does not depend on scheduling.
template <typename Body>
ClassMap parallel_collect(std::size_t count, int workers, Body body) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    std::vector<ClassMap> local(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    auto run = [&](int w) {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i, local[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    ClassMap merged;
    for (auto& m : local) merged.merge(m);
    return merged;
}

void insert_canonical(ClassMap& sink, const Graph& g) {
    CanonicalForm form = canonical_form(g);
    sink.emplace(std::move(form.code), std::move(form.graph));
}

std::optional<std::vector<Graph>> classes_by_levels(int n, int min_edges, int max_edges, Budget& budget,
                                                    int workers) {
    std::vector<Graph> out;
    ClassMap level;
    insert_canonical(level, Graph(n));
    for (int e = 0; e <= max_edges; ++e) {
        if (e >= min_edges)
            for (const auto& [code, g] : level) out.push_back(g);
        if (e == max_edges || level.empty()) break;
        std::vector<const Graph*> parents;
        for (const auto& [code, g] : level) parents.push_back(&g);
        ClassMap next = parallel_collect(parents.size(), workers, [&](std::size_t i, ClassMap& sink) {
            const Graph& parent = *parents[i];
            for (int u = 0; u < n; ++u) {
                for (VertexSet rest = ~parent.rows()[u] & full_set(n) & ~full_set(u + 1); rest;
                     rest &= rest - 1) {
                    if (!budget.charge()) return;
                    Graph child = parent;
                    child.add_edge(u, lowest(rest));
                    insert_canonical(sink, child);
                }
            }
        });
        if (budget.exhausted()) return std::nullopt;
        level = std::move(next);
    }
    return out;
}

}  // namespace

int complement_cap(const SearchSpec& spec) {
    if (spec.max_complement_edges) return *spec.max_complement_edges;
    return static_cast<int>(pairs(spec.n) - lower_bound(spec.n, spec.k));
}

std::optional<std::vector<Graph>> graph_classes(int n, int min_edges, int max_edges, Budget& budget,
                                                int workers) {
    const int total = static_cast<int>(pairs(n));
    min_edges = std::max(min_edges, 0);
    max_edges = std::min(max_edges, total);
    if (min_edges > max_edges) return std::vector<Graph>{};
    if (max_edges <= total - min_edges) return classes_by_levels(n, min_edges, max_edges, budget, workers);

    auto flipped = classes_by_levels(n, total - max_edges, total - min_edges, budget, workers);
    if (!flipped) return std::nullopt;
    ClassMap sorted;
    for (const Graph& c : *flipped) insert_canonical(sorted, complement(c));
    std::vector<Graph> out;
    for (auto& [code, g] : sorted) out.push_back(std::move(g));
    return out;
}

EnumerationStats enumerate_candidates(const SearchSpec& spec,
                                      const std::function<void(const Graph&)>& visit) {
    if (spec.n > kDefaultSearchOrderCap && !spec.allow_large)
        throw DomainError("enumeration is capped at n = 14; set allow_large to go further");
    Budget budget(spec.budget);
    const int cap = complement_cap(spec);
    auto complements = classes_by_levels(spec.n, 0, cap, budget, spec.workers);
    EnumerationStats stats;
    if (!complements) {
        stats.complete = false;
        return stats;
    }
    for (const Graph& c : *complements) {
        visit(complement(c));
        ++stats.classes;
    }
    return stats;
}

namespace {

// Complements where every edge is heavy (degree sum >= sigma). Vertices with
// degree >= half (rounded up) are "big"; the others are "small" and pairwise
// non-adjacent, so a candidate is a graph on the big vertices plus, for each
// small vertex, a subset of big neighbours.
class HeavySearch {
public:
    HeavySearch(int n, int k, int max_edges, Budget& budget)
        : n_(n), sigma_(n + k - 2), half_((n + k - 1) / 2), max_edges_(max_edges), budget_(budget) {}

    struct Shard {
        int big = 0;
        Graph core;
    };

    std::optional<std::vector<Shard>> shards(int workers) {
        std::vector<Shard> out;
        for (int b = 0; b <= n_; ++b) {
            if (b < n_ && half_ == 0) continue;
            const int lo = std::max(0, half_ * b - max_edges_);
            const int hi = static_cast<int>(std::min<std::int64_t>(pairs(b), max_edges_));
            if (lo > hi) continue;
            if (b == 0) {
                out.push_back({0, Graph(1)});
                continue;
            }
            auto cores = graph_classes(b, lo, hi, budget_, workers);
            if (!cores) return std::nullopt;
            for (auto& core : *cores) out.push_back({b, std::move(core)});
        }
        return out;
    }

    void expand(const Shard& shard, ClassMap& sink) {
        const int b = shard.big;
        const int small = n_ - b;
        // A small vertex s adjacent to big w needs d(s) >= sigma - d(w) >= sigma - (n-1).
        const int min_size = std::max(1, sigma_ - (n_ - 1));
        const int max_size = std::min(b, half_ - 1);

        std::vector<Mask> options;
        for (int size = max_size; size >= min_size; --size)
            for (Mask m = 0; m < (Mask{1} << b); ++m)
                if (std::popcount(m) == size) options.push_back(m);
        options.push_back(0);

        State st;
        st.core_edges = b > 0 ? shard.core.edge_count() : 0;
        st.degree.assign(static_cast<std::size_t>(b), 0);
        for (int v = 0; v < b; ++v) st.degree[v] = shard.core.degree(v);
        st.choice.assign(static_cast<std::size_t>(small), 0);
        search(shard, options, st, 0, 0, st.core_edges, sink);
    }

private:
    using Mask = std::uint32_t;

    struct State {
        int core_edges = 0;
        std::vector<int> degree;   // degrees of big vertices so far
        std::vector<Mask> choice;  // neighbourhood of each small vertex
    };

    int deficit(const State& st) const {
        int d = 0;
        for (int deg : st.degree) d += std::max(0, half_ - deg);
        return d;
    }

    void search(const Shard& shard, const std::vector<Mask>& options, State& st, int index,
                std::size_t first_option, int edges, ClassMap& sink) {
        if (!budget_.charge()) return;
        const int small = static_cast<int>(st.choice.size());
        const int remaining = small - index;
        const int need = deficit(st);
        if (remaining == 0) {
            if (need == 0) emit(shard, st, sink);
            return;
        }
        for (std::size_t o = first_option; o < options.size(); ++o) {
            const Mask m = options[o];
            const int size = std::popcount(m);
            // Later choices are no larger than this one.
            if (remaining * size < need) break;
            if (edges + size > max_edges_) continue;
            if (need > max_edges_ - edges) break;
            st.choice[index] = m;
            for (Mask r = m; r; r &= r - 1) ++st.degree[std::countr_zero(r)];
            search(shard, options, st, index + 1, o, edges + size, sink);
            for (Mask r = m; r; r &= r - 1) --st.degree[std::countr_zero(r)];
            if (budget_.exhausted()) return;
        }
    }

    void emit(const Shard& shard, const State& st, ClassMap& sink) const {
        const int b = shard.big;
        for (const Mask m : st.choice) {
            const int size = std::popcount(m);
            for (Mask r = m; r; r &= r - 1)
                if (st.degree[std::countr_zero(r)] + size < sigma_) return;
        }
        Graph c(n_);
        for (auto [u, v] : shard.core.edges())
            if (u < b && v < b) c.add_edge(u, v);
        for (int i = 0; i < static_cast<int>(st.choice.size()); ++i)
            for (Mask r = st.choice[i]; r; r &= r - 1) c.add_edge(b + i, std::countr_zero(r));
        insert_canonical(sink, c);
    }

    int n_;
    int sigma_;
    int half_;
    int max_edges_;
    Budget& budget_;
};

}  // namespace

std::optional<std::vector<Graph>> heavy_complements(int n, int k, int max_edges, Budget& budget,
                                                    int workers) {
    if (k < 1 || n < k) throw DomainError("heavy complement search needs 1 <= k <= n");
    if (n > kMaxCanonicalOrder) throw DomainError("heavy complement search supports n <= 16");
    HeavySearch search(n, k, max_edges, budget);
    auto shards = search.shards(workers);
    if (!shards) return std::nullopt;
    ClassMap found = parallel_collect(shards->size(), workers, [&](std::size_t i, ClassMap& sink) {
        search.expand((*shards)[i], sink);
    });
    if (budget.exhausted()) return std::nullopt;
    std::vector<Graph> out;
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace spanlf
