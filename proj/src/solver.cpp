#include "spanlf/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "spanlf/errors.hpp"

namespace spanlf {
namespace {

using Mask = std::uint32_t;

void require_dp_order(const Graph& g) {
    if (g.order() > kSubsetDpMaxOrder)
        throw DomainError("subset DP supports at most 24 vertices, got " + std::to_string(g.order()));
}

// Minimum path cover over all vertex subsets.
//   cover_[S]  minimum number of paths covering S
//   ends_[S]   vertices v in S for which some minimum cover of S has v as a
//              path endpoint
// For any v in S, the best cover of S with v as an endpoint uses either
// cover_[S] or cover_[S] + 1 paths (split v's path at v), so the pair is a
// complete description.
class PathCoverTable {
public:
    explicit PathCoverTable(const Graph& g) : g_(g), n_(g.order()) {
        require_dp_order(g);
        const std::size_t size = std::size_t{1} << n_;
        cover_.assign(size, 0);
        ends_.assign(size, 0);
        for (Mask s = 1; s < size; ++s) {
            int best = std::numeric_limits<int>::max();
            Mask good = 0;
            for (Mask rest = s; rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                const int value = with_endpoint(s, w);
                if (value < best) {
                    best = value;
                    good = Mask{1} << w;
                } else if (value == best) {
                    good |= Mask{1} << w;
                }
            }
            cover_[s] = static_cast<std::uint8_t>(best);
            ends_[s] = good;
        }
    }

    int cover(Mask s) const { return cover_[s]; }

    /// Fewest paths covering s among covers where w is an endpoint.
    int with_endpoint(Mask s, int w) const {
        const Mask prev = s & ~(Mask{1} << w);
        const bool joins = (static_cast<Mask>(g_.rows()[w]) & ends_[prev]) != 0;
        return cover_[prev] + (joins ? 0 : 1);
    }

    // Greedy walk that always takes the smallest option still consistent
    // with an optimum; closing a path beats extending it.
    LinearForest lexicographic_witness() const {
        LinearForest f;
        Mask remaining = static_cast<Mask>(full_set(n_));
        const int target = cover_[remaining];
        int used = 0;
        while (remaining) {
            int start = -1;
            for (Mask rest = remaining; rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                if (used + with_endpoint(remaining, w) == target) {
                    start = w;
                    break;
                }
            }
            VertexSequence path{start};
            remaining &= ~(Mask{1} << start);
            ++used;
            for (;;) {
                if (used + cover_[remaining] == target) break;
                int next = -1;
                for (Mask rest = remaining & static_cast<Mask>(g_.rows()[path.back()]); rest;
                     rest &= rest - 1) {
                    const int x = std::countr_zero(rest);
                    if (used - 1 + with_endpoint(remaining, x) == target) {
                        next = x;
                        break;
                    }
                }
                if (next < 0) throw InvariantViolation("path cover reconstruction lost the optimum");
                path.push_back(next);
                remaining &= ~(Mask{1} << next);
            }
            f.paths.push_back(std::move(path));
        }
        return f;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<std::uint8_t> cover_;
    std::vector<Mask> ends_;
};

// Lexicographic (paths, isolated vertices) objective packed as
// paths * kPathUnit + isolated.
constexpr int kPathUnit = 64;
constexpr int kIsolatedPath = kPathUnit + 1;
constexpr std::uint16_t kUnreachable = std::numeric_limits<std::uint16_t>::max();

// best_[S]          optimum over covers of S
// joined_[S][v]     optimum over covers of S in which v ends a path with at
//                   least two vertices (kUnreachable if none)
// The optimum with v as an isolated path is best_[S \ v] + kIsolatedPath.
class IsolationTable {
public:
    explicit IsolationTable(const Graph& g) : g_(g), n_(g.order()) {
        require_dp_order(g);
        const std::size_t size = std::size_t{1} << n_;
        best_.assign(size, 0);
        joined_.assign(size * static_cast<std::size_t>(n_), kUnreachable);
        for (Mask s = 1; s < size; ++s) {
            int best = std::numeric_limits<int>::max();
            for (Mask rest = s; rest; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const Mask prev = s & ~(Mask{1} << v);
                int joined = kUnreachable;
                for (Mask nb = prev & static_cast<Mask>(g_.rows()[v]); nb; nb &= nb - 1) {
                    const int u = std::countr_zero(nb);
                    joined = std::min(joined, extend_value(prev, u));
                }
                joined_[index(s, v)] = static_cast<std::uint16_t>(joined);
                best = std::min({best, joined, alone(s, v)});
            }
            best_[s] = static_cast<std::uint16_t>(best);
        }
    }

    int best(Mask s) const { return best_[s]; }

    LinearForest lexicographic_witness() const {
        LinearForest f;
        Mask remaining = static_cast<Mask>(full_set(n_));
        const int target = best_[remaining];
        int acc = 0;
        while (remaining) {
            int start = -1;
            for (Mask rest = remaining; rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                if (acc + std::min<int>(alone(remaining, w), joined(remaining, w)) == target) {
                    start = w;
                    break;
                }
            }
            if (start < 0) throw InvariantViolation("isolation-aware reconstruction lost the optimum");
            VertexSequence path{start};
            remaining &= ~(Mask{1} << start);
            acc += kIsolatedPath;
            for (;;) {
                if (acc + best_[remaining] == target) break;
                // A single-vertex open path stops being isolated when extended.
                const int open = path.size() == 1 ? kIsolatedPath : kPathUnit;
                int next = -1;
                for (Mask rest = remaining & static_cast<Mask>(g_.rows()[path.back()]); rest;
                     rest &= rest - 1) {
                    const int x = std::countr_zero(rest);
                    if (acc - open + extend_value(remaining, x) == target) {
                        next = x;
                        break;
                    }
                }
                if (next < 0) throw InvariantViolation("isolation-aware reconstruction lost the optimum");
                acc = acc - open + kPathUnit;
                path.push_back(next);
                remaining &= ~(Mask{1} << next);
            }
            f.paths.push_back(std::move(path));
        }
        return f;
    }

private:
    std::size_t index(Mask s, int v) const { return static_cast<std::size_t>(s) * n_ + v; }

    int alone(Mask s, int v) const { return best_[s & ~(Mask{1} << v)] + kIsolatedPath; }
    int joined(Mask s, int v) const { return joined_[index(s, v)]; }

    // Optimum for covering s when the path through u (an endpoint) will be
    // extended by one more vertex outside s: u isolated becomes a proper path.
    int extend_value(Mask s, int u) const { return std::min(alone(s, u) - 1, joined(s, u)); }

    const Graph& g_;
    int n_;
    std::vector<std::uint16_t> best_;
    std::vector<std::uint16_t> joined_;
};

// Depth-first branch and bound. Each path is grown from its anchor (the
// smallest uncovered vertex) first in one direction, then optionally in the
// other; the second direction must start at a larger neighbour than the
// first so every path is generated in one orientation only.
class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const BudgetLimits& limits) : g_(g), n_(g.order()), budget_(limits) {}

    MaxForestResult run() {
        best_paths_ = n_ + 1;
        open_new_path(full_set(n_), 0);
        if (budget_.exhausted()) throw BudgetExceeded("branch and bound exhausted its budget");
        MaxForestResult out{n_ - best_paths_, best_forest_};
        out.witness.normalize();
        return out;
    }

private:
    struct Open {
        std::vector<int> first;   // anchor, then first-direction vertices
        std::vector<int> second;  // second-direction vertices
        bool turned = false;
    };

    // Lower bound on additional paths needed for the uncovered set.
    // Degree demand: a vertex with no uncovered neighbour needs two path
    // ends, one with a single such neighbour needs one, and the open path
    // supplies `slots` of them. Components: each one needs its own path
    // unless an open end reaches into it.
    int extra_paths_bound(VertexSet remaining, const Open& open) const {
        const int slots = open.turned ? 1 : 2;
        int demand = 0;
        for (VertexSet rest = remaining; rest; rest &= rest - 1) {
            const int d = popcount(g_.rows()[lowest(rest)] & remaining);
            if (d == 0) demand += 2;
            else if (d == 1) demand += 1;
        }
        const int by_demand = (demand + 1) / 2 - slots;

        VertexSet reach = 0;
        if (open.turned) {
            reach = g_.rows()[open.second.empty() ? open.first.front() : open.second.back()];
        } else {
            reach = g_.rows()[open.first.back()] | g_.rows()[open.first.front()];
        }
        reach &= remaining;
        int components = 0;
        int touched = 0;
        for (VertexSet left = remaining; left;) {
            VertexSet comp = bit(lowest(left));
            for (VertexSet frontier = comp; frontier;) {
                VertexSet next = 0;
                for (VertexSet f = frontier; f; f &= f - 1) next |= g_.rows()[lowest(f)];
                next &= remaining & ~comp;
                comp |= next;
                frontier = next;
            }
            ++components;
            if (comp & reach) ++touched;
            left &= ~comp;
        }
        const int by_components = components - std::min(touched, slots);
        return std::max({0, by_demand, by_components});
    }

    void record(int paths) {
        if (paths >= best_paths_) return;
        best_paths_ = paths;
        best_forest_.paths.clear();
        for (const auto& open : stack_) {
            VertexSequence seq(open.second.rbegin(), open.second.rend());
            seq.insert(seq.end(), open.first.begin(), open.first.end());
            best_forest_.paths.push_back(std::move(seq));
        }
    }

    bool done() const { return best_paths_ <= 1 || budget_.exhausted(); }

    void open_new_path(VertexSet remaining, int paths) {
        if (!remaining) {
            record(paths);
            return;
        }
        const int anchor = lowest(remaining);
        stack_.push_back(Open{{anchor}, {}, false});
        grow(remaining & ~bit(anchor), paths + 1);
        stack_.pop_back();
    }

    void grow(VertexSet remaining, int paths) {
        if (done() || !budget_.charge()) return;
        // The stack may reallocate during recursion, so always go through back().
        if (paths + extra_paths_bound(remaining, stack_.back()) >= best_paths_) return;

        const Open& open = stack_.back();
        const bool turned = open.turned;
        const int end = turned ? (open.second.empty() ? open.first.front() : open.second.back())
                               : open.first.back();
        VertexSet candidates = g_.rows()[end] & remaining;
        if (turned && open.second.empty()) {
            // Second direction must start above the first direction's start.
            candidates &= ~full_set(open.first[1] + 1);
        }
        std::vector<int> order;
        for (VertexSet rest = candidates; rest; rest &= rest - 1) order.push_back(lowest(rest));
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return popcount(g_.rows()[a] & remaining) < popcount(g_.rows()[b] & remaining);
        });
        for (int w : order) {
            side(turned).push_back(w);
            grow(remaining & ~bit(w), paths);
            side(turned).pop_back();
            if (done()) return;
        }
        if (!turned && stack_.back().first.size() > 1) {
            stack_.back().turned = true;
            grow(remaining, paths);
            stack_.back().turned = false;
            if (done()) return;
        }
        // Closing a turned path with an empty second side repeats the
        // unturned close.
        if (turned && stack_.back().second.empty()) return;
        open_new_path(remaining, paths);
    }

    std::vector<int>& side(bool turned) { return turned ? stack_.back().second : stack_.back().first; }

    const Graph& g_;
    int n_;
    Budget budget_;
    int best_paths_ = 0;
    LinearForest best_forest_;
    std::vector<Open> stack_;
};

bool use_dp(const Graph& g, const SolverOptions& options) {
    switch (options.method) {
        case SolverMethod::subset_dp: return true;
        case SolverMethod::branch_and_bound: return false;
        case SolverMethod::automatic:
            return g.order() <= std::min(options.dp_max_order, kSubsetDpMaxOrder);
    }
    return true;
}

bool hamiltonian_cycle_dp(const Graph& g) {
    const int n = g.order();
    // reach[S]: vertices v in S such that a path from vertex 0 through
    // exactly {0} u S ends at v. Bit i of S stands for vertex i + 1.
    const std::size_t size = std::size_t{1} << (n - 1);
    std::vector<Mask> reach(size, 0);
    const Mask from_zero = static_cast<Mask>(g.rows()[0] >> 1);
    for (Mask s = 1; s < size; ++s) {
        Mask r = 0;
        for (Mask rest = s; rest; rest &= rest - 1) {
            const int i = std::countr_zero(rest);
            const Mask prev = s & ~(Mask{1} << i);
            const Mask nb = static_cast<Mask>(g.rows()[i + 1] >> 1);
            if (prev == 0 ? (from_zero >> i) & 1U : (nb & reach[prev]) != 0) r |= Mask{1} << i;
        }
        reach[s] = r;
    }
    return (reach[size - 1] & from_zero) != 0;
}

class CycleSearch {
public:
    CycleSearch(const Graph& g, const BudgetLimits& limits) : g_(g), n_(g.order()), budget_(limits) {}

    bool run() {
        const bool found = extend(0, full_set(n_) & ~bit(0), 1);
        if (!found && budget_.exhausted()) throw BudgetExceeded("Hamiltonian cycle search exhausted its budget");
        return found;
    }

private:
    bool extend(int end, VertexSet remaining, int depth) {
        if (!budget_.charge()) return false;
        if (!remaining) return g_.has_edge(end, 0);
        for (VertexSet rest = g_.rows()[end] & remaining; rest; rest &= rest - 1) {
            const int w = lowest(rest);
            if (extend(w, remaining & ~bit(w), depth + 1)) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    Budget budget_;
};

}  // namespace

MaxForestResult max_linear_forest(const Graph& g, const SolverOptions& options) {
    if (use_dp(g, options)) {
        PathCoverTable table(g);
        MaxForestResult out;
        out.size = g.order() - table.cover(static_cast<Mask>(full_set(g.order())));
        out.witness = table.lexicographic_witness();
        return out;
    }
    return BranchAndBound(g, options.budget).run();
}

int path_cover_number(const Graph& g, const SolverOptions& options) {
    if (use_dp(g, options)) return PathCoverTable(g).cover(static_cast<Mask>(full_set(g.order())));
    return g.order() - BranchAndBound(g, options.budget).run().size;
}

bool is_hamiltonian(const Graph& g, const SolverOptions& options) {
    if (g.order() < 3) return false;
    if (use_dp(g, options)) return hamiltonian_cycle_dp(g);
    return CycleSearch(g, options.budget).run();
}

int hamiltonian_completion(const Graph& g, const SolverOptions& options) {
    if (g.order() < 3)
        throw DomainError("Hamiltonian completion is undefined for fewer than 3 vertices");
    const int cover = path_cover_number(g, options);
    if (cover > 1) return cover;
    return is_hamiltonian(g, options) ? 0 : 1;
}

bool avoids_family(const Graph& g, const FamilySpec& spec, const SolverOptions& options) {
    if (g.order() != spec.n)
        throw DomainError("graph order " + std::to_string(g.order()) + " does not match family order " +
                          std::to_string(spec.n));
    if (spec.k < 1) throw DomainError("family parameter k must be at least 1");
    return path_cover_number(g, options) >= spec.k;
}

LinearForest min_isolated_max_forest(const Graph& g) {
    return IsolationTable(g).lexicographic_witness();
}

}  // namespace spanlf
