#pragma once

#include <cstdint>

#include "spanlf/budget.hpp"
#include "spanlf/graph.hpp"
#include "spanlf/linear_forest.hpp"

namespace spanlf {

enum class SolverMethod {
    automatic,         // subset DP up to dp_max_order, branch and bound above
    subset_dp,
    branch_and_bound,
};

struct SolverOptions {
    SolverMethod method = SolverMethod::automatic;
    BudgetLimits budget{};
    int dp_max_order = 24;
};

struct MaxForestResult {
    int size = 0;  // edges of a maximum spanning linear forest
    LinearForest witness;
};

inline constexpr int kSubsetDpMaxOrder = 24;

/// Maximum spanning linear forest. The subset-DP witness is the
/// lexicographically smallest normalised forest among all maximum ones; the
/// branch-and-bound witness is the first optimum met in its fixed branch
/// order. Throws BudgetExceeded when branch and bound runs out of budget.
MaxForestResult max_linear_forest(const Graph& g, const SolverOptions& options = {});

/// Size of a minimum path cover (isolated vertices count as paths).
int path_cover_number(const Graph& g, const SolverOptions& options = {});

bool is_hamiltonian(const Graph& g, const SolverOptions& options = {});

/// Minimum number of edges whose addition makes g Hamiltonian: 0 when g is
/// Hamiltonian, otherwise the minimum path cover size. Requires n >= 3.
int hamiltonian_completion(const Graph& g, const SolverOptions& options = {});

/// True iff g has no spanning linear forest with at least n-k+1 edges.
bool avoids_family(const Graph& g, const FamilySpec& spec, const SolverOptions& options = {});

/// A maximum spanning linear forest with the fewest isolated vertices among
/// all maximum ones; ties broken by the lexicographically smallest normalised
/// forest. Subset DP only, n <= 24.
LinearForest min_isolated_max_forest(const Graph& g);

}  // namespace spanlf
