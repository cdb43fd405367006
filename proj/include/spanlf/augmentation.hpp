#pragma once

#include <vector>

#include "spanlf/graph.hpp"
#include "spanlf/linear_forest.hpp"

namespace spanlf {

/// G joined with k-1 helper vertices, each adjacent to every vertex of G and
/// to no other helper. Helpers occupy indices n .. n+k-2.
struct JoinContext {
    Graph base;
    int helper_count = 0;
    Graph joined;

    bool is_helper(int v) const { return v >= base.order(); }
};

JoinContext build_join(const Graph& g, int k);

/// Turns a Hamiltonian path whose endpoints u, v satisfy d(u)+d(v) >= n into
/// a Hamiltonian cycle (returned without repeating the first vertex). Uses the
/// first crossing pair from the left: u ~ path[i+1] and v ~ path[i].
/// Throws PreconditionError if the path is not Hamiltonian or the degree sum
/// is too small.
std::vector<int> ore_rotation(const Graph& g, const std::vector<int>& ham_path);

/// True iff cycle visits every vertex once and consecutive vertices
/// (including last-first) are adjacent.
bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle);

/// Upgrades a spanning linear forest with n-k edges to one with n-k+1 edges,
/// given endpoints u, v of different paths with d(u)+d(v) >= n-k+1. Runs the
/// join-graph construction: thread the paths through k-1 helpers, rotate in
/// the join graph, drop the helpers.
LinearForest lemma3_augment(const Graph& g, const LinearForest& f, int u, int v);

/// Applies the isolated-vertex exchange moves until every neighbour of every
/// isolated vertex is the centre of a three-vertex path. Also absorbs an
/// isolated vertex adjacent to a path endpoint or to another isolated vertex.
/// Edge count never drops and isolated count never rises.
LinearForest reduce_isolated(const Graph& g, const LinearForest& f);

}  // namespace spanlf
